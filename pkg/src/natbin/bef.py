"""Binary extended formulations.

``Q`` stacks the rows of ``P`` with one binarization per binarized
variable; columns are all x's first, then the y-blocks in order.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .binarization import Binarization
from .errors import (
    NoWitness,
    NonNaturalBinarization,
    PersistencyViolation,
    RangeMismatch,
    SizeLimitExceeded,
)
from .geometry import (
    Face,
    HPolytope,
    VPolytope,
    convexify_binary,
    enumerate_vertices,
    faces_up_to,
    minimal_face,
)
from .linalg import dot, is_binary, is_integer, qvec, rank, solve_affine
from .setcover import SetCoverInstance, set_cover_min

DEFAULT_LIMIT_DIM = 12


@dataclass(frozen=True)
class Fixing:
    """The subspace ``G_{I,alpha}``: ``x_i = alpha[i]`` for ``i`` in ``I``."""

    I: tuple
    alpha: dict = field(hash=False)

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(sorted(self.I)))
        if set(self.alpha) != set(self.I):
            raise ValueError("alpha must be defined exactly on I")


@dataclass(eq=False)
class ExtendedFormulation:
    P: HPolytope
    bins: list
    binarized: tuple
    Q: HPolytope
    index_map: dict
    limit_dim: int = DEFAULT_LIMIT_DIM

    @property
    def n(self) -> int:
        return self.P.dim

    @property
    def p(self) -> int:
        return len(self.bins)

    def y_columns(self, i: int) -> list[int]:
        """Columns of block ``i`` (0-based binarization index)."""
        start = self.n + sum(b.d for b in self.bins[:i])
        return list(range(start, start + self.bins[i].d))

    @property
    def all_y_columns(self) -> list[int]:
        return list(range(self.n, self.Q.dim))

    def column(self, name) -> int:
        if isinstance(name, int):
            return name
        return self.index_map[name]

    def column_name(self, col: int) -> str:
        for name, c in self.index_map.items():
            if c == col:
                return name
        raise KeyError(col)

    def block_of(self, col: int) -> int:
        for i in range(self.p):
            if col in self.y_columns(i):
                return i
        raise KeyError(col)

    def project_x(self, V: Iterable[Sequence]) -> set:
        return {tuple(v[: self.n]) for v in V}

    def vertices(self) -> VPolytope:
        return vertices_Q(self)


def build(P: HPolytope, bins: Sequence[Binarization], binarized: Sequence[int] | None = None,
          limit_dim: int = DEFAULT_LIMIT_DIM) -> ExtendedFormulation:
    """Conjoin ``P`` with ``bins[i]`` on variable ``binarized[i]``."""
    bins = list(bins)
    if binarized is None:
        binarized = tuple(range(len(bins)))
    binarized = tuple(binarized)
    if len(binarized) != len(bins):
        raise ValueError("one binarization per binarized variable")
    if len(set(binarized)) != len(binarized) or any(not 0 <= i < P.dim for i in binarized):
        raise ValueError(f"bad binarized variable list {binarized}")
    VP = P.vertices.vertices
    for i, B in zip(binarized, bins):
        if not VP:
            break
        lo = min(v[i] for v in VP)
        hi = max(v[i] for v in VP)
        if lo < 0 or math.ceil(hi) > B.k:
            raise RangeMismatch(
                f"x{i + 1} ranges over [{lo}, {hi}] but its binarization covers 0..{B.k}"
            )
    n = P.dim
    total = n + sum(B.d for B in bins)
    ineqs, eqs = [], []
    for a, b in P.ineqs:
        ineqs.append((tuple(a) + (0,) * (total - n), b))
    for a, b in P.eqs:
        eqs.append((tuple(a) + (0,) * (total - n), b))
    index_map = {f"x{j + 1}": j for j in range(n)}
    offset = n
    for blk, (i, B) in enumerate(zip(binarized, bins)):
        for j in range(B.d):
            index_map[f"y{blk + 1}{j + 1}" if B.d < 10 and len(bins) < 10 else f"y{blk + 1}_{j + 1}"] = offset + j

        def embed(a, offset=offset, i=i, B=B):
            row = [Fraction(0)] * total
            row[i] = a[0]
            for j in range(B.d):
                row[offset + j] = a[1 + j]
            return tuple(row)

        for a, b in B.body.ineqs:
            ineqs.append((embed(a), b))
        for a, b in B.body.eqs:
            eqs.append((embed(a), b))
        offset += B.d
    Q = HPolytope(total, ineqs, eqs)
    return ExtendedFormulation(P, bins, binarized, Q, index_map, limit_dim)


def vertices_Q(E: ExtendedFormulation) -> VPolytope:
    if E.Q.dim > E.limit_dim:
        raise SizeLimitExceeded(f"Q has dimension {E.Q.dim} > limit {E.limit_dim}")
    return E.Q.vertices


# ---------------------------------------------------------------------------
# vertex characterization


def singleton_point(P: HPolytope, face: Face, fixing: Fixing):
    """The unique point of ``F ∩ G_{I,alpha}`` if the combined equation
    system has full rank and its solution lies in ``P``; else None."""
    rows = [a for a, _ in P.eqs] + [P.ineqs[t][0] for t in face.tight]
    rhs = [b for _, b in P.eqs] + [P.ineqs[t][1] for t in face.tight]
    for i in fixing.I:
        rows.append(tuple(Fraction(int(c == i)) for c in range(P.dim)))
        rhs.append(Fraction(fixing.alpha[i]))
    if rank(rows) < P.dim:
        return None
    sol = solve_affine(rows, rhs, P.dim)
    if sol is None:
        return None
    x = sol[0]
    return x if P.contains(x) else None


def _require_natural(E):
    for i, B in enumerate(E.bins):
        if not B.classification.natural:
            raise NonNaturalBinarization(f"binarization {i + 1} ({B.kind}) is not natural")


def characterize_projection(E: ExtendedFormulation, require_natural: bool = True) -> set:
    """Points ``x`` that are the single element of ``F ∩ G_{I,alpha}`` for a
    face ``F`` of ``P`` with ``dim F = |I|``.

    For natural binarizations this equals the x-projection of ``V(Q)``.
    """
    if require_natural:
        _require_natural(E)
    P = E.P
    ks = {i: B.k for i, B in zip(E.binarized, E.bins)}
    out = set()
    for F in faces_up_to(P, len(E.binarized)):
        q = F.dim
        for I in itertools.combinations(E.binarized, q):
            ranges = []
            for i in I:
                lo = max(0, math.ceil(min(v[i] for v in F.vertices)))
                hi = min(ks[i], math.floor(max(v[i] for v in F.vertices)))
                ranges.append(range(lo, hi + 1))
            for alpha in itertools.product(*ranges):
                x = singleton_point(P, F, Fixing(I, dict(zip(I, alpha))))
                if x is not None:
                    out.add(x)
    return out


def verify_vertex_conditions(E: ExtendedFormulation, v: Sequence) -> tuple[Face, Fixing]:
    """Find a face/fixing witness for a vertex of ``Q``.

    Tries the minimal face of ``P`` containing ``x̄`` and subsets of the
    integral binarized coordinates of the right size, in lexicographic
    order. Raises :class:`NoWitness` if none works.
    """
    _require_natural(E)
    v = qvec(v)
    x = v[: E.n]
    F = minimal_face(E.P, x)
    q = F.dim
    integral = [i for i in E.binarized if is_integer(x[i])]
    pos = {i: blk for blk, i in enumerate(E.binarized)}
    for I in itertools.combinations(integral, q):
        fixing = Fixing(I, {i: int(x[i]) for i in I})
        if singleton_point(E.P, F, fixing) != x:
            continue
        ok = True
        for i in E.binarized:
            blk = pos[i]
            B = E.bins[blk]
            point = (x[i],) + tuple(v[c] for c in E.y_columns(blk))
            if i in I:
                if point not in B.vertices:
                    ok = False
                    break
            elif point not in B.slice(x[i]):
                ok = False
                break
        if ok:
            return F, fixing
    raise NoWitness(f"no witness for vertex {v}")


# ---------------------------------------------------------------------------
# sequential convexification and lift-and-project rank


def sequential_convexify(E: ExtendedFormulation, yvars: Iterable, V: VPolytope | None = None) -> VPolytope:
    V = vertices_Q(E) if V is None else V
    for y in yvars:
        V = convexify_binary(V, E.column(y))
    return V


def fractional_support(v: Sequence, cols: Sequence[int]) -> tuple[int, ...]:
    """Positions (relative to ``cols``) holding a fractional value."""
    return tuple(j for j, c in enumerate(cols) if not is_binary(v[c]))


@dataclass(frozen=True)
class LprResult:
    value: int
    cover: tuple  # column indices of Q
    A: SetCoverInstance
    rows_from: tuple  # the fractional vertex behind each row of A
    columns: tuple  # y-columns, in A's column order


def lpr(E: ExtendedFormulation) -> LprResult:
    """Lift-and-project rank of ``Q`` with respect to all y-columns."""
    V = vertices_Q(E)
    cols = E.all_y_columns
    supports, origin = [], []
    for v in V.vertices:
        s = fractional_support(v, cols)
        if s:
            supports.append(s)
            origin.append(v)
    A = SetCoverInstance.from_supports(len(cols), supports)
    if not supports:
        return LprResult(0, (), A, (), tuple(cols))
    value, cover = set_cover_min(A)
    cover_cols = tuple(cols[j] for j in cover)
    left = sequential_convexify(E, cover_cols, V)
    if any(not is_binary(w[c]) for w in left.vertices for c in cols):
        raise AssertionError("set-cover certificate does not convexify Q")
    return LprResult(value, cover_cols, A, tuple(origin), tuple(cols))


def lpr_exhaustive(E: ExtendedFormulation) -> int:
    """Smallest t such that some t-subset of y-columns convexifies Q."""
    V = vertices_Q(E)
    cols = E.all_y_columns
    for t in range(len(cols) + 1):
        for S in itertools.combinations(cols, t):
            left = sequential_convexify(E, S, V)
            if all(is_binary(w[c]) for w in left.vertices for c in cols):
                return t
    raise AssertionError("full convexification must succeed")


def hit_intervals(E: ExtendedFormulation, V: VPolytope) -> set:
    """Pairs ``(i, alpha)`` with ``alpha < x_i < alpha + 1`` at some vertex."""
    out = set()
    for v in V.vertices:
        for i in E.binarized:
            if not is_integer(v[i]):
                out.add((i, math.floor(v[i])))
    return out


def check_persistency(E: ExtendedFormulation, yvar, V: VPolytope | None = None) -> bool:
    """Convexifying ``yvar`` never opens a new unit interval for any
    binarized x. ``V`` is the current vertex set (default ``V(Q)``)."""
    V = vertices_Q(E) if V is None else V
    after = convexify_binary(V, E.column(yvar))
    new = hit_intervals(E, after) - hit_intervals(E, V)
    if new:
        raise PersistencyViolation(f"convexifying {yvar} hit new intervals {sorted(new)}")
    return True
