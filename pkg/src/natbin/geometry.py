"""Exact polyhedral primitives.

Polytopes come in two forms, :class:`HPolytope` (``a.x <= b`` rows plus
``a.x = b`` equations) and :class:`VPolytope` (a canonical vertex list).
Conversion both ways goes through a single integer double-description
routine, :func:`extreme_rays`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .errors import DimensionMismatch, PointNotInPolytope, UnboundedPolyhedron
from .linalg import (
    affine_dim,
    dot,
    integerize,
    nullspace,
    primitive,
    q,
    qvec,
    rank,
    rref,
    solve_affine,
)

Row = tuple  # (coefficients: tuple[Fraction, ...], rhs: Fraction)


def _canon_rows(rows, dim) -> tuple:
    out = []
    for a, b in rows:
        a = qvec(a)
        if len(a) != dim:
            raise DimensionMismatch(f"row of length {len(a)} in a {dim}-dimensional system")
        out.append((a, q(b)))
    return tuple(out)


@dataclass(frozen=True, eq=False)
class HPolytope:
    """``{x in Q^dim : a.x <= b for (a, b) in ineqs, a.x = b for (a, b) in eqs}``.

    Boundedness is checked on demand: :attr:`vertices` raises
    :class:`UnboundedPolyhedron` for an unbounded nonempty system.
    """

    dim: int
    ineqs: tuple = ()
    eqs: tuple = ()

    def __post_init__(self):
        if self.dim < 1:
            raise DimensionMismatch("dim must be positive")
        object.__setattr__(self, "ineqs", _canon_rows(self.ineqs, self.dim))
        object.__setattr__(self, "eqs", _canon_rows(self.eqs, self.dim))

    @cached_property
    def vertices(self) -> "VPolytope":
        return enumerate_vertices(self)

    def contains(self, p: Sequence) -> bool:
        p = qvec(p)
        if len(p) != self.dim:
            raise DimensionMismatch(f"point of length {len(p)}, polytope dim {self.dim}")
        return all(dot(a, p) == b for a, b in self.eqs) and all(
            dot(a, p) <= b for a, b in self.ineqs
        )

    def tight_set(self, p: Sequence) -> frozenset:
        p = qvec(p)
        return frozenset(i for i, (a, b) in enumerate(self.ineqs) if dot(a, p) == b)

    def with_equation(self, a: Sequence, b) -> "HPolytope":
        return HPolytope(self.dim, self.ineqs, self.eqs + ((qvec(a), q(b)),))

    def is_empty(self) -> bool:
        return not self.vertices.vertices

    def __repr__(self):
        return f"HPolytope(dim={self.dim}, {len(self.ineqs)} ineqs, {len(self.eqs)} eqs)"


@dataclass(frozen=True)
class VPolytope:
    """Vertex list, deduplicated and lexicographically sorted.

    The constructor does not prune redundant points; use
    :meth:`from_points` for arbitrary point clouds.
    """

    dim: int
    vertices: tuple = ()

    def __post_init__(self):
        vs = {qvec(v) for v in self.vertices}
        for v in vs:
            if len(v) != self.dim:
                raise DimensionMismatch(f"vertex of length {len(v)} in dim {self.dim}")
        object.__setattr__(self, "vertices", tuple(sorted(vs)))

    @classmethod
    def from_points(cls, dim: int, points: Iterable[Sequence]) -> "VPolytope":
        pts = [qvec(p) for p in points]
        if not pts:
            return cls(dim, ())
        return enumerate_vertices(facet_hull(cls(dim, pts)))

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    def __contains__(self, p):
        return qvec(p) in set(self.vertices)


@dataclass(frozen=True)
class Face:
    polytope: HPolytope = field(repr=False)
    tight: frozenset
    vertices: tuple

    @property
    def dim(self) -> int:
        return affine_dim(self.vertices)


@dataclass(frozen=True)
class SkeletonGraph:
    nodes: tuple
    edges: tuple

    def neighbors(self, i: int) -> list[int]:
        return [b if a == i else a for a, b in self.edges if i in (a, b)]

    def edge_set(self) -> set:
        """Edges as frozensets of endpoint coordinates (index-free)."""
        return {frozenset((self.nodes[a], self.nodes[b])) for a, b in self.edges}

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        seen = {0}
        stack = [0]
        while stack:
            for j in self.neighbors(stack.pop()):
                if j not in seen:
                    seen.add(j)
                    stack.append(j)
        return len(seen) == len(self.nodes)


# ---------------------------------------------------------------------------
# double description


def extreme_rays(rows: Sequence[Sequence[int]]) -> list[tuple[int, ...]]:
    """Extreme rays of the pointed cone ``{z : r.z >= 0 for r in rows}``.

    ``rows`` are integer vectors and must have full column rank. Rays are
    returned as primitive integer vectors. Adjacency uses the combinatorial
    test on zero sets.
    """
    rows = [tuple(int(x) for x in r) for r in rows]
    n = len(rows[0])
    basis_idx = []
    chosen = []
    for i, r in enumerate(rows):
        if rank(chosen + [r]) > len(chosen):
            chosen.append(r)
            basis_idx.append(i)
            if len(chosen) == n:
                break
    if len(chosen) < n:
        raise ValueError("cone is not pointed: rows do not have full column rank")

    # initial simplicial cone: rays are the columns of the inverse
    aug = [list(map(Fraction, r)) + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(chosen)]
    red, _ = rref(aug)
    inv_cols = [[red[i][n + j] for i in range(n)] for j in range(n)]
    rays = [integerize(c) for c in inv_cols]
    full = (1 << len(rows)) - 1
    basis_mask = 0
    for i in basis_idx:
        basis_mask |= 1 << i
    zeros = [basis_mask & ~(1 << basis_idx[j]) & full for j in range(n)]

    processed = basis_mask
    for i, a in enumerate(rows):
        if processed >> i & 1:
            continue
        bit = 1 << i
        vals = [sum(x * y for x, y in zip(a, r)) for r in rays]
        pos = [k for k, s in enumerate(vals) if s > 0]
        neg = [k for k, s in enumerate(vals) if s < 0]
        zer = [k for k, s in enumerate(vals) if s == 0]
        new_rays = [rays[k] for k in pos] + [rays[k] for k in zer]
        new_zeros = [zeros[k] for k in pos] + [zeros[k] | bit for k in zer]
        if neg and pos:
            for p in pos:
                for m in neg:
                    common = zeros[p] & zeros[m]
                    if bin(common).count("1") < n - 2:
                        continue
                    if any(
                        k != p and k != m and zeros[k] & common == common
                        for k in range(len(rays))
                    ):
                        continue
                    sp, sm = vals[p], -vals[m]
                    r = primitive([sp * y + sm * x for x, y in zip(rays[p], rays[m])])
                    new_rays.append(r)
                    new_zeros.append(common | bit)
        rays, zeros = new_rays, new_zeros
        processed |= bit
    return rays


# ---------------------------------------------------------------------------
# H -> V


def enumerate_vertices(H: HPolytope) -> VPolytope:
    """Exact vertex set of ``H``; empty when ``H`` is infeasible."""
    n = H.dim
    sol = solve_affine([a for a, _ in H.eqs], [b for _, b in H.eqs], n)
    if sol is None:
        return VPolytope(n, ())
    x0, N = sol
    k = len(N)

    def lift(u):
        return tuple(x0[c] + sum((u[j] * N[j][c] for j in range(k)), Fraction(0)) for c in range(n))

    red_rows = []
    for a, b in H.ineqs:
        ra = tuple(dot(a, Nj) for Nj in N)
        rb = b - dot(a, x0)
        if all(v == 0 for v in ra):
            if rb < 0:
                return VPolytope(n, ())
            continue
        red_rows.append((ra, rb))

    if k == 0:
        return VPolytope(n, (x0,))
    if not red_rows:
        raise UnboundedPolyhedron("nonempty system with a free direction")

    r_rows, pivots = rref([ra for ra, _ in red_rows])
    if len(pivots) < k:
        # invariant along the null space: a nonempty answer means unbounded
        sub = [(tuple(ra[c] for c in pivots), rb) for ra, rb in red_rows]
        if _homogenized_vertices(sub, len(pivots)):
            raise UnboundedPolyhedron("inequality matrix is rank deficient on a nonempty set")
        return VPolytope(n, ())

    verts = _homogenized_vertices(red_rows, k)
    return VPolytope(n, [lift(u) for u in verts])


def _homogenized_vertices(rows, k):
    """Vertices of ``{u in Q^k : a.u <= b}``; ``a`` rows have rank ``k``."""
    M = [integerize((rb,) + tuple(-v for v in ra)) for ra, rb in rows]
    M.append((1,) + (0,) * k)
    rays = extreme_rays(M)
    verts = [tuple(Fraction(x, r[0]) for x in r[1:]) for r in rays if r[0] > 0]
    if verts and any(r[0] == 0 for r in rays):
        raise UnboundedPolyhedron("recession direction found")
    return verts


# ---------------------------------------------------------------------------
# V -> H


def facet_hull(V: VPolytope | Iterable[Sequence], dim: int | None = None) -> HPolytope:
    """Irredundant H-description of ``conv(V)``.

    The affine hull is encoded by explicit equations; facets are computed
    in the coordinates that parametrize the affine hull.
    """
    if not isinstance(V, VPolytope):
        pts = [qvec(p) for p in V]
        if dim is None:
            if not pts:
                raise DimensionMismatch("cannot infer dimension of an empty point set")
            dim = len(pts[0])
        V = VPolytope(dim, pts)
    pts = list(V.vertices)
    n = V.dim
    if not pts:
        raise ValueError("facet_hull needs at least one point")
    p0 = pts[0]
    D = [tuple(a - b for a, b in zip(p, p0)) for p in pts[1:]]
    _, pivots = rref(D)
    eqs = []
    for a in nullspace(D, n):
        a = tuple(Fraction(v) for v in integerize(a))
        eqs.append((a, dot(a, p0)))
    r = len(pivots)
    ineqs = []
    if r > 0:
        us = [tuple(p[c] for c in pivots) for p in pts]
        M = [integerize((Fraction(1),) + tuple(-x for x in u)) for u in us]
        for ray in extreme_rays(M):
            c0, c = ray[0], ray[1:]
            if all(v == 0 for v in c):
                continue
            coeff = [Fraction(0)] * n
            for j, col in enumerate(pivots):
                coeff[col] = Fraction(c[j])
            ineqs.append((tuple(coeff), Fraction(c0)))
    return HPolytope(n, tuple(sorted(ineqs)), tuple(sorted(eqs)))


# ---------------------------------------------------------------------------
# faces


def skeleton(H: HPolytope) -> SkeletonGraph:
    """Vertex-edge graph. ``u, v`` are adjacent iff no third vertex is tight
    on every inequality tight at both."""
    verts = H.vertices.vertices
    masks = []
    for v in verts:
        m = 0
        for i in H.tight_set(v):
            m |= 1 << i
        masks.append(m)
    edges = []
    for i in range(len(verts)):
        for j in range(i + 1, len(verts)):
            common = masks[i] & masks[j]
            if not any(
                k != i and k != j and masks[k] & common == common for k in range(len(verts))
            ):
                edges.append((i, j))
    return SkeletonGraph(verts, tuple(edges))


def slice(H: HPolytope, var: int, value) -> VPolytope:  # noqa: A001 - public name
    """Vertices of ``H`` intersected with ``{x_var = value}``."""
    if not 0 <= var < H.dim:
        raise DimensionMismatch(f"variable {var} out of range for dim {H.dim}")
    e = tuple(Fraction(int(i == var)) for i in range(H.dim))
    return enumerate_vertices(H.with_equation(e, value))


def minimal_face(H: HPolytope, p: Sequence) -> Face:
    p = qvec(p)
    if not H.contains(p):
        raise PointNotInPolytope(f"{p} is not in the polytope")
    tight = H.tight_set(p)
    verts = tuple(v for v in H.vertices.vertices if tight <= H.tight_set(v))
    return Face(H, tight, verts)


def faces_up_to(H: HPolytope, max_dim: int) -> list[Face]:
    """All nonempty faces of dimension ``<= max_dim``.

    Every (j+1)-face is the smallest face containing some j-face and one
    more vertex, so faces are grown dimension by dimension.
    """
    verts = H.vertices.vertices
    if not verts:
        return []
    tights = [H.tight_set(v) for v in verts]
    all_idx = frozenset(range(len(H.ineqs)))

    def close(tight):
        return frozenset(i for i, t in enumerate(tights) if tight <= t)

    layer = {frozenset([i]): tights[i] for i in range(len(verts))}
    found = {}
    dim = 0
    while layer and dim <= max_dim:
        nxt = {}
        for vset, tight in layer.items():
            found[vset] = tight
            if dim == max_dim:
                continue
            for w in range(len(verts)):
                if w in vset:
                    continue
                t = tight & tights[w]
                vs = close(t)
                if vs in found or vs in nxt:
                    continue
                if affine_dim([verts[i] for i in vs]) == dim + 1:
                    nxt[vs] = t
        layer = nxt
        dim += 1
    out = []
    for vset, tight in found.items():
        # tight set of a face = everything tight on all of its vertices
        full_tight = frozenset.intersection(*(tights[i] for i in vset)) if vset else all_idx
        out.append(Face(H, full_tight, tuple(verts[i] for i in sorted(vset))))
    out.sort(key=lambda f: (f.dim, f.vertices))
    return out


def convexify_binary(V: VPolytope, var: int) -> VPolytope:
    """One sequential-convexification step on coordinate ``var``, at vertex
    level: keep exactly the vertices whose ``var`` coordinate is 0 or 1."""
    return VPolytope(V.dim, [v for v in V.vertices if v[var] == 0 or v[var] == 1])


def box(lo: Sequence, hi: Sequence) -> HPolytope:
    n = len(lo)
    rows = []
    for i in range(n):
        e = tuple(Fraction(int(i == j)) for j in range(n))
        rows.append((e, q(hi[i])))
        rows.append((tuple(-x for x in e), -q(lo[i])))
    return HPolytope(n, rows)
