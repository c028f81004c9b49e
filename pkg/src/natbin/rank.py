"""Rank of a natural binarization.

Two independent routes to ``rk_B(alphas)``: a set cover over indicator
vectors of alpha-edges of the skeleton (:func:`rank_skeleton`), and the
lift-and-project rank of the hull of fractional slices
(:func:`rank_direct`). Closed forms for the classical binarizations and a
purely combinatorial engine for hypercube binarizations sit on top.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .bef import ExtendedFormulation, fractional_support, vertices_Q
from .binarization import Binarization, HypercubePerm, all_hypercube_perms
from .errors import NonNaturalBinarization, RangeViolation, TheoremViolation
from .geometry import VPolytope, facet_hull
from .linalg import is_binary
from .setcover import SetCoverInstance, set_cover_exhaustive, set_cover_min

log = logging.getLogger(__name__)

__all__ = [
    "SetCoverInstance",
    "set_cover_min",
    "set_cover_exhaustive",
    "EdgeIndicator",
    "RankQuery",
    "CutFamily",
    "alpha_edges",
    "rank_skeleton",
    "rank_direct",
    "rank_unary_formula",
    "rank_full_formula",
    "f_log",
    "f_log_bits",
    "rank_log_formula",
    "rank_trunc",
    "rank_trunc_closed_form",
    "hypercube_rank",
    "hypercube_f",
    "verify_logbest",
    "property_rank",
    "property_rank_detail",
]


@dataclass(frozen=True)
class EdgeIndicator:
    endpoints: tuple
    t: tuple


@dataclass(frozen=True)
class RankQuery:
    B: Binarization
    alphas: tuple

    def __post_init__(self):
        alphas = tuple(int(a) for a in self.alphas)
        if not alphas:
            raise RangeViolation("alphas must be nonempty")
        for a in alphas:
            if not 0 <= a <= self.B.k - 1:
                raise RangeViolation(f"alpha={a} outside 0..{self.B.k - 1}")
        object.__setattr__(self, "alphas", alphas)


def _require_natural(B: Binarization):
    if not B.classification.natural:
        raise NonNaturalBinarization(f"{B!r} is not natural")


def indicator(u: Sequence, v: Sequence) -> tuple[int, ...]:
    """``t_k = 0`` iff both endpoints carry the same binary value in y_k."""
    return tuple(0 if a == b and is_binary(a) else 1 for a, b in zip(u[1:], v[1:]))


def alpha_edges(B: Binarization, alpha: int) -> list[EdgeIndicator]:
    _require_natural(B)
    if not 0 <= alpha <= B.k - 1:
        raise RangeViolation(f"alpha={alpha} outside 0..{B.k - 1}")
    sk = B.skeleton
    out = []
    for i, j in sk.edges:
        u, v = sk.nodes[i], sk.nodes[j]
        if u[0] > v[0]:
            u, v = v, u
        if u[0] <= alpha and v[0] >= alpha + 1:
            out.append(EdgeIndicator((u, v), indicator(u, v)))
    return out


def _as_query(B, alphas) -> RankQuery:
    if isinstance(B, RankQuery):
        return B
    if isinstance(alphas, int):
        alphas = (alphas,)
    return RankQuery(B, tuple(alphas))


def rank_skeleton(B: Binarization | RankQuery, alphas=None) -> int:
    q = _as_query(B, alphas)
    _require_natural(q.B)
    rows = []
    for a in dict.fromkeys(q.alphas):
        rows.extend(e.t for e in alpha_edges(q.B, a))
    return set_cover_min(SetCoverInstance(q.B.d, tuple(rows)))[0]


def slice_rows(B: Binarization, alphas: Sequence[int], offset=Fraction(1, 2)) -> list[tuple]:
    """Fractional supports of the vertices of ``conv(U_j B(alpha_j + offset))``."""
    pts = []
    for a in dict.fromkeys(alphas):
        pts.extend(B.slice(a + offset).vertices)
    hull = facet_hull(VPolytope(B.d + 1, pts)).vertices
    cols = list(range(1, B.d + 1))
    return [fractional_support(v, cols) for v in hull.vertices]


def rank_direct(B: Binarization | RankQuery, alphas=None, offset=Fraction(1, 2)) -> int:
    """``lpr`` of the hull of the slices of ``B`` at ``alpha_j + offset``."""
    q = _as_query(B, alphas)
    _require_natural(q.B)
    if not 0 < offset < 1:
        raise RangeViolation("slice offset must be strictly between 0 and 1")
    supports = slice_rows(q.B, q.alphas, offset)
    return set_cover_min(SetCoverInstance.from_supports(q.B.d, supports))[0]


# ---------------------------------------------------------------------------
# closed forms


def _check_alphas(alphas, hi, what):
    if isinstance(alphas, int):
        alphas = (alphas,)
    alphas = tuple(alphas)
    if not alphas:
        raise RangeViolation("alphas must be nonempty")
    for a in alphas:
        if not 0 <= a <= hi:
            raise RangeViolation(f"alpha={a} outside 0..{hi} for {what}")
    return alphas


def rank_unary_formula(d: int, alphas) -> int:
    return len(set(_check_alphas(alphas, d - 1, "unary")))


def rank_full_formula(d: int, alphas) -> int:
    return d - min(_check_alphas(alphas, d - 1, "full"))


def f_log(alpha: int) -> int:
    """Largest t with 2^t dividing alpha + 1."""
    n = alpha + 1
    return (n & -n).bit_length() - 1


def f_log_bits(alpha: int) -> int:
    """Number of 1-bits of ``alpha`` before its lowest 0-bit."""
    t = 0
    while alpha >> t & 1:
        t += 1
    return t


def rank_log_formula(d: int, alphas) -> int:
    alphas = _check_alphas(alphas, 2**d - 2, "log")
    return d - min(f_log(a) for a in alphas)


def rank_trunc(v: int, d: int, alpha: int) -> int:
    """Rank of the truncated log binarization by the halving recursion."""
    if d < 1 or not 2 ** (d - 1) < v <= 2**d:
        raise RangeViolation(f"need 2^(d-1) < v <= 2^d, got v={v}, d={d}")
    if not 0 <= alpha <= v - 2:
        raise RangeViolation(f"alpha={alpha} outside 0..{v - 2}")
    half = 2 ** (d - 1)
    if v == 2**d or alpha < half:
        return rank_log_formula(d, alpha)
    v2 = v - half
    d2 = (v2 - 1).bit_length()  # ceil(log2 v2)
    return 1 + rank_trunc(v2, d2, alpha - half)


def rank_trunc_closed_form(v: int, d: int, alpha: int) -> int:
    """Non-recursive variant: ``s + rk_{B^L(d~)}(alpha~)``.

    ``j`` is the highest bit set in v but not in alpha, ``s`` counts the
    higher bits set in both, ``alpha~`` and ``v~`` keep bits ``<= j``, and
    ``d~ = ceil(log2 v~)``. Only meaningful for ``v < 2^d``.
    """
    if d < 1 or not 2 ** (d - 1) < v < 2**d:
        raise RangeViolation(f"need 2^(d-1) < v < 2^d, got v={v}, d={d}")
    if not 0 <= alpha <= v - 2:
        raise RangeViolation(f"alpha={alpha} outside 0..{v - 2}")
    j = max(i for i in range(d) if v >> i & 1 and not alpha >> i & 1)
    s = sum(1 for i in range(j + 1, d) if v >> i & 1 and alpha >> i & 1)
    mask = (1 << (j + 1)) - 1
    a_t, v_t = alpha & mask, v & mask
    d_t = (v_t - 1).bit_length()
    if d_t == 0:
        return s
    return s + rank_log_formula(d_t, a_t)


# ---------------------------------------------------------------------------
# hypercube engine


@dataclass(frozen=True)
class CutFamily:
    """Cuts of the hypercube graph of a hypercube binarization.

    Nodes are bit strings encoded as integers; edge ``(m, m ^ (1 << i))``
    has type ``i``.
    """

    d: int
    V_alpha_cuts: dict = field(hash=False)
    type_cuts: dict = field(hash=False)

    @classmethod
    def build(cls, perm: HypercubePerm, alphas: Sequence[int] | None = None) -> "CutFamily":
        d, sigma = perm.d, perm.sigma
        alphas = range(2**d - 1) if alphas is None else alphas
        types = {}
        for i in range(d):
            bit = 1 << i
            types[i] = frozenset((m, m | bit) for m in range(2**d) if not m & bit)
        cuts = {}
        for a in alphas:
            cuts[a] = frozenset(e for es in types.values() for e in es if (sigma[e[0]] <= a) != (sigma[e[1]] <= a))
        return cls(d, cuts, types)

    def is_partition_into_perfect_matchings(self) -> bool:
        n = 2**self.d
        all_edges = set()
        for es in self.type_cuts.values():
            nodes = [x for e in es for x in e]
            if len(nodes) != n or len(set(nodes)) != n:
                return False
            if all_edges & es:
                return False
            all_edges |= es
        return len(all_edges) == self.d * 2 ** (self.d - 1)


def hypercube_f(perm: HypercubePerm, alphas) -> int:
    """Number of coordinate types whose edges never cross any ``V_alpha`` cut."""
    d, sigma = perm.d, perm.sigma
    alphas = _check_alphas(alphas, 2**d - 2, "hypercube")
    free = 0
    for i in range(d):
        bit = 1 << i
        crossed = False
        for m in range(2**d):
            if m & bit:
                continue
            a, b = sigma[m], sigma[m | bit]
            lo, hi = (a, b) if a < b else (b, a)
            if any(lo <= al < hi for al in alphas):
                crossed = True
                break
        if not crossed:
            free += 1
    return free


def hypercube_rank(perm: HypercubePerm, alphas) -> int:
    return perm.d - hypercube_f(perm, alphas)


@dataclass
class LogbestReport:
    d: int
    alphas: tuple
    mode: str
    checked: int = 0
    log_rank: int = 0
    min_rank: int | None = None
    log_attains_min: bool = False
    violations: list = field(default_factory=list)
    matching_violations: list = field(default_factory=list)
    distribution: Counter = field(default_factory=Counter)

    @property
    def ok(self) -> bool:
        return not self.violations and not self.matching_violations and self.log_attains_min

    def to_json(self) -> dict:
        return {
            "d": self.d,
            "alphas": list(self.alphas),
            "mode": self.mode,
            "checked": self.checked,
            "log_rank": self.log_rank,
            "min_rank": self.min_rank,
            "log_attains_min": self.log_attains_min,
            "violations": [list(s) for s in self.violations],
            "matching_violations": [list(s) for s in self.matching_violations],
            "distribution": {str(k): v for k, v in sorted(self.distribution.items())},
            "ok": self.ok,
        }


def sample_perms(d: int, n: int, seed: int):
    """``n`` seeded uniform bijections (Fisher-Yates via ``random.shuffle``)."""
    rng = random.Random(seed)
    base = list(range(2**d))
    for _ in range(n):
        rng.shuffle(base)
        yield HypercubePerm(d, tuple(base))


def verify_logbest(d: int, alphas, mode: str = "exhaustive", n: int = 10_000, seed: int = 0) -> LogbestReport:
    """Check that no hypercube binarization beats the log encoding, and that
    ``2^f`` divides every ``alpha_j + 1``, over all or sampled bijections."""
    alphas = _check_alphas(alphas, 2**d - 2, "hypercube")
    if mode == "exhaustive":
        if d > 3:
            raise RangeViolation("exhaustive mode is limited to d <= 3")
        perms = all_hypercube_perms(d)
    elif mode == "sample":
        perms = sample_perms(d, n, seed)
    else:
        raise ValueError(f"unknown mode {mode!r}")
    log_r = rank_log_formula(d, alphas)
    rep = LogbestReport(d, alphas, mode, log_rank=log_r)
    for perm in perms:
        f = hypercube_f(perm, alphas)
        r = d - f
        rep.checked += 1
        rep.distribution[r] += 1
        if r < log_r:
            rep.violations.append(perm.sigma)
        if any((a + 1) % (2**f) for a in alphas):
            rep.matching_violations.append(perm.sigma)
    rep.min_rank = min(rep.distribution) if rep.distribution else None
    rep.log_attains_min = hypercube_rank(HypercubePerm.log(d), alphas) == log_r and rep.min_rank == log_r
    return rep


# ---------------------------------------------------------------------------
# rank of a property on a full extended formulation


@dataclass(frozen=True)
class PropertyRank:
    value: int
    cover: tuple  # Q columns
    rows: SetCoverInstance
    dropped: tuple  # alphas with no violating vertex
    skeleton_value: int | None  # rank_skeleton on the block, when comparable


def property_rank_detail(E: ExtendedFormulation, i: int, alphas, check: bool = True) -> PropertyRank:
    """Rank of the property "no vertex has ``alpha_j < x < alpha_j + 1``" for
    binarized block ``i`` (0-based), by set cover over violating vertices."""
    if isinstance(alphas, int):
        alphas = (alphas,)
    alphas = tuple(dict.fromkeys(alphas))
    B = E.bins[i]
    _require_natural(B)
    xcol = E.binarized[i]
    cols = E.y_columns(i)
    V = vertices_Q(E)
    supports = []
    hit = set()
    for v in V.vertices:
        for a in alphas:
            if a < v[xcol] < a + 1:
                hit.add(a)
                supports.append(fractional_support(v, cols))
                break
    dropped = tuple(a for a in alphas if a not in hit)
    if dropped:
        log.info("alphas %s have no violating vertex and contribute no rows", dropped)
    A = SetCoverInstance.from_supports(B.d, supports)
    value, cover = set_cover_min(A)
    skel = None
    kept = tuple(a for a in alphas if a in hit)
    if kept:
        skel = rank_skeleton(B, kept)
        if check and skel != value:
            raise TheoremViolation(f"property rank {value} != skeleton rank {skel} for alphas {kept}")
    return PropertyRank(value, tuple(cols[j] for j in cover), A, dropped, skel)


def property_rank(E: ExtendedFormulation, i: int, alphas) -> int:
    return property_rank_detail(E, i, alphas).value

