"""Binarizations of a bounded integer variable.

A binarization lives in ``(x, y_1, ..., y_d)`` space with ``x`` as
coordinate 0. The x-values reachable with binary ``y`` must be exactly
``{0, ..., k}``; this is checked when the object is built.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .errors import DimensionMismatch, NotABinarization, NotBijective, RangeViolation
from .geometry import HPolytope, VPolytope, enumerate_vertices, facet_hull, skeleton
from .linalg import is_binary, is_integer, qvec, solve_affine

# ---------------------------------------------------------------------------
# bit strings


def to_bits(x: int, d: int) -> tuple[int, ...]:
    """``(x)_2``: the d-bit base-2 expansion of x, least significant bit first."""
    if not 0 <= x < 2**d:
        raise RangeViolation(f"{x} does not fit in {d} bits")
    return tuple((x >> i) & 1 for i in range(d))


def from_bits(bits: Sequence[int]) -> int:
    return sum(int(b) << i for i, b in enumerate(bits))


@dataclass(frozen=True)
class BitString:
    bits: tuple

    @classmethod
    def encode(cls, x: int, d: int) -> "BitString":
        return cls(to_bits(x, d))

    def decode(self) -> int:
        return from_bits(self.bits)

    def __len__(self):
        return len(self.bits)


@dataclass(frozen=True)
class HypercubePerm:
    """Bijection between ``{0,1}^d`` and ``{0, ..., 2^d - 1}``.

    ``sigma[m]`` is the x-value assigned to the bit string whose integer
    encoding (``from_bits``) is ``m``. The identity is the log encoding.
    """

    d: int
    sigma: tuple

    def __post_init__(self):
        sigma = tuple(int(s) for s in self.sigma)
        object.__setattr__(self, "sigma", sigma)
        if len(sigma) != 2**self.d or sorted(sigma) != list(range(2**self.d)):
            raise NotBijective(f"sigma is not a bijection onto 0..{2**self.d - 1}")

    @classmethod
    def log(cls, d: int) -> "HypercubePerm":
        return cls(d, tuple(range(2**d)))

    @classmethod
    def from_mapping(cls, d: int, mapping: dict) -> "HypercubePerm":
        """Build from ``{bit tuple: x}``."""
        sigma = [None] * 2**d
        for bits, x in mapping.items():
            sigma[from_bits(bits)] = x
        if None in sigma:
            raise NotBijective("mapping does not cover every bit string")
        return cls(d, tuple(sigma))

    def inverse(self) -> tuple:
        inv = [0] * len(self.sigma)
        for m, x in enumerate(self.sigma):
            inv[x] = m
        return tuple(inv)

    def points(self) -> list[tuple]:
        return [(x,) + to_bits(m, self.d) for m, x in enumerate(self.sigma)]


# ---------------------------------------------------------------------------
# the binarization object


@dataclass(frozen=True)
class Classification:
    natural: bool
    integral: bool
    exact: bool
    perfect: bool
    affine: tuple | None  # (a, beta) with x = a.y + beta on the body, or None
    linear: bool
    hypercube: bool
    x_outside_range: bool  # some vertex has x outside [0, k]

    def to_json(self) -> dict:
        out = {
            "natural": self.natural,
            "integral": self.integral,
            "exact": self.exact,
            "perfect": self.perfect,
            "affine": self.affine is not None,
            "linear": self.linear,
            "hypercube": self.hypercube,
            "x_outside_range": self.x_outside_range,
        }
        if self.affine is not None:
            a, beta = self.affine
            out["affine_coefficients"] = [str(c) for c in a]
            out["affine_offset"] = str(beta)
        return out


class Binarization:
    """A polytope ``B`` in ``R x [0,1]^d`` satisfying the range condition.

    Build through the ``make_*`` functions. Either an H- or a V-description
    may be supplied; the other is derived lazily.
    """

    def __init__(self, d: int, k: int, *, body: HPolytope | None = None,
                 verts: VPolytope | None = None, kind: str = "custom", params: dict | None = None):
        if body is None and verts is None:
            raise ValueError("need a body or a vertex set")
        for obj in (body, verts):
            if obj is not None and obj.dim != d + 1:
                raise DimensionMismatch(f"binarization with d={d} needs dim {d + 1}, got {obj.dim}")
        self.d = d
        self.k = k
        self.kind = kind
        self.params = dict(params or {})
        self._body = body
        self._verts = verts
        self._validate()

    @property
    def body(self) -> HPolytope:
        if self._body is None:
            self._body = facet_hull(self._verts)
        return self._body

    @property
    def vertices(self) -> VPolytope:
        if self._verts is None:
            self._verts = enumerate_vertices(self._body)
        return self._verts

    def _validate(self):
        verts = self.vertices.vertices
        if not verts:
            raise NotABinarization("empty body", missing=range(self.k + 1))
        for v in verts:
            if any(not 0 <= c <= 1 for c in v[1:]):
                raise NotABinarization(f"vertex {v} leaves the unit cube in y")
        seen = {}
        for v in verts:
            y = v[1:]
            if all(is_binary(c) for c in y):
                if y in seen and seen[y] != v[0]:
                    raise NotABinarization(f"binary y={y} carries two x-values")
                seen[y] = v[0]
        xs = set(seen.values())
        want = set(range(self.k + 1))
        if xs != want:
            missing = sorted(want - xs)
            extra = sorted(xs - want)
            raise NotABinarization(
                f"x-values with binary y are {sorted(xs)}, expected 0..{self.k}",
                missing=missing,
                extra=extra,
            )

    def binary_points(self) -> dict:
        """``{x: [y, ...]}`` over vertices with binary y."""
        out = {}
        for v in self.vertices.vertices:
            if all(is_binary(c) for c in v[1:]):
                out.setdefault(int(v[0]), []).append(v[1:])
        return out

    @cached_property
    def classification(self) -> Classification:
        return classify(self)

    @cached_property
    def skeleton(self):
        return skeleton(self.body)

    def slice(self, value) -> VPolytope:
        from .geometry import slice as _slice

        return _slice(self.body, 0, value)

    def __repr__(self):
        return f"Binarization(kind={self.kind!r}, d={self.d}, k={self.k})"


# ---------------------------------------------------------------------------
# constructors


def _e(n, i):
    return tuple(Fraction(int(j == i)) for j in range(n))


def _box_rows(d):
    rows = []
    for i in range(1, d + 1):
        rows.append((_e(d + 1, i), 1))
        rows.append((tuple(-c for c in _e(d + 1, i)), 0))
    return rows


def make_unary(d: int) -> Binarization:
    """``x = sum y_i`` with ``1 >= y_1 >= ... >= y_d >= 0``."""
    if d < 1:
        raise RangeViolation("d must be >= 1")
    n = d + 1
    eq = ((1,) + (-1,) * d, 0)
    rows = _box_rows(d)
    for i in range(1, d):
        rows.append((tuple(Fraction(-1 if j == i else 1 if j == i + 1 else 0) for j in range(n)), 0))
    return Binarization(d, d, body=HPolytope(n, rows, [eq]), kind="unary", params={"d": d})


def make_full(d: int) -> Binarization:
    """``x = sum i*y_i`` with ``sum y_i <= 1``."""
    if d < 1:
        raise RangeViolation("d must be >= 1")
    n = d + 1
    eq = ((1,) + tuple(-i for i in range(1, d + 1)), 0)
    rows = _box_rows(d) + [((0,) + (1,) * d, 1)]
    return Binarization(d, d, body=HPolytope(n, rows, [eq]), kind="full", params={"d": d})


def make_log(d: int) -> Binarization:
    """``x = sum 2^(i-1) y_i`` over the unit cube."""
    if d < 1:
        raise RangeViolation("d must be >= 1")
    n = d + 1
    eq = ((1,) + tuple(-(2**i) for i in range(d)), 0)
    return Binarization(d, 2**d - 1, body=HPolytope(n, _box_rows(d), [eq]), kind="log", params={"d": d})


def make_trunc_log(v: int, d: int) -> Binarization:
    """Convex hull of ``(x, (x)_2)`` for ``0 <= x <= v-1``."""
    if d < 1 or not 2 ** (d - 1) < v <= 2**d:
        raise RangeViolation(f"need 2^(d-1) < v <= 2^d, got v={v}, d={d}")
    if v == 2**d:
        B = make_log(d)
        B.kind = "trunc_log"
        B.params = {"v": v, "d": d}
        return B
    # 0/1 points are always in convex position, so every point is a vertex
    pts = [(x,) + to_bits(x, d) for x in range(v)]
    return Binarization(d, v - 1, verts=VPolytope(d + 1, pts), kind="trunc_log", params={"v": v, "d": d})


def make_hypercube(perm: HypercubePerm) -> Binarization:
    """Convex hull of ``(sigma(y), y)`` over all ``y`` in ``{0,1}^d``."""
    if not isinstance(perm, HypercubePerm):
        raise NotBijective("expected a HypercubePerm")
    B = Binarization(
        perm.d, 2**perm.d - 1, verts=VPolytope(perm.d + 1, perm.points()),
        kind="hypercube", params={"d": perm.d, "sigma": list(perm.sigma)},
    )
    B.perm = perm
    return B


def make_custom(body: HPolytope | VPolytope, k: int) -> Binarization:
    d = body.dim - 1
    if isinstance(body, HPolytope):
        return Binarization(d, k, body=body, kind="custom")
    return Binarization(d, k, verts=VPolytope.from_points(body.dim, body.vertices), kind="custom")


# ---------------------------------------------------------------------------
# classification


def affine_fit(points: Sequence[Sequence]) -> tuple | None:
    """Solve ``x = a.y + beta`` exactly over all points ``(x, y)``.

    Returns ``(a, beta)`` or None when inconsistent. When the y-part is not
    full-dimensional, free coefficients are set to zero.
    """
    d = len(points[0]) - 1
    rows = [tuple(p[1:]) + (Fraction(1),) for p in points]
    sol = solve_affine(rows, [p[0] for p in points], d + 1)
    if sol is None:
        return None
    z, _ = sol
    return tuple(z[:d]), z[d]


def classify(B: Binarization) -> Classification:
    verts = B.vertices.vertices
    natural = all(is_integer(v[0]) for v in verts)
    integral = all(is_binary(c) for v in verts for c in v[1:])
    bp = B.binary_points()
    exact = all(len(bp.get(x, ())) == 1 for x in range(B.k + 1))
    aff = affine_fit(verts)
    linear = aff is not None and aff[1] == 0
    ys = {v[1:] for v in verts}
    hypercube = (
        integral
        and len(verts) == 2**B.d
        and len(ys) == 2**B.d
        and sorted(v[0] for v in verts) == list(range(2**B.d))
    )
    outside = any(not 0 <= v[0] <= B.k for v in verts)
    return Classification(
        natural=natural,
        integral=integral,
        exact=exact,
        perfect=exact and natural,
        affine=aff,
        linear=linear,
        hypercube=hypercube,
        x_outside_range=outside,
    )


# ---------------------------------------------------------------------------
# uniqueness checkers


def log_normal_form(perm: HypercubePerm) -> tuple | None:
    """If ``perm`` is the log encoding up to permuting and complementing
    coordinates, return the coordinate weights after complementing so that
    x = 0 sits at y = 0; otherwise None."""
    d = perm.d
    flip = perm.inverse()[0]  # bit string carrying x = 0
    sigma = [perm.sigma[m ^ flip] for m in range(2**d)]
    weights = [sigma[1 << i] for i in range(d)]
    if sorted(weights) != [2**i for i in range(d)]:
        return None
    for m in range(2**d):
        if sigma[m] != sum(w for i, w in enumerate(weights) if m >> i & 1):
            return None
    return tuple(weights)


def all_hypercube_perms(d: int):
    for p in itertools.permutations(range(2**d)):
        yield HypercubePerm(d, p)


def linear_trunc_candidates(v: int, d: int) -> list[tuple[int, ...]]:
    """Integer weight vectors ``a`` with entries in ``1..2^(d-1)`` such that
    ``x = a.y`` maps the truncated hypercube vertex set onto ``{0..v-1}``
    bijectively."""
    if d < 1 or not 2 ** (d - 1) < v <= 2**d:
        raise RangeViolation(f"need 2^(d-1) < v <= 2^d, got v={v}, d={d}")
    ys = [to_bits(x, d) for x in range(v)]
    target = list(range(v))
    found = []
    for a in itertools.product(range(1, 2 ** (d - 1) + 1), repeat=d):
        vals = sorted(sum(ai * yi for ai, yi in zip(a, y)) for y in ys)
        if vals == target:
            found.append(a)
    return found


def is_log_weights(a: Sequence[int]) -> bool:
    return sorted(a) == [2**i for i in range(len(a))]


def linear_trunc_violations(v: int, d: int) -> list[tuple[int, ...]]:
    """Weight vectors of linear binarizations over the truncated hypercube
    that are *not* a permutation of ``(1, 2, ..., 2^(d-1))``.

    Empty for every ``d <= 2``; for example ``v=5, d=3`` admits
    ``x = y1 + 3 y2 + 2 y3``.
    """
    return [a for a in linear_trunc_candidates(v, d) if not is_log_weights(a)]


def points_of(B: Binarization) -> list[tuple]:
    return [qvec(v) for v in B.vertices.vertices]
