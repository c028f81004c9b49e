"""The pyramid instance and its binary extended formulation with two unary
binarizations, together with the expected artifacts as functions of h."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction as F

from .bef import ExtendedFormulation, build, characterize_projection, lpr, sequential_convexify, vertices_Q
from .binarization import Binarization, make_custom, make_unary
from .errors import NonPositiveH
from .geometry import HPolytope
from .linalg import q


def pyramid(h) -> HPolytope:
    """``{x in [0,2]^2 x R : h x1 + h x2 + x3 <= 2h, x3 <= 2h x1, x3 <= 2h x2, x3 >= 0}``."""
    h = q(h)
    if h <= 0:
        raise NonPositiveH(f"h must be positive, got {h}")
    rows = [
        ((h, h, 1), 2 * h),
        ((-2 * h, 0, 1), 0),
        ((0, -2 * h, 1), 0),
        ((0, 0, -1), 0),
        ((1, 0, 0), 2),
        ((-1, 0, 0), 0),
        ((0, 1, 0), 2),
        ((0, -1, 0), 0),
    ]
    return HPolytope(3, rows)


def nonnatural_binarization() -> Binarization:
    """``{x = y1 + y2, y1 <= 2 y2, y in [0,1]^2}``: a valid but non-natural binarization."""
    rows = [
        ((0, 1, 0), 1), ((0, -1, 0), 0),
        ((0, 0, 1), 1), ((0, 0, -1), 0),
        ((0, 1, -2), 0),
    ]
    return make_custom(HPolytope(3, rows, [((1, -1, -1), 0)]), 2)


def pyramid_bef(h, bins=None) -> ExtendedFormulation:
    bins = bins or [make_unary(2), make_unary(2)]
    return build(pyramid(h), bins)


def expected_pyramid(h) -> dict:
    h = q(h)
    half, third, sixth, quarter = F(1, 2), F(1, 3), F(1, 6), F(1, 4)
    t = 2 * h / 3
    VP = {(0, 0, 0), (2, 0, 0), (0, 2, 0), (half, half, h)}
    VQ = [
        (0, 0, 0, 0, 0, 0, 0),
        (2, 0, 0, 1, 1, 0, 0),
        (0, 2, 0, 0, 0, 1, 1),
        (half, half, h, half, 0, half, 0),
        (half, half, h, half, 0, quarter, quarter),
        (half, half, h, quarter, quarter, half, 0),
        (half, half, h, quarter, quarter, quarter, quarter),
        (1, 0, 0, 1, 0, 0, 0),
        (0, 1, 0, 0, 0, 1, 0),
        (1, 1, 0, 1, 0, 1, 0),
        (1, 1, 0, half, half, 1, 0),
        (1, 1, 0, 1, 0, half, half),
        (1, third, t, 1, 0, third, 0),
        (1, third, t, 1, 0, sixth, sixth),
        (third, 1, t, third, 0, 1, 0),
        (third, 1, t, sixth, sixth, 1, 0),
    ]
    proj = VP | {(1, 0, 0), (0, 1, 0), (1, 1, 0), (1, third, t), (third, 1, t)}
    A = [
        (1, 0, 1, 0), (1, 0, 1, 1), (1, 1, 1, 0), (1, 1, 1, 1), (1, 1, 0, 0),
        (0, 0, 1, 1), (0, 0, 1, 0), (0, 0, 1, 1), (1, 0, 0, 0), (1, 1, 0, 0),
    ]
    integer_points = {(0, 0, 0), (1, 0, 0), (2, 0, 0), (0, 1, 0), (1, 1, 0), (0, 2, 0)}

    def canon(pts):
        return {tuple(F(c) for c in p) for p in pts}

    return {
        "V(P)": canon(VP),
        "V(Q)": canon(VQ),
        "proj V(Q)": canon(proj),
        "A_Q": Counter(A),
        "lpr": 2,
        "convexified": canon(integer_points),
    }


@dataclass
class PyramidReport:
    h: F
    computed: dict
    expected: dict
    checks: dict = field(default_factory=dict)
    cover_names: tuple = ()

    @property
    def ok(self) -> bool:
        return all(self.checks.values())


def reproduce_pyramid(h) -> PyramidReport:
    h = q(h)
    E = pyramid_bef(h)
    exp = expected_pyramid(h)
    V = vertices_Q(E)
    res = lpr(E)
    after = sequential_convexify(E, res.cover, V)
    got = {
        "V(P)": set(E.P.vertices.vertices),
        "V(Q)": set(V.vertices),
        "proj V(Q)": E.project_x(V.vertices),
        "characterized": characterize_projection(E),
        "A_Q": Counter(res.A.rows),
        "lpr": res.value,
        "cover": res.cover,
        "convexified": E.project_x(after.vertices),
    }
    cover_valid = res.A.is_cover([res.columns.index(c) for c in res.cover]) and len(res.cover) == res.value
    checks = {
        "V(P)": got["V(P)"] == exp["V(P)"],
        "V(Q)": got["V(Q)"] == exp["V(Q)"] and len(V) == 16,
        "proj V(Q)": got["proj V(Q)"] == exp["proj V(Q)"] == got["characterized"],
        "A_Q": got["A_Q"] == exp["A_Q"],
        "lpr": got["lpr"] == exp["lpr"] and cover_valid,
        "convexified": got["convexified"] == exp["convexified"],
    }
    names = tuple(E.column_name(c) for c in res.cover)
    return PyramidReport(h, got, exp, checks, names)
