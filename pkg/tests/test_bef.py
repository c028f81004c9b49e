import random
from fractions import Fraction as F

import pytest

from natbin import build, characterize_projection, lpr, make_log, make_unary, property_rank, sequential_convexify, verify_vertex_conditions, vertices_Q
from natbin.bef import check_persistency, lpr_exhaustive, singleton_point, Fixing
from natbin.errors import NonNaturalBinarization, RangeMismatch, SizeLimitExceeded
from natbin.geometry import box, minimal_face
from natbin.linalg import is_binary
from natbin.pyramid import nonnatural_binarization, pyramid, pyramid_bef
from natbin.rank import property_rank_detail, rank_skeleton

from oracles import random_instance


@pytest.fixture(scope="module")
def instances():
    rng = random.Random(77)
    return [random_instance(rng, max_total=8) for _ in range(15)]


def test_column_layout():
    E = pyramid_bef(3)
    assert E.index_map == {"x1": 0, "x2": 1, "x3": 2, "y11": 3, "y12": 4, "y21": 5, "y22": 6}
    assert E.y_columns(1) == [5, 6]
    assert E.block_of(4) == 0
    assert E.Q.dim == 7


def test_range_must_fit_the_binarization():
    with pytest.raises(RangeMismatch):
        build(box([0], [3]), [make_unary(2)])
    with pytest.raises(RangeMismatch):
        build(box([-1], [1]), [make_unary(2)])
    # fractional upper end inside [0, k] is fine
    build(box([0], [F(3, 2)]), [make_unary(2)])


def test_bad_binarized_lists():
    with pytest.raises(ValueError):
        build(pyramid(1), [make_unary(2), make_unary(2)], [0, 0])
    with pytest.raises(ValueError):
        build(pyramid(1), [make_unary(2)], [0, 1])


def test_size_limit():
    E = build(pyramid(1), [make_unary(2), make_unary(2)], limit_dim=6)
    with pytest.raises(SizeLimitExceeded):
        vertices_Q(E)


def test_characterization_refuses_non_natural():
    E = pyramid_bef(3, [nonnatural_binarization(), nonnatural_binarization()])
    with pytest.raises(NonNaturalBinarization):
        characterize_projection(E)


def test_singleton_point_on_pyramid_edge():
    P = pyramid(3)
    face = minimal_face(P, (1, F(1, 3), 2))
    assert singleton_point(P, face, Fixing((0,), {0: 1})) == (1, F(1, 3), 2)
    assert singleton_point(P, face, Fixing((0,), {0: 3})) is None


def test_every_vertex_has_a_witness(instances):
    for E in [pyramid_bef(3)] + instances:
        for v in vertices_Q(E).vertices:
            face, fixing = verify_vertex_conditions(E, v)
            assert face.dim == len(fixing.I)


def test_lpr_matches_exhaustive_search(instances):
    for E in [pyramid_bef(3), pyramid_bef(F(1, 2))] + instances:
        res = lpr(E)
        assert res.value == lpr_exhaustive(E)
        left = sequential_convexify(E, res.cover)
        assert all(is_binary(v[c]) for v in left.vertices for c in E.all_y_columns)


def test_lpr_is_zero_for_an_integral_formulation():
    E = build(box([0, 0], [3, 1]), [make_log(2)])
    assert lpr(E).value == 0


def test_persistency_on_pyramid():
    E = pyramid_bef(3)
    for c in E.all_y_columns:
        assert check_persistency(E, c)
    assert check_persistency(E, "y11")


def test_property_rank_on_pyramid():
    E = pyramid_bef(3)
    assert property_rank(E, 0, 0) == 1
    detail = property_rank_detail(E, 0, (0, 1))
    assert detail.value == 1
    assert detail.dropped == (1,)


def test_property_rank_zero_without_violations():
    E = build(box([0, 0], [3, 1]), [make_log(2)])
    detail = property_rank_detail(E, 0, (0, 1, 2))
    assert detail.value == 0
    assert detail.dropped == (0, 1, 2)


def test_property_rank_equals_binarization_rank(instances):
    checked = 0
    for E in instances:
        V = vertices_Q(E)
        for i, (x, B) in enumerate(zip(E.binarized, E.bins)):
            for a in range(B.k):
                if any(a < v[x] < a + 1 for v in V.vertices):
                    assert property_rank(E, i, a) == rank_skeleton(B, (a,))
                    checked += 1
    assert checked > 0
