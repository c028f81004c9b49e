import itertools
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from natbin import HPolytope, VPolytope, classify, make_custom, make_full, make_hypercube, make_log, make_trunc_log, make_unary
from natbin.binarization import (
    BitString,
    HypercubePerm,
    all_hypercube_perms,
    from_bits,
    is_log_weights,
    linear_trunc_violations,
    linear_trunc_candidates,
    log_normal_form,
    to_bits,
)
from natbin.rank import rank_direct, rank_skeleton
from natbin.errors import NotABinarization, NotBijective, RangeViolation
from natbin.pyramid import nonnatural_binarization

from oracles import counterexample_binarization


@given(st.integers(1, 10).flatmap(lambda d: st.tuples(st.just(d), st.integers(0, 2**d - 1))))
def test_bits_round_trip(dx):
    d, x = dx
    assert from_bits(to_bits(x, d)) == x
    assert BitString.encode(x, d).decode() == x


def test_bits_are_least_significant_first():
    assert to_bits(6, 3) == (0, 1, 1)
    with pytest.raises(RangeViolation):
        to_bits(8, 3)


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_unary_points(d):
    B = make_unary(d)
    assert B.k == d
    want = {(x,) + (1,) * x + (0,) * (d - x) for x in range(d + 1)}
    assert set(B.vertices.vertices) == want


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_full_points(d):
    B = make_full(d)
    want = {(0,) + (0,) * d} | {(i,) + tuple(int(j == i) for j in range(1, d + 1)) for i in range(1, d + 1)}
    assert set(B.vertices.vertices) == want


@pytest.mark.parametrize("d", [1, 2, 3])
def test_log_points(d):
    B = make_log(d)
    assert B.k == 2**d - 1
    assert set(B.vertices.vertices) == {(x,) + to_bits(x, d) for x in range(2**d)}


def test_truncated_log_with_full_range_is_log():
    B = make_trunc_log(4, 2)
    assert B.kind == "trunc_log"
    assert set(B.vertices.vertices) == set(make_log(2).vertices.vertices)
    assert len(make_trunc_log(3, 2).vertices) == 3
    with pytest.raises(RangeViolation):
        make_trunc_log(2, 2)


@pytest.mark.parametrize("B", [make_unary(3), make_full(3), make_log(3)], ids=["unary", "full", "log"])
def test_classical_binarizations_are_perfect_and_affine(B):
    c = classify(B)
    assert c.natural and c.integral and c.exact and c.perfect
    assert c.linear
    assert not c.x_outside_range


def test_log_is_a_hypercube_binarization_and_unary_is_not():
    assert classify(make_log(3)).hypercube
    assert not classify(make_unary(3)).hypercube


def test_nonnatural_binarization():
    B = nonnatural_binarization()
    c = classify(B)
    assert not c.natural
    assert (F(3, 2), 1, F(1, 2)) in B.vertices
    assert len(B.vertices) == 4


def test_counterexample_binarization_is_affine_but_not_linear():
    c = classify(counterexample_binarization())
    assert c.natural and c.perfect
    assert c.affine is not None and not c.linear


def test_range_condition_is_enforced():
    # x = 3 y1 reaches only {0, 3}
    body = HPolytope(2, [((0, 1), 1), ((0, -1), 0)], [((1, -3), 0)])
    with pytest.raises(NotABinarization) as exc:
        make_custom(body, 3)
    assert exc.value.missing == (1, 2)
    with pytest.raises(NotABinarization):
        make_custom(VPolytope(2, [(0, 0), (1, 1), (1, 0)]), 1)


def test_hypercube_perm_validation():
    with pytest.raises(NotBijective):
        HypercubePerm(2, (0, 1, 1, 2))
    p = HypercubePerm.from_mapping(2, {(0, 0): 3, (1, 0): 2, (0, 1): 1, (1, 1): 0})
    assert p.sigma == (3, 2, 1, 0)
    assert p.inverse() == (3, 2, 1, 0)


def test_hypercube_binarization_vertices_carry_sigma():
    p = HypercubePerm(2, (2, 0, 3, 1))
    B = make_hypercube(p)
    assert set(B.vertices.vertices) == {(2, 0, 0), (0, 1, 0), (3, 0, 1), (1, 1, 1)}
    assert classify(B).hypercube


def test_affine_hypercube_binarizations_are_log_up_to_symmetry():
    for perm in all_hypercube_perms(2):
        geometric = classify(make_hypercube(perm)).affine is not None
        assert geometric == (log_normal_form(perm) is not None), perm.sigma


def test_log_normal_form_at_d3_on_symmetries_of_log():
    for order in itertools.permutations(range(3)):
        for flip in range(8):
            sigma = [0] * 8
            for m in range(8):
                bits = [(m >> order[i]) & 1 for i in range(3)]
                sigma[m ^ flip] = from_bits(bits)
            assert log_normal_form(HypercubePerm(3, tuple(sigma))) is not None
    assert log_normal_form(HypercubePerm(3, (0, 1, 2, 3, 4, 5, 7, 6))) is None


@pytest.mark.parametrize("v,d", [(v, d) for d in (2, 3, 4) for v in range(2 ** (d - 1) + 1, 2**d)])
def test_log_weights_are_always_a_linear_candidate(v, d):
    assert tuple(2**i for i in range(d)) in linear_trunc_candidates(v, d)


def test_no_nonlog_linear_truncated_binarization_for_d2():
    assert linear_trunc_violations(3, 2) == []


def test_nonlog_linear_binarization_over_truncated_cube():
    # x = y1 + 3 y2 + 2 y3 on the first five points of the 3-cube
    assert (1, 3, 2) in linear_trunc_violations(5, 3)
    T = make_trunc_log(5, 3)
    ys = [v[1:] for v in T.vertices]
    B = make_custom(VPolytope(4, [(y[0] + 3 * y[1] + 2 * y[2],) + y for y in ys]), 4)
    c = classify(B)
    assert c.natural and c.perfect and c.linear
    assert {v[1:] for v in B.vertices} == set(ys)
    assert c.affine[0] == (1, 3, 2)
    # it is a different binarization, not a relabelling of the truncated log
    ranks_B = [rank_skeleton(B, (a,)) for a in range(4)]
    assert ranks_B == [rank_direct(B, (a,)) for a in range(4)]
    assert ranks_B != [rank_skeleton(T, (a,)) for a in range(4)]


@pytest.mark.xfail(strict=True, reason="uniqueness of log weights fails for d >= 3, e.g. (1, 3, 2) at v=5")
@pytest.mark.parametrize("d", [3, 4])
def test_linear_truncated_binarizations_only_have_log_weights(d):
    for v in range(2 ** (d - 1) + 1, 2**d):
        assert linear_trunc_violations(v, d) == [], v
