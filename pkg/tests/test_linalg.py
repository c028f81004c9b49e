from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from natbin.linalg import affine_dim, dot, fmt, integerize, nullspace, primitive, q, rank, rref, solve_affine

small = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def matrices(max_rows=4, max_cols=4):
    return st.integers(1, max_cols).flatmap(
        lambda n: st.lists(st.lists(small, min_size=n, max_size=n), min_size=1, max_size=max_rows).map(lambda m: (m, n))
    )


def test_q_parses_strings_and_rejects_floats():
    assert q("3/4") == F(3, 4)
    assert q(2) == F(2)
    with pytest.raises(TypeError):
        q(0.5)


def test_rref_of_known_matrix():
    rows, piv = rref([[2, 4], [1, 3]])
    assert piv == [0, 1]
    assert rows == [[1, 0], [0, 1]]


@given(matrices())
def test_nullspace_vectors_annihilate_rows(mn):
    M, n = mn
    N = nullspace(M, n)
    assert len(N) == n - rank(M)
    for v in N:
        for r in M:
            assert dot(r, v) == 0


@given(matrices(), st.lists(small, min_size=4, max_size=4))
def test_solve_affine_solutions_satisfy_the_system(mn, x):
    M, n = mn
    x = x[:n]
    rhs = [dot(r, x) for r in M]
    sol = solve_affine(M, rhs, n)
    assert sol is not None
    x0, N = sol
    assert [dot(r, x0) for r in M] == rhs
    assert len(N) == n - rank(M)


def test_solve_affine_reports_inconsistency():
    assert solve_affine([[1, 1], [1, 1]], [0, 1], 2) is None


def test_integerize_and_primitive():
    assert integerize([F(1, 2), F(-3, 4), 0]) == (2, -3, 0)
    assert primitive([4, -6, 0]) == (2, -3, 0)


def test_affine_dim_and_fmt():
    assert affine_dim([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dim([(0, 0, 0)]) == 0
    assert fmt(F(-3, 2)) == "-3/2"
    assert fmt(F(4)) == "4"
