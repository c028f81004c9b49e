import json
from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from natbin import HPolytope, VPolytope, make_full, make_hypercube, make_log, make_trunc_log, make_unary
from natbin.binarization import HypercubePerm
from natbin.formats import (
    binarization_from_descriptor,
    binarization_to_descriptor,
    dumps,
    instance_from_json,
    polytope_from_json,
    polytope_from_text,
    polytope_to_json,
    polytope_to_text,
    rat_from_json,
    rat_to_json,
)
from natbin.pyramid import pyramid

from oracles import counterexample_binarization

rats = st.fractions(min_value=-10, max_value=10, max_denominator=9)


@given(rats)
def test_rational_round_trip(x):
    assert rat_from_json(rat_to_json(x)) == x
    assert rat_from_json(json.loads(json.dumps(rat_to_json(x)))) == x


def _same(a, b):
    if isinstance(a, VPolytope):
        return a.vertices == b.vertices
    return a.ineqs == b.ineqs and a.eqs == b.eqs


@pytest.mark.parametrize("X", [pyramid(F(1, 2)), make_unary(3).body, make_log(2).vertices, VPolytope(2, [(F(1, 3), 0)])])
def test_polytope_round_trips(X):
    assert _same(polytope_from_text(polytope_to_text(X)), X)
    assert _same(polytope_from_json(json.loads(json.dumps(polytope_to_json(X)))), X)


def test_text_parser_accepts_comments_and_unicode_leq():
    H = polytope_from_text("# unit interval\nH 1\n1 ≤ 1\n-1 <= 0  # lower\n")
    assert set(H.vertices.vertices) == {(0,), (1,)}
    with pytest.raises(ValueError):
        polytope_from_text("H 2\n1 <= 1\n")
    with pytest.raises(ValueError):
        polytope_from_text("X 2\n")


@pytest.mark.parametrize(
    "B",
    [make_unary(2), make_full(3), make_log(2), make_trunc_log(5, 3), make_hypercube(HypercubePerm(2, (1, 3, 0, 2))), counterexample_binarization()],
    ids=lambda B: B.kind,
)
def test_descriptor_round_trip(B):
    desc = json.loads(dumps(binarization_to_descriptor(B)))
    B2 = binarization_from_descriptor(desc)
    assert (B2.kind, B2.d, B2.k) == (B.kind, B.d, B.k)
    assert B2.vertices.vertices == B.vertices.vertices


def test_custom_descriptor_infers_k():
    desc = {"kind": "custom", "body": polytope_to_json(counterexample_binarization().vertices)}
    assert binarization_from_descriptor(desc).k == 2


def test_unknown_kind():
    with pytest.raises(ValueError):
        binarization_from_descriptor({"kind": "ternary", "d": 2})


def test_instance_file():
    obj = {
        "P": polytope_to_json(pyramid(3)),
        "binarized": ["x1", "x2"],
        "bins": [{"kind": "unary", "d": 2}, {"kind": "unary", "d": 2}],
    }
    E = instance_from_json(json.loads(json.dumps(obj)))
    assert E.Q.dim == 7 and E.binarized == (0, 1)
    obj["P"] = polytope_to_text(pyramid(3).vertices)
    obj["binarized"] = ["x2"]
    obj["bins"] = obj["bins"][:1]
    E = instance_from_json(obj)
    assert E.binarized == (1,)
    with pytest.raises(ValueError):
        instance_from_json(dict(obj, binarized=["z1"]))


def test_dumps_is_canonical():
    assert dumps({"b": F(1, 2), "a": [F(4, 2)]}) == '{"a":["2"],"b":"1/2"}'
