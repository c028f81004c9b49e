"""Text and JSON encodings of polytopes, binarization descriptors and
extended-formulation instances.

Text polytopes::

    H 2
    1 0 <= 1
    -1 0 <= 0
    0 1 = 1/2

    V 2
    0 0
    1/2 1
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .binarization import (
    Binarization,
    HypercubePerm,
    make_custom,
    make_full,
    make_hypercube,
    make_log,
    make_trunc_log,
    make_unary,
)
from .geometry import HPolytope, VPolytope
from .linalg import fmt, is_binary

# ---------------------------------------------------------------------------
# rationals


def rat_to_json(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def rat_from_json(obj) -> Fraction:
    if isinstance(obj, dict):
        return Fraction(int(obj["num"]), int(obj.get("den", 1)))
    if isinstance(obj, (int, str)):
        return Fraction(obj)
    raise ValueError(f"cannot read a rational from {obj!r}")


# ---------------------------------------------------------------------------
# polytopes, text


def polytope_to_text(X: HPolytope | VPolytope) -> str:
    if isinstance(X, VPolytope):
        lines = [f"V {X.dim}"] + [" ".join(fmt(c) for c in v) for v in X.vertices]
    else:
        lines = [f"H {X.dim}"]
        for a, b in X.ineqs:
            lines.append(" ".join(fmt(c) for c in a) + " <= " + fmt(b))
        for a, b in X.eqs:
            lines.append(" ".join(fmt(c) for c in a) + " = " + fmt(b))
    return "\n".join(lines) + "\n"


def polytope_from_text(text: str) -> HPolytope | VPolytope:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise ValueError("empty polytope text")
    head = lines[0].split()
    if len(head) != 2 or head[0] not in ("H", "V"):
        raise ValueError(f"bad header {lines[0]!r}; expected 'H n' or 'V n'")
    kind, n = head[0], int(head[1])
    if kind == "V":
        return VPolytope(n, [tuple(Fraction(t) for t in ln.split()) for ln in lines[1:]])
    ineqs, eqs = [], []
    for ln in lines[1:]:
        toks = ln.replace("≤", " <= ").split()
        if len(toks) != n + 2 or toks[n] not in ("<=", "="):
            raise ValueError(f"bad H row {ln!r}")
        a = tuple(Fraction(t) for t in toks[:n])
        b = Fraction(toks[n + 1])
        (ineqs if toks[n] == "<=" else eqs).append((a, b))
    return HPolytope(n, ineqs, eqs)


# ---------------------------------------------------------------------------
# polytopes, JSON


def polytope_to_json(X: HPolytope | VPolytope) -> dict:
    if isinstance(X, VPolytope):
        return {
            "type": "V",
            "dim": X.dim,
            "vertices": [[rat_to_json(c) for c in v] for v in X.vertices],
        }

    def rows(rs):
        return [{"a": [rat_to_json(c) for c in a], "b": rat_to_json(b)} for a, b in rs]

    return {"type": "H", "dim": X.dim, "ineqs": rows(X.ineqs), "eqs": rows(X.eqs)}


def polytope_from_json(obj) -> HPolytope | VPolytope:
    if isinstance(obj, str):
        return polytope_from_text(obj)
    kind, n = obj["type"], int(obj["dim"])
    if kind == "V":
        return VPolytope(n, [tuple(rat_from_json(c) for c in v) for v in obj["vertices"]])

    def rows(rs):
        return [(tuple(rat_from_json(c) for c in r["a"]), rat_from_json(r["b"])) for r in rs]

    return HPolytope(n, rows(obj.get("ineqs", [])), rows(obj.get("eqs", [])))


# ---------------------------------------------------------------------------
# binarization descriptors


def binarization_from_descriptor(desc: dict) -> Binarization:
    kind = desc["kind"]
    if kind == "unary":
        return make_unary(int(desc["d"]))
    if kind == "full":
        return make_full(int(desc["d"]))
    if kind == "log":
        return make_log(int(desc["d"]))
    if kind == "trunc_log":
        return make_trunc_log(int(desc["v"]), int(desc["d"]))
    if kind == "hypercube":
        sigma = desc["sigma"]
        d = int(desc.get("d", max(len(sigma) - 1, 1).bit_length()))
        return make_hypercube(HypercubePerm(d, tuple(sigma)))
    if kind == "custom":
        body = polytope_from_json(desc["body"])
        k = desc.get("k")
        if k is None:
            k = _infer_k(body)
        return make_custom(body, int(k))
    raise ValueError(f"unknown binarization kind {kind!r}")


def _infer_k(body) -> int:
    verts = body.vertices if isinstance(body, VPolytope) else body.vertices.vertices
    xs = [v[0] for v in verts if all(is_binary(c) for c in v[1:]) and v[0].denominator == 1]
    if not xs:
        raise ValueError("cannot infer k: no vertex with binary y and integer x")
    return int(max(xs))


def binarization_to_descriptor(B: Binarization) -> dict:
    if B.kind == "custom":
        return {"kind": "custom", "d": B.d, "k": B.k, "body": polytope_to_json(B.body)}
    out = {"kind": B.kind}
    out.update(B.params)
    return out


# ---------------------------------------------------------------------------
# instances


def instance_from_json(obj: dict, limit_dim: int | None = None):
    from .bef import DEFAULT_LIMIT_DIM, build

    P = polytope_from_json(obj["P"])
    if isinstance(P, VPolytope):
        from .geometry import facet_hull

        P = facet_hull(P)
    names = obj.get("binarized")
    bins = [binarization_from_descriptor(d) for d in obj["bins"]]
    if names is None:
        idx = list(range(len(bins)))
    else:
        idx = [_var_index(nm) for nm in names]
    return build(P, bins, idx, limit_dim=limit_dim or DEFAULT_LIMIT_DIM)


def _var_index(name) -> int:
    if isinstance(name, int):
        return name
    if isinstance(name, str) and name.startswith("x") and name[1:].isdigit():
        return int(name[1:]) - 1
    raise ValueError(f"bad variable name {name!r}; expected x1, x2, ...")


def load_json(path: str) -> Any:
    with open(path) as fh:
        return json.load(fh)


def load_polytope(path: str) -> HPolytope | VPolytope:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return polytope_from_json(json.loads(text))
    return polytope_from_text(text)


def dumps(obj) -> str:
    """Canonical JSON: sorted keys, compact separators, Fractions as p/q strings."""
    return json.dumps(obj, sort_keys=True, separators=(",", ":"), default=_default)


def _default(o):
    if isinstance(o, Fraction):
        return fmt(o)
    if isinstance(o, (set, frozenset)):
        return sorted(o)
    raise TypeError(f"not JSON serializable: {type(o).__name__}")
