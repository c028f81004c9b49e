"""Command-line front end: ``python -m natbin <verb> [options]``.

Exit status is 0 on success, 1 on a computation error (JSON on stderr)
and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import formats
from .bef import DEFAULT_LIMIT_DIM, characterize_projection, lpr, vertices_Q
from .binarization import classify
from .errors import NatbinError
from .geometry import HPolytope, facet_hull
from .linalg import fmt
from .pyramid import reproduce_pyramid
from .rank import (
    hypercube_rank,
    rank_direct,
    rank_full_formula,
    rank_log_formula,
    rank_skeleton,
    rank_trunc,
    rank_unary_formula,
    verify_logbest,
)

VERBS = ("gen", "classify", "bef", "vertices", "lpr", "rank", "rank-table", "verify-logbest", "reproduce-pyramid")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a comma-separated integer list, got {text!r}")


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational like 3 or 1/2, got {text!r}")


def _add_binarization_flags(p):
    p.add_argument("--kind", choices=["unary", "full", "log", "trunc_log", "hypercube", "custom"])
    p.add_argument("--d", type=int)
    p.add_argument("--v", type=int)
    p.add_argument("--sigma", type=_int_list)
    p.add_argument("--desc", help="binarization descriptor JSON file")


def make_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "csv"], default=None)
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--limit-dim", type=int, default=DEFAULT_LIMIT_DIM)
    common.add_argument("--out", help="write the report here instead of stdout")

    parser = _Parser(prog="natbin", description="Binarizations, extended formulations and ranks.")
    sub = parser.add_subparsers(dest="verb", parser_class=_Parser)

    p = sub.add_parser("gen", parents=[common], help="emit a binarization polytope")
    _add_binarization_flags(p)
    p.add_argument("--rep", choices=["V", "H"], default="V")

    p = sub.add_parser("classify", parents=[common], help="classify a binarization")
    _add_binarization_flags(p)

    for verb, helptext in (("bef", "build Q"), ("vertices", "vertices of Q or of a polytope"), ("lpr", "lift-and-project rank of Q")):
        p = sub.add_parser(verb, parents=[common], help=helptext)
        p.add_argument("--instance", help="instance JSON file")
        if verb == "vertices":
            p.add_argument("--polytope", help="polytope file (text or JSON)")

    p = sub.add_parser("rank", parents=[common], help="rank of a binarization")
    _add_binarization_flags(p)
    p.add_argument("--alphas", type=_int_list, required=True)

    p = sub.add_parser("rank-table", parents=[common], help="rank for every alpha")
    _add_binarization_flags(p)

    p = sub.add_parser("verify-logbest", parents=[common], help="log encoding minimizes rank")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--alphas", type=_int_list, required=True)
    p.add_argument("--mode", choices=["exhaustive", "sample"], default="exhaustive")
    p.add_argument("--n", type=int, default=10_000, help="sample size")

    p = sub.add_parser("reproduce-pyramid", parents=[common], help="pyramid example end to end")
    p.add_argument("--h", type=_rational, default=Fraction(3))
    return parser


# ---------------------------------------------------------------------------
# helpers


def _binarization(args):
    if args.desc:
        return formats.binarization_from_descriptor(formats.load_json(args.desc))
    if not args.kind:
        raise UsageError("--kind (or --desc) is required")
    desc = {"kind": args.kind}
    if args.kind in ("unary", "full", "log", "trunc_log"):
        if args.d is None:
            raise UsageError(f"--d is required for --kind {args.kind}")
        desc["d"] = args.d
    if args.kind == "trunc_log":
        if args.v is None:
            raise UsageError("--v is required for --kind trunc_log")
        desc["v"] = args.v
    if args.kind == "hypercube":
        if args.sigma is None:
            raise UsageError("--sigma is required for --kind hypercube")
        desc["sigma"] = args.sigma
        if args.d is not None:
            desc["d"] = args.d
    if args.kind == "custom":
        raise UsageError("--kind custom needs --desc with a body")
    return formats.binarization_from_descriptor(desc)


def _formula(B, alphas):
    """Closed-form rank when one exists for this kind, else None."""
    if B.kind == "unary":
        return rank_unary_formula(B.d, alphas)
    if B.kind == "full":
        return rank_full_formula(B.d, alphas)
    if B.kind == "log":
        return rank_log_formula(B.d, alphas)
    if B.kind == "trunc_log":
        if len(set(alphas)) != 1:
            return None
        return rank_trunc(B.params["v"], B.d, alphas[0])
    if B.kind == "hypercube":
        return hypercube_rank(B.perm, alphas)
    return None


def _instance(args):
    if not args.instance:
        raise UsageError("--instance is required")
    return formats.instance_from_json(formats.load_json(args.instance), args.limit_dim)


def _points(pts):
    return [[fmt(c) for c in p] for p in sorted(pts)]


def _table(header, rows, style):
    if style == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(header)
        w.writerows(rows)
        return buf.getvalue()
    widths = [max(len(str(x)) for x in col) for col in zip(header, *rows)]
    lines = ["  ".join(str(x).rjust(wd) for x, wd in zip(r, widths)) for r in [header] + list(rows)]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# verbs


def cmd_gen(args):
    B = _binarization(args)
    X = B.vertices if args.rep == "V" else B.body
    if args.format == "json":
        return formats.dumps(formats.polytope_to_json(X)) + "\n"
    return formats.polytope_to_text(X)


def cmd_classify(args):
    if args.kind == "custom" and args.desc is None:
        raise UsageError("--kind custom needs --desc")
    B = _binarization(args)
    return formats.dumps(classify(B).to_json()) + "\n"


def cmd_bef(args):
    E = _instance(args)
    if args.format == "json":
        out = {"Q": formats.polytope_to_json(E.Q), "columns": E.index_map}
        return formats.dumps(out) + "\n"
    return formats.polytope_to_text(E.Q)


def cmd_vertices(args):
    if args.polytope:
        X = formats.load_polytope(args.polytope)
        V = X.vertices if isinstance(X, HPolytope) else facet_hull(X).vertices
        if args.format == "json":
            return formats.dumps(formats.polytope_to_json(V)) + "\n"
        return formats.polytope_to_text(V)
    E = _instance(args)
    V = vertices_Q(E)
    proj = E.project_x(V.vertices)
    if args.format == "json":
        out = {
            "columns": E.index_map,
            "vertices": _points(V.vertices),
            "projection": _points(proj),
        }
        if all(B.classification.natural for B in E.bins):
            out["characterized"] = _points(characterize_projection(E))
        return formats.dumps(out) + "\n"
    return formats.polytope_to_text(V)


def cmd_lpr(args):
    E = _instance(args)
    res = lpr(E)
    out = {
        "lpr": res.value,
        "cover": [E.column_name(c) for c in res.cover],
        "columns": [E.column_name(c) for c in res.columns],
        "A": [list(r) for r in res.A.rows],
        "rows_from": _points(res.rows_from) if res.rows_from else [],
    }
    if args.format == "csv":
        return _table([E.column_name(c) for c in res.columns], res.A.rows, "csv")
    return formats.dumps(out) + "\n"


def cmd_rank(args):
    B = _binarization(args)
    alphas = tuple(args.alphas)
    s = rank_skeleton(B, alphas)
    d = rank_direct(B, alphas)
    f = _formula(B, alphas)
    out = {"skeleton": s, "direct": d, "formula": f, "agree": s == d and (f is None or f == s)}
    return formats.dumps(out) + "\n"


def cmd_rank_table(args):
    B = _binarization(args)
    rows = []
    for a in range(B.k):
        s = rank_skeleton(B, (a,))
        d = rank_direct(B, (a,))
        f = _formula(B, (a,))
        rows.append((a, s, d, "" if f is None else f, s == d and (f is None or f == s)))
    header = ("alpha", "skeleton", "direct", "formula", "agree")
    if args.format == "json":
        return formats.dumps([dict(zip(header, r)) for r in rows]) + "\n"
    return _table(header, rows, args.format or "text")


def cmd_verify_logbest(args):
    rep = verify_logbest(args.d, tuple(args.alphas), args.mode, n=args.n, seed=args.seed)
    return formats.dumps(rep.to_json()) + "\n"


def cmd_reproduce_pyramid(args):
    rep = reproduce_pyramid(args.h)
    if args.format == "json":
        out = {
            "h": fmt(rep.h),
            "checks": rep.checks,
            "ok": rep.ok,
            "V(P)": _points(rep.computed["V(P)"]),
            "V(Q)": _points(rep.computed["V(Q)"]),
            "proj V(Q)": _points(rep.computed["proj V(Q)"]),
            "A_Q": sorted(list(r) for r in rep.computed["A_Q"].elements()),
            "lpr": rep.computed["lpr"],
            "cover": list(rep.cover_names),
            "convexified": _points(rep.computed["convexified"]),
        }
        return formats.dumps(out) + "\n"
    lines = [f"pyramid h={fmt(rep.h)}"]
    for name, ok in rep.checks.items():
        lines.append(f"  {name:<12} {'pass' if ok else 'FAIL'}")
    lines.append(f"  lpr = {rep.computed['lpr']}, cover = {{{', '.join(rep.cover_names)}}}")
    lines.append("V(Q):")
    lines.append(_table(["x1", "x2", "x3", "y11", "y12", "y21", "y22"], _points(rep.computed["V(Q)"]), "text").rstrip())
    lines.append(f"overall: {'pass' if rep.ok else 'FAIL'}")
    return "\n".join(lines) + "\n"


HANDLERS = {
    "gen": cmd_gen,
    "classify": cmd_classify,
    "bef": cmd_bef,
    "vertices": cmd_vertices,
    "lpr": cmd_lpr,
    "rank": cmd_rank,
    "rank-table": cmd_rank_table,
    "verify-logbest": cmd_verify_logbest,
    "reproduce-pyramid": cmd_reproduce_pyramid,
}


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
        if not args.verb:
            raise UsageError(f"a verb is required: {', '.join(VERBS)}")
        report = HANDLERS[args.verb](args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=stderr)
        return 2
    except (NatbinError, ValueError, KeyError, OSError) as exc:
        payload = exc.to_json() if isinstance(exc, NatbinError) else {"error": type(exc).__name__, "message": str(exc)}
        print(json.dumps(payload, sort_keys=True), file=stderr)
        return 1
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(report)
    else:
        stdout.write(report)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
