"""Truncated log binarizations, where the log encoding stops being best.

x in {0, 1, 2} with two bits: the truncated log binarization needs rank
2 at alpha = 0, the affine binarization conv{(1,0,0), (0,1,0), (2,0,1)}
only rank 1. And linear binarizations over a truncated cube need not use
powers of two.
"""

from natbin import VPolytope, classify, make_custom, make_trunc_log, rank_direct, rank_skeleton
from natbin.binarization import linear_trunc_violations
from natbin.rank import rank_log_formula, rank_trunc, rank_trunc_closed_form

for v in range(5, 8):
    print(f"v={v}:", [rank_trunc(v, 3, a) for a in range(v - 1)], "vs log", [rank_log_formula(3, a) for a in range(v - 1)])
    assert all(rank_trunc(v, 3, a) == rank_trunc_closed_form(v, 3, a) for a in range(v - 1))

T = make_trunc_log(3, 2)
C = make_custom(VPolytope(3, [(1, 0, 0), (0, 1, 0), (2, 0, 1)]), 2)
print("truncated log, alpha=0:", rank_skeleton(T, (0,)), rank_direct(T, (0,)))
print("affine custom, alpha=0:", rank_skeleton(C, (0,)), rank_direct(C, (0,)))

for d in (2, 3):
    for v in range(2 ** (d - 1) + 1, 2**d):
        print(f"d={d} v={v}: non-power-of-two linear weights {linear_trunc_violations(v, d)}")

ys = [p[1:] for p in make_trunc_log(5, 3).vertices]
B = make_custom(VPolytope(4, [(y[0] + 3 * y[1] + 2 * y[2],) + y for y in ys]), 4)
c = classify(B)
print("x = y1 + 3 y2 + 2 y3: linear =", c.linear, " perfect =", c.perfect)
print("  ranks", [rank_skeleton(B, (a,)) for a in range(4)], "vs truncated log", [rank_skeleton(make_trunc_log(5, 3), (a,)) for a in range(4)])
