"""How hard is it to cut off a fractional x in (alpha, alpha + 1)?

The rank of a binarization at alpha is a set cover over its alpha-edges.
We compare three routes (skeleton, direct lift-and-project on slices, and
closed form) and then check that no hypercube binarization beats log.
"""

from natbin import hypercube_rank, make_full, make_log, make_unary, rank_direct, rank_skeleton, verify_logbest
from natbin.binarization import HypercubePerm
from natbin.rank import rank_full_formula, rank_log_formula, rank_unary_formula

d = 4
print(" alpha  unary  full")
for a in range(d):
    u = (rank_skeleton(make_unary(d), (a,)), rank_direct(make_unary(d), (a,)), rank_unary_formula(d, (a,)))
    f = (rank_skeleton(make_full(d), (a,)), rank_direct(make_full(d), (a,)), rank_full_formula(d, (a,)))
    assert len(set(u)) == 1 and len(set(f)) == 1
    print(f"{a:>6} {u[0]:>6} {f[0]:>5}")

B = make_log(3)
print("log(3):", [rank_skeleton(B, (a,)) for a in range(7)], "formula:", [rank_log_formula(3, a) for a in range(7)])

# a scrambled hypercube binarization usually does worse
perm = HypercubePerm(3, (5, 0, 7, 2, 1, 6, 3, 4))
print("scrambled:", [hypercube_rank(perm, (a,)) for a in range(7)])

for a in range(7):
    rep = verify_logbest(3, (a,))
    print(f"alpha={a}: log rank {rep.log_rank}, min over all 40320 = {rep.min_rank}, ok={rep.ok}")
