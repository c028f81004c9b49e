"""Tour of the classical binarizations of an integer x in {0, ..., k}.

Run with ``python demos/01_binarizations.py``.
"""

from fractions import Fraction

from natbin import classify, make_full, make_log, make_unary, skeleton
from natbin.pyramid import nonnatural_binarization

d = 3
for B in (make_unary(d), make_full(d), make_log(d)):
    c = classify(B)
    print(f"{B.kind:>6}: k={B.k}, {len(B.vertices)} vertices, perfect={c.perfect}, linear={c.linear}")
    for v in B.vertices:
        print("        x=%s  y=%s" % (v[0], "".join(str(int(t)) for t in v[1:])))

# slices at fractional x are where the interesting vertices live
U = make_unary(2)
print("unary(2) at x=1/2:", [tuple(map(str, v)) for v in U.slice(Fraction(1, 2))])

# the skeleton of the log binarization is the 3-cube graph
G = make_log(3).skeleton
print("log(3) skeleton:", len(G.nodes), "nodes,", len(G.edges), "edges")

# not every binarization is natural: this one has a vertex at x = 3/2
B = nonnatural_binarization()
print("non-natural vertices:", [tuple(map(str, v)) for v in B.vertices])
print("natural?", classify(B).natural)
