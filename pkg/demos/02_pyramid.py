"""The pyramid P with two unary binarizations, end to end.

Q has sixteen vertices, nine distinct x-projections, and two well chosen
y-variables suffice to convexify it.
"""

from natbin import characterize_projection, lpr, sequential_convexify, vertices_Q
from natbin.linalg import fmt
from natbin.pyramid import pyramid_bef, reproduce_pyramid

E = pyramid_bef(3)
print("columns:", E.index_map)

V = vertices_Q(E)
print(len(V), "vertices of Q")
for v in V:
    print("  ", " ".join(f"{fmt(c):>4}" for c in v))

proj = E.project_x(V.vertices)
print(len(proj), "projected points; face/fixing characterization agrees:", proj == characterize_projection(E))

res = lpr(E)
print("set cover matrix A_Q:")
for row in res.A.rows:
    print("  ", row)
print("lpr =", res.value, "with", [E.column_name(c) for c in res.cover])

left = sequential_convexify(E, res.cover, V)
print("after convexifying:", sorted(tuple(map(fmt, x)) for x in E.project_x(left.vertices)))

for h in ("1/2", "1", "3"):
    rep = reproduce_pyramid(h)
    print(f"h={h}: all artifacts match = {rep.ok}")
