"""Reference implementations used only by the tests.

Everything here is deliberately naive: vertices by trying every basis,
edges by the dimension of the face around a midpoint, hulls of binary
slices by brute force. None of it shares code paths with the library's
double description or combinatorial adjacency test.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction as F

from natbin import HPolytope, VPolytope, build, facet_hull
from natbin.binarization import HypercubePerm, make_custom, make_full, make_hypercube, make_log, make_trunc_log, make_unary
from natbin.errors import UnboundedPolyhedron
from natbin.linalg import rank, solve_affine


def basis_vertices(H: HPolytope) -> set:
    """Every feasible point that is the unique solution of ``dim`` tight rows."""
    n = H.dim
    eq_rows = [a for a, _ in H.eqs]
    eq_rhs = [b for _, b in H.eqs]
    out = set()
    for S in itertools.combinations(range(len(H.ineqs)), max(0, n - rank(eq_rows)) if eq_rows else n):
        rows = eq_rows + [H.ineqs[i][0] for i in S]
        rhs = eq_rhs + [H.ineqs[i][1] for i in S]
        if rank(rows) < n:
            continue
        sol = solve_affine(rows, rhs, n)
        if sol is not None and H.contains(sol[0]):
            out.add(sol[0])
    return out


def midpoint_edges(H: HPolytope, verts) -> set:
    """Pairs of vertex indices whose midpoint lies in the relative interior
    of a 1-dimensional face."""
    eq_rows = [a for a, _ in H.eqs]
    edges = set()
    for i, j in itertools.combinations(range(len(verts)), 2):
        mid = tuple((a + b) / 2 for a, b in zip(verts[i], verts[j]))
        tight = [H.ineqs[t][0] for t in H.tight_set(mid)]
        if H.dim - rank(eq_rows + tight) == 1:
            edges.add((i, j))
    return edges


def random_hpolytope(rng: random.Random, dim: int, max_rows: int = 12) -> HPolytope:
    """A bounded random H-polytope, with degenerate rows mixed in."""
    while True:
        m = rng.randint(dim + 1, max_rows)
        rows = []
        apex = tuple(F(rng.randint(-2, 2), rng.choice([1, 2])) for _ in range(dim))
        for r in range(m):
            a = tuple(F(rng.randint(-3, 3)) for _ in range(dim))
            if not any(a):
                continue
            if r % 3 == 0:
                # several rows through one point make the polytope degenerate
                b = sum(x * y for x, y in zip(a, apex)) + rng.choice([0, 0, 1])
            else:
                b = F(rng.randint(1, 6))
            rows.append((a, b))
        if rng.random() < 0.3:
            for i in range(dim):
                e = tuple(F(int(i == j)) for j in range(dim))
                rows.append((e, F(rng.randint(1, 3))))
                rows.append((tuple(-x for x in e), F(rng.randint(0, 3))))
            rows = rows[:max_rows] if len(rows) > max_rows else rows
        H = HPolytope(dim, rows)
        try:
            V = H.vertices
        except UnboundedPolyhedron:
            continue
        if len(V) >= 1:
            return H


def random_binarization(rng: random.Random, budget: int):
    """A random natural binarization with at most ``budget`` y-variables."""
    choices = []
    for d in range(1, min(budget, 3) + 1):
        choices += [("unary", d), ("full", d)]
    if budget >= 1:
        choices.append(("log", 1))
    if budget >= 2:
        choices += [("log", 2), ("trunc", 2), ("hypercube", 2), ("counterexample", 2)]
    if budget >= 3:
        choices += [("trunc", 3), ("hypercube", 3)]
    kind, d = rng.choice(choices)
    if kind == "unary":
        return make_unary(d)
    if kind == "full":
        return make_full(d)
    if kind == "log":
        return make_log(d)
    if kind == "trunc":
        return make_trunc_log(rng.randint(2 ** (d - 1) + 1, 2**d - 1), d)
    if kind == "hypercube":
        sigma = list(range(2**d))
        rng.shuffle(sigma)
        return make_hypercube(HypercubePerm(d, tuple(sigma)))
    return counterexample_binarization()


def counterexample_binarization():
    """conv{(1,0,0), (0,1,0), (2,0,1)}: natural, affine and not linear."""
    return make_custom(VPolytope(3, [(1, 0, 0), (0, 1, 0), (2, 0, 1)]), 2)


def random_instance(rng: random.Random, max_total: int = 10):
    """A random extended formulation with ``n <= 3``, ``p <= 2``."""
    while True:
        n = rng.choice([1, 2, 2, 3, 3, 3])
        p = rng.randint(1, min(2, n))
        budget = max_total - n
        bins = []
        for _ in range(p):
            left = budget - sum(B.d for B in bins) - (p - 1 - len(bins))
            bins.append(random_binarization(rng, min(left, 3)))
        binarized = sorted(rng.sample(range(n), p))
        his = {i: B.k for i, B in zip(binarized, bins)}
        pts = []
        for _ in range(rng.randint(n + 1, n + 3)):
            pt = []
            for j in range(n):
                den = rng.choice([1, 1, 2, 3])
                hi = his.get(j, 2)
                pt.append(F(rng.randint(0, hi * den), den))
            pts.append(tuple(pt))
        P = facet_hull(pts)
        if n + sum(B.d for B in bins) <= max_total:
            return build(P, bins, binarized)


def binary_slice_hull(E) -> set:
    """Vertices of conv{(x, y) in Q : y binary}, one binary y at a time."""
    Q = E.Q
    cols = E.all_y_columns
    pts = set()
    for ys in itertools.product((0, 1), repeat=len(cols)):
        S = Q
        for c, val in zip(cols, ys):
            S = S.with_equation(tuple(F(int(j == c)) for j in range(Q.dim)), val)
        pts |= set(S.vertices.vertices)
    if not pts:
        return set()
    return set(VPolytope.from_points(Q.dim, pts).vertices)
