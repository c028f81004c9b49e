"""Exact rational linear algebra over ``fractions.Fraction``.

Matrices are lists of rows; vectors are tuples. Nothing here ever rounds.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction
QVector = tuple  # tuple[Fraction, ...]


def q(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass a Fraction or 'p/q' string")
    return Fraction(value)


def qvec(values: Iterable) -> tuple:
    return tuple(q(v) for v in values)


def dot(a: Sequence, b: Sequence):
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def rref(rows: Sequence[Sequence]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form. Returns (nonzero rows, pivot columns)."""
    m = [[q(x) for x in r] for r in rows]
    if not m:
        return [], []
    ncols = len(m[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == len(m):
            break
    return m[:r], pivots


def rank(rows: Sequence[Sequence]) -> int:
    return len(rref(rows)[1])


def nullspace(rows: Sequence[Sequence], ncols: int) -> list[tuple]:
    """Basis of {z : rows @ z = 0}, one vector per free column."""
    red, pivots = rref(rows) if rows else ([], [])
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        z = [Fraction(0)] * ncols
        z[f] = Fraction(1)
        for row, pc in zip(red, pivots):
            z[pc] = -row[f]
        basis.append(tuple(z))
    return basis


def solve_affine(rows: Sequence[Sequence], rhs: Sequence, ncols: int):
    """Solve rows @ z = rhs.

    Returns ``(particular, nullbasis)`` or ``None`` when inconsistent.
    Free variables of the particular solution are set to zero.
    """
    if not rows:
        return tuple(Fraction(0) for _ in range(ncols)), nullspace([], ncols)
    aug = [list(r) + [b] for r, b in zip(rows, rhs)]
    red, pivots = rref(aug)
    if ncols in pivots:
        return None
    x = [Fraction(0)] * ncols
    for row, pc in zip(red, pivots):
        x[pc] = row[ncols]
    return tuple(x), nullspace([r[:ncols] for r in red], ncols)


def affine_dim(points: Sequence[Sequence]) -> int:
    """Dimension of the affine hull; -1 for the empty set."""
    if not points:
        return -1
    p0 = points[0]
    return rank([[a - b for a, b in zip(p, p0)] for p in points[1:]])


def integerize(row: Sequence) -> tuple[int, ...]:
    """Positive multiple of a rational row that is a primitive integer vector."""
    den = 1
    for x in row:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [int(x * den) for x in row]
    return primitive(ints)


def primitive(ints: Sequence[int]) -> tuple[int, ...]:
    g = 0
    for v in ints:
        g = gcd(g, v)
    if g > 1:
        return tuple(v // g for v in ints)
    return tuple(ints)


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1


def is_binary(x: Fraction) -> bool:
    return x == 0 or x == 1


def fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
