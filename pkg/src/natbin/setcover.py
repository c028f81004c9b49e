"""Exact minimum set cover (hitting set) over a small ground set."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import InfeasibleRow


@dataclass(frozen=True)
class SetCoverInstance:
    """Rows are 0/1 vectors over columns ``0..d-1``; a cover hits every row."""

    d: int
    rows: tuple

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in r) for r in self.rows)
        for r in rows:
            if len(r) != self.d:
                raise ValueError(f"row {r} has length {len(r)}, expected {self.d}")
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_supports(cls, d: int, supports: Iterable[Iterable[int]]) -> "SetCoverInstance":
        rows = []
        for s in supports:
            s = set(s)
            rows.append(tuple(int(i in s) for i in range(d)))
        return cls(d, tuple(rows))

    def masks(self) -> list[int]:
        return [sum(1 << i for i, x in enumerate(r) if x) for r in self.rows]

    def row_set(self) -> set:
        return set(self.rows)

    def is_cover(self, cols: Iterable[int]) -> bool:
        m = sum(1 << c for c in set(cols))
        return all(r & m for r in self.masks())


def set_cover_min(A: SetCoverInstance) -> tuple[int, tuple[int, ...]]:
    """Optimal value and one optimal cover (sorted column indices).

    Branch and bound: rows are deduplicated and superset rows dropped, a
    row with a single column forces that column, otherwise branch on the
    columns of the shortest uncovered row. The incumbent starts as the
    greedy cover.
    """
    masks = A.masks()
    if any(m == 0 for m in masks):
        raise InfeasibleRow("instance has an all-zero row")
    rows = _reduce(set(masks))
    if not rows:
        return 0, ()

    best = _greedy(rows)

    def search(rows, chosen):
        nonlocal best
        # forced columns
        while True:
            single = next((r for r in rows if r & (r - 1) == 0), None)
            if single is None:
                break
            chosen |= single
            rows = [r for r in rows if not r & single]
        if not rows:
            if bin(chosen).count("1") < bin(best).count("1"):
                best = chosen
            return
        size = bin(chosen).count("1")
        if size + _lower_bound(rows) >= bin(best).count("1"):
            return
        pivot = min(rows, key=lambda r: bin(r).count("1"))
        excluded = 0
        c = pivot
        while c:
            bit = c & -c
            c ^= bit
            rest = _reduce({r & ~excluded for r in rows if not r & bit})
            if all(r for r in rest):
                search(rest, chosen | bit)
            # later branches must not use columns already tried at this node
            excluded |= bit

    search(rows, 0)
    cover = tuple(i for i in range(A.d) if best >> i & 1)
    return len(cover), cover


def _reduce(rows: set) -> list[int]:
    """Drop rows that are supersets of another row."""
    rows = sorted(rows, key=lambda r: bin(r).count("1"))
    kept = []
    for r in rows:
        if not any(k & r == k for k in kept):
            kept.append(r)
    return kept


def _greedy(rows: Sequence[int]) -> int:
    chosen = 0
    rows = list(rows)
    while rows:
        counts = {}
        for r in rows:
            c = r
            while c:
                bit = c & -c
                c ^= bit
                counts[bit] = counts.get(bit, 0) + 1
        bit = max(counts, key=lambda b: (counts[b], -b))
        chosen |= bit
        rows = [r for r in rows if not r & bit]
    return chosen


def _lower_bound(rows: Sequence[int]) -> int:
    """Size of a greedy family of pairwise-disjoint rows."""
    used = 0
    n = 0
    for r in sorted(rows, key=lambda r: bin(r).count("1")):
        if not r & used:
            used |= r
            n += 1
    return n


def set_cover_exhaustive(A: SetCoverInstance) -> int:
    """Reference optimum by trying column subsets in order of size."""
    masks = A.masks()
    if any(m == 0 for m in masks):
        raise InfeasibleRow("instance has an all-zero row")
    for t in range(A.d + 1):
        for cols in itertools.combinations(range(A.d), t):
            m = sum(1 << c for c in cols)
            if all(r & m for r in masks):
                return t
    raise InfeasibleRow("no cover exists")
