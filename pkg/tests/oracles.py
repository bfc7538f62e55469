"""
Independent reference computations used by the tests.

Nothing here imports the package: chords and crossings are re-derived from
scratch so that agreement is meaningful.
"""

from __future__ import annotations

from math import comb
from typing import FrozenSet, List, Set, Tuple

Chord = Tuple[int, int]


def fuss_catalan_formula(m: int, n: int) -> int:
    return comb((m + 1) * n, n - 1) // n


def polygon_chords(m: int, n: int) -> List[Chord]:
    """Chords of the (nm+2)-gon splitting it into two pieces with 2 mod m corners."""
    npts = n * m + 2
    found = []
    for i in range(npts):
        for j in range(i + 1, npts):
            left = j - i + 1
            right = npts - (j - i) + 1
            if left >= m + 2 and right >= m + 2 and (left - 2) % m == 0 and (right - 2) % m == 0:
                found.append((i, j))
    return found


def _cross(a: Chord, b: Chord) -> bool:
    (i, j), (k, l) = a, b
    return i < k < j < l or k < i < l < j


def maximal_noncrossing_sets(m: int, n: int) -> Set[FrozenSet[Chord]]:
    """Bron-Kerbosch over the compatibility graph of the chords, with bitmasks."""
    chords = polygon_chords(m, n)
    k = len(chords)
    compat = [0] * k
    for x in range(k):
        for y in range(k):
            if x != y and not _cross(chords[x], chords[y]):
                compat[x] |= 1 << y
    out: Set[FrozenSet[Chord]] = set()

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            out.add(frozenset(chords[i] for i in range(k) if r >> i & 1))
            return
        pivot_pool = p | x
        pivot = (pivot_pool & -pivot_pool).bit_length() - 1
        cand = p & ~compat[pivot]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            expand(r | low, p & compat[v], x & compat[v])
            p &= ~low
            x |= low
            cand &= ~low

    expand(0, (1 << k) - 1, 0)
    if not chords:
        out = {frozenset()}
    return out
