"""Dense Gaussian elimination over prime fields, at desk scale.

Everything here works on plain ints: matrices are sequences of rows, a row
is a sequence of residues mod q.  For q = 2 rows can also travel as integer
bitmasks, which is what the rank-census hot paths use.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def gf2_rank(masks: Iterable[int]) -> int:
    """Rank over F_2 of the rows given as integer bitmasks."""
    pivots: dict[int, int] = {}
    rank = 0
    for m in masks:
        while m:
            h = m.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = m
                rank += 1
                break
            m ^= p
    return rank


class Eliminator:
    """Incremental independent-set tracker over F_q.

    ``add`` reduces a vector against the rows seen so far and absorbs it when
    it is independent of them; the return value says which happened.
    """

    __slots__ = ("q", "_pivots")

    def __init__(self, q: int):
        self.q = q
        self._pivots: dict[int, object] = {}

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def add(self, vec: Sequence[int]) -> bool:
        if self.q == 2:
            mask = 0
            for i, x in enumerate(vec):
                if x & 1:
                    mask |= 1 << i
            return self.add_mask(mask)
        q = self.q
        v = [x % q for x in vec]
        while True:
            lead = next((i for i, x in enumerate(v) if x), None)
            if lead is None:
                return False
            piv = self._pivots.get(lead)
            if piv is None:
                inv = pow(v[lead], q - 2, q)
                self._pivots[lead] = [x * inv % q for x in v]
                return True
            c = v[lead]
            v = [(x - c * p) % q for x, p in zip(v, piv)]

    def add_mask(self, mask: int) -> bool:
        """F_2 fast path: the vector as a bitmask."""
        pivots = self._pivots
        while mask:
            h = mask.bit_length() - 1
            p = pivots.get(h)
            if p is None:
                pivots[h] = mask
                return True
            mask ^= p
        return False


def rank(rows: Iterable[Sequence[int]], q: int) -> int:
    """Rank over F_q of a dense matrix given by rows."""
    e = Eliminator(q)
    for row in rows:
        e.add(row)
    return e.rank


def invert(matrix: Sequence[Sequence[int]], q: int) -> list[list[int]]:
    """Inverse of a square matrix over F_q; ValueError when singular."""
    n = len(matrix)
    aug = [[x % q for x in row] + [int(i == j) for j in range(n)]
           for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError(f"matrix is singular over F_{q}")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = pow(aug[col][col], q - 2, q)
        aug[col] = [x * inv % q for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                c = aug[r][col]
                aug[r] = [(x - c * y) % q for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]
