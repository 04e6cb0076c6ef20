"""Independent brute-force oracles used to pin expected values.

Nothing here calls the library's elimination or counting code: ranks come
from enumerating row spans, subspace counts from enumerating spans, and
irreducibility from trial division.  Slow but unarguable at desk scale.
"""

from __future__ import annotations

import itertools
from collections import Counter


def span_rank(rows: list[tuple[int, ...]], q: int) -> int:
    """Rank as log_q of the row-span size, by enumerating the span."""
    n = len(rows[0]) if rows else 0
    span = set()
    for coeffs in itertools.product(range(q), repeat=len(rows)):
        vec = tuple(sum(c * row[j] for c, row in zip(coeffs, rows)) % q
                    for j in range(n))
        span.add(vec)
    size = len(span)
    r = 0
    while q**r < size:
        r += 1
    assert q**r == size, "span size is not a power of q"
    return r


def matrix_rank_census(q: int, m: int, n: int) -> Counter:
    """Ranks of all q^(mn) matrices over F_q, counted by brute force."""
    census: Counter[int] = Counter()
    for flat in itertools.product(range(q), repeat=m * n):
        rows = [flat[i * n:(i + 1) * n] for i in range(m)]
        census[span_rank(rows, q)] += 1
    return census


def count_subspaces(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of (F_q)^n, by span enumeration."""
    if k == 0:
        return 1
    vectors = list(itertools.product(range(q), repeat=n))
    spans = set()
    for combo in itertools.combinations(vectors[1:], k):
        span = set()
        for coeffs in itertools.product(range(q), repeat=k):
            span.add(tuple(sum(c * v[j] for c, v in zip(coeffs, combo)) % q
                           for j in range(n)))
        if len(span) == q**k:
            spans.add(frozenset(span))
    return len(spans)


def poly_irreducible_by_trial_division(coeffs: tuple[int, ...], q: int) -> bool:
    """Monic polynomial irreducibility by dividing out every lower factor."""

    def pdiv_rem(a: list[int], b: list[int]) -> list[int]:
        a = a[:]
        inv_lead = pow(b[-1], q - 2, q)
        while len(a) >= len(b) and any(a):
            while a and a[-1] == 0:
                a.pop()
            if len(a) < len(b):
                break
            factor = a[-1] * inv_lead % q
            shift = len(a) - len(b)
            for i, bi in enumerate(b):
                a[shift + i] = (a[shift + i] - factor * bi) % q
        while a and a[-1] == 0:
            a.pop()
        return a

    deg = len(coeffs) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for low in itertools.product(range(q), repeat=d):
            divisor = list(low) + [1]
            if not pdiv_rem(list(coeffs), divisor):
                return False
    return True


def pairwise_min_distance(words, rank_of) -> int:
    """Minimum over all distinct pairs of rank_of(x - y)."""
    best = None
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            d = rank_of(x - y)
            if best is None or d < best:
                best = d
    return best
