"""Exact enumerative combinatorics for the rank metric.

Sphere volume S_t counts the m x n matrices over F_q of rank exactly t,

    S_t = prod_{j=0}^{t-1} (q^n - q^j)(q^m - q^j) / (q^t - q^j),

and the ball volume B_t is the partial sum of spheres up to radius t.  All
values are exact arbitrary-precision integers; every division in the product
formulas is asserted to leave no remainder.  Floating point enters only
through the separate log view.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .field import is_prime


@dataclass(frozen=True)
class Space:
    """The ambient space F_{q^m}^n, i.e. the m x n matrices over F_q."""

    q: int
    m: int
    n: int

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")
        if self.m < 1 or self.n < 1:
            raise ValueError("m and n must be >= 1")

    @property
    def size(self) -> int:
        """Number of vectors, q^(mn)."""
        return self.q ** (self.m * self.n)

    @property
    def max_rank(self) -> int:
        return min(self.m, self.n)

    def transposed(self) -> "Space":
        return Space(self.q, self.n, self.m)


def gaussian_binomial(n: int, k: int, q: int) -> int:
    """Number of k-dimensional subspaces of (F_q)^n; 0 outside 0 <= k <= n.

    Computed with interleaved multiply/divide; each intermediate quotient is
    itself a Gaussian binomial, so every division is exact (asserted).
    """
    if k < 0 or k > n:
        return 0
    if k > n - k:
        k = n - k
    val = 1
    for i in range(1, k + 1):
        val *= q ** (n - k + i) - 1
        den = q**i - 1
        assert val % den == 0, "inexact division in Gaussian binomial"
        val //= den
    return val


def sphere_volume(sp: Space, t: int) -> int:
    """S_t: matrices of rank exactly t, via the exact product formula.

    Evaluated in the regrouped form  [n choose t]_q * prod_{j<t} (q^m - q^j),
    equal to the product formula term by term but exactly divisible at every
    intermediate step.
    """
    _check_radius(sp, t)
    q = sp.q
    injections = 1
    for j in range(t):
        injections *= q**sp.m - q**j
    return gaussian_binomial(sp.n, t, q) * injections


def ball_volume(sp: Space, t: int) -> int:
    """B_t: matrices of rank at most t."""
    _check_radius(sp, t)
    return sum(sphere_volume(sp, i) for i in range(t + 1))


def sphere_volumes(sp: Space) -> list[int]:
    """All sphere volumes S_0 .. S_min(m,n)."""
    return [sphere_volume(sp, t) for t in range(sp.max_rank + 1)]


class VolumeBounds(NamedTuple):
    sphere_lo: Fraction
    sphere_hi: Fraction
    ball_lo: Fraction
    ball_hi: Fraction


def volume_bounds(sp: Space, t: int) -> VolumeBounds:
    """The exponential sandwich around S_t and B_t.

        q^((m+n-2)t - t^2) <= S_t <= q^((m+n+1)t - t^2)
        q^((m+n-2)t - t^2) <= B_t <= q^((m+n+1)t - t^2 + 1)

    Exponents can go negative (m = n = 1, t = 1), so the bounds are exact
    rationals rather than integers.
    """
    _check_radius(sp, t)
    m, n = sp.m, sp.n
    lo = _q_power(sp.q, (m + n - 2) * t - t * t)
    hi = _q_power(sp.q, (m + n + 1) * t - t * t)
    return VolumeBounds(lo, hi, lo, hi * sp.q)


def _q_power(q: int, e: int) -> Fraction:
    return Fraction(q**e) if e >= 0 else Fraction(1, q**-e)


def _check_radius(sp: Space, t: int) -> None:
    if not 0 <= t <= sp.max_rank:
        raise ValueError(f"radius t={t} outside [0, {sp.max_rank}]")


def log_q(value, q: int) -> float:
    """Base-q logarithm of an exact count or ratio, as a float view."""
    if isinstance(value, Fraction):
        if value <= 0:
            raise ValueError("log of a non-positive value")
        return (math.log(value.numerator) - math.log(value.denominator)) / math.log(q)
    if value <= 0:
        raise ValueError("log of a non-positive value")
    return math.log(value) / math.log(q)
