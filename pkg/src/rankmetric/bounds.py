"""Bounds for rank-metric codes and the machinery around them.

Covers the Singleton-like and sphere-packing-like upper bounds, the
exhaustive search showing no nontrivial perfect code exists at desk scale,
the Gilbert-Varshamov-style existence threshold with its greedy constructor,
the asymptotic GV distance ratio, and covering densities including the
quasi-perfect rank-1-correcting family.

Every pass/fail comparison here is exact (integers or rationals); floats
appear only in the asymptotic-ratio helper.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, NamedTuple

from .counting import Space, ball_volume, _q_power
from .field import default_field
from .limits import SPAN_ENUMERATION_LIMIT, GuardExceeded
from .rank import RankVector, _rank_idx


@dataclass(frozen=True)
class CodeParams:
    """Parameters (q, m, n, M, d) of a rank-metric code."""

    space: Space
    M: int
    d: int

    def __post_init__(self):
        if not 1 <= self.d <= self.space.max_rank:
            raise ValueError(f"d={self.d} outside [1, {self.space.max_rank}]")
        if self.M < 1:
            raise ValueError("M must be >= 1")

    @classmethod
    def from_dimension(cls, space: Space, k: int, d: int) -> "CodeParams":
        """Linear code of dimension k over F_{q^m}: M = q^(mk)."""
        if not 0 <= k <= space.n:
            raise ValueError(f"dimension k={k} outside [0, {space.n}]")
        return cls(space, space.q ** (space.m * k), d)

    @property
    def t(self) -> int:
        """Error-correcting radius floor((d-1)/2)."""
        return (self.d - 1) // 2

    @property
    def is_mrd(self) -> bool:
        """Does M meet the Singleton-like bound with equality?"""
        return self.M == singleton_bound(self.space, self.d)


def singleton_bound(sp: Space, d: int) -> int:
    """Largest cardinality allowed at minimum distance d:
    q^min(m(n-d+1), n(m-d+1))."""
    if not 1 <= d <= sp.max_rank:
        raise ValueError(f"d={d} outside [1, {sp.max_rank}]")
    e = min(sp.m * (sp.n - d + 1), sp.n * (sp.m - d + 1))
    return sp.q**e


def mrd_code_params(sp: Space, d: int) -> CodeParams:
    """Parameters of the maximum-rank-distance code: Singleton equality."""
    return CodeParams(sp, singleton_bound(sp, d), d)


class SpherePackingCheck(NamedTuple):
    holds: bool
    covered: int  # M * B_t
    total: int    # q^(mn)


def sphere_packing_holds(cp: CodeParams) -> SpherePackingCheck:
    """Exact check of M * B_t <= q^(mn), with both sides."""
    covered = cp.M * ball_volume(cp.space, cp.t)
    total = cp.space.size
    return SpherePackingCheck(covered <= total, covered, total)


def perfect_code_search(q: int, max_m: int, max_n: int,
                        include_trivial: bool = False) -> list[CodeParams]:
    """Scan for parameters where radius-t balls would tile the space exactly.

    Searches n <= m <= max_m (the n > m half is the transposed picture),
    1 <= d <= n, requiring M * B_t = q^(mn) for integer M <= Singleton.
    Radius-0 solutions (every full space) are excluded unless
    ``include_trivial``; with t >= 1 the scan comes back empty.
    """
    found = []
    for m in range(1, max_m + 1):
        for n in range(1, min(m, max_n) + 1):
            sp = Space(q, m, n)
            size = sp.size
            for d in range(1, n + 1):
                t = (d - 1) // 2
                if t < 1 and not include_trivial:
                    continue
                ball = ball_volume(sp, t)
                if size % ball:
                    continue
                M = size // ball
                if M >= 1 and M <= singleton_bound(sp, d):
                    found.append(CodeParams(sp, M, d))
    return found


def gv_exists(sp: Space, M: int, d: int) -> bool:
    """Existence threshold: M * B_(d-1) < q^(mn) guarantees an
    (n, M+1, d) code."""
    if not 1 <= d <= sp.max_rank:
        raise ValueError(f"d={d} outside [1, {sp.max_rank}]")
    return M * ball_volume(sp, d - 1) < sp.size


def gv_on_bound(cp: CodeParams) -> bool:
    """Two-sided check (M-1) * B_(d-1) < q^(mn) <= M * B_(d-1)."""
    ball = ball_volume(cp.space, cp.d - 1)
    size = cp.space.size
    return (cp.M - 1) * ball < size <= cp.M * ball


def _permuted_range(size: int, seed: int) -> Iterator[int]:
    # Full-period power-of-two LCG, cycle-walked down to [0, size):
    # a seeded pseudo-random order over all candidates in O(1) memory.
    rng = random.Random(f"gv:{seed}")
    period = 4
    while period < size:
        period <<= 1
    a = 4 * rng.randrange(period // 4) + 1
    c = 2 * rng.randrange(period // 2) + 1
    x = rng.randrange(period)
    for _ in range(period):
        if x < size:
            yield x
        x = (a * x + c) % period


def gv_greedy_construct(sp: Space, d: int, target_M: int, seed: int) -> list[RankVector]:
    """Grow a code of size target_M and distance >= d greedily.

    Candidates are scanned in a seeded pseudo-random order; a vector joins
    the code when it avoids every radius-(d-1) ball around current
    codewords.  The existence threshold must hold for target_M - 1, which
    guarantees the scan succeeds.
    """
    if target_M < 1:
        raise ValueError("target_M must be >= 1")
    if sp.size > SPAN_ENUMERATION_LIMIT:
        raise GuardExceeded(
            f"space has {sp.size} vectors; guard is {SPAN_ENUMERATION_LIMIT}")
    if not gv_exists(sp, target_M - 1, d):
        raise ValueError(
            f"existence threshold fails for M={target_M - 1}, d={d}; "
            f"a code of size {target_M} is not guaranteed")
    field = default_field(sp.q, sp.m)
    order = field.order
    sub = field.sub_idx
    code_ids: list[tuple[int, ...]] = []
    for cand in _permuted_range(sp.size, seed):
        ids = tuple((cand // order**j) % order for j in range(sp.n))
        if all(_rank_idx([sub(a, b) for a, b in zip(ids, w)], field) >= d
               for w in code_ids):
            code_ids.append(ids)
            if len(code_ids) == target_M:
                return [RankVector.from_indices(field, ids) for ids in code_ids]
    raise AssertionError("greedy scan exhausted the space")  # unreachable


def gv_asymptotic_distance(m: int, n: int, logq_M: float) -> float:
    """Asymptotic d/(m+n) of a code on the existence threshold:

        1/2 - sqrt(log_q M + (m-n)^2/4) / (m+n).

    For m = n and log_q M = n^2 R this is (1 - sqrt(R))/2, i.e. d/n tends
    to 1 - sqrt(R).
    """
    if logq_M <= 0:
        raise ValueError("log_q M must be positive")
    if m * n < logq_M:
        raise ValueError("log_q M cannot exceed mn")
    return 0.5 - math.sqrt(logq_M + (m - n) ** 2 / 4) / (m + n)


@dataclass(frozen=True)
class DensityReport:
    """Covering density M * B_t / q^(mn) with the MRD sandwich when it applies."""

    density: Fraction
    lower_bound: Fraction | None
    upper_bound: Fraction | None


def covering_density(cp: CodeParams) -> DensityReport:
    """Exact covering density; bounds attached for MRD parameters at odd d.

    The sandwich  q^-((m-n+2)t + t^2) <= D <= q^-((m-n-1)t + t^2)  is stated
    for n <= m; the density is symmetric in (m, n), so for n > m the bounds
    are taken from the transposed parameters.
    """
    sp = cp.space
    t = cp.t
    density = Fraction(cp.M * ball_volume(sp, t), sp.size)
    lower = upper = None
    if cp.d % 2 == 1 and cp.is_mrd:
        m, n = max(sp.m, sp.n), min(sp.m, sp.n)
        lower = _q_power(sp.q, -((m - n + 2) * t + t * t))
        upper = _q_power(sp.q, -((m - n - 1) * t + t * t))
    return DensityReport(density, lower, upper)


def rank1_mrd_density(q: int, n: int) -> Fraction:
    """Closed-form density of the (n, q^(n(n-2)), 3) MRD code over F_{q^n}:

        D = (1 - 2 q^-n + q^(-2n+1)) / (q - 1).
    """
    if n < 3:
        raise ValueError("single-error-correcting codes need n >= 3")
    num = q ** (2 * n - 1) - 2 * q ** (n - 1) + 1
    return Fraction(num, (q - 1) * q ** (2 * n - 1))


def quasi_perfect_table(q: int, n_max: int) -> list[tuple[int, Fraction]]:
    """Densities of the rank-1-correcting MRD family for n = 3 .. n_max.

    For q = 2 the sequence increases strictly and tends to 1 (the family is
    quasi-perfect); for q > 2 it is capped by 1/(q-1).
    """
    if n_max < 3:
        raise ValueError("n_max must be >= 3")
    return [(n, rank1_mrd_density(q, n)) for n in range(3, n_max + 1)]
