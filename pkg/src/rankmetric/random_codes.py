"""Random code ensembles and their minimum-rank-distance distribution.

An ensemble draws either M distinct uniform vectors of F_{q^m}^n, or the
F_q-span of K independent uniform vectors.  With N the number of codeword
pairs that can realize the minimum distance (M-1 in the linear case,
M(M-1)/2 otherwise), the model distribution of the minimum distance is

    p_i = (1 - B_(i-1)/q^(mn))^N - (1 - B_i/q^(mn))^N,    i = 1..n.

The exact-formula path evaluates this from exact ball-volume ratios, in the
log domain for large spaces or as exact rationals for tiny ones; the Monte
Carlo path samples codes, brute-forces their minimum distance and histograms
the results.  Distinct-word sampling is not quite the independent-pair model
behind p_i; the gap is reported, never hidden.
"""

from __future__ import annotations

import math
import random
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .counting import Space, ball_volume, log_q, sphere_volume
from .field import default_field
from .limits import (EXPLICIT_CODE_LIMIT, SPAN_ENUMERATION_LIMIT,
                     GuardExceeded)
from .rank import RankVector, _flat_digits, _iter_span_idx, _rank_idx

# Exact-rational evaluation is reserved for spaces and exponents this small.
_EXACT_SPACE_LIMIT = 2**32
_EXACT_EXPONENT_LIMIT = 4096


@dataclass(frozen=True)
class Ensemble:
    """A random-code ensemble over F_{q^m}^n."""

    space: Space
    M: int
    linear: bool
    K: int | None = None

    def __post_init__(self):
        if self.M < 2:
            raise ValueError("ensembles need M >= 2")
        if self.linear:
            if self.K is None or not 1 <= self.K <= self.space.m * self.space.n:
                raise ValueError("linear ensembles need 1 <= K <= mn")
            if self.M != self.space.q**self.K:
                raise ValueError("linear ensembles have M = q^K")
        elif self.M > self.space.size:
            raise ValueError("M cannot exceed the space size")

    @classmethod
    def of_size(cls, space: Space, M: int) -> "Ensemble":
        """M distinct uniformly chosen vectors."""
        return cls(space, M, False)

    @classmethod
    def of_dimension(cls, space: Space, K: int) -> "Ensemble":
        """The F_q-span of K independent uniformly chosen vectors."""
        return cls(space, space.q**K, True, K)

    @property
    def N(self) -> int:
        """Pairs that can realize the minimum distance."""
        return self.M - 1 if self.linear else self.M * (self.M - 1) // 2


@dataclass
class DistributionTable:
    """Minimum-distance probabilities p_i for i = 1..n."""

    p: dict[int, Fraction | float]
    provenance: str            # "exact-formula" or "empirical"
    trials: int | None = None
    model_correction: float | None = None  # distinct-vs-iid sampling gap bound

    def total(self):
        return sum(self.p.values())

    def as_float(self, i: int) -> float:
        return float(self.p.get(i, 0))

    def moments(self) -> tuple[float, float]:
        """(expectation, variance) of the distance under this table."""
        e = sum(i * float(pi) for i, pi in self.p.items())
        e2 = sum(i * i * float(pi) for i, pi in self.p.items())
        return e, e2 - e * e


def _survival(ball: int, size: int, N: int) -> float:
    # (1 - ball/size)^N in doubles, safe for size up to ~q^1500.
    ratio = float(Fraction(ball, size))
    if ratio >= 1.0:
        return 0.0
    return math.exp(float(N) * math.log1p(-ratio))


def _wants_exact(ens: Ensemble, exact: bool | None) -> bool:
    if exact is not None:
        return exact
    return (ens.space.size <= _EXACT_SPACE_LIMIT
            and ens.N <= _EXACT_EXPONENT_LIMIT)


def exact_distribution(ens: Ensemble, exact: bool | None = None) -> DistributionTable:
    """Evaluate the model distribution p_i from exact ball volumes.

    ``exact=True`` keeps every p_i an exact Fraction (tiny spaces only);
    ``exact=None`` picks rationals automatically when affordable.  The table
    telescopes: its total is exactly (1 - q^(-mn))^N.
    """
    sp = ens.space
    size = sp.size
    N = ens.N
    balls = [ball_volume(sp, i) for i in range(sp.max_rank + 1)]
    balls += [size] * (sp.n - sp.max_rank)  # radii past max rank cover everything
    if _wants_exact(ens, exact):
        surv = [(1 - Fraction(b, size)) ** N for b in balls]
    else:
        surv = [_survival(b, size, N) for b in balls]
    p = {i: surv[i - 1] - surv[i] for i in range(1, sp.n + 1)}
    return DistributionTable(p, "exact-formula")


def distribution_upper_bound(ens: Ensemble, i: int, exact: bool | None = None):
    """The pointwise bound p_i <= N S_i / q^(mn) * (1 - B_(i-1)/q^(mn))^(N-1)."""
    sp = ens.space
    if not 1 <= i <= sp.n:
        raise ValueError(f"i={i} outside [1, {sp.n}]")
    size = sp.size
    N = ens.N
    sphere = sphere_volume(sp, i) if i <= sp.max_rank else 0
    prev_ball = ball_volume(sp, min(i - 1, sp.max_rank))
    if _wants_exact(ens, exact):
        return Fraction(N * sphere, size) * (1 - Fraction(prev_ball, size)) ** (N - 1)
    return float(Fraction(N * sphere, size)) * _survival(prev_ball, size, N - 1)


@dataclass(frozen=True)
class LemmaRanges:
    """Interval outside which the distance distribution is exponentially thin."""

    a_n: float
    b_n: float
    tail_mass: float  # exact-formula mass at i <= a_n or i >= b_n


def lemma_ranges(ens: Ensemble, lam: float | None = None,
                 mu: float | None = None) -> LemmaRanges:
    """Endpoints of the concentration interval for the minimum distance.

        a_n = (m+n)/2 - sqrt((m-n)^2/4 + log_q N + (m+n)/2 + lam)
        b_n = (m+n)/2 - sqrt((m-n)^2/4 + log_q N - (m+n) - log_q mu)

    Defaults lam = mu = 3 log_q(n).  The b_n radicand needs
    N >= q^(m+n) * mu; a ValueError signals the precondition is unmet.
    """
    sp = ens.space
    q, m, n = sp.q, sp.m, sp.n
    if lam is None:
        lam = 3 * math.log(n) / math.log(q) if n > 1 else 0.0
    if mu is None:
        mu = 3 * math.log(n) / math.log(q) if n > 1 else 1.0
    if mu <= 0:
        raise ValueError("mu must be positive")
    logN = log_q(ens.N, q)
    half = (m + n) / 2
    gap2 = (m - n) ** 2 / 4
    b_rad = gap2 + logN - (m + n) - (math.log(mu) / math.log(q))
    if b_rad < 0:
        raise ValueError(
            "concentration interval undefined: needs N >= q^(m+n) * mu(n)")
    a_n = half - math.sqrt(gap2 + logN + half + lam)
    b_n = half - math.sqrt(b_rad)
    table = exact_distribution(ens, exact=False)
    tail = sum(float(p) for i, p in table.p.items() if i <= a_n or i >= b_n)
    return LemmaRanges(a_n, b_n, tail)


@dataclass(frozen=True)
class MomentReport:
    """Predicted center vs exact-formula moments of the minimum distance."""

    expectation: float
    variance: float
    center: float          # (m+n)/2 - sqrt((m-n)^2/4 + log_q N)
    a_n: float | None
    b_n: float | None
    hypothesis_ok: bool    # n <= m and 3 log_q(n) q^(m+n) <= N < q^(mn)


def predicted_moments(ens: Ensemble) -> MomentReport:
    """Center prediction for E(d) next to the exact-formula moments."""
    sp = ens.space
    q, m, n = sp.q, sp.m, sp.n
    logN = log_q(ens.N, q)
    center = (m + n) / 2 - math.sqrt((m - n) ** 2 / 4 + logN)
    e, var = exact_distribution(ens, exact=False).moments()
    try:
        ranges = lemma_ranges(ens)
        a_n, b_n = ranges.a_n, ranges.b_n
    except ValueError:
        a_n = b_n = None
    logq_n = math.log(n) / math.log(q) if n > 1 else 0.0
    hypothesis_ok = (n <= m
                     and ens.N >= 3 * logq_n * q ** (m + n)
                     and ens.N < sp.size)
    return MomentReport(e, var, center, a_n, b_n, hypothesis_ok)


# ---------------------------------------------------------------------------
# Sampling

def _trial_rng(seed: int, trial: int) -> random.Random:
    # String seeding is stable across processes and Python runs.
    return random.Random(f"{seed}:{trial}")


def _draw_distinct(rng, ens: Ensemble, field) -> list[tuple[int, ...]]:
    order = field.order
    n = ens.space.n
    seen: set[tuple[int, ...]] = set()
    while len(seen) < ens.M:
        ids = tuple(rng.randrange(order) for _ in range(n))
        seen.add(ids)
    return list(seen)


def _draw_independent(rng, ens: Ensemble, field) -> list[tuple[int, ...]]:
    order = field.order
    n = ens.space.n
    elim = linalg.Eliminator(field.q)
    out: list[tuple[int, ...]] = []
    while len(out) < ens.K:
        ids = tuple(rng.randrange(order) for _ in range(n))
        if elim.add(_flat_digits(ids, field)):
            out.append(ids)
    return out


def _check_sampling_guards(ens: Ensemble) -> None:
    if ens.linear:
        if ens.M > SPAN_ENUMERATION_LIMIT:
            raise GuardExceeded(
                f"span of q^{ens.K} = {ens.M} words exceeds guard "
                f"{SPAN_ENUMERATION_LIMIT}")
    elif ens.M > EXPLICIT_CODE_LIMIT:
        raise GuardExceeded(
            f"explicit code of {ens.M} words exceeds guard {EXPLICIT_CODE_LIMIT}")


def sample_random_code(ens: Ensemble, seed: int) -> list[RankVector]:
    """Draw one code from the ensemble, deterministically for the seed.

    Non-linear: M distinct uniform vectors (collisions rejected).  Linear:
    K uniform vectors redrawn until independent, then the full F_q-span.
    """
    _check_sampling_guards(ens)
    field = default_field(ens.space.q, ens.space.m)
    rng = _trial_rng(seed, 0)
    if ens.linear:
        gens = _draw_independent(rng, ens, field)
        return [RankVector.from_indices(field, ids)
                for ids in _iter_span_idx(gens, field)]
    return [RankVector.from_indices(field, ids)
            for ids in _draw_distinct(rng, ens, field)]


def _trial_min_distance(rng, ens: Ensemble, field) -> int:
    if ens.linear:
        gens = _draw_independent(rng, ens, field)
        best = ens.space.n
        for ids in _iter_span_idx(gens, field):
            if any(ids):
                r = _rank_idx(ids, field)
                if r < best:
                    best = r
                    if best == 1:
                        break
        return best
    words = _draw_distinct(rng, ens, field)
    sub = field.sub_idx
    best = ens.space.n
    for i, x in enumerate(words):
        for y in words[i + 1:]:
            r = _rank_idx([sub(a, b) for a, b in zip(x, y)], field)
            if r < best:
                best = r
                if best == 1:
                    return 1
    return best


def _trial_rank_census(rng, ens: Ensemble, field) -> Counter:
    counts: Counter[int] = Counter()
    if ens.linear:
        gens = _draw_independent(rng, ens, field)
        for ids in _iter_span_idx(gens, field):
            counts[_rank_idx(ids, field)] += 1
    else:
        for ids in _draw_distinct(rng, ens, field):
            counts[_rank_idx(ids, field)] += 1
    return counts


def _run_chunk(args) -> Counter:
    kind, ens, seed, lo, hi = args
    field = default_field(ens.space.q, ens.space.m)
    counts: Counter[int] = Counter()
    for t in range(lo, hi):
        rng = _trial_rng(seed, t)
        if kind == "min-distance":
            counts[_trial_min_distance(rng, ens, field)] += 1
        else:
            counts.update(_trial_rank_census(rng, ens, field))
    return counts


def _run_trials(kind: str, ens: Ensemble, trials: int, seed: int,
                workers: int) -> Counter:
    if trials < 1:
        raise ValueError("trials must be >= 1")
    _check_sampling_guards(ens)
    if workers <= 1:
        return _run_chunk((kind, ens, seed, 0, trials))
    bounds = [trials * w // workers for w in range(workers + 1)]
    jobs = [(kind, ens, seed, lo, hi)
            for lo, hi in zip(bounds, bounds[1:]) if lo < hi]
    total: Counter[int] = Counter()
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for part in pool.map(_run_chunk, jobs):
            total.update(part)
    return total


def empirical_distribution(ens: Ensemble, trials: int, seed: int,
                           workers: int = 1) -> DistributionTable:
    """Histogram the brute-force minimum distance over sampled codes.

    Per-trial randomness depends only on (seed, trial index), so any degree
    of parallelism aggregates to the identical table.
    """
    counts = _run_trials("min-distance", ens, trials, seed, workers)
    p = {i: counts.get(i, 0) / trials for i in range(1, ens.space.n + 1)}
    correction = None
    if not ens.linear:
        # Distinct-word sampling vs the iid pair model: the gap is bounded by
        # the pair collision probability.
        correction = float(Fraction(ens.N, ens.space.size - 1))
    return DistributionTable(p, "empirical", trials=trials,
                             model_correction=correction)


def empirical_rank_census(ens: Ensemble, trials: int, seed: int,
                          workers: int = 1) -> dict[int, float]:
    """Mean number of codewords of each rank across sampled codes."""
    counts = _run_trials("rank-census", ens, trials, seed, workers)
    return {s: c / trials for s, c in sorted(counts.items())}


def total_variation(a: DistributionTable, b: DistributionTable) -> float:
    """TV distance between two distribution tables over i = 1..n."""
    keys = set(a.p) | set(b.p)
    return 0.5 * sum(abs(a.as_float(i) - b.as_float(i)) for i in keys)
