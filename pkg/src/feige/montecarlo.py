"""Seeded Monte Carlo estimates of P(S_n < n + 1) for two-point instances.

Random numbers come from Philox4x32-10 (Salmon et al., "Parallel random
numbers: as easy as 1, 2, 3"), a counter-based generator. The 64-bit seed
is the key. The uniform driving variable i of trial t is the 64-bit word
built from the output block at counter (t_lo, t_hi, i // 2, 0). Every draw
therefore depends only on (seed, trial, variable). Any split of trials
across workers gives the same counts.

Variable i succeeds when that word is below ceil(2^64 / x_i). Success sums
are compared with n + 1 in scaled integers, so the threshold test is exact.
"""

from __future__ import annotations

import math
import random
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .exact import e_bracket, format_rational
from .report import LemmaWitness, VerificationReport, timed
from .tail import HeterogeneousInstance, exact_heterogeneous

PHILOX_M0 = np.uint64(0xD2511F53)
PHILOX_M1 = np.uint64(0xCD9E8D57)
PHILOX_W0 = 0x9E3779B9
PHILOX_W1 = 0xBB67AE85
PHILOX_ROUNDS = 10

#: trials per work unit; fixed so the partition never depends on ``workers``
BLOCK_TRIALS = 16384

_MASK32 = np.uint64(0xFFFFFFFF)


def philox4x32(counter, key: tuple[int, int]):
    """Philox4x32-10 over column-stacked counters.

    ``counter`` is a sequence of four uint32 arrays (broadcastable), ``key``
    two 32-bit ints. Returns four uint32 arrays.
    """
    c0, c1, c2, c3 = (np.asarray(c, dtype=np.uint64) for c in counter)
    k0, k1 = key[0] & 0xFFFFFFFF, key[1] & 0xFFFFFFFF
    for _ in range(PHILOX_ROUNDS):
        p0 = c0 * PHILOX_M0
        p1 = c2 * PHILOX_M1
        hi0, lo0 = p0 >> np.uint64(32), p0 & _MASK32
        hi1, lo1 = p1 >> np.uint64(32), p1 & _MASK32
        c0, c1, c2, c3 = hi1 ^ c1 ^ np.uint64(k0), lo1, hi0 ^ c3 ^ np.uint64(k1), lo0
        k0 = (k0 + PHILOX_W0) & 0xFFFFFFFF
        k1 = (k1 + PHILOX_W1) & 0xFFFFFFFF
    return tuple(c.astype(np.uint32) for c in (c0, c1, c2, c3))


def trial_words(seed: int, trials: np.ndarray, n_vars: int) -> np.ndarray:
    """64-bit uniform words, shape (len(trials), n_vars)."""
    key = (seed & 0xFFFFFFFF, (seed >> 32) & 0xFFFFFFFF)
    t = np.asarray(trials, dtype=np.uint64)
    t_lo = t & _MASK32
    t_hi = t >> np.uint64(32)
    out = np.empty((len(t), n_vars), dtype=np.uint64)
    zeros = np.zeros_like(t)
    for j in range((n_vars + 1) // 2):
        r0, r1, r2, r3 = philox4x32((t_lo, t_hi, zeros + np.uint64(j), zeros), key)
        i = 2 * j
        out[:, i] = (r0.astype(np.uint64) << np.uint64(32)) | r1.astype(np.uint64)
        if i + 1 < n_vars:
            out[:, i + 1] = (r2.astype(np.uint64) << np.uint64(32)) | r3.astype(np.uint64)
    return out


@dataclass(frozen=True)
class McConfig:
    trials: int
    seed: int = 0
    workers: int = 1

    def __post_init__(self):
        if self.trials < 1:
            raise ValueError(f"trials must be >= 1, got {self.trials}")
        if not 0 <= self.seed < 2**64:
            raise ValueError(f"seed must be an unsigned 64-bit integer, got {self.seed}")
        if self.workers < 1:
            raise ValueError(f"workers must be >= 1, got {self.workers}")


@dataclass(frozen=True)
class McEstimate:
    p_hat: float
    std_error: float
    ci95_low: float
    ci95_high: float
    trials: int
    seed: int
    successes: int

    def z_score(self, exact: Fraction) -> float:
        """(p_hat - exact) in units of the estimate's standard error."""
        diff = Fraction(self.successes, self.trials) - exact
        if self.std_error == 0:
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return float(diff) / self.std_error


class _Sampler:
    def __init__(self, inst: HeterogeneousInstance, seed: int):
        self.seed = seed
        self.n = inst.n
        xs = inst.xs
        # success iff word < ceil(2^64 * den / num); p = 1 means always
        self.always = np.array([x == 1 for x in xs])
        thresholds = [0 if x == 1 else min(-(-(x.denominator << 64) // x.numerator), 2**64 - 1) for x in xs]
        self.thresholds = np.array(thresholds, dtype=np.uint64)
        scale = math.lcm(*(x.denominator for x in xs))
        scaled = [int(x * scale) for x in xs]
        self.limit = (self.n + 1) * scale
        dtype = np.int64 if sum(scaled) < 2**62 else object
        self.scaled = np.array(scaled, dtype=dtype)

    def count(self, start: int, stop: int) -> int:
        trials = np.arange(start, stop, dtype=np.uint64)
        words = trial_words(self.seed, trials, self.n)
        hits = (words < self.thresholds) | self.always
        sums = hits.astype(self.scaled.dtype) @ self.scaled
        return int(np.count_nonzero(sums < self.limit))


def simulate(inst: HeterogeneousInstance, cfg: McConfig) -> McEstimate:
    """Estimate P(S_n < n + 1) by simulation with a normal-approximation 95% CI."""
    sampler = _Sampler(inst, cfg.seed)
    spans = [(s, min(s + BLOCK_TRIALS, cfg.trials)) for s in range(0, cfg.trials, BLOCK_TRIALS)]
    if cfg.workers == 1 or len(spans) == 1:
        counts = [sampler.count(a, b) for a, b in spans]
    else:
        with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
            counts = list(pool.map(lambda ab: sampler.count(*ab), spans))
    successes = sum(counts)
    p_hat = successes / cfg.trials
    se = math.sqrt(p_hat * (1 - p_hat) / cfg.trials)
    return McEstimate(
        p_hat=p_hat,
        std_error=se,
        ci95_low=max(0.0, p_hat - 1.96 * se),
        ci95_high=min(1.0, p_hat + 1.96 * se),
        trials=cfg.trials,
        seed=cfg.seed,
        successes=successes,
    )


def random_instance(rng: random.Random, n_range: tuple[int, int] = (2, 12), x_max: int = 20) -> HeterogeneousInstance:
    """Draw n uniformly in ``n_range``, then each x = num/den in [1, x_max].

    den is uniform on 1..8, num uniform on den..x_max*den.
    """
    n = rng.randint(*n_range)
    xs = []
    for _ in range(n):
        den = rng.randint(1, 8)
        xs.append(Fraction(rng.randint(den, x_max * den), den))
    return HeterogeneousInstance(tuple(xs))


@dataclass
class BatteryEntry:
    instance: HeterogeneousInstance
    exact: Fraction
    estimate: McEstimate
    flagged: bool
    above_1_over_e: bool | None = field(default=None)


def _above_1_over_e(value: Fraction, terms: int = 25) -> bool | None:
    br = e_bracket(terms)
    if value > 1 / br.lower:
        return True
    if value < 1 / br.upper:
        return False
    return None


def run_mc_battery(
    count: int = 20,
    n_range: tuple[int, int] = (2, 12),
    seed: int = 42,
    trials: int = 100_000,
    workers: int = 1,
    include: tuple[HeterogeneousInstance, ...] = (),
) -> list[BatteryEntry]:
    """Compare simulation to exact enumeration on generated instances.

    Instances come from ``random.Random(seed)`` via :func:`random_instance`;
    instance i is simulated with seed ``seed + i``.
    """
    rng = random.Random(seed)
    instances = list(include) + [random_instance(rng, n_range) for _ in range(count)]
    entries = []
    for i, inst in enumerate(instances):
        exact = exact_heterogeneous(inst)
        est = simulate(inst, McConfig(trials=trials, seed=(seed + i) % 2**64, workers=workers))
        diff = abs(Fraction(est.successes, trials) - exact)
        flagged = diff > 4 * Fraction(est.std_error)
        entries.append(BatteryEntry(inst, exact, est, flagged, _above_1_over_e(exact)))
    return entries


def mc_vs_exact_battery(
    count: int = 20,
    n_range: tuple[int, int] = (2, 12),
    seed: int = 42,
    trials: int = 100_000,
    workers: int = 1,
    include: tuple[HeterogeneousInstance, ...] = (),
) -> VerificationReport:
    report = VerificationReport(
        "mc_vs_exact",
        parameters={
            "count": str(count),
            "n_range": f"{n_range[0]}..{n_range[1]}",
            "seed": str(seed),
            "trials": str(trials),
        },
    )
    with timed(report):
        entries = run_mc_battery(count, n_range, seed, trials, workers, include)
        for i, e in enumerate(entries):
            diff = abs(Fraction(e.estimate.successes, trials) - e.exact)
            report.record(
                LemmaWitness.compare("mc_within_4se", 4 * Fraction(e.estimate.std_error), diff, "ge", n=e.instance.n)
            )
            xs = ",".join(format_rational(x) for x in e.instance.xs)
            report.parameters[f"instance_{i:02d}"] = (
                f"x=[{xs}] exact={format_rational(e.exact)} p_hat={e.estimate.p_hat!r} "
                f"above_1_over_e={e.above_1_over_e}"
            )
    return report
