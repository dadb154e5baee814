"""Global minimum of the sawtooth f over (0, 1).

f decreases inside each interval ((m-1)/(n+1), m/(n+1)], so its infimum is
attained at a right endpoint p = m/(n+1). There

    h(n, m) = H(n, m) / (n+1)^n,   H(n, m) = sum_{k<m} C(n,k) m^k (n+1-m)^(n-k)

and the smallest value is h(n, 1) = (n/(n+1))^n, which stays above 1/e.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import e_bracket
from .report import LemmaWitness, VerificationReport, timed


@dataclass(frozen=True)
class BreakpointValue:
    n: int
    m: int
    p_star: Fraction
    value: Fraction
    unnormalized: int


@dataclass(frozen=True)
class MinResult:
    n: int
    argmin_p: Fraction
    min_value: Fraction
    certified_above_1_over_e: bool
    e_terms_used: int


def _check_nm(n: int, m: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in [1, {n}], got {m}")


@lru_cache(maxsize=4096)
def h_unnormalized(n: int, m: int) -> int:
    """H(n, m); the normalizer (n+1)^n is left off."""
    _check_nm(n, m)
    r = n + 1 - m
    # Horner over k: acc = sum_{j<=k} C(n,j) m^j r^(k-j); every step is big-times-small
    term = 1  # C(n, k) m^k
    acc = 1
    for k in range(1, m):
        term = term * (n - k + 1) * m // k
        acc = acc * r + term
    return acc * r ** (n - m + 1)


def h_value(n: int, m: int) -> BreakpointValue:
    H = h_unnormalized(n, m)
    return BreakpointValue(n, m, Fraction(m, n + 1), Fraction(H, (n + 1) ** n), H)


def h_floor(n: int) -> Fraction:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return Fraction(n**n, (n + 1) ** n)


def certify_above_1_over_e(n: int, terms: int = 25) -> bool:
    """True iff (1 + 1/n)^n < lower(e bracket), which proves h_floor(n) > 1/e.

    False is inconclusive, not a refutation: retry with more terms.
    """
    lower = e_bracket(terms).lower
    # (n+1)^n / n^n < a/b  <=>  b (n+1)^n < a n^n
    return lower.denominator * (n + 1) ** n < lower.numerator * n**n


def global_min(n: int, terms: int = 25) -> MinResult:
    """Scan all breakpoints; ties go to the smallest m."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    best_m = min(range(1, n + 1), key=lambda m: (h_unnormalized(n, m), m))
    best = h_value(n, best_m)
    return MinResult(
        n=n,
        argmin_p=best.p_star,
        min_value=best.value,
        certified_above_1_over_e=certify_above_1_over_e(n, terms),
        e_terms_used=terms,
    )


def certify_with_retry(n: int, terms: int = 25, max_terms: int = 1024) -> tuple[bool, int]:
    """Double the number of Taylor terms until certified or ``max_terms`` is passed."""
    while True:
        if certify_above_1_over_e(n, terms):
            return True, terms
        if terms * 2 > max_terms:
            return False, terms
        terms *= 2


def floor_monotone_check(n_max: int) -> VerificationReport:
    """Check h_floor(n) > h_floor(n+1) for 1 <= n < n_max.

    Cross-multiplied: n^n (n+2)^(n+1) > (n+1)^(2n+1).
    """
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    report = VerificationReport("floor_monotone", parameters={"n_max": str(n_max)})
    with timed(report):
        for n in range(1, n_max):
            report.record(
                LemmaWitness.compare(
                    "floor_decreasing",
                    n**n * (n + 2) ** (n + 1),
                    (n + 1) ** (2 * n + 1),
                    "gt",
                    n=n,
                )
            )
    return report
