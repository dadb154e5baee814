"""Exact arithmetic primitives: rationals, binomials, powers and a bracket on e.

Rationals are :class:`fractions.Fraction`, which is always kept in lowest
terms with a positive denominator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

Rational = Fraction


def binomial(n: int, k: int) -> int:
    """C(n, k), with C(n, k) = 0 outside 0 <= k <= n."""
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational_pow(r: Fraction, e: int) -> Fraction:
    # Fraction(0) ** 0 == 1, the convention b(1) relies on
    if e < 0:
        raise ValueError(f"exponent must be non-negative, got {e}")
    return Fraction(r) ** e


def parse_rational(text: str | int) -> Fraction:
    """Parse an integer, "a/b" fraction or finite decimal string exactly.

    Binary floats are refused: ``parse_rational(0.1)`` raises, since the
    float has already lost the decimal value the caller meant.
    """
    if isinstance(text, bool) or isinstance(text, float):
        raise TypeError(f"refusing non-exact value {text!r}; pass a string")
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise TypeError(f"expected str or int, got {type(text).__name__}")
    s = text.strip()
    if not s or any(c in s for c in "eEjJ_") or s.lower() in {"nan", "inf", "infinity"}:
        raise ValueError(f"not an exact rational literal: {text!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational literal: {text!r}") from exc


def format_rational(r: Fraction) -> str:
    """Lossless "num/den" rendering (integers render without a denominator)."""
    r = Fraction(r)
    return str(r.numerator) if r.denominator == 1 else f"{r.numerator}/{r.denominator}"


@dataclass(frozen=True)
class EBracket:
    """Rational interval ``(lower, upper)`` known to contain e."""

    lower: Fraction
    upper: Fraction
    terms: int

    def contains(self, x: Fraction) -> bool:
        return self.lower < x < self.upper


@lru_cache(maxsize=64)
def e_bracket(terms: int) -> EBracket:
    """Truncated Taylor series for e with its tail bound.

    ``lower`` is sum_{k=0}^{terms} 1/k!; the omitted tail is strictly below
    1/(terms! * terms), which gives ``upper``.
    """
    if terms < 2:
        raise ValueError(f"terms must be >= 2, got {terms}")
    # accumulate over the common denominator terms! to stay in integers
    fact = math.factorial(terms)
    num = 0
    term = fact
    for k in range(terms + 1):
        if k:
            term //= k
        num += term
    lower = Fraction(num, fact)
    return EBracket(lower=lower, upper=lower + Fraction(1, fact * terms), terms=terms)
