"""Exact checks of each step used to show h(n, 1) is the smallest breakpoint value.

Notation: p = m/(n+1), q = (m+1)/(n+1), d(m) = h(n, m+1) - h(n, m),
g(t) = t^(n-m) (1-t)^(m-1) on [1-q, 1-p], w(x) = (1 + 1/x)^x and
b(m) = m (m-1)^(m-1) / (m+1)^m.

Each checker returns a :class:`LemmaWitness` (or a report of them) rather
than raising, because the regime boundaries are part of what gets checked.
"""

from __future__ import annotations

import enum
from fractions import Fraction

from .beta import beta
from .minimizer import h_unnormalized, h_value
from .report import LemmaWitness, VerificationReport, timed

__all__ = [
    "LemmaWitness",
    "Ordering",
    "d_value",
    "symmetry_check",
    "w_compare",
    "w_value",
    "g_value",
    "g_interval",
    "g_argmax",
    "g_argmax_check",
    "rectangle_bound_check",
    "case1_check",
    "case2_check",
    "b_value",
    "b_monotone_check",
    "case_boundary_chain_check",
]


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def _check_inner(n: int, m: int) -> None:
    if n < 2 or not 1 <= m <= n - 1:
        raise ValueError(f"need n >= 2 and 1 <= m <= n-1, got n={n}, m={m}")


def d_value(n: int, m: int) -> Fraction:
    _check_inner(n, m)
    return h_value(n, m + 1).value - h_value(n, m).value


def symmetry_check(n: int) -> VerificationReport:
    """d(m) == d(n-m) for every m, plus H(n, m) + H(n, n+1-m) == (n+1)^n.

    The symmetry is checked both on normalized h and on the integer H scale.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    report = VerificationReport("symmetry", parameters={"n": str(n)})
    with timed(report):
        H = {m: h_unnormalized(n, m) for m in range(1, n + 1)}
        for m in range(1, n):
            report.record(LemmaWitness.compare("d_symmetry", d_value(n, m), d_value(n, n - m), "eq", n=n, m=m))
            dH = H[m + 1] - H[m]
            dH_mirror = H[n - m + 1] - H[n - m]
            report.record(LemmaWitness.compare("d_symmetry_unnormalized", dH, dH_mirror, "eq", n=n, m=m))
        total = (n + 1) ** n
        for m in range(1, n + 1):
            report.record(LemmaWitness.compare("h_complement", H[m] + H[n + 1 - m], total, "eq", n=n, m=m))
    return report


def w_value(x) -> Fraction:
    x = Fraction(x)
    if x <= 0:
        raise ValueError(f"w is defined for x > 0, got {x}")
    if x.denominator != 1:
        raise ValueError("exact w needs an integer argument")
    return (1 + 1 / x) ** int(x)


def w_compare(a: int, b: int) -> Ordering:
    """Order w(a) against w(b) via (a+1)^a b^b versus a^a (b+1)^b."""
    if a < 1 or b < 1:
        raise ValueError(f"arguments must be positive, got {a}, {b}")
    lhs = (a + 1) ** a * b**b
    rhs = a**a * (b + 1) ** b
    return Ordering((lhs > rhs) - (lhs < rhs))


def g_value(n: int, m: int, t: Fraction) -> Fraction:
    return t ** (n - m) * (1 - t) ** (m - 1)


def g_interval(n: int, m: int) -> tuple[Fraction, Fraction]:
    _check_inner(n, m)
    return Fraction(n - m, n + 1), Fraction(n + 1 - m, n + 1)


def g_argmax(n: int, m: int) -> Fraction:
    """Maximizer of g on [1-q, 1-p].

    g is unimodal on (0, 1) with its peak at (n-m)/(n-1), so the maximizer
    is that point clamped into the interval.
    """
    lo, hi = g_interval(n, m)
    t_star = Fraction(n - m, n - 1)
    return min(max(t_star, lo), hi)


def g_argmax_check(n: int, m: int, grid: int = 64) -> list[LemmaWitness]:
    """g(g_argmax) >= g at both endpoints, the stationary point and ``grid`` points."""
    lo, hi = g_interval(n, m)
    t = g_argmax(n, m)
    best = g_value(n, m, t)
    probes = [lo, hi, Fraction(n - m, n - 1)]
    probes += [lo + (hi - lo) * Fraction(j, grid - 1) for j in range(grid)]
    out = []
    for s in probes:
        if lo <= s <= hi:
            out.append(LemmaWitness.compare("g_argmax", best, g_value(n, m, s), "ge", n=n, m=m))
    return out


def rectangle_bound_check(n: int, m: int) -> LemmaWitness:
    """q^m (1-q)^(n-m) >= m * int_{1-q}^{1-p} g(t) dt."""
    _check_inner(n, m)
    p = Fraction(m, n + 1)
    q = Fraction(m + 1, n + 1)
    lhs = q**m * (1 - q) ** (n - m)
    rhs = m * (beta(1 - p, n - m + 1, m) - beta(1 - q, n - m + 1, m))
    return LemmaWitness.compare("rectangle_bound", lhs, rhs, "ge", n=n, m=m)


def case1_check(n: int, m: int) -> LemmaWitness:
    """(m+1)^m (n-m)^(n-m) >= (n+1-m)^(n-m) m^m; expected iff m >= n - m."""
    _check_inner(n, m)
    lhs = (m + 1) ** m * (n - m) ** (n - m)
    rhs = (n + 1 - m) ** (n - m) * m**m
    return LemmaWitness.compare("case1", lhs, rhs, "ge", n=n, m=m)


def case2_check(n: int, m: int) -> LemmaWitness:
    """(m+1)^m (n-1)^(n-1) >= m (m-1)^(m-1) (n+1)^(n-1).

    This bound is needed where g peaks inside the interval, i.e.
    m >= (n+1)/2. Any m in [1, n-1] is accepted; m = 1 uses 0^0 = 1.
    """
    _check_inner(n, m)
    lhs = (m + 1) ** m * (n - 1) ** (n - 1)
    rhs = m * (m - 1) ** (m - 1) * (n + 1) ** (n - 1)
    return LemmaWitness.compare("case2", lhs, rhs, "ge", n=n, m=m)


def b_value(m: int) -> Fraction:
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    return Fraction(m * (m - 1) ** (m - 1), (m + 1) ** m)


def b_monotone_check(m_max: int) -> VerificationReport:
    """b(m) > b(m+1) and b(m)/b(m+1) == w(m+1)/w(m-1), for 2 <= m < m_max."""
    if m_max < 3:
        raise ValueError(f"m_max must be >= 3, got {m_max}")
    report = VerificationReport("b_monotone", parameters={"m_max": str(m_max)})
    with timed(report):
        b_next = b_value(2)
        for m in range(2, m_max):
            b_cur, b_next = b_next, b_value(m + 1)
            report.record(LemmaWitness.compare("b_decreasing", b_cur, b_next, "gt", m=m))
            report.record(
                LemmaWitness.compare("b_ratio_identity", b_cur / b_next, w_value(m + 1) / w_value(m - 1), "eq", m=m)
            )
    return report


def case_boundary_chain_check(m: int) -> LemmaWitness:
    """(m+1)^m (m-1)^(m-1) >= m^(2m-1): the case-2 bound at n = 2m - 1."""
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    lhs = (m + 1) ** m * (m - 1) ** (m - 1)
    rhs = m ** (2 * m - 1)
    return LemmaWitness.compare("case_boundary_chain", lhs, rhs, "ge", n=2 * m - 1, m=m)
