"""Check suites over (n, m, p) grids, each producing a VerificationReport.

``run_battery(n_max)`` strings them together at one scale; the individual
suite functions take their own ranges so callers can run them at the
sizes they need.
"""

from __future__ import annotations

import math
import random
from fractions import Fraction

from .beta import absorption_identity_check, beta, h_via_beta
from .exact import e_bracket
from .lemmas import (
    Ordering,
    b_monotone_check,
    case1_check,
    case2_check,
    case_boundary_chain_check,
    d_value,
    g_argmax_check,
    rectangle_bound_check,
    symmetry_check,
    w_compare,
)
from .minimizer import (
    floor_monotone_check,
    global_min,
    h_floor,
    h_value,
)
from .report import LemmaWitness, VerificationReport, timed
from .tail import (
    HeterogeneousInstance,
    IidTwoPointInstance,
    TailSpec,
    brute_force_iid,
    exact_heterogeneous,
    f_of_p,
    partial_tail,
    tail_derivative,
    tail_derivative_closed,
)

DERIVATIVE_POINTS = (Fraction(1, 7), Fraction(1, 3), Fraction(1, 2), Fraction(5, 8))


def oracle_points(n: int) -> list[Fraction]:
    """Breakpoints of f plus the 63 interior multiples of 1/64."""
    pts = {Fraction(m, n + 1) for m in range(1, n + 1)}
    pts.update(Fraction(j, 64) for j in range(1, 64))
    return sorted(pts)


def random_rationals(rng: random.Random, count: int, max_den: int = 10**6) -> list[Fraction]:
    out = []
    for _ in range(count):
        den = rng.randint(2, max_den)
        out.append(Fraction(rng.randint(1, den - 1), den))
    return out


def _params(**kw) -> dict[str, str]:
    return {k: str(v) for k, v in kw.items()}


def tail_oracle_suite(n_max: int = 16) -> VerificationReport:
    """f_of_p against the event-level oracle and the heterogeneous enumerator."""
    report = VerificationReport("tail_oracle", parameters=_params(n_max=n_max))
    with timed(report):
        for n in range(1, n_max + 1):
            for p in oracle_points(n):
                inst = IidTwoPointInstance(n, p)
                f = f_of_p(inst)
                report.record(LemmaWitness.compare("f_equals_brute_force", f, brute_force_iid(inst), "eq", n=n))
                het = exact_heterogeneous(HeterogeneousInstance((1 / p,) * n))
                report.record(LemmaWitness.compare("f_equals_enumeration", f, het, "eq", n=n))
                report.record(LemmaWitness.compare("f_positive", f, 0, "gt", n=n))
                report.record(LemmaWitness.compare("f_at_most_one", f, 1, "le", n=n))
                if p > Fraction(n, n + 1):
                    report.record(LemmaWitness.compare("f_one_above_last_breakpoint", f, 1, "eq", n=n))
    return report


def derivative_suite(n_max: int = 30) -> VerificationReport:
    report = VerificationReport("tail_derivative", parameters=_params(n_max=n_max))
    with timed(report):
        for n in range(1, n_max + 1):
            for m in range(n + 1):
                spec = TailSpec(n, m)
                for p in DERIVATIVE_POINTS:
                    d = tail_derivative(spec, p)
                    report.record(
                        LemmaWitness.compare("derivative_closed_form", d, tail_derivative_closed(spec, p), "eq", n=n, m=m)
                    )
                    rel = "lt" if m < n else "eq"
                    report.record(LemmaWitness.compare("derivative_sign", d, 0, rel, n=n, m=m))
    return report


def sawtooth_suite(n_max: int = 40) -> VerificationReport:
    """Strict decrease inside each interval, left-continuity and upward jumps."""
    report = VerificationReport("sawtooth_shape", parameters=_params(n_max=n_max))
    with timed(report):
        for n in range(1, n_max + 1):
            for m in range(1, n + 1):
                lo = Fraction(m - 1, n + 1)
                width = Fraction(1, n + 1)
                pts = [lo + width * Fraction(j, 9) for j in range(1, 9)]
                vals = [f_of_p(IidTwoPointInstance(n, p)) for p in pts]
                for a, b in zip(vals, vals[1:]):
                    report.record(LemmaWitness.compare("interval_strict_decrease", a, b, "gt", n=n, m=m))
                bp = Fraction(m, n + 1)
                at_bp = f_of_p(IidTwoPointInstance(n, bp))
                report.record(
                    LemmaWitness.compare("left_continuity", at_bp, partial_tail(TailSpec(n, m - 1), bp), "eq", n=n, m=m)
                )
                right = f_of_p(IidTwoPointInstance(n, bp + width / 8))
                report.record(LemmaWitness.compare("upward_jump", right, at_bp, "gt", n=n, m=m))
    return report


def minimizer_suite(n_max: int = 100, random_points: int = 200, seed: int = 20240917) -> VerificationReport:
    """Floor identification, breakpoint optimality at random p, and h(n,1) < h(n,2)."""
    report = VerificationReport(
        "minimizer", parameters=_params(n_max=n_max, random_points=random_points, seed=seed)
    )
    with timed(report):
        for n in range(1, n_max + 1):
            res = global_min(n)
            report.record(LemmaWitness.compare("argmin_first_breakpoint", res.argmin_p, Fraction(1, n + 1), "eq", n=n))
            report.record(LemmaWitness.compare("min_equals_floor", res.min_value, h_floor(n), "eq", n=n))
            rng = random.Random(seed * 1000 + n)
            for p in random_rationals(rng, random_points):
                report.record(
                    LemmaWitness.compare("breakpoint_optimality", res.min_value, f_of_p(IidTwoPointInstance(n, p)), "le", n=n)
                )
            if n >= 2:
                report.record(
                    LemmaWitness.compare("h1_below_h2", h_value(n, 1).value, h_value(n, 2).value, "lt", n=n, m=1)
                )
    return report


def consistency_suite(n_max: int = 60) -> VerificationReport:
    """h(n, m) equals f at m/(n+1)."""
    report = VerificationReport("h_consistency", parameters=_params(n_max=n_max))
    with timed(report):
        for n in range(1, n_max + 1):
            for m in range(1, n + 1):
                bv = h_value(n, m)
                report.record(
                    LemmaWitness.compare("h_equals_f", bv.value, f_of_p(IidTwoPointInstance(n, bv.p_star)), "eq", n=n, m=m)
                )
    return report


def certificate_suite(n_max: int = 1000, terms: int = 25) -> VerificationReport:
    report = VerificationReport("one_over_e_certificate", parameters=_params(n_max=n_max, terms=terms))
    lower = e_bracket(terms).lower
    with timed(report):
        for n in range(1, n_max + 1):
            # (1+1/n)^n < lower  <=>  num * n^n > den * (n+1)^n
            w = LemmaWitness.compare(
                "floor_above_1_over_e", lower.numerator * n**n, lower.denominator * (n + 1) ** n, "gt", n=n
            )
            report.record(w)
    return report


def beta_suite(n_max: int = 50) -> VerificationReport:
    report = VerificationReport("beta_representation", parameters=_params(n_max=n_max))
    with timed(report):
        for n in range(1, n_max + 1):
            for m in range(1, n + 1):
                report.record(LemmaWitness.compare("h_via_beta", h_via_beta(n, m), h_value(n, m).value, "eq", n=n, m=m))
                ok = absorption_identity_check(n, m)
                report.record(LemmaWitness.compare("absorption_identity", int(ok), 1, "eq", n=n, m=m))
    return report


def beta_properties_suite(ab_max: int = 12, samples: int = 16) -> VerificationReport:
    """Monotonicity in z, reflection B(z;a,b) + B(1-z;b,a) = B(1;a,b), and the complete integral."""
    report = VerificationReport("beta_properties", parameters=_params(ab_max=ab_max, samples=samples))
    zs = [Fraction(j, samples + 1) for j in range(1, samples + 1)]
    with timed(report):
        for a in range(1, ab_max):
            for b in range(1, ab_max - a + 1):
                vals = [beta(z, a, b) for z in zs]
                for u, v in zip(vals, vals[1:]):
                    report.record(LemmaWitness.compare("beta_increasing", v, u, "gt", n=a, m=b))
                full = beta(1, a, b)
                for z, v in zip(zs, vals):
                    report.record(LemmaWitness.compare("beta_reflection", v + beta(1 - z, b, a), full, "eq", n=a, m=b))
        for a in range(1, ab_max + 2):
            for b in range(1, ab_max + 3 - a):
                closed = Fraction(math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1))
                report.record(LemmaWitness.compare("beta_complete", beta(1, a, b), closed, "eq", n=a, m=b))
    return report


def d_suite(n_max: int = 100) -> VerificationReport:
    """d(m) >= 0, d(m) = d(n-m) and the complement identity for every n <= n_max."""
    report = VerificationReport("d_nonnegative_symmetric", parameters=_params(n_max=n_max))
    strict = 0
    with timed(report):
        for n in range(2, n_max + 1):
            for m in range(1, n):
                d = d_value(n, m)
                report.record(LemmaWitness.compare("d_nonnegative", d, 0, "ge", n=n, m=m))
                strict += d > 0
            if n >= 2:
                report.record(LemmaWitness.compare("d_first_step_positive", d_value(n, 1), 0, "gt", n=n, m=1))
            sym = symmetry_check(n)
            report.checks_run += sym.checks_run
            report.failures.extend(sym.failures)
    report.parameters["strictly_positive_d"] = str(strict)
    return report


def inequality_suite(n_max: int = 60, grid: int = 64, case2_regime: str = "interior") -> VerificationReport:
    """Rectangle bound, case 1, case 2, and g's maximizer for 2 <= n <= n_max.

    case 1 is asserted for m >= n - m. ``case2_regime`` picks where case 2 is
    asserted: "interior" means (n+1)/2 <= m <= n-1, where g peaks inside the
    interval and the bound is actually used; "lower" means 2 <= m <= (n+1)/2.
    Outside its regime each inequality is only tallied.
    """
    if case2_regime not in ("interior", "lower"):
        raise ValueError(f"unknown case2 regime {case2_regime!r}")
    report = VerificationReport(
        "inequality_chain", parameters=_params(n_max=n_max, grid=grid, case2_regime=case2_regime)
    )
    case1_iff = True
    outside = {"case1": 0, "case2": 0}
    with timed(report):
        for n in range(2, n_max + 1):
            for m in range(1, n):
                report.record(rectangle_bound_check(n, m))
                for w in g_argmax_check(n, m, grid):
                    report.record(w)
                c1 = case1_check(n, m)
                if m >= n - m:
                    report.record(c1)
                else:
                    outside["case1"] += c1.holds
                case1_iff &= c1.holds == (m >= n - m)
                c2 = case2_check(n, m)
                in_regime = (2 * m >= n + 1) if case2_regime == "interior" else (2 <= m and 2 * m <= n + 1)
                if in_regime:
                    report.record(c2)
                else:
                    outside["case2"] += c2.holds
    report.parameters["case1_holds_iff_m_ge_n_minus_m"] = str(case1_iff)
    report.parameters["case1_holds_outside_regime"] = str(outside["case1"])
    report.parameters["case2_holds_outside_regime"] = str(outside["case2"])
    return report


def sequence_suite(m_max: int = 200, w_max: int = 200) -> VerificationReport:
    """b(m) decrease with its ratio identity, w's order, and the n = 2m-1 chain."""
    report = VerificationReport("sequences", parameters=_params(m_max=m_max, w_max=w_max))
    with timed(report):
        b = b_monotone_check(m_max)
        report.checks_run += b.checks_run
        report.failures.extend(b.failures)
        for a in range(1, w_max + 1):
            for c in range(1, w_max + 1):
                got = w_compare(a, c)
                want = Ordering((a > c) - (a < c))
                report.record(LemmaWitness.compare("w_order", int(got), int(want), "eq", n=a, m=c))
        for m in range(2, m_max + 1):
            report.record(case_boundary_chain_check(m))
    return report


def fault_suite() -> VerificationReport:
    """A deliberately corrupted check: h_floor(2) against 4/9 + 1/81."""
    report = VerificationReport("injected_fault", parameters={"note": "synthetic failure for harness self-test"})
    report.record(LemmaWitness.compare("injected_fault", h_floor(2), Fraction(4, 9) + Fraction(1, 81), "eq", n=2, m=1))
    return report


def run_battery(n_max: int, self_test_fault: bool = False) -> list[VerificationReport]:
    """Every suite at scale n_max (the oracle and enumeration suites stop at 16)."""
    if n_max < 2:
        raise ValueError(f"n_max must be >= 2, got {n_max}")
    reports = [
        tail_oracle_suite(min(n_max, 16)),
        derivative_suite(min(n_max, 30)),
        sawtooth_suite(n_max),
        minimizer_suite(n_max),
        consistency_suite(n_max),
        certificate_suite(n_max),
        floor_monotone_check(n_max),
        beta_suite(n_max),
        beta_properties_suite(),
        d_suite(n_max),
        inequality_suite(n_max),
        sequence_suite(max(3, n_max), n_max),
    ]
    if self_test_fault:
        reports.append(fault_suite())
    return reports
