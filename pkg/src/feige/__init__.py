"""Exact verification of P(X_1 + ... + X_n < n + 1) >= 1/e for i.i.d. two-point laws."""

from .beta import BetaParams, absorption_identity_check, beta, h_via_beta, incomplete_beta
from .exact import EBracket, Rational, binomial, e_bracket, format_rational, parse_rational, rational_pow
from .minimizer import (
    BreakpointValue,
    MinResult,
    certify_above_1_over_e,
    floor_monotone_check,
    global_min,
    h_floor,
    h_value,
)
from .montecarlo import McConfig, McEstimate, mc_vs_exact_battery, simulate
from .report import LemmaWitness, SweepRecord, VerificationReport, parse_report, serialize_report, sweep
from .tail import (
    HeterogeneousInstance,
    IidTwoPointInstance,
    TailSpec,
    breakpoints,
    brute_force_iid,
    exact_heterogeneous,
    f_of_p,
    partial_tail,
    tail_cutoff,
    tail_derivative,
)

__version__ = "0.1.0"
