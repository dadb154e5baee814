"""Exact binomial tail objects for sums of two-point variables.

Each variable takes the value ``x = 1/p`` with probability ``p`` and 0
otherwise, so its mean is exactly 1. ``f_of_p`` is ``P(S_n < n + 1)`` for n
i.i.d. copies; as a function of p it is a sawtooth, decreasing on every
interval ``((m-1)/(n+1), m/(n+1)]`` and jumping up just after each right
endpoint.

Sums over ``p = a/b`` are accumulated as integers over the common
denominator ``b**n`` and reduced once at the end.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exact import binomial, parse_rational

#: largest instance ``exact_heterogeneous`` accepts
ENUMERATION_CAP = 25


class InstanceTooLarge(ValueError):
    pass


def _check_p(p: Fraction) -> Fraction:
    p = Fraction(p)
    if not 0 < p < 1:
        raise ValueError(f"p must lie in (0, 1), got {p}")
    return p


@dataclass(frozen=True)
class IidTwoPointInstance:
    """n i.i.d. variables equal to 1/p with probability p, else 0."""

    n: int
    p: Fraction

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        object.__setattr__(self, "p", _check_p(self.p))

    @property
    def x(self) -> Fraction:
        return 1 / self.p

    @classmethod
    def from_support(cls, n: int, x: Fraction) -> IidTwoPointInstance:
        return cls(n, 1 / Fraction(x))


@dataclass(frozen=True)
class TailSpec:
    n: int
    m: int

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        if not 0 <= self.m <= self.n:
            raise ValueError(f"m must lie in [0, {self.n}], got {self.m}")


@dataclass(frozen=True)
class HeterogeneousInstance:
    """Independent two-point laws with support points ``xs`` (each >= 1)."""

    xs: tuple[Fraction, ...]

    def __post_init__(self):
        xs = tuple(Fraction(x) for x in self.xs)
        if not xs:
            raise ValueError("instance needs at least one variable")
        for i, x in enumerate(xs):
            if x < 1:
                raise ValueError(f"x[{i}] = {x} is below 1")
        object.__setattr__(self, "xs", xs)

    @classmethod
    def parse(cls, values: Sequence[str | int]) -> HeterogeneousInstance:
        return cls(tuple(parse_rational(v) for v in values))

    @property
    def n(self) -> int:
        return len(self.xs)

    @property
    def probabilities(self) -> tuple[Fraction, ...]:
        return tuple(1 / x for x in self.xs)


def tail_cutoff(n: int, p: Fraction) -> int:
    """Largest k with k/p < n + 1, i.e. ceil((n+1)p) - 1."""
    p = _check_p(p)
    return math.ceil((n + 1) * p) - 1


def _binomial_cdf(n: int, m: int, p: Fraction) -> Fraction:
    a, b = p.numerator, p.denominator
    c = b - a
    total = 0
    for k in range(m + 1):
        total += math.comb(n, k) * a**k * c ** (n - k)
    return Fraction(total, b**n)


def partial_tail(spec: TailSpec, p: Fraction) -> Fraction:
    """F_{n,m}(p) = sum_{k<=m} C(n,k) p^k (1-p)^(n-k)."""
    return _binomial_cdf(spec.n, spec.m, _check_p(p))


def f_of_p(inst: IidTwoPointInstance) -> Fraction:
    """Exact P(S_n < n + 1) for the i.i.d. instance."""
    return _binomial_cdf(inst.n, tail_cutoff(inst.n, inst.p), inst.p)


def tail_derivative(spec: TailSpec, p: Fraction) -> Fraction:
    """d/dp F_{n,m}(p), summed term by term.

    Each term is C(n,k) p^(k-1) (1-p)^(n-k-1) (k - n p); the sum is carried
    over the common denominator b^(n-1) for p = a/b.
    """
    p = _check_p(p)
    n, m = spec.n, spec.m
    a, b = p.numerator, p.denominator
    c = b - a
    total = 0
    for k in range(m + 1):
        up = k * a ** (k - 1) * c ** (n - k) if k > 0 else 0
        down = (n - k) * a**k * c ** (n - k - 1) if k < n else 0
        total += math.comb(n, k) * (up - down)
    return Fraction(total, b ** (n - 1))


def tail_derivative_closed(spec: TailSpec, p: Fraction) -> Fraction:
    """Telescoped form -n C(n-1, m) p^m (1-p)^(n-1-m); zero when m = n."""
    p = _check_p(p)
    n, m = spec.n, spec.m
    if m == n:
        return Fraction(0)
    return -n * binomial(n - 1, m) * p**m * (1 - p) ** (n - 1 - m)


def breakpoints(n: int) -> list[Fraction]:
    """Jump locations m/(n+1), m = 1..n, of f in (0, 1)."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return [Fraction(m, n + 1) for m in range(1, n + 1)]


def is_breakpoint(n: int, p: Fraction) -> bool:
    return ((n + 1) * Fraction(p)).denominator == 1


def brute_force_iid(inst: IidTwoPointInstance) -> Fraction:
    """Sum the binomial pmf over outcomes whose total k * x is below n + 1.

    Tests the event directly, with no ceiling rewrite, as a check on f_of_p.
    """
    n, p = inst.n, inst.p
    x = 1 / p
    total = Fraction(0)
    for k in range(n + 1):
        if k * x < n + 1:
            total += binomial(n, k) * p**k * (1 - p) ** (n - k)
    return total


def exact_heterogeneous(inst: HeterogeneousInstance) -> Fraction:
    """Exact P(X_1 + ... + X_n < n + 1) for independent two-point variables.

    Equivalent to summing over all 2^n success sets, but outcomes are merged
    by their running total, and any total already >= n + 1 is folded into a
    single absorbing state (the variables are non-negative). Only the
    distribution of the sub-threshold totals is stored.
    """
    n = inst.n
    if n > ENUMERATION_CAP:
        raise InstanceTooLarge(
            f"exact enumeration is capped at {ENUMERATION_CAP} variables, got {n}"
        )
    limit = n + 1
    dist: dict[Fraction, Fraction] = {Fraction(0): Fraction(1)}
    for x in inst.xs:
        px = 1 / x
        nx = 1 - px
        nxt: dict[Fraction, Fraction] = {}
        for s, w in dist.items():
            if nx:
                nxt[s] = nxt.get(s, 0) + w * nx
            t = s + x
            if t < limit:
                nxt[t] = nxt.get(t, 0) + w * px
        dist = nxt
    return sum(dist.values(), Fraction(0))
