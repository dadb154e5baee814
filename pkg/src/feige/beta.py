"""Incomplete beta integral at integer parameters, evaluated exactly.

B(z; a, b) = int_0^z t^(a-1) (1-t)^(b-1) dt, unnormalized. Expanding
(1-t)^(b-1) binomially gives a polynomial in z, so the value is rational
whenever z is.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import binomial


@dataclass(frozen=True)
class BetaParams:
    z: Fraction
    a: int
    b: int

    def __post_init__(self):
        z = Fraction(self.z)
        if not 0 <= z <= 1:
            raise ValueError(f"z must lie in [0, 1], got {z}")
        if self.a < 1 or self.b < 1:
            raise ValueError(f"a and b must be positive integers, got a={self.a}, b={self.b}")
        object.__setattr__(self, "z", z)


def incomplete_beta(params: BetaParams) -> Fraction:
    z, a, b = params.z, params.a, params.b
    total = Fraction(0)
    zp = z**a
    for j in range(b):
        term = binomial(b - 1, j) * zp / (a + j)
        total += -term if j % 2 else term
        zp *= z
    return total


def beta(z, a: int, b: int) -> Fraction:
    """Shorthand for ``incomplete_beta(BetaParams(z, a, b))``."""
    return incomplete_beta(BetaParams(z, a, b))


def h_via_beta(n: int, m: int) -> Fraction:
    """h(n, m) written as (n-m+1) C(n, m-1) B(1 - m/(n+1); n-m+1, m)."""
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in [1, {n}], got {m}")
    p = Fraction(m, n + 1)
    return (n - m + 1) * binomial(n, m - 1) * beta(1 - p, n - m + 1, m)


def absorption_identity_check(n: int, m: int) -> bool:
    """(n-m+1) C(n, m-1) == m C(n, m)."""
    if not 1 <= m <= n:
        raise ValueError(f"m must lie in [1, {n}], got {m}")
    return (n - m + 1) * binomial(n, m - 1) == m * binomial(n, m)
