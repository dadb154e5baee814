import math
from fractions import Fraction

import pytest
import sympy as sp

from feige.beta import BetaParams, absorption_identity_check, beta, h_via_beta, incomplete_beta
from feige.minimizer import h_value

F = Fraction


def _sympy_beta(z, a, b):
    t = sp.Symbol("t")
    v = sp.integrate(t ** (a - 1) * (1 - t) ** (b - 1), (t, 0, sp.Rational(z.numerator, z.denominator)))
    return F(int(v.p), int(v.q))


def test_examples():
    assert incomplete_beta(BetaParams(F(1), 1, 1)) == 1
    for z in (F(0), F(1, 3), F(7, 9)):
        assert beta(z, 1, 1) == z
    assert beta(F(3, 5), 3, 2) == F(99, 2500)


@pytest.mark.parametrize("a,b", [(1, 4), (3, 2), (2, 5), (6, 3), (4, 4)])
def test_against_symbolic_integral(a, b):
    for z in (F(1, 5), F(3, 5), F(11, 13)):
        assert beta(z, a, b) == _sympy_beta(z, a, b)


def test_params_validation():
    with pytest.raises(ValueError):
        BetaParams(F(3, 2), 1, 1)
    with pytest.raises(ValueError):
        BetaParams(F(1, 2), 0, 1)


def test_h_via_beta_examples():
    assert h_via_beta(4, 2) == 12 * F(99, 2500) == F(297, 625)
    assert h_via_beta(1, 1) == F(1, 2)
    assert h_via_beta(4, 1) == F(256, 625)


def test_representation_identity():
    for n in range(1, 51):
        for m in range(1, n + 1):
            assert h_via_beta(n, m) == h_value(n, m).value


def test_absorption_identity():
    assert absorption_identity_check(4, 2)
    assert absorption_identity_check(7, 5)
    assert all(absorption_identity_check(n, 1) for n in range(1, 20))
    with pytest.raises(ValueError):
        absorption_identity_check(4, 0)


def test_monotone_in_z():
    zs = [F(j, 17) for j in range(1, 17)]
    for a in range(1, 12):
        for b in range(1, 13 - a):
            vals = [beta(z, a, b) for z in zs]
            assert all(u < v for u, v in zip(vals, vals[1:]))


def test_reflection_and_completeness():
    for a in range(1, 12):
        for b in range(1, 13 - a):
            full = beta(1, a, b)
            for z in (F(1, 7), F(1, 2), F(5, 6)):
                assert beta(z, a, b) + beta(1 - z, b, a) == full
    for a in range(1, 14):
        for b in range(1, 15 - a):
            assert beta(1, a, b) == F(math.factorial(a - 1) * math.factorial(b - 1), math.factorial(a + b - 1))
