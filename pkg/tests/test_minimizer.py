import math
import random
from fractions import Fraction

import pytest

from feige.battery import random_rationals
from feige.minimizer import (
    certify_above_1_over_e,
    certify_with_retry,
    floor_monotone_check,
    global_min,
    h_floor,
    h_unnormalized,
    h_value,
)
from feige.tail import IidTwoPointInstance, f_of_p

F = Fraction


def test_h_value_examples():
    assert h_value(4, 1).unnormalized == 256 and h_value(4, 1).value == F(256, 625)
    # oracle: 3^4 + 4*2*3^3
    assert h_value(4, 2).unnormalized == 81 + 216 == 297
    assert h_value(1, 1).value == F(1, 2)
    assert [h_unnormalized(4, m) for m in range(1, 5)] == [256, 297, 328, 369]


def test_h_value_rejects():
    with pytest.raises(ValueError):
        h_value(4, 0)
    with pytest.raises(ValueError):
        h_value(4, 5)


def test_h_floor_examples():
    assert h_floor(1) == F(1, 2)
    assert h_floor(2) == F(4, 9)
    assert h_floor(10) == F(10000000000, 25937424601)
    assert abs(float(h_floor(10)) - 0.385543) < 1e-6
    for n in range(1, 40):
        assert h_floor(n) == h_value(n, 1).value


def test_global_min_examples():
    r = global_min(4)
    assert (r.argmin_p, r.min_value) == (F(1, 5), F(256, 625))
    r = global_min(1)
    assert (r.argmin_p, r.min_value) == (F(1, 2), F(1, 2))
    r = global_min(10)
    assert r.min_value == F(10, 11) ** 10 and r.certified_above_1_over_e and r.e_terms_used == 25


def test_certify_examples():
    assert certify_above_1_over_e(10, 20)
    assert certify_above_1_over_e(1, 3)
    assert certify_above_1_over_e(1000, 20)


def test_certify_inconclusive_then_retry():
    # lower bound at 2 terms is 5/2, and (7/6)^6 ~ 2.52 exceeds it
    assert certify_above_1_over_e(5, 2)
    assert not certify_above_1_over_e(6, 2)
    ok, terms = certify_with_retry(6, 2)
    assert ok and terms == 4
    # (1+1/n)^n is within 1.4e-5 of e here; 25 terms are still enough
    assert certify_with_retry(10**5, 25) == (True, 25)


def test_floor_monotone_examples():
    assert 1 * 9 > 2**3 and 4 * 64 > 3**5
    rep = floor_monotone_check(100)
    assert rep.passed and rep.checks_run == 99


def test_breakpoint_optimality_small():
    for n in range(1, 31):
        res = global_min(n)
        rng = random.Random(n)
        for p in random_rationals(rng, 50):
            assert res.min_value <= f_of_p(IidTwoPointInstance(n, p))


def test_consistency_with_f():
    for n in range(1, 61):
        for m in range(1, n + 1):
            bv = h_value(n, m)
            assert bv.value == f_of_p(IidTwoPointInstance(n, bv.p_star))
            assert 0 < bv.value <= 1


def test_h_unnormalized_matches_direct_sum():
    for n in range(1, 45):
        for m in range(1, n + 1):
            direct = sum(math.comb(n, k) * m**k * (n + 1 - m) ** (n - k) for k in range(m))
            assert h_unnormalized(n, m) == direct
