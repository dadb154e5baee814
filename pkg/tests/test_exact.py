import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from feige.exact import binomial, e_bracket, format_rational, parse_rational, rational_pow


@pytest.mark.parametrize("n,k,expected", [(4, 2, 6), (10, 0, 1), (5, 7, 0), (5, -1, 0), (0, 0, 1)])
def test_binomial_examples(n, k, expected):
    assert binomial(n, k) == expected


def test_pascal_identity():
    for n in range(1, 61):
        for k in range(1, n + 1):
            assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


@pytest.mark.parametrize(
    "r,e,expected",
    [(Fraction(2, 3), 2, Fraction(4, 9)), (Fraction(5, 7), 0, Fraction(1)), (Fraction(0), 0, Fraction(1))],
)
def test_rational_pow(r, e, expected):
    assert rational_pow(r, e) == expected


def test_rational_pow_rejects_negative_exponent():
    with pytest.raises(ValueError):
        rational_pow(Fraction(1, 2), -1)


@given(st.fractions(), st.integers(min_value=0, max_value=12))
def test_pow_is_canonical(r, e):
    out = rational_pow(r, e)
    assert out.denominator > 0
    assert math.gcd(out.numerator, out.denominator) == 1


def test_e_bracket_examples():
    b3 = e_bracket(3)
    assert (b3.lower, b3.upper) == (Fraction(8, 3), Fraction(49, 18))
    b2 = e_bracket(2)
    assert (b2.lower, b2.upper) == (Fraction(5, 2), Fraction(11, 4))


def test_e_bracket_width_and_taylor_oracle():
    for t in range(2, 30):
        b = e_bracket(t)
        assert b.upper - b.lower == Fraction(1, math.factorial(t) * t)
        assert b.lower == sum(Fraction(1, math.factorial(k)) for k in range(t + 1))
        assert b.terms == t


def test_e_bracket_nesting():
    for t in range(2, 40):
        a, b = e_bracket(t), e_bracket(t + 1)
        assert a.lower <= b.lower < b.upper <= a.upper


def test_e_bracket_precision_proxy():
    b = e_bracket(20)
    assert b.lower > Fraction("2.718281828")
    assert b.upper < Fraction("2.7182818285")
    assert b.contains(Fraction("2.71828182845904523536"))


def test_e_bracket_rejects_small():
    with pytest.raises(ValueError):
        e_bracket(1)


@pytest.mark.parametrize(
    "text,expected",
    [("3", Fraction(3)), ("5/2", Fraction(5, 2)), ("2.5", Fraction(5, 2)), (" 0.1 ", Fraction(1, 10)), (7, Fraction(7))],
)
def test_parse_rational(text, expected):
    assert parse_rational(text) == expected


@pytest.mark.parametrize("bad", ["", "abc", "1e3", "nan", "inf", "1/0", "3/"])
def test_parse_rational_rejects(bad):
    with pytest.raises(ValueError):
        parse_rational(bad)


def test_parse_rational_refuses_floats():
    with pytest.raises(TypeError):
        parse_rational(0.1)


@given(st.fractions())
def test_format_round_trip(r):
    assert parse_rational(format_rational(r)) == r
