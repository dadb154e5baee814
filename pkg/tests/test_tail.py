from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import enumerate_outcomes

from feige.tail import (
    ENUMERATION_CAP,
    HeterogeneousInstance,
    IidTwoPointInstance,
    InstanceTooLarge,
    TailSpec,
    breakpoints,
    brute_force_iid,
    exact_heterogeneous,
    f_of_p,
    partial_tail,
    tail_cutoff,
    tail_derivative,
    tail_derivative_closed,
)

F = Fraction


@pytest.mark.parametrize("n,p,expected", [(10, F(1, 11), 0), (1, F(3, 4), 1), (10, F(1, 10), 1)])
def test_tail_cutoff(n, p, expected):
    assert tail_cutoff(n, p) == expected


@pytest.mark.parametrize("p", [F(0), F(1), F(-1, 2), F(3, 2)])
def test_tail_cutoff_rejects(p):
    with pytest.raises(ValueError):
        tail_cutoff(3, p)


def test_partial_tail_examples():
    assert partial_tail(TailSpec(2, 2), F(1, 3)) == 1
    # oracle: 2^4 outcome walk; k <= 1 successes of x = 5/2 sum to at most 5/2 < 5
    assert partial_tail(TailSpec(4, 1), F(2, 5)) == F(297, 625) == enumerate_outcomes([F(5, 2)] * 4)
    for p in (F(1, 7), F(1, 2), F(9, 10)):
        assert partial_tail(TailSpec(1, 0), p) == 1 - p


def test_tailspec_rejects_m_out_of_range():
    with pytest.raises(ValueError):
        TailSpec(3, 4)
    with pytest.raises(ValueError):
        TailSpec(3, -1)


def test_f_of_p_examples():
    assert f_of_p(IidTwoPointInstance(1, F(2, 3))) == 1
    assert f_of_p(IidTwoPointInstance(4, F(2, 5))) == F(297, 625)
    assert f_of_p(IidTwoPointInstance(10, F(1, 11))) == F(10**10, 11**10)


def test_instance_invariants():
    inst = IidTwoPointInstance.from_support(3, F(5, 2))
    assert inst.p == F(2, 5) and inst.x * inst.p == 1
    with pytest.raises(ValueError):
        IidTwoPointInstance(3, F(1))
    with pytest.raises(ValueError):
        IidTwoPointInstance(0, F(1, 2))


def _sympy_derivative(n, m, p):
    s = sp.Symbol("s")
    F_nm = sum(sp.binomial(n, k) * s**k * (1 - s) ** (n - k) for k in range(m + 1))
    v = sp.diff(F_nm, s).subs(s, sp.Rational(p.numerator, p.denominator))
    return F(int(v.p), int(v.q))


def test_tail_derivative_examples():
    assert tail_derivative(TailSpec(2, 0), F(1, 2)) == -1
    assert tail_derivative(TailSpec(2, 1), F(1, 3)) == F(-2, 3)
    assert tail_derivative(TailSpec(3, 3), F(1, 4)) == 0


@pytest.mark.parametrize("n", [1, 2, 5, 9])
def test_tail_derivative_against_symbolic(n):
    for m in range(n + 1):
        for p in (F(1, 7), F(2, 3), F(5, 8)):
            assert tail_derivative(TailSpec(n, m), p) == _sympy_derivative(n, m, p)


def test_derivative_closed_form_and_sign():
    for n in range(1, 31):
        for m in range(n + 1):
            for p in (F(1, 7), F(1, 3), F(1, 2), F(5, 8)):
                d = tail_derivative(TailSpec(n, m), p)
                assert d == tail_derivative_closed(TailSpec(n, m), p)
                assert (d < 0) if m < n else (d == 0)


def test_breakpoints():
    assert breakpoints(1) == [F(1, 2)]
    assert breakpoints(4) == [F(1, 5), F(2, 5), F(3, 5), F(4, 5)]
    bp = breakpoints(10)
    assert len(bp) == 10 and bp[0] == F(1, 11) and bp[-1] == F(10, 11)


def test_brute_force_examples():
    assert brute_force_iid(IidTwoPointInstance(1, F(2, 3))) == 1
    assert brute_force_iid(IidTwoPointInstance(4, F(2, 5))) == F(297, 625)
    assert brute_force_iid(IidTwoPointInstance(2, F(1, 2))) == F(3, 4)


def test_oracle_equality_grid():
    for n in range(1, 17):
        pts = set(breakpoints(n)) | {F(j, 64) for j in range(1, 64, 2)}
        for p in pts:
            inst = IidTwoPointInstance(n, p)
            assert f_of_p(inst) == brute_force_iid(inst)


def test_exact_heterogeneous_examples():
    assert exact_heterogeneous(HeterogeneousInstance.parse(["2", "2"])) == F(3, 4)
    assert exact_heterogeneous(HeterogeneousInstance.parse(["3", "3", "3"])) == F(20, 27)
    for x in ("1", "3/2", "1.99"):
        assert exact_heterogeneous(HeterogeneousInstance.parse([x])) == 1
    assert exact_heterogeneous(HeterogeneousInstance.parse(["20"])) == F(19, 20)


def test_exact_heterogeneous_cap():
    exact_heterogeneous(HeterogeneousInstance((F(30),) * ENUMERATION_CAP))
    with pytest.raises(InstanceTooLarge):
        exact_heterogeneous(HeterogeneousInstance((F(2),) * (ENUMERATION_CAP + 1)))


def test_heterogeneous_rejects_below_one():
    with pytest.raises(ValueError):
        HeterogeneousInstance((F(1, 2),))
    with pytest.raises(ValueError):
        HeterogeneousInstance(())


def test_replicated_matches_f():
    for n in range(1, 17):
        for p in [F(m, n + 1) for m in range(1, n + 1)] + [F(1, 3), F(17, 64)]:
            assert exact_heterogeneous(HeterogeneousInstance((1 / p,) * n)) == f_of_p(IidTwoPointInstance(n, p))


support = st.fractions(min_value=1, max_value=20, max_denominator=12)


@settings(max_examples=150, deadline=None)
@given(xs=st.lists(support, min_size=1, max_size=9))
def test_enumeration_matches_subset_walk(xs):
    assert exact_heterogeneous(HeterogeneousInstance(tuple(xs))) == enumerate_outcomes(xs)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 25), st.fractions(min_value=0, max_value=1, max_denominator=500))
def test_f_range(n, p):
    if not 0 < p < 1:
        return
    f = f_of_p(IidTwoPointInstance(n, p))
    assert 0 < f <= 1
    if p > F(n, n + 1):
        assert f == 1


def test_within_interval_strict_decrease():
    for n in range(1, 41):
        for m in range(1, n + 1):
            pts = [(m - 1 + F(j, 9)) / (n + 1) for j in range(1, 9)]
            vals = [f_of_p(IidTwoPointInstance(n, p)) for p in pts]
            assert all(a > b for a, b in zip(vals, vals[1:])), (n, m)


def test_left_continuity_and_jump():
    for n in range(1, 41):
        for m in range(1, n + 1):
            bp = F(m, n + 1)
            at = f_of_p(IidTwoPointInstance(n, bp))
            assert at == partial_tail(TailSpec(n, m - 1), bp)
            assert f_of_p(IidTwoPointInstance(n, bp + F(1, 8 * (n + 1)))) > at
