import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bellapostol.backend import Q
from bellapostol.errors import NegativeValuation, OrderExceeded, PositiveValuationRequired
from bellapostol.series import (
    QQ, LaurentSeries, egf_coeff, series_exp, series_inv, series_mul, series_pow,
)

import oracles

small_q = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(lambda f: Q(f.numerator, f.denominator))


def series_from(coeffs, valuation=0, order=None):
    return LaurentSeries.from_coefficients([Q(c) for c in coeffs], valuation=valuation, order=order)


def as_fracs(s, lo, hi):
    return [Fraction(int(s[k].numerator), int(s[k].denominator)) for k in range(lo, hi + 1)]


# -- construction ------------------------------------------------------------------------


def test_strips_leading_zeros_into_valuation():
    s = series_from([0, 0, 3, 1], order=5)
    assert s.valuation == 2 and s.coeffs[0] == 3 and s.order == 5


def test_unknown_beyond_order():
    s = series_from([1, 2], order=3)
    assert s[3] == 0
    with pytest.raises(OrderExceeded):
        s.coefficient(4)


def test_exact_series_has_every_coefficient():
    s = series_from([1, -1])
    assert s[100] == 0 and s.order == math.inf


def test_zero_series():
    z = LaurentSeries.zero_series(QQ, 4)
    assert z.is_zero and z[4] == 0


# -- order bookkeeping ---------------------------------------------------------------------


def test_add_order_is_min():
    assert (series_from([1], order=3) + series_from([1], order=5)).order == 3


def test_mul_order_uses_valuations():
    a = series_from([1, 1], valuation=2, order=6)   # v=2, N=6
    b = series_from([1], valuation=1, order=4)      # v=1, N=4
    assert series_mul(a, b).order == min(6 + 1, 4 + 2)


def test_inverse_order_drops_by_twice_valuation():
    s = series_from([1, 1, 1], valuation=1, order=9)
    r = series_inv(s)
    assert r.valuation == -1 and r.order == 7


def test_inverse_of_exact_needs_order():
    with pytest.raises(ValueError):
        series_inv(series_from([1, 1]))
    assert list(series_inv(series_from([1, 1]), order=4).coeffs) == [Q(x) for x in [1, -1, 1, -1, 1]]


def test_inverse_of_zero():
    with pytest.raises(ZeroDivisionError):
        series_inv(LaurentSeries.zero_series(QQ, 5))


def test_exp_requires_positive_valuation():
    with pytest.raises(PositiveValuationRequired):
        series_exp(series_from([1, 1], order=4))


def test_egf_coeff_rejects_poles():
    s = series_inv(series_from([1, 1], valuation=1, order=6))
    with pytest.raises(NegativeValuation):
        egf_coeff(s, 0)


def test_derivative_order():
    d = series_from([1, 2, 3], order=5).derivative()
    assert d.order == 4 and list(d.coeffs[:2]) == [Q(2), Q(6)]


def test_pow_zero_is_exact_one():
    p = series_pow(series_from([2, 1], order=3), 0)
    assert p.order == math.inf and p[0] == 1


# -- values against oracles ----------------------------------------------------------------


def test_bernoulli_numbers_from_inverse():
    n = 14
    em1 = LaurentSeries.exponential(Q(1), n + 1) - 1        # e^t - 1, valuation 1
    gen = series_mul(LaurentSeries.monomial(1), series_inv(em1))   # t / (e^t - 1)
    got = [egf_coeff(gen, k) for k in range(n + 1)]
    assert [Fraction(int(g.numerator), int(g.denominator)) for g in got] == oracles.bernoulli_numbers(n)


def test_bell_numbers_from_exp():
    n = 12
    s = series_exp(LaurentSeries.exponential(Q(1), n) - 1)
    assert [int(egf_coeff(s, k)) for k in range(n + 1)] == oracles.bell_numbers(n)


def test_exp_matches_power_sum():
    rng = random.Random(7)
    for _ in range(20):
        n = rng.randint(1, 9)
        c = [Fraction(0)] + [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)]
        got = series_exp(series_from(c, order=n))
        assert as_fracs(got, 0, n) == oracles.ps_exp_power_sum(c, n)


def test_inverse_matches_linear_solve():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.randint(0, 9)
        c = [Fraction(rng.choice([-3, -1, 1, 2, 5]), rng.randint(1, 3))]
        c += [Fraction(rng.randint(-4, 4), rng.randint(1, 4)) for _ in range(n)]
        got = series_inv(series_from(c, order=n))
        assert as_fracs(got, 0, n) == oracles.ps_inverse_by_solve(c, n)


# -- algebraic laws ------------------------------------------------------------------------------

coeff_lists = st.lists(small_q, min_size=1, max_size=8)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists, coeff_lists)
def test_ring_laws(a, b, c):
    A, B, C = (series_from(x, order=7) for x in (a, b, c))
    assert (A * B).agrees_with(B * A)
    assert ((A * B) * C).agrees_with(A * (B * C))
    assert (A * (B + C)).agrees_with(A * B + A * C)
    assert (A - A).is_zero


@settings(max_examples=60, deadline=None)
@given(coeff_lists, st.integers(min_value=0, max_value=3))
def test_inverse_round_trip(a, v):
    s = series_from(a, valuation=v, order=v + 8)
    if s.is_zero:
        return
    prod = s * s.inverse()
    assert prod.agrees_with(LaurentSeries.constant(Q(1)))


@settings(max_examples=40, deadline=None)
@given(coeff_lists, coeff_lists)
def test_exp_is_a_homomorphism(a, b):
    A = series_from([0] + a, order=8)
    B = series_from([0] + b, order=8)
    assert (A + B).exp().agrees_with(A.exp() * B.exp())


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists)
def test_product_rule(a, b):
    A, B = series_from(a, order=8), series_from(b, order=8)
    assert (A * B).derivative().agrees_with(A.derivative() * B + A * B.derivative())


@settings(max_examples=40, deadline=None)
@given(coeff_lists, st.integers(min_value=0, max_value=4))
def test_pow_matches_repeated_product(a, k):
    s = series_from(a, order=6)
    prod = LaurentSeries.constant(Q(1))
    for _ in range(k):
        prod = prod * s
    assert (s ** k).agrees_with(prod)
