import itertools
from fractions import Fraction

import pytest

from bellapostol.backend import Q
from bellapostol.errors import ParameterError, PoleAtZero
from bellapostol.families import (
    FamilyKind, FamilySpec, apostol_base, apostol_bernoulli, apostol_bernoulli_direct,
    apostol_euler, apostol_euler_direct, apostol_genocchi, apostol_genocchi_direct,
    apostol_type_poly, bell_apostol_egf, bell_apostol_number, bell_apostol_poly,
    bell_apostol_table, bell_bivariate, bell_classical, bell_number, build_table,
    classical_order_family, clear_caches,
)
from bellapostol.poly import X1, X2, BiPoly
from bellapostol.series import egf_coeff

import oracles

F = oracles.as_fraction_dict


def test_bell_numbers():
    assert [bell_number(n) for n in range(11)] == [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]
    assert [bell_number(n) for n in range(16)] == oracles.bell_numbers(15)


def test_bell_polynomials_match_oracle():
    for n in range(11):
        assert F(bell_classical(n)) == oracles.touchard(n)
        assert F(bell_bivariate(n)) == oracles.bell_bivariate(n)


def test_small_rows():
    assert bell_apostol_poly(2, 0, 1, 0, 0) == (X1 + X2) ** 2 + X2
    assert bell_classical(3) == X2 ** 3 + 3 * X2 ** 2 + X2
    # alpha=1, lambda=1, eta=1, delta=0: the Euler-type row 1
    assert bell_apostol_poly(1, 1, 1, 1, 0) == X1 + X2 - Q(1, 2)
    # delta=1 makes row 0 vanish
    assert bell_apostol_poly(0, 1, 1, 1, 1) == 0
    assert bell_apostol_poly(2, 1, 1, 1, 1) == 2 * X1 + 2 * X2 - 1


@pytest.mark.parametrize("alpha, lam, eta, delta", [
    (1, Fraction(1), 0, 0), (2, Fraction(2), 1, 1), (3, Fraction(-1, 2), -1, 2),
    (1, Fraction(3), 2, 0), (2, Fraction(1), 0, 1), (0, Fraction(5), 3, 2),
])
def test_bell_apostol_matches_oracle(alpha, lam, eta, delta):
    row = bell_apostol_table(alpha, Q(lam.numerator, lam.denominator), eta, delta, 8)
    for n in range(9):
        assert F(row[n]) == oracles.bell_apostol(n, alpha, lam, eta, delta)


def test_classical_bernoulli_euler_genocchi():
    bern = oracles.bernoulli_numbers(12)
    gen = oracles.genocchi_numbers(12)
    for n in range(13):
        assert F(classical_order_family("bernoulli", n, 1)) == oracles.bernoulli_poly(n)
        assert F(classical_order_family("euler", n, 1)) == oracles.euler_poly(n)
        assert classical_order_family("bernoulli", n, 1).eval(0, 0) == Q(bern[n].numerator, bern[n].denominator)
        assert classical_order_family("genocchi", n, 1).eval(0, 0) == Q(gen[n].numerator, gen[n].denominator)


def test_frozen_classical_values():
    assert apostol_bernoulli(2, 1, 1) == X1 ** 2 - X1 + Q(1, 6)
    assert apostol_euler(1, 1, 1) == X1 - Q(1, 2)
    assert apostol_euler(3, 1, 1) == X1 ** 3 - Q(3, 2) * X1 ** 2 + Q(1, 4)
    assert apostol_genocchi(2, 1, 1).eval(0, 0) == -1


def test_frozen_apostol_values():
    # lambda = 2: B_1 = 1/(lam-1), B_2 = 2x/(lam-1) - 2 lam/(lam-1)^2
    assert apostol_bernoulli(0, 1, 2) == 0
    assert apostol_bernoulli(1, 1, 2) == 1
    assert apostol_bernoulli(2, 1, 2) == 2 * X1 - 4
    # E_0 = 2/(lam+1), E_1 = 2x/(lam+1) - 2 lam/(lam+1)^2
    assert apostol_euler(0, 1, 2) == Q(2, 3)
    assert apostol_euler(1, 1, 2) == X1 * Q(2, 3) - Q(4, 9)


@pytest.mark.parametrize("alpha, lam", list(itertools.product([0, 1, 2, 3], [Q(1), Q(2), Q(-1, 2), Q(3)])))
def test_reductions_match_direct_forms(alpha, lam):
    for n in range(10):
        assert apostol_bernoulli(n, alpha, lam) == apostol_bernoulli_direct(n, alpha, lam)
        assert apostol_euler(n, alpha, lam) == apostol_euler_direct(n, alpha, lam)
        assert apostol_genocchi(n, alpha, lam) == apostol_genocchi_direct(n, alpha, lam)


def test_remarks():
    for n in range(13):
        assert bell_apostol_poly(n, 0, Q(3), 2, 1) == bell_bivariate(n)
        assert bell_apostol_poly(n, 2, Q(-1, 2), 1, 1).substitute(x2=0) == apostol_type_poly(n, 2, Q(-1, 2), 1, 1)


def test_numbers_are_values_at_zero_one():
    for n in range(8):
        assert bell_apostol_number(n, 2, Q(2), 1, 1) == bell_apostol_poly(n, 2, Q(2), 1, 1).eval(0, 1)
    assert bell_apostol_number(0, 1, 3, 1, 0) == Q(1, 2)


def test_singular_boundary():
    with pytest.raises(PoleAtZero):
        bell_apostol_poly(2, 1, -1, 0, 0)
    with pytest.raises(PoleAtZero):
        apostol_base(2, Q(-1), 0, 0, 5)
    with pytest.raises(PoleAtZero):
        apostol_euler(1, 1, -1)
    # t^delta cancels the simple zero of (-e^t + 1)
    assert apostol_base(1, Q(-1), 0, 1, 4)[0] == -1
    assert bell_apostol_poly(0, 1, -1, 0, 1) == -1
    # alpha = 0 never has a pole
    assert bell_apostol_poly(1, 0, -1, 0, 0) == X1 + X2


def test_apostol_base_lambda_minus_one_values():
    b = apostol_base(1, Q(-1), 0, 1, 4)
    assert [b[k] for k in range(5)] == [Q(-1), Q(1, 2), Q(-1, 12), Q(0), Q(1, 720)]


def test_offset_egf_is_a_translate():
    egf = bell_apostol_egf(2, Q(2), 1, 1, 6, x1_offset=Q(1, 2), x2_offset=Q(-3))
    table = bell_apostol_table(2, Q(2), 1, 1, 6)
    for n in range(7):
        assert egf_coeff(egf, n) == table[n].shift_x1(Q(1, 2)).shift_x2(Q(-3))


def test_spec_validation():
    with pytest.raises(ParameterError):
        FamilySpec(FamilyKind.BELL_NUMBER, lam=Q(2))
    with pytest.raises(ParameterError):
        FamilySpec(FamilyKind.BELL_APOSTOL, alpha=-1)
    with pytest.raises(ParameterError):
        FamilySpec(FamilyKind.BELL_APOSTOL, delta=-2)
    with pytest.raises(PoleAtZero):
        FamilySpec(FamilyKind.APOSTOL_TYPE, alpha=1, lam=Q(-1), delta=0)
    with pytest.raises(ParameterError):
        build_table(FamilySpec(FamilyKind.BELL_NUMBER), -1)
    s = FamilySpec.for_kind(FamilyKind.EULER, alpha=2, lam=Q(5), eta=3)
    assert (s.lam, s.eta) == (1, 0)
    assert s.to_json() == {"family": "euler", "alpha": 2, "lambda": "1", "eta": 0, "delta": 0}


def test_table_rows_stable_under_cache_growth():
    clear_caches()
    small = build_table(FamilySpec(FamilyKind.BELL_APOSTOL, alpha=2, lam=Q(3), eta=1, delta=1), 3)
    big = build_table(FamilySpec(FamilyKind.BELL_APOSTOL, alpha=2, lam=Q(3), eta=1, delta=1), 9)
    assert big.rows[:4] == small.rows
    assert len(big.values()) == 10


def test_every_kind_builds():
    for kind in FamilyKind:
        rows = build_table(FamilySpec(kind), 4).values()
        assert len(rows) == 5 and all(isinstance(r, BiPoly) for r in rows)
