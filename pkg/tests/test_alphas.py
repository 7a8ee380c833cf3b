from fractions import Fraction
from math import factorial

import pytest

from supersingular.alphas import (
    Unreduced,
    alpha_closed,
    alpha_closed_boundary,
    alpha_recurrence,
    ell_from_alphas,
    multinomial_mod,
    special_curve_check,
    step3_congruence_check,
    step3_range,
    weighted_pairs,
)
from supersingular.criteria import c_p_sum, ell_p
from supersingular.divpoly import symbolic_table
from supersingular.poly import ABPoly
from supersingular.ring import ModInt, find_irreducible, inv, primes_between

PRIMES_TO_31 = primes_between(5, 31)


def test_multinomial_examples():
    assert multinomial_mod(2, (0, 1, 1), 25) == 2
    assert multinomial_mod(6, (6, 0, 0), 49) == 1
    assert multinomial_mod(3, (2, 0, 1), 49) == 3
    with pytest.raises(Unreduced):
        multinomial_mod(7, (3, 2, 2), 49)
    with pytest.raises(ValueError):
        multinomial_mod(3, (1, 1, 0), 49)


def test_recurrence_examples():
    t7 = alpha_recurrence(7)
    assert t7.inner[(0, 0)] == 7
    assert t7.inner[(1, 0)] == 14 == (-7 * inv(ModInt(10, 49))).residue
    assert alpha_recurrence(5).boundary == {(1, 0): ModInt(2, 5)}
    assert t7.boundary == {(0, 1): ModInt(3, 7)}
    assert t7.get(-1, 0) == 0
    with pytest.raises(ValueError):
        alpha_recurrence(3)


def test_closed_examples():
    assert alpha_closed(0, 0, 11) == 11
    assert alpha_closed(1, 0, 7) == ModInt(14, 49)
    assert alpha_closed(0, 1, 11) == -11 * inv(ModInt(14, 121))
    assert alpha_closed(0, 1, 11) == alpha_recurrence(11).inner[(0, 1)]
    assert alpha_closed_boundary(1, 0, 5) == ModInt(2, 5)
    assert alpha_closed_boundary(0, 1, 7) == ModInt(3, 7)
    with pytest.raises(ValueError):
        alpha_closed(1, 0, 5)


@pytest.mark.parametrize("p", PRIMES_TO_31)
def test_recurrence_matches_closed_forms(p):
    t = alpha_recurrence(p)
    for (r, s), a in t.inner.items():
        assert a == alpha_closed(r, s, p)
        assert a.residue % p == 0
    for (r, s), a in t.boundary.items():
        assert a == alpha_closed_boundary(r, s, p)
    q = (p - 1) // 2
    assert set(t.inner) == {rs for d in range(q) for rs in weighted_pairs(d)}
    assert set(t.boundary) == set(weighted_pairs(q))


def _rational_closed(r, s, p):
    n = 2 * r + 2 * s
    multi = Fraction(factorial(n), factorial(r + s) * factorial(r) * factorial(s))
    return Fraction(-1, 4) ** (r + s) * Fraction(p, 4 * r + 6 * s + 1) * multi


@pytest.mark.parametrize("p", [7, 11, 13, 29])
def test_closed_form_against_rationals(p):
    m = p * p
    for (r, s) in alpha_recurrence(p).inner:
        v = _rational_closed(r, s, p)
        assert alpha_closed(r, s, p) == ModInt(v.numerator, m) * inv(ModInt(v.denominator, m))


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_exact_integer_anchor(p):
    f = symbolic_table(p, targets=(p,))[p]
    top, q = (p * p - 1) // 2, (p - 1) // 2
    for d in range(q):
        for r, s in weighted_pairs(d):
            assert ModInt(f.coeff(top - d).coeff(r, s), p * p) == alpha_closed(r, s, p)
    for r, s in weighted_pairs(q):
        assert ModInt(f.coeff(top - q).coeff(r, s), p) == alpha_closed_boundary(r, s, p)


def test_ell_from_alphas_examples():
    assert ell_from_alphas(5) == ABPoly({(1, 0): 2}, 5)
    assert ell_from_alphas(7) == ABPoly({(0, 1): 3}, 7)
    assert ell_from_alphas(3) == ABPoly({}, 3)
    assert set(ell_from_alphas(13).terms) <= {(3, 0), (0, 2)}


@pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
def test_three_way_identity(p):
    assert ell_from_alphas(p) == ell_p(None, None, p, p) == c_p_sum(None, None, p, p)


def test_step3_examples():
    assert list(step3_range(7)) == [1]
    assert list(step3_range(5)) == [1]
    assert step3_congruence_check(5) and step3_congruence_check(7)


def test_step3_sweep_against_factorials():
    for p in primes_between(5, 199):
        assert step3_congruence_check(p)
        q = (p - 1) // 2
        for k in step3_range(p):
            lhs = factorial(q) // factorial(q - k)
            rhs = pow(-4, -k, p) * factorial(2 * k) // factorial(k)
            assert (lhs - rhs) % p == 0


def test_special_curve_examples():
    rows = special_curve_check(4)
    assert rows == [(1, 5, True), (3, 13, True), (4, 17, True)]


def test_special_curve_sweep():
    rows = special_curve_check(10**4)
    assert rows and all(ok for _, _, ok in rows)
    for k, p, _ in rows[:200]:
        # second route: k = -1/4 mod p, so k^k = (-4)^(-k) and Euler gives (-1)^k = 4^k
        assert pow(-4, -k, p) == pow(k, k, p) == 1
        assert (-1) ** k % p == pow(4, k, p)


@pytest.mark.parametrize("k", [1, 3, 4, 7, 9, 10])
def test_special_curve_meets_the_theorem(k):
    # on y^2 = x^3 + x over F_p, p = 4k + 1, ell_p is the central binomial coefficient
    p = 4 * k + 1
    F = find_irreducible(p, 1)
    central = factorial(2 * k) // factorial(k) ** 2
    assert ell_p(F(1), F(0), p) == c_p_sum(F(1), F(0), p) == F(central)
