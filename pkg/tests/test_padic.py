from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from padic_bruhat.errors import DenominatorZero, DivisionByZero, InsufficientPrecision, ZeroArgument
from padic_bruhat.padic import (
    PAdic,
    padic_add,
    padic_from_rational,
    padic_inv,
    padic_mul,
    padic_neg,
    unit_residue,
    valuation_at_least,
)

PRIMES = st.sampled_from([2, 3, 5, 7])
nonzero_int = st.integers(-10**6, 10**6).filter(bool)
rationals = st.builds(Fraction, nonzero_int, st.integers(1, 10**6))


def agrees(x: PAdic, q: Fraction) -> bool:
    """x and q agree modulo p^absprec(x)."""
    diff = x.to_fraction() - q
    if diff == 0:
        return True
    p = x.p
    num, den = diff.numerator, diff.denominator
    v = 0
    while num % p == 0:
        num //= p
        v += 1
    while den % p == 0:
        den //= p
        v -= 1
    return v >= x.absprec


# -- worked examples -----------------------------------------------------------


def test_from_rational_nine_halves():
    x = padic_from_rational(9, 2, 3, 4)
    assert (x.val, x.unit, x.prec) == (2, 41, 4)
    assert x.digits() == [2, 1, 1, 1]
    assert 2 * 41 % 3**4 == 1


def test_from_rational_zero_and_one():
    z = padic_from_rational(0, 1, 5, 8)
    assert z.is_zero() and z.absprec == 8
    one = padic_from_rational(1, 1, 3, 4)
    assert (one.val, one.unit) == (0, 1)


def test_from_rational_rejects_zero_denominator():
    with pytest.raises(DenominatorZero):
        padic_from_rational(1, 0, 3, 4)


def test_add_halves():
    h = padic_from_rational(1, 2, 3, 4)
    s = padic_add(h, h)
    assert (s.val, s.unit) == (0, 1)


def test_mul_three_and_third():
    a = padic_from_rational(3, 1, 3, 4)
    b = padic_from_rational(1, 3, 3, 4)
    c = padic_mul(a, b)
    assert (c.val, c.unit) == (0, 1)


def test_cancellation_gives_zero_with_absolute_precision():
    x = padic_from_rational(9, 2, 3, 4)
    z = padic_add(x, padic_neg(x))
    assert z.is_zero()
    assert z.absprec == x.val + x.prec
    with pytest.raises(InsufficientPrecision):
        z.valuation()


def test_inverse_of_zero():
    with pytest.raises(DivisionByZero):
        padic_inv(PAdic.zero(3, 5))


def test_valuation_at_least_examples():
    assert valuation_at_least(padic_from_rational(9, 2, 3, 8), 2)
    assert not valuation_at_least(padic_from_rational(1, 2, 3, 8), 1)
    with pytest.raises(InsufficientPrecision):
        valuation_at_least(PAdic.zero(3, 4), 6)
    # decidable at the boundary
    assert valuation_at_least(PAdic.zero(3, 4), 4)


def test_unit_residue_examples():
    assert unit_residue(padic_from_rational(1, 2, 3, 8)) == 2
    assert unit_residue(padic_from_rational(1, 1, 3, 8)) == 1
    assert unit_residue(padic_from_rational(6, 1, 3, 8)) == 2
    with pytest.raises(ZeroArgument):
        unit_residue(PAdic.zero(3, 8))


def test_text_and_json_forms():
    x = padic_from_rational(9, 2, 3, 4)
    assert repr(x) == "3^2 * 41 + O(3^(6))"
    assert x.to_json() == {"val": 2, "digits": [2, 1, 1, 1]}
    assert PAdic.from_digits(3, 2, [2, 1, 1, 1]) == x
    assert repr(PAdic.zero(5, 8)) == "O(5^8)"


# -- properties ----------------------------------------------------------------


@given(PRIMES, rationals, rationals, st.integers(4, 40))
def test_ring_operations_match_rationals(p, a, b, N):
    x, y = PAdic.from_rational(a, p, N), PAdic.from_rational(b, p, N)
    assert agrees(x + y, a + b)
    assert agrees(x * y, a * b)
    assert agrees(x - y, a - b)
    assert agrees(x / y, a / b)


@given(PRIMES, rationals, st.integers(1, 40))
def test_double_inverse(p, a, N):
    x = PAdic.from_rational(a, p, N)
    y = x.inverse().inverse()
    assert y == x and y.prec == x.prec


@given(PRIMES, rationals, rationals, st.integers(1, 30), st.integers(1, 30))
def test_product_relative_precision_is_min(p, a, b, N1, N2):
    x, y = PAdic.from_rational(a, p, N1), PAdic.from_rational(b, p, N2)
    assert (x * y).prec == min(N1, N2)


@given(PRIMES, rationals, rationals, st.integers(1, 30), st.integers(1, 30))
def test_sum_absolute_precision_is_min(p, a, b, N1, N2):
    x, y = PAdic.from_rational(a, p, N1), PAdic.from_rational(b, p, N2)
    s = x + y
    assert s.absprec == min(x.absprec, y.absprec)
    assert agrees(s, a + b)


@given(PRIMES, rationals, st.integers(1, 30))
def test_digits_round_trip(p, a, N):
    x = PAdic.from_rational(a, p, N)
    y = PAdic.from_digits(p, x.val, x.digits())
    assert (y.val, y.unit, y.prec) == (x.val, x.unit, x.prec)
    assert x.unit % p != 0
