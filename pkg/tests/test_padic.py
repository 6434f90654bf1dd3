import math
from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from selchab.errors import (
    DivisionByIndistinguishableZero,
    InsufficientPrecision,
    NotASquare,
    PrecisionExhausted,
)
from selchab.padic import PadicNumber, PadicSeries, TailLaw, fixed_point_invert, padic_sqrt, v2

rationals = st.fractions(max_denominator=10**6).filter(lambda x: x != 0)
precs = st.integers(4, 80)


def agrees(x: PadicNumber, q: Fraction) -> bool:
    """x equals q modulo 2^absprec(x), checked with exact rationals."""
    if x.is_exact_zero:
        return q == 0
    d = q - x.to_fraction()
    if d == 0:
        return True
    return v2(d.numerator) - v2(d.denominator) >= x.absprec


@given(rationals, rationals, precs)
def test_ring_operations_agree_with_fractions(a, b, r):
    x = PadicNumber.from_rational(a, relprec=r)
    y = PadicNumber.from_rational(b, relprec=r)
    assert agrees(x + y, a + b)
    assert agrees(x - y, a - b)
    assert agrees(x * y, a * b)
    assert agrees(x / y, a / b)
    assert agrees(-x, -a)


@given(rationals, precs)
def test_valuation_and_precision(a, r):
    x = PadicNumber.from_rational(a, relprec=r)
    assert x.valuation == v2(a.numerator) - v2(a.denominator)
    assert x.absprec == x.valuation + r


@given(rationals, st.integers(0, 40))
def test_absprec_constructor(a, absprec):
    x = PadicNumber.from_rational(a, absprec=absprec)
    assert x.absprec == absprec or x.is_exhausted
    assert agrees(x, a) or x.is_exhausted


@given(st.integers(-2**40, 2**40).filter(lambda n: n != 0), st.integers(8, 64))
def test_sqrt_of_squares(n, r):
    x = PadicNumber.from_rational(n * n, relprec=r)
    root = padic_sqrt(x)
    assert root.relprec == r - 1
    assert (root * root - x).valuation >= root.valuation * 2 + r - 1 or (root * root - x).is_zero()
    assert root.unit % 4 == 1


def test_sqrt_17():
    root = padic_sqrt(PadicNumber.from_rational(17, relprec=7))
    val = root.residue(6)
    assert (val * val - 17) % 64 == 0
    assert val % 4 == 1
    assert val % 32 == 9
    assert val == 41


def test_sqrt_errors():
    with pytest.raises(NotASquare):
        padic_sqrt(PadicNumber.from_rational(3))
    with pytest.raises(NotASquare):
        padic_sqrt(PadicNumber.from_rational(2))
    with pytest.raises(InsufficientPrecision):
        padic_sqrt(PadicNumber.from_rational(1, relprec=2))
    with pytest.raises(PrecisionExhausted):
        padic_sqrt(PadicNumber.big_oh(10))


def test_division_by_big_oh():
    with pytest.raises(DivisionByIndistinguishableZero):
        PadicNumber.from_rational(1) / PadicNumber.big_oh(5)
    with pytest.raises(ZeroDivisionError):
        PadicNumber.from_rational(1) / PadicNumber.exact_zero()


@given(rationals, precs)
def test_string_roundtrip(a, r):
    x = PadicNumber.from_rational(a, relprec=r)
    y = PadicNumber.from_string(repr(x))
    assert (y.valuation, y.unit, y.relprec) == (x.valuation, x.unit, x.relprec)


def test_symmetric_fraction():
    assert PadicNumber.from_rational(Fraction(-1, 4), relprec=20).to_fraction() == Fraction(-1, 4)
    assert PadicNumber.from_rational(-3, relprec=20).to_fraction() == -3


def test_tail_law_minimum_is_a_lower_bound():
    law = TailLaw(Fraction(2, 15), Fraction(-2, 15), 1)
    for start in (1, 5, 40):
        for k in (1, 2, 3):
            m = law.tail_minimum(start, k)
            # valuations are integers, so each term is at least the ceiling of its bound
            assert all(math.ceil(law.bound(n) + k * n - 1e-9) >= m
                       for n in range(start, start + 500))
            assert m >= min(law.bound(n) + k * n for n in range(start, start + 500)) - 1


def test_tail_law_divergence():
    with pytest.raises(PrecisionExhausted):
        TailLaw(0, -1, 1).tail_minimum(1, 1)


series_coeffs = st.lists(st.integers(-50, 50), min_size=3, max_size=10)


@given(series_coeffs, series_coeffs)
def test_series_product_and_reciprocal(a, b):
    a[0] = 2 * a[0] + 1
    n = min(len(a), len(b))
    A = PadicSeries.from_rationals(a, relprec=60)
    B = PadicSeries.from_rationals(b, relprec=60)
    prod = A * B
    for k in range(n):
        want = sum(a[i] * b[k - i] for i in range(k + 1))
        assert agrees(prod[k], Fraction(want))
    one = A * A.reciprocal()
    assert agrees(one[0], Fraction(1))
    assert all(agrees(one[k], Fraction(0)) for k in range(1, len(a)))


@given(st.lists(st.integers(-20, 20), min_size=2, max_size=9))
def test_fixed_point_inverse(tail):
    phi = PadicSeries.from_rationals([0, 1] + tail, relprec=80)
    psi = fixed_point_invert(phi)
    comp = phi.compose(psi)
    assert agrees(comp[1], Fraction(1))
    assert all(agrees(comp[k], Fraction(0)) for k in range(2, len(phi)))


def test_integral_and_derivative():
    s = PadicSeries.from_rationals([1, 2, 3, 4], relprec=40)
    back = s.integral().derivative()
    assert all(agrees(back[k], Fraction(k + 1)) for k in range(4))


def test_evaluate_adds_tail_bound():
    law = TailLaw(0, 1, 0)
    s = PadicSeries.from_rationals([1, 1, 1], relprec=40, tail_law=law)
    val = s.evaluate(PadicNumber.from_rational(2, relprec=40))
    assert val.absprec == law.tail_minimum(3, 1)
    assert agrees(val, Fraction(7))
