from __future__ import annotations

from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from briggs.interval import (
    IntervalDomainError,
    IntervalReal,
    UndecidableError,
    bessel_i1,
    decide,
    exp_iv,
    pi_enclosure,
    pow_iv,
    sqrt_iv,
)

rationals = st.fractions(min_value=-40, max_value=40, max_denominator=10 ** 6)
positive = st.fractions(min_value=Fraction(1, 1000), max_value=10 ** 6, max_denominator=10 ** 6)


def mp_contains(iv: IntervalReal, value: mpmath.mpf) -> bool:
    """Membership test with mpmath at a working precision far above the interval's."""
    return mpmath.mpf(iv.lower().numerator) / iv.lower().denominator <= value <= \
        mpmath.mpf(iv.upper().numerator) / iv.upper().denominator


@pytest.fixture(autouse=True)
def high_mp_precision():
    with mpmath.workprec(2000):
        yield


@pytest.mark.parametrize("prec", [53, 128, 256, 1024])
def test_pi_enclosure(prec):
    iv = pi_enclosure(prec)
    assert mp_contains(iv, +mpmath.pi)
    assert iv.rel_width() < Fraction(1, 2 ** (prec - 4))


@settings(max_examples=60, deadline=None)
@given(rationals)
def test_exp_contains_true_value(q):
    iv = exp_iv(IntervalReal.exact(q, 160))
    assert mp_contains(iv, mpmath.exp(mpmath.mpf(q.numerator) / q.denominator))


@settings(max_examples=60, deadline=None)
@given(positive)
def test_sqrt_contains_true_value(q):
    iv = sqrt_iv(IntervalReal.exact(q, 160))
    assert mp_contains(iv, mpmath.sqrt(mpmath.mpf(q.numerator) / q.denominator))


def test_sqrt_negative_rejected():
    with pytest.raises(IntervalDomainError):
        sqrt_iv(IntervalReal.exact(-1))


def test_pow_half_integer():
    iv = pow_iv(IntervalReal.exact(7, 128), Fraction(3, 2))
    assert mp_contains(iv, mpmath.mpf(7) ** 1.5)


@pytest.mark.parametrize("s", [Fraction(1, 3), 1, 5, 26, 50, 200, 1000])
def test_bessel_i1(s):
    s = Fraction(s)
    iv = bessel_i1(IntervalReal.exact(s, 160))
    assert mp_contains(iv, mpmath.besseli(1, mpmath.mpf(s.numerator) / s.denominator))
    assert iv.rel_width() < Fraction(1, 10 ** 30)


@settings(max_examples=100, deadline=None)
@given(rationals, rationals)
def test_arithmetic_encloses_exact_result(a, b):
    x, y = IntervalReal.exact(a, 64), IntervalReal.exact(b, 64)
    assert (x + y).contains(a + b)
    assert (x - y).contains(a - b)
    assert (x * y).contains(a * b)
    if b != 0:
        assert (x / y).contains(a / b)


def test_division_by_interval_containing_zero():
    with pytest.raises(IntervalDomainError):
        IntervalReal.exact(1) / IntervalReal.hull(-1, 1)


def test_comparisons():
    third = IntervalReal.exact(Fraction(1, 3), 128)
    assert third.certainly_lt(Fraction(1, 2))
    assert not third.certainly_lt(Fraction(1, 3))
    assert third.contains(Fraction(1, 3))
    assert IntervalReal.hull(1, 2).union(IntervalReal.exact(5)).contains(4)


def test_decide_escalates_and_gives_up():
    seen = []

    def needs_precision(prec):
        seen.append(prec)
        return True if prec >= 512 else None

    assert decide(needs_precision, prec=128)
    assert seen == [128, 256, 512]
    with pytest.raises(UndecidableError):
        decide(lambda prec: None, prec=128, cap=1024)


def test_json_roundtrip():
    iv = exp_iv(IntervalReal.exact(Fraction(7, 3), 200))
    data = iv.to_json()
    assert all(isinstance(v, str) for v in data.values())
    assert IntervalReal.from_json(data) == iv
