from __future__ import annotations

import json
import random
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from briggs import certificates as cf
from briggs.interval import IntervalReal, exp_iv
from briggs.pipoly import PiPoly, PiRational, X


def term(c, y_power: int, pi_power: int = 0) -> PiPoly:
    return PiPoly.monomial(y_power, Fraction(c), pi_power)


def pr(d) -> PiRational:
    return PiRational(d)


def mp_value(p: PiPoly, y) -> mpmath.mpf:
    return sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.mpf(y) ** i * mpmath.pi ** j
               for i, j, c in p.terms())


@pytest.fixture(autouse=True)
def high_mp_precision():
    with mpmath.workprec(400):
        yield


# -- envelopes --------------------------------------------------------------

def test_hhat_minus_hcheck():
    a = cf.pi2(Fraction(5, 9))
    diff = cf.hhat(a) - cf.hcheck(a)
    assert diff == PiPoly.constant(a ** 4) * term(Fraction(5, 64), -7)
    for c in (1, Fraction(-2, 3), 7):
        assert cf.hhat(c) - cf.hcheck(c) == term(Fraction(5, 64) * Fraction(c) ** 4, -7)


@pytest.mark.parametrize("a", [cf.pi2(Fraction(5, 9)), cf.pi2(Fraction(-5, 9)), cf.pi2(Fraction(10, 9)),
                               cf.pi2(Fraction(2, 3)), cf.pi2(3), PiRational({0: 1})])
@pytest.mark.parametrize("x", [3, 4, 6, 10, 40, 1000])
def test_square_root_envelopes(a, x):
    av = sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.pi ** j for j, c in a.coeffs.items())
    true = mpmath.sqrt(mpmath.mpf(x) ** 2 + av)
    assert mp_value(cf.hcheck(a), x) < true < mp_value(cf.hhat(a), x)


@settings(max_examples=100, deadline=None)
@given(st.fractions(min_value=-30, max_value=Fraction(-1, 10 ** 6), max_denominator=10 ** 6))
def test_g_envelopes(t):
    g1, g2 = cf.g_envelopes()
    e = exp_iv(IntervalReal.exact(t, 160))
    lo = g1.exact_value(t, 3)  # G1, G2 have no pi; any pi value works
    hi = g2.exact_value(t, 3)
    assert e.certainly_gt(lo) and e.certainly_lt(hi)
    assert e.certainly_lt(cf.G2_COARSE.exact_value(t, 3))


def test_w_envelopes_match_displays():
    # 6-regular partitions, a = 5 pi^2 / 9
    a = cf.regular_step(6)
    assert cf.w_envelope(1, a) == (1 + term(Fraction(25, 324), -4, 4) - term(Fraction(250, 6561), -6, 6)
                                   + term(Fraction(38125, 1889568), -8, 8) - term(Fraction(34375, 3188646), -10, 10))
    assert cf.w_envelope(2, a) == (1 + term(Fraction(25, 81), -4, 4) - term(Fraction(250, 6561), -6, 6)
                                   + term(Fraction(11875, 118098), -8, 8))
    assert cf.w_envelope(3, a) == (1 + term(Fraction(175, 324), -4, 4) - term(Fraction(3875, 13122), -6, 6)
                                   + term(Fraction(848125, 1889568), -8, 8) - term(Fraction(5171875, 12754584), -10, 10))
    # 6-regular overpartitions, a = 5 pi^2 / 6
    b = cf.regular_over_step(6)
    assert cf.w_envelope(1, b) == (1 + term(Fraction(25, 144), -4, 4) - term(Fraction(125, 972), -6, 6)
                                   + term(Fraction(38125, 373248), -8, 8) - term(Fraction(34375, 419904), -10, 10))
    assert cf.w_envelope(2, b) == (1 + term(Fraction(25, 36), -4, 4) - term(Fraction(125, 972), -6, 6)
                                   + term(Fraction(11875, 23328), -8, 8))
    assert cf.w_envelope(3, b) == (1 + term(Fraction(175, 144), -4, 4) - term(Fraction(3875, 3888), -6, 6)
                                   + term(Fraction(848125, 373248), -8, 8) - term(Fraction(5171875, 1679616), -10, 10))


def test_v2_matches_display():
    a = cf.regular_step(6)
    assert cf.v2_envelope(a) == (1 + term(Fraction(25, 108), -4, 4) + term(Fraction(4375, 69984), -8, 8)
                                 + term(Fraction(240625, 12754584), -12, 12))


@pytest.mark.parametrize("step", [cf.regular_step(6), cf.regular_over_step(6)], ids=["p6", "op6"])
@pytest.mark.parametrize("y", [5, 6, 8, 12, 30, 200])
def test_w_envelope_directions(step, y):
    a = sum(mpmath.mpf(c.numerator) / c.denominator * mpmath.pi ** j for j, c in step.coeffs.items())
    y = mpmath.mpf(y)
    th, x, z, w = (mpmath.sqrt(y ** 2 + s) for s in (a / 3, -a, a, 2 * a))
    w1 = mpmath.sqrt(th ** 9 / (y ** 6 * z ** 3))
    w2 = mpmath.sqrt(th ** 9 / (x ** 3 * z ** 6))
    w3 = mpmath.sqrt(th ** 9 / (x ** 3 * y ** 3 * w ** 3))
    assert w1 > mp_value(cf.w_envelope(1, step), y)
    assert w2 < mp_value(cf.w_envelope(2, step), y)
    assert w3 > mp_value(cf.w_envelope(3, step), y)


@pytest.mark.parametrize("y", [4, 5, 7, 20, 500])
def test_v2_direction(y):
    step = cf.regular_step(6)
    a = mpmath.mpf(5) / 9 * mpmath.pi ** 2
    y = mpmath.mpf(y)
    v = (y ** 6 / ((y ** 2 - a) ** 3 * (y ** 2 + a) ** 3)) ** mpmath.mpf(0.5)
    assert v < mp_value(cf.v2_envelope(step), y)


def test_w_taylor_orders():
    # the first omitted coefficient has the sign that makes each truncation one-sided
    assert cf.w_taylor(1, 6)[6] > 0
    assert cf.w_taylor(2, 5)[5] < 0
    assert cf.w_taylor(3, 6)[6] > 0


# -- reference top coefficients ------------------------------------------------

TOP = {
    "F2": [pr({6: 2 ** 5 * 3 ** 41}),
           pr({6: -2 ** 5 * 3 ** 37 * 675, 8: -2 ** 5 * 3 ** 37 * 7}),
           pr({6: 2 ** 7 * 3 ** 38 * 162, 8: 2 ** 7 * 3 ** 38 * 127})],
    "F2bar": [pr({6: 2 ** 22 * 3 ** 8}),
              pr({6: -2 ** 21 * 3 ** 5 * 450, 8: -2 ** 21 * 3 ** 5 * 7}),
              pr({6: 2 ** 23 * 3 ** 6 * 108, 8: 2 ** 23 * 3 ** 6 * 127})],
    "H": [pr({6: 2 ** 98 * 3 ** 99 * 5 ** 3}),
          pr({8: 2 ** 95 * 3 ** 96 * 2 ** 2 * 5 ** 4, 6: -2 ** 95 * 3 ** 96 * 3 ** 3 * 5 ** 3 * 41,
              0: -2 ** 95 * 3 ** 96 * 2 ** 13 * 3 ** 9})],
    "Jtilde": [pr({4: 2 ** 46 * 3 ** 41 * 5 ** 2}), pr({4: -2 ** 44 * 3 ** 42 * 5 ** 3})],
    "Fop6": [pr({6: 2 ** 139 * 3 ** 55 * 5 ** 3}),
             pr({8: 2 ** 136 * 3 ** 53 * 2 * 5 ** 4, 6: -2 ** 136 * 3 ** 53 * 3 ** 2 * 5 ** 3 * 41,
                 0: -2 ** 136 * 3 ** 53 * 2 ** 16 * 3 ** 5})],
}
DEGREES = {"F2": 92, "F2bar": 92, "H": 104, "Jtilde": 39, "Fop6": 104}


@pytest.mark.parametrize("name", cf.TARGETS)
def test_top_coefficients(name):
    num = cf.target_numerator(name)
    assert num.degree() == DEGREES[name]
    assert num.is_polynomial()
    for i, expected in enumerate(TOP[name]):
        assert num.coeff(num.degree() - i) == expected


def test_p6_H_is_the_Ftilde_numerator():
    assert cf.build_p6_Ftilde().num == cf.build_p6_H()


@pytest.mark.parametrize("name", ["F2", "H"])
def test_exponent_closed_forms(name):
    assert cf.exponent_arguments(name) == cf.CLOSED_FORM_EXPONENTS[name]


def test_jtilde_exponent_closed_form():
    assert cf.p6_jtilde_exponent() == term(Fraction(-25, 324), -3, 4)


@pytest.mark.parametrize("name", sorted(cf.EXPONENT_RAYS))
def test_exponent_arguments_negative(name):
    for e in cf.exponent_arguments(name):
        assert cf.certify_negative_on_ray(e, cf.EXPONENT_RAYS[name]).proven


def _sample_points():
    return [Fraction(15), Fraction(37, 2), 40, 1000]


@pytest.mark.parametrize("name", ["F2", "F2bar"])
def test_f2_equals_raw_sum_over_lcd(name):
    pieces = cf._partition_f2() if name == "F2" else cf._overpartition_f2()
    rf = cf.target_function(name)
    pi = Fraction(355, 113)
    for x in _sample_points():
        direct = pieces.raw.exact_value(x, pi) / pieces.lcd.exact_value(x, pi)
        assert rf.num.exact_value(x, pi) / rf.den.exact_value(x, pi) == direct


@pytest.mark.parametrize("name,setup,jt", [("H", "p6", False), ("Fop6", "op6", False), ("Jtilde", "p6", True)])
def test_regular_functions_equal_raw_sum_over_lcd(name, setup, jt):
    s = cf._p6_setup() if setup == "p6" else cf._op6_setup()
    raw, lcd = (s.jtilde_raw(), s.jtilde_lcd()) if jt else (s.ftilde_raw(), s.lcd())
    rf = cf.target_function(name)
    pi = Fraction(355, 113)
    for y in _sample_points():
        assert rf.num.exact_value(y, pi) / rf.den.exact_value(y, pi) == \
            raw.exact_value(y, pi) / lcd.exact_value(y, pi)


def test_generic_builder_reproduces_k6():
    generic = cf.build_regular_Ftilde(6).num
    h = cf.build_p6_H()
    ratio = h.coeff(h.degree()).coeffs[6] / generic.coeff(generic.degree()).coeffs[6]
    assert ratio > 0
    assert generic * ratio == h
    generic_op = cf.build_regular_Ftilde(6, over=True).num
    op = cf.target_numerator("Fop6")
    ratio = op.coeff(op.degree()).coeffs[6] / generic_op.coeff(generic_op.degree()).coeffs[6]
    assert generic_op * ratio == op


def test_generic_jtilde_reproduces_k6():
    generic = cf.build_regular_Jtilde(6).num
    j = cf.target_numerator("Jtilde")
    ratio = j.coeff(j.degree()).coeffs[4] / generic.coeff(generic.degree()).coeffs[4]
    assert generic * ratio == j


# -- certification ----------------------------------------------------------

def test_certify_simple_polynomial():
    p = X ** 2 - 4 * X + Fraction(401, 100)
    cert = cf.certify_positive_on_ray(p, 1)
    assert cert.proven and cert.dominance_method == "taylor-shift"
    assert cert.dominance_bound == 2 and len(cert.trace) >= 64
    assert cf.verify_certificate(cert)


def test_certify_reports_undecided_for_negative_values():
    cert = cf.certify_positive_on_ray((X - 3) * (X - 4), 1)
    assert cert.status == "undecided"
    assert not cf.verify_certificate(cert)


def test_certify_double_root_stays_undecided():
    cert = cf.certify_positive_on_ray((X - 3) ** 2, 1, cap=512)
    assert cert.status == "undecided"
    assert len(cert.notes) == 2


def test_certify_with_pi_near_minimum():
    p = (X - term(1, 0, 1)) ** 2 + Fraction(1, 10 ** 12)
    cert = cf.certify_positive_on_ray(p, 1)
    assert cert.proven
    assert cf.verify_certificate(cf.Certificate.from_json(json.loads(cert.dumps())))


def test_certify_rejects_bad_input():
    with pytest.raises(ValueError):
        cf.certify_positive_on_ray(PiPoly(), 1)
    with pytest.raises(ValueError):
        cf.certify_positive_on_ray(term(1, -1), 1)
    with pytest.raises(ValueError):
        cf.certify_positive_on_ray(X + 1, 0)


def test_tampered_certificate_fails_replay():
    cert = cf.certify_positive_on_ray(X ** 2 - 4 * X + Fraction(401, 100), 1)
    data = json.loads(cert.dumps())
    data["trace"] = data["trace"][:-1]
    assert not cf.verify_certificate(cf.Certificate.from_json(data))
    data = json.loads(cert.dumps())
    data["dominance_bound"] = "1"
    assert not cf.verify_certificate(cf.Certificate.from_json(data))


def test_cauchy_bound():
    coeffs = (X ** 3 - 5 * X + 2).interval_coeffs(128)
    assert cf.cauchy_bound(coeffs) == 7


def test_taylor_shift_exact():
    p = (X + 1) ** 3
    d = cf.taylor_shift(p.interval_coeffs(64), IntervalReal.exact(2, 64))
    assert [c.lower() for c in d] == [27, 27, 9, 1]


@pytest.mark.parametrize("name", cf.TARGETS)
def test_target_certificates(name):
    cert = cf.certify_positive_on_ray(cf.target_numerator(name), cf.ROOT_BOUNDS[name], prec=256)
    assert cert.proven and cert.pi_precision == 256
    assert cf.verify_certificate(cf.Certificate.from_json(json.loads(cert.dumps())))


def test_numerators_change_sign_below_root_bound():
    # the rays are not vacuous: each numerator is negative somewhere on (0, root bound)
    rng = random.Random(7)
    for name in ("H", "Fop6", "Jtilde"):
        num = cf.target_numerator(name)
        points = [Fraction(i, 4) for i in range(1, 4 * cf.ROOT_BOUNDS[name])]
        rng.shuffle(points)
        assert any(num.evaluate(x, 256).hi < 0 for x in points), name


@pytest.mark.parametrize("poly", [cf.p6_H1(), cf.p6_J1(), cf.op6_H1()], ids=["H1", "J1", "op6-H1"])
def test_denominators_positive(poly):
    assert cf.certify_positive_on_ray(poly, 3).proven


def test_factored_denominators_match_symbolic_ones():
    pi = Fraction(355, 113)
    s = cf._p6_setup()
    for y in (Fraction(3), Fraction(7, 2), Fraction(20)):
        assert cf.p6_H1_factors().exact_value(y, pi) == cf.P6_LCD_SCALE * s.lcd().exact_value(y, pi)
        assert cf.p6_J1().exact_value(y, pi) == cf.J6_LCD_SCALE * s.jtilde_lcd().exact_value(y, pi)
        assert cf.op6_H1().exact_value(y, pi) == \
            cf.OP6_SCALE * cf.OP6_LCD_SCALE * cf._op6_setup().lcd().shift(43).exact_value(y, pi)
