"""Proof polynomials over Q[pi] and certified positivity on rays.

The builders below reconstruct, by exact symbolic substitution, the
rational functions whose positivity closes each asymptotic argument:

* ``F2``       ordinary partitions, variable x = mu(n - 1);
* ``F2bar``    overpartitions, variable x = mu-bar(n - 1);
* ``H``        6-regular partitions (numerator of F-tilde), variable y = mu_6(n);
* ``Jtilde``   log-concavity of 6-regular partitions;
* ``Fop6``     6-regular overpartitions (numerator of F-tilde).

Each square root ``sqrt(v^2 + a)`` is replaced by the Laurent envelopes
``hcheck_v(a) < sqrt(v^2 + a) < hhat_v(a)``, each exponential of a negative
argument by ``G1(t) < e^t < G2(t)``, and half-integer powers are absorbed by
truncated Taylor envelopes ``W``.  What is left is a genuine polynomial whose
positivity on a ray is then certified with interval arithmetic.
"""

from __future__ import annotations

import json
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple, Union

from .interval import PREC_CAP, IntervalReal
from .pipoly import PiPoly, PiRational, PiRationalFunction, X

Scalar = Union[int, Fraction]
Coefficient = Union[Scalar, PiRational]

# ---------------------------------------------------------------------------
# envelopes
# ---------------------------------------------------------------------------


def _const(a: Coefficient) -> PiPoly:
    if isinstance(a, PiPoly):
        return a
    return PiPoly.constant(a if isinstance(a, PiRational) else PiRational({0: a}))


def _inv(power: int, c: Scalar = 1) -> PiPoly:
    """``c * x**(-power)``."""
    return PiPoly.monomial(-power, c)


def hhat(a: Coefficient) -> PiPoly:
    """Upper envelope ``x + a/(2x) - a^2/(8x^3) + a^3/(16x^5)`` of sqrt(x^2 + a)."""
    a = _const(a)
    return X + a * _inv(1, Fraction(1, 2)) - a ** 2 * _inv(3, Fraction(1, 8)) + a ** 3 * _inv(5, Fraction(1, 16))


def hcheck(a: Coefficient) -> PiPoly:
    """Lower envelope: ``hhat(a) - 5 a^4 / (64 x^7)``.

    The last coefficient is 5/64 rather than the binomial-series value 5/128;
    the larger subtraction keeps this a valid lower bound.
    """
    a = _const(a)
    return hhat(a) - a ** 4 * _inv(7, Fraction(5, 64))


T = PiPoly.var()
G1 = 1 + T + T ** 2 / 2 + T ** 3 / 6
G2 = 1 + T + T ** 2 / 2
# A weaker upper envelope of e^t on t < 0, used by the ordinary and
# overpartition builders (see ``build_partition_F2``).
G2_COARSE = 1 + T + T ** 2


def g_envelopes() -> Tuple[PiPoly, PiPoly]:
    """``(G1, G2)`` with ``G1(t) < e^t < G2(t)`` for t < 0, as polynomials in t."""
    return G1, G2


def pi2(c: Scalar) -> PiRational:
    """``c * pi^2``."""
    return PiRational.pi_power(2, c)


def _closed_form(num: Dict[Tuple[int, int], Scalar], den: Scalar, x_power: int) -> PiPoly:
    """``(sum c x^i pi^j) / (den * x^x_power)`` as a Laurent polynomial."""
    return PiPoly({(i - x_power, j): Fraction(c) / den for (i, j), c in num.items()})


# ---------------------------------------------------------------------------
# ordinary and overpartition families
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class F2Pieces:
    """Intermediate objects of the ordinary/overpartition construction."""

    numerator: PiPoly            # polynomial, already scaled and shifted
    denominator: PiPoly          # factored product form
    exponents: Tuple[PiPoly, PiPoly, PiPoly]
    lcd: PiPoly                  # A1^12 A2^12 A3^6
    raw: PiPoly                  # Laurent numerator over lcd, before scaling


def _f2_family(step: PiRational, scale: int, g2: PiPoly) -> F2Pieces:
    """Shared construction with ``x_i = sqrt(x^2 + i*step)`` and ``z2 = hhat(4 step / 3)``."""
    a = [step * i for i in (1, 2, 3)]
    A = [X * X + _const(ai) for ai in a]
    low = [hcheck(ai) for ai in a]
    high = [hhat(ai) for ai in a]
    z2 = hhat(step * Fraction(4, 3))

    def fnum(Ai: PiPoly, upper: PiPoly) -> PiPoly:
        # numerator of (t^10 - t^8 x_i2 - 1) / t^12 with t^2 = Ai
        return Ai ** 5 - Ai ** 4 * upper - 1

    def gnum(Ai: PiPoly, lower: PiPoly) -> PiPoly:
        return Ai ** 5 - Ai ** 4 * lower + 1

    f = _inv(2) - _inv(3) - _inv(12)
    g = _inv(2) - _inv(3) + _inv(12)
    e1 = low[1] + 2 * low[0] - 3 * z2
    e2 = 2 * high[1] + X - 3 * z2
    e3 = X + low[0] + low[2] - 3 * z2
    f1, f2, f3 = (fnum(A[i], high[i]) for i in range(3))
    g2n = gnum(A[1], low[1])
    t1 = G1.compose(e1) * f2 * f1 * f1 * A[1] ** 6 * A[2] ** 6
    t2 = -2 * g2.compose(e2) * g2n * g2n * g * A[0] ** 12 * A[2] ** 6
    t3 = G1.compose(e3) * f * f1 * f3 * A[0] ** 6 * A[1] ** 12
    raw = t1 + t2 + t3
    lcd = A[0] ** 12 * A[1] ** 12 * A[2] ** 6
    num = (raw * scale).shift(43)
    return F2Pieces(num, PiPoly(), (e1, e2, e3), lcd, raw)


@lru_cache(maxsize=None)
def _partition_f2() -> F2Pieces:
    p = _f2_family(pi2(Fraction(2, 3)), 2 ** 5 * 3 ** 43, G2_COARSE)
    den = (2 ** 5 * 3 ** 19) * X ** 43 * (X ** 2 + _const(pi2(2))) ** 6 \
        * (3 * X ** 2 + _const(pi2(2))) ** 12 * (3 * X ** 2 + _const(pi2(4))) ** 12
    return F2Pieces(p.numerator, den, p.exponents, p.lcd, p.raw)


@lru_cache(maxsize=None)
def _overpartition_f2() -> F2Pieces:
    p = _f2_family(pi2(1), 2 ** 25 * 3 ** 7, G2_COARSE)
    den = (2 ** 25 * 3 ** 7) * X ** 43 * (X ** 2 + _const(pi2(1))) ** 12 \
        * (X ** 2 + _const(pi2(2))) ** 12 * (X ** 2 + _const(pi2(3))) ** 6
    return F2Pieces(p.numerator, den, p.exponents, p.lcd, p.raw)


def build_partition_F2() -> PiRationalFunction:
    """F2(x) for ordinary partitions as ``sum a_l x^l / (2^5 3^19 x^43 ...)``.

    The quadratic upper envelope used for the middle exponential is
    ``1 + t + t^2``; this is the choice that reproduces the known top
    coefficients, and it is a valid upper bound of ``e^t`` for t < 0.
    """
    p = _partition_f2()
    return PiRationalFunction(p.numerator, p.denominator)


def build_overpartition_F2() -> PiRationalFunction:
    """F2-bar for overpartitions, steps pi^2, 2 pi^2, 3 pi^2 and z2 = hhat(4 pi^2 / 3)."""
    p = _overpartition_f2()
    return PiRationalFunction(p.numerator, p.denominator)


def partition_exponents() -> Tuple[PiPoly, PiPoly, PiPoly]:
    return _partition_f2().exponents


def overpartition_exponents() -> Tuple[PiPoly, PiPoly, PiPoly]:
    return _overpartition_f2().exponents


# ---------------------------------------------------------------------------
# k-regular families
# ---------------------------------------------------------------------------

DI = (Fraction(1), Fraction(-3, 8), Fraction(-15, 128), Fraction(-105, 1024),
      Fraction(-4725, 32768), Fraction(-72765, 262144))


def ftilde_poly(sign: int = -1) -> PiPoly:
    """``D_I(y) + sign * 32 / y^6`` as a Laurent polynomial in y."""
    acc = PiPoly()
    for i, c in enumerate(DI):
        acc = acc + _inv(i, c)
    return acc + _inv(6, 32 * sign)


def _binomial_series(alpha: Fraction, c: Fraction, order: int) -> List[Fraction]:
    """Coefficients of ``(1 + c u)^alpha`` up to u^order."""
    out = [Fraction(1)]
    t = Fraction(1)
    for i in range(1, order + 1):
        t = t * (alpha - i + 1) / i
        out.append(t * c ** i)
    return out


def _series_mul(a: Sequence[Fraction], b: Sequence[Fraction], order: int) -> List[Fraction]:
    return [sum((a[i] * b[j - i] for i in range(j + 1)), Fraction(0)) for j in range(order + 1)]


def w_taylor(which: int, order: int) -> List[Fraction]:
    """Taylor coefficients in ``u = a/y^2`` of the half-integer-power ratios.

    With ``theta^2 = y^2 + a/3``, ``x^2 = y^2 - a``, ``z^2 = y^2 + a`` and
    ``w^2 = y^2 + 2a``:

        1:  sqrt(theta^9 / (y^6 z^3))
        2:  sqrt(theta^9 / (x^3 z^6))
        3:  sqrt(theta^9 / (x^3 y^3 w^3))
    """
    theta = _binomial_series(Fraction(9, 4), Fraction(1, 3), order)
    if which == 1:
        parts = [_binomial_series(Fraction(-3, 4), Fraction(1), order)]
    elif which == 2:
        parts = [_binomial_series(Fraction(-3, 4), Fraction(-1), order),
                 _binomial_series(Fraction(-3, 2), Fraction(1), order)]
    elif which == 3:
        parts = [_binomial_series(Fraction(-3, 4), Fraction(-1), order),
                 _binomial_series(Fraction(-3, 4), Fraction(2), order)]
    else:
        raise ValueError("which must be 1, 2 or 3")
    acc = theta
    for p in parts:
        acc = _series_mul(acc, p, order)
    return acc


# Truncation orders: W1 and W3 are cut after u^5 (next term positive, lower
# envelopes), W2 after u^4 (next term negative, upper envelope).
W_ORDERS = {1: 5, 2: 4, 3: 5}

# Upper envelope of sqrt(y^6 / (x^3 z^3)) = (1 - u^2)^(-3/4): the series is
# cut after u^6 and its last coefficient raised from 77/128 to 77/120 so
# that it dominates the tail on the range where it is used.
V2_COEFFS = {0: Fraction(1), 2: Fraction(3, 4), 4: Fraction(21, 32), 6: Fraction(77, 120)}


def _u_poly(coeffs: Dict[int, Fraction], a: PiRational) -> PiPoly:
    """``sum c_i (a / y^2)^i`` as a Laurent polynomial in y."""
    acc = PiPoly()
    for i, c in coeffs.items():
        acc = acc + _const(a ** i) * _inv(2 * i, c)
    return acc


def w_envelope(which: int, a: PiRational) -> PiPoly:
    coeffs = w_taylor(which, W_ORDERS[which])
    return _u_poly(dict(enumerate(coeffs)), a)


def v2_envelope(a: PiRational) -> PiPoly:
    return _u_poly(V2_COEFFS, a)


@dataclass(frozen=True)
class RegularSetup:
    """Shared symbols of the k-regular constructions for a step ``a``.

    ``a`` is the increment of the squared growth parameter between
    consecutive n.  Every envelope denominator is cleared by a power of y:
    ``1/x1 = y^7 / Px1`` and ``1/x2 = y^5 / Qx2``, and so on.
    """

    a: PiRational
    X2: PiPoly
    Z2: PiPoly
    W2: PiPoly
    x1: PiPoly
    z1: PiPoly
    w1: PiPoly
    x2: PiPoly
    z2: PiPoly
    theta2: PiPoly
    Px1: PiPoly
    Pz1: PiPoly
    Pw1: PiPoly
    Qx2: PiPoly
    Qz2: PiPoly

    @classmethod
    def for_step(cls, a: PiRational) -> "RegularSetup":
        y2 = X * X
        x1, z1, w1 = hcheck(-a), hcheck(a), hcheck(a * 2)
        x2, z2 = hhat(-a), hhat(a)
        return cls(
            a, y2 - _const(a), y2 + _const(a), y2 + _const(a * 2),
            x1, z1, w1, x2, z2, hhat(a * Fraction(1, 3)),
            x1.shift(7), z1.shift(7), w1.shift(7), x2.shift(5), z2.shift(5),
        )

    def lam(self, S2: PiPoly, P: PiPoly, sh: int, sign: int) -> PiPoly:
        """Numerator of the lambda envelope over ``S2^3 * P``.

        The envelope is D_I with ``1/t`` replaced by ``y^sh / P`` in the odd
        terms and ``1/t^2`` by ``1/S2``, plus ``sign * 32 / S2^3``.
        """
        ys = PiPoly.monomial(sh)
        return (S2 ** 3 * P + DI[1] * ys * S2 ** 3 + DI[2] * S2 ** 2 * P + DI[3] * S2 ** 2 * ys
                + DI[4] * S2 * P + DI[5] * S2 * ys + sign * 32 * P)

    def exponents(self) -> Tuple[PiPoly, PiPoly, PiPoly]:
        e1 = 2 * X + self.z1 - 3 * self.theta2
        e2 = self.x2 + 2 * self.z2 - 3 * self.theta2
        e3 = self.x1 + X + self.w1 - 3 * self.theta2
        return e1, e2, e3

    def lcd(self) -> PiPoly:
        return (self.X2 ** 3 * self.Z2 ** 6 * self.W2 ** 3 * self.Px1 * self.Pz1 * self.Pw1
                * self.Qx2 * self.Qz2 ** 2)

    def ftilde_raw(self, g2: PiPoly = G2) -> PiPoly:
        """Laurent numerator of F-tilde over :meth:`lcd`."""
        l1 = self.lam(self.X2, self.Px1, 7, -1)
        l2 = self.lam(self.Z2, self.Pz1, 7, -1)
        l3 = self.lam(self.W2, self.Pw1, 7, -1)
        l4 = self.lam(self.X2, self.Qx2, 5, +1)
        l5 = self.lam(self.Z2, self.Qz2, 5, +1)
        fy = ftilde_poly(-1)
        w11, w22, w31 = (w_envelope(i, self.a) for i in (1, 2, 3))
        e1, e2, e3 = self.exponents()
        t1 = (G1.compose(e1) * w11 * l2 * fy * fy
              * self.X2 ** 3 * self.Z2 ** 3 * self.W2 ** 3 * self.Px1 * self.Pw1 * self.Qx2 * self.Qz2 ** 2)
        t2 = -2 * g2.compose(e2) * w22 * l4 * l5 * l5 * self.W2 ** 3 * self.Px1 * self.Pz1 * self.Pw1
        t3 = G1.compose(e3) * w31 * l1 * l3 * fy * self.Z2 ** 6 * self.Pz1 * self.Qx2 * self.Qz2 ** 2
        return t1 + t2 + t3

    def jtilde_exponent(self) -> PiPoly:
        return self.x2 + self.z2 - 2 * X

    def jtilde_lcd(self) -> PiPoly:
        return self.X2 ** 3 * self.Z2 ** 3 * self.Qx2 * self.Qz2

    def jtilde_raw(self, g2: PiPoly = G2) -> PiPoly:
        """Laurent numerator of J-tilde over :meth:`jtilde_lcd`."""
        l4 = self.lam(self.X2, self.Qx2, 5, +1)
        l5 = self.lam(self.Z2, self.Qz2, 5, +1)
        fy = ftilde_poly(-1)
        return fy * fy * self.jtilde_lcd() - g2.compose(self.jtilde_exponent()) * v2_envelope(self.a) * l4 * l5


def regular_step(k: int) -> PiRational:
    """mu_k(n+1)^2 - mu_k(n)^2 = (2 pi^2 / 3)(1 - 1/k)."""
    return pi2(Fraction(2, 3) * Fraction(k - 1, k))


def regular_over_step(k: int) -> PiRational:
    """mu-bar_k(n+1)^2 - mu-bar_k(n)^2 = pi^2 (1 - 1/k)."""
    return pi2(Fraction(k - 1, k))


def _content_scale(p: PiPoly) -> int:
    """Smallest positive integer making all rational coefficients integral."""
    m = 1
    for _, _, v in p.terms():
        m = m * v.denominator // math.gcd(m, v.denominator)
    return m


# Factored denominators for k = 6.

def _P(*terms: Tuple[Scalar, int, int]) -> PiPoly:
    """Polynomial from ``(coefficient, y_power, pi_power)`` triples."""
    out: Dict[Tuple[int, int], Fraction] = {}
    for c, i, j in terms:
        out[(i, j)] = out.get((i, j), Fraction(0)) + Fraction(c)
    return PiPoly(out)


@lru_cache(maxsize=None)
def p6_H1_factors() -> PiPoly:
    """Product of the polynomial factors of the 6-regular H1(y)."""
    return (
        _P((9, 2, 0), (-5, 0, 2)) ** 3 * _P((9, 2, 0), (5, 0, 2)) ** 6 * _P((9, 2, 0), (10, 0, 2)) ** 3
        * _P((419904, 8, 0), (116640, 6, 2), (-16200, 4, 4), (4500, 2, 6), (-3125, 0, 8))
        * _P((419904, 8, 0), (-116640, 6, 2), (-16200, 4, 4), (-4500, 2, 6), (-3125, 0, 8))
        * _P((26244, 8, 0), (14580, 6, 2), (-4050, 4, 4), (2250, 2, 6), (-3125, 0, 8))
        * _P((11664, 6, 0), (3240, 4, 2), (-450, 2, 4), (125, 0, 6)) ** 2
        * _P((11664, 6, 0), (-3240, 4, 2), (-450, 2, 4), (-125, 0, 6))
    )


P6_SCALE = 2 ** 75 * 3 ** 38


def p6_H1() -> PiPoly:
    """H1(y) = 2^75 3^38 y^43 times the factors of :func:`p6_H1_factors`."""
    return P6_SCALE * p6_H1_factors().shift(43)


@lru_cache(maxsize=None)
def p6_J1() -> PiPoly:
    """J1(y) = 2^40 3^21 (9y^2 - 5pi^2)^3 (9y^2 + 5pi^2)^3 (11664 y^6 ...)(11664 y^6 ...)."""
    return (2 ** 40 * 3 ** 21) * (
        _P((9, 2, 0), (-5, 0, 2)) ** 3 * _P((9, 2, 0), (5, 0, 2)) ** 3
        * _P((11664, 6, 0), (-3240, 4, 2), (-450, 2, 4), (-125, 0, 6))
        * _P((11664, 6, 0), (3240, 4, 2), (-450, 2, 4), (125, 0, 6))
    )


@lru_cache(maxsize=None)
def op6_H1() -> PiPoly:
    """H1(y) for 6-regular overpartitions in factored form (including 2^89 3^24 y^43)."""
    return (2 ** 89 * 3 ** 24) * (
        _P((3, 2, 0), (5, 0, 2)) ** 3 * _P((6, 2, 0), (-5, 0, 2)) ** 3 * _P((6, 2, 0), (5, 0, 2)) ** 6
        * _P((3456, 6, 0), (-1440, 4, 2), (-300, 2, 4), (-125, 0, 6))
        * _P((3456, 6, 0), (1440, 4, 2), (-300, 2, 4), (125, 0, 6)) ** 2
        * _P((5184, 8, 0), (4320, 6, 2), (-1800, 4, 4), (1500, 2, 6), (-3125, 0, 8))
        * _P((82944, 8, 0), (-34560, 6, 2), (-7200, 4, 4), (-3000, 2, 6), (-3125, 0, 8))
        * _P((82944, 8, 0), (34560, 6, 2), (-7200, 4, 4), (3000, 2, 6), (-3125, 0, 8))
    ).shift(43)


# rational factor relating each factored product to the symbolic lcd
P6_LCD_SCALE = 9 ** 12 * 419904 ** 2 * 26244 * 11664 ** 3
OP6_LCD_SCALE = 3 ** 3 * 6 ** 3 * 6 ** 6 * 3456 ** 3 * 5184 * 82944 ** 2
J6_LCD_SCALE = 2 ** 40 * 3 ** 21 * 9 ** 6 * 11664 ** 2
OP6_SCALE = 2 ** 89 * 3 ** 24


@lru_cache(maxsize=None)
def _p6_setup() -> RegularSetup:
    return RegularSetup.for_step(regular_step(6))


@lru_cache(maxsize=None)
def _op6_setup() -> RegularSetup:
    return RegularSetup.for_step(regular_over_step(6))


@lru_cache(maxsize=None)
def build_p6_H() -> PiPoly:
    """Numerator H(y) = sum a_k y^k (degree 104) of F-tilde for 6-regular partitions."""
    raw = _p6_setup().ftilde_raw(G2)
    return (raw * (P6_LCD_SCALE * P6_SCALE)).shift(43)


def build_p6_Ftilde() -> PiRationalFunction:
    """F-tilde(y) = H(y) / (2^75 3^38 y^43 * factors)."""
    return PiRationalFunction(build_p6_H(), p6_H1())


@lru_cache(maxsize=None)
def _p6_jtilde_num() -> PiPoly:
    return (_p6_setup().jtilde_raw(G2) * J6_LCD_SCALE).shift(18)


def build_p6_Jtilde() -> PiRationalFunction:
    """J-tilde(y) = sum a_l y^l / (y^18 J1(y)); the y^18 comes from clearing f-tilde."""
    return PiRationalFunction(_p6_jtilde_num(), p6_J1().shift(18))


@lru_cache(maxsize=None)
def _op6_num() -> PiPoly:
    return (_op6_setup().ftilde_raw(G2) * (OP6_LCD_SCALE * OP6_SCALE)).shift(43)


def build_op6_Ftilde() -> PiRationalFunction:
    """F-tilde(y) for 6-regular overpartitions, over the factored H1(y)."""
    return PiRationalFunction(_op6_num(), op6_H1())


def p6_exponents() -> Tuple[PiPoly, PiPoly, PiPoly]:
    return _p6_setup().exponents()


def op6_exponents() -> Tuple[PiPoly, PiPoly, PiPoly]:
    return _op6_setup().exponents()


def p6_jtilde_exponent() -> PiPoly:
    return _p6_setup().jtilde_exponent()


def build_regular_Ftilde(k: int, over: bool = False) -> PiRationalFunction:
    """F-tilde for general k, normalised to integer coefficients.

    The construction is the k = 6 one with the step ``a`` of the family;
    nothing here is tied to reference data.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    setup = RegularSetup.for_step(regular_over_step(k) if over else regular_step(k))
    raw = setup.ftilde_raw(G2).shift(43)
    s = _content_scale(raw)
    return PiRationalFunction(raw * s, setup.lcd().shift(43) * s)


def build_regular_Jtilde(k: int) -> PiRationalFunction:
    if k < 2:
        raise ValueError("k must be >= 2")
    setup = RegularSetup.for_step(regular_step(k))
    raw = setup.jtilde_raw(G2).shift(18)
    s = _content_scale(raw)
    return PiRationalFunction(raw * s, setup.jtilde_lcd().shift(18) * s)


# Closed forms of the exponent arguments in lowest terms.
CLOSED_FORM_EXPONENTS: Dict[str, Tuple[PiPoly, PiPoly, PiPoly]] = {
    "F2": (
        _closed_form({(4, 4): -18, (2, 6): 26, (0, 8): -135}, 486, 7),
        _closed_form({(2, 4): -36, (0, 6): 40}, 243, 5),
        _closed_form({(4, 4): -126, (2, 6): 188, (0, 8): -615}, 486, 7),
    ),
    "H": (
        _closed_form({(4, 4): -25 * 432, (2, 6): 25 * 160, (0, 8): -25 * 125}, 419904, 7),
        _closed_form({(2, 4): -25 * 54, (0, 6): 25 * 5}, 13122, 5),
        _closed_form({(4, 4): -25 * 3024, (2, 6): 25 * 1240, (0, 8): -25 * 2125}, 419904, 7),
    ),
}

# Rays on which the exponent arguments are claimed negative.
EXPONENT_RAYS = {"F2": 4, "F2bar": 5, "H": 1, "Fop6": 2, "Jtilde": 1}


def exponent_arguments(target: str) -> Tuple[PiPoly, ...]:
    if target == "F2":
        return partition_exponents()
    if target == "F2bar":
        return overpartition_exponents()
    if target == "H":
        return p6_exponents()
    if target == "Fop6":
        return op6_exponents()
    if target == "Jtilde":
        return (p6_jtilde_exponent(),)
    raise ValueError(f"unknown target {target!r}")


# ---------------------------------------------------------------------------
# positivity certificates
# ---------------------------------------------------------------------------

def taylor_shift(coeffs: Sequence[IntervalReal], a: IntervalReal) -> List[IntervalReal]:
    """Coefficients of ``p(a + t)`` from ascending coefficients of ``p``."""
    d = list(coeffs)
    n = len(d) - 1
    for i in range(n):
        for j in range(n - 1, i - 1, -1):
            d[j] = d[j] + a * d[j + 1]
    return d


def _shift_lower_bound(coeffs: Sequence[IntervalReal], lo: Fraction, hi: Fraction, prec: int) -> Tuple[Fraction, Fraction]:
    """Lower bound of p on [lo, hi] and an upper bound of p(lo).

    With ``p(lo + t) = sum d_j t^j`` and ``0 <= t <= h``, every term is at
    least ``min(0, d_j) h^j``.
    """
    d = taylor_shift(coeffs, IntervalReal.exact(lo, prec))
    h = hi - lo
    bound = d[0].lower()
    hp = Fraction(1)
    for dj in d[1:]:
        hp *= h
        low = dj.lower()
        if low < 0:
            bound += low * hp
    return bound, d[0].upper()


def _shift_dominates(coeffs: Sequence[IntervalReal], a: Fraction, prec: int) -> bool:
    """All coefficients of p(a + t) are certified nonnegative and p(a) > 0."""
    d = taylor_shift(coeffs, IntervalReal.exact(a, prec))
    return d[0].lo > 0 and all(dj.lo >= 0 for dj in d[1:])


def cauchy_bound(coeffs: Sequence[IntervalReal]) -> Optional[Fraction]:
    """``max(1, sum_{i<n} |c_i| / |c_n|)`` from outward coefficient bounds; None if c_n may vanish."""
    lead = coeffs[-1]
    if lead.lo <= 0:
        return None
    s = sum((max(abs(c.lower()), abs(c.upper())) for c in coeffs[:-1]), Fraction(0))
    return max(Fraction(1), s / lead.lower())


@dataclass(frozen=True)
class Subinterval:
    lo: Fraction
    hi: Fraction
    verdict: str
    lower_bound: Fraction

    def to_json(self) -> Dict[str, str]:
        return {"lo": str(self.lo), "hi": str(self.hi), "verdict": self.verdict,
                "lower_bound": _fmt_bound(self.lower_bound)}


def _fmt_bound(q: Fraction) -> str:
    """Compact decimal rendering of a bound (display only)."""
    if q == 0:
        return "0"
    return f"{float(q):.6e}" if abs(q) < Fraction(10) ** 300 else f"~1e{int(math.log10(abs(q)))}"


@dataclass
class Certificate:
    """Replayable evidence that ``poly`` is positive on ``[ray_start, oo)``."""

    poly: PiPoly
    ray_start: Fraction
    pi_precision: int
    dominance_bound: Optional[Fraction]
    dominance_method: str
    trace: List[Subinterval] = field(default_factory=list)
    status: str = "undecided"
    notes: List[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def proven(self) -> bool:
        return self.status == "proven"

    def to_json(self) -> Dict[str, object]:
        return {
            "poly": self.poly.to_json(),
            "ray_start": str(self.ray_start),
            "pi_precision": str(self.pi_precision),
            "dominance_bound": None if self.dominance_bound is None else str(self.dominance_bound),
            "dominance_method": self.dominance_method,
            "trace": [s.to_json() for s in self.trace],
            "status": self.status,
            "notes": list(self.notes),
            "elapsed": f"{self.elapsed:.3f}",
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "Certificate":
        trace = [
            Subinterval(Fraction(s["lo"]), Fraction(s["hi"]), s["verdict"], Fraction(0))  # type: ignore[index]
            for s in data["trace"]  # type: ignore[union-attr]
        ]
        b = data["dominance_bound"]
        return cls(
            PiPoly.from_json(data["poly"]),  # type: ignore[arg-type]
            Fraction(str(data["ray_start"])),
            int(data["pi_precision"]),  # type: ignore[arg-type]
            None if b is None else Fraction(str(b)),
            str(data["dominance_method"]),
            trace,
            str(data["status"]),
            list(data.get("notes", [])),  # type: ignore[arg-type]
            float(data.get("elapsed", 0.0)),  # type: ignore[arg-type]
        )


# Safety limits on bisection, independent of the no-progress rule.
HARD_DEPTH = 96
MAX_LEAVES = 200_000


class _Abort(Exception):
    def __init__(self, reason: str, fatal: bool):
        super().__init__(reason)
        self.reason = reason
        self.fatal = fatal


def _dyadic_round(q: Fraction, bits: int = 16) -> Fraction:
    """Round to a dyadic rational with ``bits`` fractional bits."""
    return Fraction(round(q * 2 ** bits), 2 ** bits)


def _initial_grid(x0: Fraction, B: Fraction, pieces: int) -> List[Fraction]:
    if B <= x0:
        return [x0]
    pts = [x0]
    geometric = B / x0 > 8
    for i in range(1, pieces):
        if geometric:
            q = Fraction(float(x0) * (float(B / x0) ** (i / pieces)))
        else:
            q = x0 + (B - x0) * i / pieces
        q = _dyadic_round(q)
        if pts[-1] < q < B:
            pts.append(q)
    pts.append(B)
    return pts


def _attempt(poly: PiPoly, x0: Fraction, prec: int, pieces: int, max_depth: int) -> Certificate:
    coeffs = poly.interval_coeffs(prec)
    cert = Certificate(poly, x0, prec, None, "none")
    cb = cauchy_bound(coeffs)
    if cb is None:
        raise _Abort("leading coefficient is not certified positive", fatal=coeffs[-1].hi <= 0)
    cb_int = Fraction(math.floor(cb) + 1)
    # Prefer a shift point where p(a + t) has no negative coefficient.
    B, method = cb_int, "cauchy"
    a = x0
    while a < cb_int:
        if _shift_dominates(coeffs, a, prec):
            B, method = a, "taylor-shift"
            break
        a = a * 2
    B = max(B, x0)
    cert.dominance_bound, cert.dominance_method = B, method
    grid = _initial_grid(x0, B, pieces)
    for g in grid:
        if poly.evaluate(g, prec).hi <= 0:
            raise _Abort(f"polynomial is not positive at x = {g}", fatal=True)
    stack = [(grid[i], grid[i + 1], 0) for i in range(len(grid) - 2, -1, -1)]
    stalled = 0
    while stack:
        lo, hi, depth = stack.pop()
        bound, at_lo = _shift_lower_bound(coeffs, lo, hi, prec)
        if bound > 0:
            cert.trace.append(Subinterval(lo, hi, "positive", bound))
            stalled = 0
            continue
        if at_lo <= 0 or poly.evaluate(hi, prec).hi <= 0:
            raise _Abort(f"polynomial is not positive on [{lo}, {hi}]", fatal=True)
        stalled += 1
        if stalled > max_depth or depth >= HARD_DEPTH or len(cert.trace) > MAX_LEAVES:
            raise _Abort(f"no progress after {max_depth} splits near x = {lo}", fatal=False)
        mid = _dyadic_round((lo + hi) / 2, 16 + depth + 1)
        if not lo < mid < hi:
            mid = (lo + hi) / 2
        stack.append((mid, hi, depth + 1))
        stack.append((lo, mid, depth + 1))
    cert.status = "proven"
    return cert


def certify_positive_on_ray(poly: PiPoly, x0: Scalar, prec: int = 256, cap: int = PREC_CAP,
                            pieces: int = 64, max_depth: int = 12) -> Certificate:
    """Certify ``poly(x) > 0`` for all ``x >= x0`` with pi replaced by an enclosure.

    Positivity beyond a dominance bound B comes either from the Cauchy root
    bound or, when it is smaller, from a point where every Taylor coefficient
    of the shifted polynomial is nonnegative.  On ``[x0, B]`` the interval is
    cut into subintervals, each shown positive from the Taylor expansion at
    its left end.  Precision doubles when bisection stalls; past ``cap`` the
    result is ``undecided``.  A nonpositive value also gives ``undecided``.
    """
    if poly.is_zero():
        raise ValueError("cannot certify the zero polynomial")
    if not poly.is_polynomial():
        raise ValueError("certification needs a genuine polynomial")
    x0 = Fraction(x0)
    if x0 <= 0:
        raise ValueError("ray start must be positive")
    start = time.perf_counter()
    p = prec
    notes: List[str] = []
    while p <= cap:
        try:
            cert = _attempt(poly, x0, p, pieces, max_depth)
            cert.notes = notes
            cert.elapsed = time.perf_counter() - start
            return cert
        except _Abort as exc:
            notes.append(f"prec {p}: {exc.reason}")
            if exc.fatal:
                break
            p *= 2
    cert = Certificate(poly, x0, min(p, cap), None, "none", [], "undecided", notes)
    cert.elapsed = time.perf_counter() - start
    return cert


def verify_certificate(cert: Certificate) -> bool:
    """Replay a certificate from its recorded data."""
    if cert.status != "proven" or cert.dominance_bound is None:
        return False
    prec = cert.pi_precision
    coeffs = cert.poly.interval_coeffs(prec)
    B = cert.dominance_bound
    if cert.dominance_method == "taylor-shift":
        if not _shift_dominates(coeffs, B, prec):
            return False
    elif cert.dominance_method == "cauchy":
        cb = cauchy_bound(coeffs)
        if cb is None or B <= cb:
            return False
    else:
        return False
    if B <= cert.ray_start:
        return B == cert.ray_start and not cert.trace
    pieces = sorted(cert.trace, key=lambda s: s.lo)
    if not pieces or pieces[0].lo != cert.ray_start or pieces[-1].hi != B:
        return False
    for a, b in zip(pieces, pieces[1:]):
        if a.hi != b.lo:
            return False
    for s in pieces:
        bound, _ = _shift_lower_bound(coeffs, s.lo, s.hi, prec)
        if bound <= 0:
            return False
    return True


def certify_negative_on_ray(expr: PiPoly, x0: Scalar, prec: int = 256) -> Certificate:
    """Certify a Laurent polynomial negative on ``[x0, oo)`` via ``-expr * x^m``."""
    m = max(0, -expr.min_exponent())
    return certify_positive_on_ray(-expr.shift(m), x0, prec)


def denominator_positive_check(rf: PiRationalFunction, x0: Scalar, prec: int = 256) -> bool:
    """Certify ``rf.den > 0`` on ``[x0, oo)``."""
    return certify_positive_on_ray(rf.den, x0, prec).proven


# ---------------------------------------------------------------------------
# target registry
# ---------------------------------------------------------------------------

TARGETS = ("F2", "F2bar", "H", "Jtilde", "Fop6")
ROOT_BOUNDS = {"F2": 15, "F2bar": 18, "H": 12, "Jtilde": 5, "Fop6": 9}


def target_function(name: str) -> PiRationalFunction:
    if name == "F2":
        return build_partition_F2()
    if name == "F2bar":
        return build_overpartition_F2()
    if name == "H":
        return build_p6_Ftilde()
    if name == "Jtilde":
        return build_p6_Jtilde()
    if name == "Fop6":
        return build_op6_Ftilde()
    raise ValueError(f"unknown target {name!r}; expected one of {', '.join(TARGETS)}")


def target_numerator(name: str) -> PiPoly:
    return target_function(name).num
