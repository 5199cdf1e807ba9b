"""Rigorous interval arithmetic over dyadic rationals.

An :class:`IntervalReal` stores two integer mantissas sharing one binary
exponent, so it denotes ``[lo * 2**exp, hi * 2**exp]``.  Every operation
rounds outward, which makes the result an enclosure of the exact value.
Mantissas are kept to about ``prec`` bits.

Elementary functions:

* ``pi_enclosure``  Machin's formula in fixed point with counted truncation error
* ``exp_iv``        argument reduction by ``ln 2`` plus a Taylor polynomial with
                    explicit remainder
* ``sqrt_iv``       exact integer square roots (``math.isqrt``)
* ``bessel_i1``     ascending series with a geometric tail bound
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Optional, Union

DEFAULT_PREC = 128
PREC_CAP = 4096

Number = Union[int, Fraction, "IntervalReal"]


class IntervalDomainError(ValueError):
    """Raised for arguments outside an operation's domain."""


class UndecidableError(RuntimeError):
    """A comparison stayed inconclusive up to the precision cap."""


def _round_floor(m: int, s: int) -> int:
    return m >> s


def _round_ceil(m: int, s: int) -> int:
    return -((-m) >> s)


def _normalize(lo: int, hi: int, exp: int, prec: int) -> tuple[int, int, int]:
    b = max(abs(lo).bit_length(), abs(hi).bit_length())
    s = b - prec
    if s > 0:
        lo = lo >> s
        hi = -((-hi) >> s)
        exp += s
    return lo, hi, exp


def _cmp_dyadic(m1: int, e1: int, m2: int, e2: int) -> int:
    """Sign of ``m1*2**e1 - m2*2**e2``."""
    if e1 >= e2:
        d = (m1 << (e1 - e2)) - m2
    else:
        d = m1 - (m2 << (e2 - e1))
    return (d > 0) - (d < 0)


def _cmp_dyadic_fraction(m: int, e: int, q: Fraction) -> int:
    """Sign of ``m*2**e - q`` computed exactly."""
    p, d = q.numerator, q.denominator
    if e >= 0:
        diff = (m * d << e) - p
    else:
        diff = m * d - (p << (-e))
    return (diff > 0) - (diff < 0)


class IntervalReal:
    """Closed interval with dyadic endpoints and outward rounding."""

    __slots__ = ("lo", "hi", "exp", "prec")

    def __init__(self, lo: int, hi: int, exp: int = 0, prec: int = DEFAULT_PREC):
        if lo > hi:
            raise ValueError("interval endpoints out of order")
        self.lo, self.hi, self.exp = _normalize(lo, hi, exp, prec)
        self.prec = prec

    # -- construction ---------------------------------------------------
    @classmethod
    def exact(cls, value: Union[int, Fraction], prec: int = DEFAULT_PREC) -> "IntervalReal":
        """Tightest enclosure of an exact rational at the given precision."""
        if isinstance(value, int):
            return cls(value, value, 0, prec)
        q = Fraction(value)
        if q.denominator == 1:
            return cls(q.numerator, q.numerator, 0, prec)
        p, d = q.numerator, q.denominator
        k = prec + d.bit_length() - abs(p).bit_length() + 2
        k = max(k, 0)
        lo = (p << k) // d
        hi = -((-p << k) // d)
        return cls(lo, hi, -k, prec)

    @classmethod
    def hull(cls, a: Union[int, Fraction], b: Union[int, Fraction], prec: int = DEFAULT_PREC) -> "IntervalReal":
        x, y = cls.exact(a, prec), cls.exact(b, prec)
        return x.union(y)

    @staticmethod
    def coerce(value: Number, prec: int = DEFAULT_PREC) -> "IntervalReal":
        if isinstance(value, IntervalReal):
            return value
        if isinstance(value, float):
            # floats are exact dyadics
            return IntervalReal.exact(Fraction(value), prec)
        return IntervalReal.exact(value, prec)

    def with_prec(self, prec: int) -> "IntervalReal":
        return IntervalReal(self.lo, self.hi, self.exp, prec)

    # -- endpoints ------------------------------------------------------
    def lower(self) -> Fraction:
        return Fraction(self.lo) * Fraction(2) ** self.exp

    def upper(self) -> Fraction:
        return Fraction(self.hi) * Fraction(2) ** self.exp

    def mid(self) -> Fraction:
        return (self.lower() + self.upper()) / 2

    def width(self) -> Fraction:
        return Fraction(self.hi - self.lo) * Fraction(2) ** self.exp

    def lo_point(self) -> "IntervalReal":
        return IntervalReal(self.lo, self.lo, self.exp, self.prec)

    def hi_point(self) -> "IntervalReal":
        return IntervalReal(self.hi, self.hi, self.exp, self.prec)

    def __float__(self) -> float:
        return float(self.mid())

    def rel_width(self) -> Fraction:
        """Width divided by the smallest magnitude in the interval (inf if it straddles 0)."""
        if self.lo <= 0 <= self.hi:
            return Fraction(10**30)
        m = min(abs(self.lo), abs(self.hi))
        return Fraction(self.hi - self.lo, m)

    # -- predicates -----------------------------------------------------
    def contains(self, value: Union[int, Fraction, "IntervalReal"]) -> bool:
        if isinstance(value, IntervalReal):
            return (_cmp_dyadic(self.lo, self.exp, value.lo, value.exp) <= 0
                    and _cmp_dyadic(value.hi, value.exp, self.hi, self.exp) <= 0)
        q = Fraction(value)
        return (_cmp_dyadic_fraction(self.lo, self.exp, q) <= 0
                and _cmp_dyadic_fraction(self.hi, self.exp, q) >= 0)

    def is_positive(self) -> bool:
        return self.lo > 0

    def is_negative(self) -> bool:
        return self.hi < 0

    def certainly_lt(self, other: Number) -> bool:
        """Every point of ``self`` is strictly below every point of ``other``."""
        if isinstance(other, IntervalReal):
            return _cmp_dyadic(self.hi, self.exp, other.lo, other.exp) < 0
        return _cmp_dyadic_fraction(self.hi, self.exp, Fraction(other)) < 0

    def certainly_gt(self, other: Number) -> bool:
        if isinstance(other, IntervalReal):
            return _cmp_dyadic(self.lo, self.exp, other.hi, other.exp) > 0
        return _cmp_dyadic_fraction(self.lo, self.exp, Fraction(other)) > 0

    def certainly_le(self, other: Number) -> bool:
        if isinstance(other, IntervalReal):
            return _cmp_dyadic(self.hi, self.exp, other.lo, other.exp) <= 0
        return _cmp_dyadic_fraction(self.hi, self.exp, Fraction(other)) <= 0

    def union(self, other: "IntervalReal") -> "IntervalReal":
        e = min(self.exp, other.exp)
        a_lo, a_hi = self.lo << (self.exp - e), self.hi << (self.exp - e)
        b_lo, b_hi = other.lo << (other.exp - e), other.hi << (other.exp - e)
        return IntervalReal(min(a_lo, b_lo), max(a_hi, b_hi), e, max(self.prec, other.prec))

    # -- arithmetic -----------------------------------------------------
    def _top(self) -> int:
        return max(abs(self.lo).bit_length(), abs(self.hi).bit_length()) + self.exp

    def __neg__(self) -> "IntervalReal":
        return IntervalReal(-self.hi, -self.lo, self.exp, self.prec)

    def __pos__(self) -> "IntervalReal":
        return self

    def __abs__(self) -> "IntervalReal":
        if self.lo >= 0:
            return self
        if self.hi <= 0:
            return -self
        return IntervalReal(0, max(-self.lo, self.hi), self.exp, self.prec)

    def __add__(self, other: Number) -> "IntervalReal":
        if not isinstance(other, IntervalReal):
            if isinstance(other, int) and other == 0:
                return self
            other = IntervalReal.exact(other, self.prec)
        prec = max(self.prec, other.prec)
        a_lo, a_hi, a_e = self.lo, self.hi, self.exp
        b_lo, b_hi, b_e = other.lo, other.hi, other.exp
        # bits far below the working precision of the larger operand are
        # rounded away first so alignment never builds huge integers
        floor_e = max(self._top(), other._top()) - 2 * prec - 16
        if a_e < floor_e:
            a_lo, a_hi, a_e = a_lo >> (floor_e - a_e), -((-a_hi) >> (floor_e - a_e)), floor_e
        if b_e < floor_e:
            b_lo, b_hi, b_e = b_lo >> (floor_e - b_e), -((-b_hi) >> (floor_e - b_e)), floor_e
        e = min(a_e, b_e)
        lo = (a_lo << (a_e - e)) + (b_lo << (b_e - e))
        hi = (a_hi << (a_e - e)) + (b_hi << (b_e - e))
        return IntervalReal(lo, hi, e, prec)

    __radd__ = __add__

    def __sub__(self, other: Number) -> "IntervalReal":
        if not isinstance(other, IntervalReal):
            other = IntervalReal.exact(other, self.prec)
        return self + (-other)

    def __rsub__(self, other: Number) -> "IntervalReal":
        return (-self) + other

    def __mul__(self, other: Number) -> "IntervalReal":
        if not isinstance(other, IntervalReal):
            if isinstance(other, int):
                if other >= 0:
                    return IntervalReal(self.lo * other, self.hi * other, self.exp, self.prec)
                return IntervalReal(self.hi * other, self.lo * other, self.exp, self.prec)
            other = IntervalReal.exact(other, self.prec)
        prec = max(self.prec, other.prec)
        a, b, c, d = self.lo, self.hi, other.lo, other.hi
        if a >= 0 and c >= 0:
            lo, hi = a * c, b * d
        elif b <= 0 and d <= 0:
            lo, hi = b * d, a * c
        elif a >= 0 and d <= 0:
            lo, hi = b * c, a * d
        elif b <= 0 and c >= 0:
            lo, hi = a * d, b * c
        else:
            ps = (a * c, a * d, b * c, b * d)
            lo, hi = min(ps), max(ps)
        return IntervalReal(lo, hi, self.exp + other.exp, prec)

    __rmul__ = __mul__

    def reciprocal(self) -> "IntervalReal":
        if self.lo <= 0 <= self.hi:
            raise IntervalDomainError("division by an interval containing 0")
        if self.hi < 0:
            return -((-self).reciprocal())
        k = self.prec + self.hi.bit_length() + 4
        num = 1 << k
        lo = num // self.hi
        hi = -((-num) // self.lo)
        return IntervalReal(lo, hi, -k - self.exp, self.prec)

    def __truediv__(self, other: Number) -> "IntervalReal":
        if not isinstance(other, IntervalReal):
            q = Fraction(other)
            if q == 0:
                raise IntervalDomainError("division by zero")
            if q.denominator == 1 and q.numerator & (q.numerator - 1) == 0 and q > 0:
                return self.ldexp(-(q.numerator.bit_length() - 1))
            other = IntervalReal.exact(q, self.prec)
        return self * other.reciprocal()

    def __rtruediv__(self, other: Number) -> "IntervalReal":
        return IntervalReal.coerce(other, self.prec) * self.reciprocal()

    def ldexp(self, k: int) -> "IntervalReal":
        """Exact multiplication by ``2**k``."""
        return IntervalReal(self.lo, self.hi, self.exp + k, self.prec)

    def __pow__(self, n: int) -> "IntervalReal":
        return pow_iv(self, n)

    # -- display --------------------------------------------------------
    def to_decimal_str(self, digits: int = 20) -> str:
        lo, hi = self.lower(), self.upper()
        return f"[{_fmt_directed(lo, digits, down=True)}, {_fmt_directed(hi, digits, down=False)}]"

    def __repr__(self) -> str:
        return f"IntervalReal{self.to_decimal_str(17)}"

    def to_json(self) -> dict:
        """Exact dyadic endpoints as decimal strings, plus a readable enclosure."""
        return {
            "lo": str(self.lo),
            "hi": str(self.hi),
            "exp": str(self.exp),
            "prec": str(self.prec),
            "decimal": self.to_decimal_str(20),
        }

    @classmethod
    def from_json(cls, data: dict) -> "IntervalReal":
        return cls(int(data["lo"]), int(data["hi"]), int(data["exp"]), int(data.get("prec", DEFAULT_PREC)))

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalReal):
            return NotImplemented
        return (self.lower(), self.upper()) == (other.lower(), other.upper())

    def __hash__(self) -> int:
        return hash((self.lower(), self.upper()))


def _fmt_directed(q: Fraction, digits: int, down: bool) -> str:
    """Decimal string of ``q`` rounded in the given direction."""
    if q == 0:
        return "0"
    sign = -1 if q < 0 else 1
    a = abs(q)
    e = math.floor(math.log10(a.numerator) - math.log10(a.denominator))
    scale = Fraction(10) ** (digits - 1 - e)
    v = a * scale
    toward_zero = (down and sign > 0) or (not down and sign < 0)
    m = math.floor(v) if toward_zero else math.ceil(v)
    s = f"{m}e{e - digits + 1}"
    return ("-" if sign < 0 else "") + s


# ---------------------------------------------------------------------------
# constants
# ---------------------------------------------------------------------------

def _atan_inv_fixed(x: int, k: int) -> tuple[int, int]:
    """``atan(1/x) * 2**k`` as (approximation, absolute error bound)."""
    total = 0
    power = (1 << k) // x
    x2 = x * x
    j = 0
    terms = 0
    while power:
        t = power // (2 * j + 1)
        total += -t if j % 2 else t
        power //= x2
        j += 1
        terms += 1
    # each floor loses < 1 in the power and < 1 in the quotient; the
    # alternating tail after the last (zero) term is at most 1
    return total, 2 * terms + 2


@lru_cache(maxsize=None)
def _pi_fixed(k: int) -> tuple[int, int]:
    a, ea = _atan_inv_fixed(5, k)
    b, eb = _atan_inv_fixed(239, k)
    return 16 * a - 4 * b, 16 * ea + 4 * eb


def pi_enclosure(prec: int = DEFAULT_PREC) -> IntervalReal:
    """Enclosure of pi with width at most ``2**(-prec+2)``."""
    if prec < 16:
        raise ValueError("prec must be at least 16")
    k = prec + 16
    v, err = _pi_fixed(k)
    return IntervalReal(v - err, v + err, -k, prec + 2)


@lru_cache(maxsize=None)
def _ln2_fixed(k: int) -> tuple[int, int]:
    # ln 2 = 2 atanh(1/3) = sum 2 / ((2j+1) 3^(2j+1))
    total = 0
    power = (2 << k) // 3
    j = 0
    terms = 0
    while power:
        total += power // (2 * j + 1)
        power //= 9
        j += 1
        terms += 1
    return total, 2 * terms + 2


def ln2_enclosure(prec: int = DEFAULT_PREC) -> IntervalReal:
    k = prec + 16
    v, err = _ln2_fixed(k)
    return IntervalReal(v - err, v + err, -k, prec + 2)


# ---------------------------------------------------------------------------
# elementary functions
# ---------------------------------------------------------------------------

_LN2_FLOAT = math.log(2.0)


def _exp_point(m: int, e: int, prec: int) -> IntervalReal:
    """Enclosure of ``exp(m * 2**e)``."""
    if m == 0:
        return IntervalReal(1, 1, 0, prec)
    wp = prec + 32
    d = Fraction(m) * Fraction(2) ** e
    if abs(d) > 2 ** 40:
        raise OverflowError("exp argument too large")
    k = round(float(d) / _LN2_FLOAT)
    t = IntervalReal.exact(d, wp) - ln2_enclosure(wp) * k
    r = 10
    t = t.ldexp(-r)  # |t| < 2**-10
    # Taylor polynomial; remainder |t|^(N+1)/(N+1)! * e^|t| <= 2 |t|^(N+1)/(N+1)!
    total = IntervalReal(1, 1, 0, wp)
    term = IntervalReal(1, 1, 0, wp)
    n = 0
    tmag = Fraction(1, 2 ** r)
    bound = Fraction(1)
    while True:
        n += 1
        term = term * t / n
        total = total + term
        bound = bound * tmag / (n + 1)
        if bound * 2 < Fraction(1, 2 ** (wp + 8)):
            break
    rem = IntervalReal.exact(bound * 2, wp)
    total = total + IntervalReal(-rem.hi, rem.hi, rem.exp, wp)
    for _ in range(r):
        total = total * total
    return total.ldexp(k).with_prec(prec)


def exp_iv(x: Number, prec: Optional[int] = None) -> IntervalReal:
    """Enclosure of ``exp(x)``; exp is increasing so endpoints suffice."""
    x = IntervalReal.coerce(x, prec or DEFAULT_PREC)
    p = prec or x.prec
    lo = _exp_point(x.lo, x.exp, p)
    if x.lo == x.hi:
        return lo
    hi = _exp_point(x.hi, x.exp, p)
    return IntervalReal(*_span(lo, hi), p)


def _span(a: IntervalReal, b: IntervalReal) -> tuple[int, int, int]:
    """Mantissas/exponent spanning ``a.lower()`` to ``b.upper()``."""
    e = min(a.exp, b.exp)
    return a.lo << (a.exp - e), b.hi << (b.exp - e), e


def sqrt_iv(x: Number, prec: Optional[int] = None) -> IntervalReal:
    x = IntervalReal.coerce(x, prec or DEFAULT_PREC)
    p = prec or x.prec
    if x.lo < 0:
        raise IntervalDomainError("sqrt of an interval with negative part")
    lo, hi, e = x.lo, x.hi, x.exp
    if e % 2:
        lo, hi, e = lo << 1, hi << 1, e - 1
    k = max(0, p + 4 - hi.bit_length() // 2)
    lo_s, hi_s = lo << (2 * k), hi << (2 * k)
    r_lo = math.isqrt(lo_s)
    r_hi = math.isqrt(hi_s)
    if r_hi * r_hi < hi_s:
        r_hi += 1
    return IntervalReal(r_lo, r_hi, e // 2 - k, p)


def pow_iv(x: Number, n: Union[int, Fraction]) -> IntervalReal:
    """Integer or half-integer power."""
    x = IntervalReal.coerce(x)
    q = Fraction(n)
    if q.denominator == 2:
        return pow_iv(sqrt_iv(x), q.numerator)
    if q.denominator != 1:
        raise ValueError("only integer and half-integer exponents are supported")
    n = q.numerator
    if n < 0:
        return pow_iv(x, -n).reciprocal()
    if n == 0:
        return IntervalReal(1, 1, 0, x.prec)
    if n % 2 == 0:
        x = abs(x)
    result = IntervalReal(1, 1, 0, x.prec)
    base = x
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def _i1_point(m: int, e: int, prec: int) -> IntervalReal:
    """Enclosure of I_1(m * 2**e) for a nonnegative dyadic argument."""
    if m == 0:
        return IntervalReal(0, 0, 0, prec)
    wp = prec + 24
    half = IntervalReal(m, m, e - 1, wp)       # s/2, exact
    v = half * half                            # (s/2)^2
    v_hi = v.upper()
    term = half
    total = half
    j = 0
    while True:
        # term_{j+1} = term_j * v / ((j+1)(j+2))
        term = term * v / ((j + 1) * (j + 2))
        total = total + term
        j += 1
        ratio = v_hi / ((j + 1) * (j + 2))
        if ratio < Fraction(1, 2):
            tail_max = term.upper() * ratio / (1 - ratio)
            if tail_max < total.lower() / Fraction(2) ** (wp + 4):
                break
    tail = IntervalReal.exact(tail_max, wp)
    total = total + IntervalReal(0, tail.hi, tail.exp, wp)
    return total.with_prec(prec)


def bessel_i1(s: Number, prec: Optional[int] = None) -> IntervalReal:
    """Enclosure of the modified Bessel function I_1 on ``s >= 0``.

    I_1 is increasing on ``s >= 0``, so the enclosure is assembled from the
    two endpoint evaluations.
    """
    s = IntervalReal.coerce(s, prec or DEFAULT_PREC)
    p = prec or s.prec
    if s.lo < 0:
        raise IntervalDomainError("bessel_i1 requires a nonnegative argument")
    lo = _i1_point(s.lo, s.exp, p)
    if s.lo == s.hi:
        return lo
    hi = _i1_point(s.hi, s.exp, p)
    return IntervalReal(*_span(lo, hi), p)


# ---------------------------------------------------------------------------
# precision control
# ---------------------------------------------------------------------------

def decide(predicate: Callable[[int], Optional[bool]], prec: int = DEFAULT_PREC,
           cap: int = PREC_CAP) -> bool:
    """Run ``predicate(prec)`` with doubling precision until it returns a bool.

    ``predicate`` returns None when its interval evaluation straddles the
    decision boundary.
    """
    p = prec
    while p <= cap:
        verdict = predicate(p)
        if verdict is not None:
            return verdict
        p *= 2
    raise UndecidableError(f"undecidable at precision cap {cap}")
