"""Exact polynomials whose coefficients live in Q[pi].

``PiRational`` is an element of Q[pi] (pi treated as a formal symbol).
``PiPoly`` is a Laurent polynomial in one variable with ``PiRational``
coefficients; negative exponents are allowed so that expressions such as
``x + a/(2x)`` can be manipulated before denominators are cleared.

Internally a ``PiPoly`` is a dict ``{(x_power, pi_power): Fraction}``.
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Iterator, List, Mapping, Tuple, Union

from .interval import IntervalReal, pi_enclosure

Scalar = Union[int, Fraction]


class PiRational:
    """Element of Q[pi] in canonical form (zero coefficients dropped)."""

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, Scalar] | None = None):
        c: Dict[int, Fraction] = {}
        if coeffs:
            for j, v in coeffs.items():
                if v:
                    if j < 0:
                        raise ValueError("negative powers of pi are not allowed")
                    c[j] = Fraction(v)
        self._c = c

    @classmethod
    def pi_power(cls, j: int, c: Scalar = 1) -> "PiRational":
        return cls({j: c})

    @property
    def coeffs(self) -> Dict[int, Fraction]:
        return dict(self._c)

    def is_zero(self) -> bool:
        return not self._c

    def degree(self) -> int:
        return max(self._c) if self._c else -1

    def _coerce(self, other) -> "PiRational":
        if isinstance(other, PiRational):
            return other
        return PiRational({0: other})

    def __eq__(self, other) -> bool:
        try:
            return self._c == self._coerce(other)._c
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other) -> "PiRational":
        if isinstance(other, PiPoly):
            return NotImplemented
        o = self._coerce(other)
        c = dict(self._c)
        for j, v in o._c.items():
            c[j] = c.get(j, 0) + v
        return PiRational(c)

    __radd__ = __add__

    def __neg__(self) -> "PiRational":
        return PiRational({j: -v for j, v in self._c.items()})

    def __sub__(self, other) -> "PiRational":
        if isinstance(other, PiPoly):
            return NotImplemented
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PiRational":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PiRational":
        if isinstance(other, PiPoly):
            return NotImplemented
        o = self._coerce(other)
        c: Dict[int, Fraction] = defaultdict(Fraction)
        for j1, v1 in self._c.items():
            for j2, v2 in o._c.items():
                c[j1 + j2] += v1 * v2
        return PiRational(c)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "PiRational":
        r = PiRational({0: 1})
        for _ in range(n):
            r = r * self
        return r

    def evaluate(self, pi: IntervalReal) -> IntervalReal:
        """Interval value with ``pi`` replaced by an enclosure."""
        if not self._c:
            return IntervalReal(0, 0, 0, pi.prec)
        acc = IntervalReal(0, 0, 0, pi.prec)
        for j in range(self.degree(), -1, -1):
            acc = acc * pi
            v = self._c.get(j)
            if v:
                acc = acc + IntervalReal.exact(v, pi.prec)
        return acc

    def to_json(self) -> Dict[str, str]:
        return {str(j): str(v) for j, v in sorted(self._c.items())}

    @classmethod
    def from_json(cls, data: Mapping[str, str]) -> "PiRational":
        return cls({int(j): Fraction(v) for j, v in data.items()})

    def __repr__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for j in sorted(self._c, reverse=True):
            v = self._c[j]
            parts.append(f"({v})" + (f"*pi^{j}" if j else ""))
        return " + ".join(parts)


class PiPoly:
    """Laurent polynomial in one variable over Q[pi]."""

    __slots__ = ("_t",)

    def __init__(self, terms: Mapping[Tuple[int, int], Scalar] | None = None):
        t: Dict[Tuple[int, int], Fraction] = {}
        if terms:
            for k, v in terms.items():
                if v:
                    t[k] = v if isinstance(v, Fraction) else Fraction(v)
        self._t = t

    # -- constructors ---------------------------------------------------
    @classmethod
    def _raw(cls, t: Dict[Tuple[int, int], Fraction]) -> "PiPoly":
        p = cls.__new__(cls)
        p._t = {k: v for k, v in t.items() if v}
        return p

    @classmethod
    def var(cls) -> "PiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def monomial(cls, x_power: int, c: Scalar = 1, pi_power: int = 0) -> "PiPoly":
        return cls({(x_power, pi_power): c})

    @classmethod
    def constant(cls, c: Union[Scalar, PiRational]) -> "PiPoly":
        if isinstance(c, PiRational):
            return cls({(0, j): v for j, v in c.coeffs.items()})
        return cls({(0, 0): c})

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[Union[Scalar, PiRational]]) -> "PiPoly":
        """Polynomial from ascending coefficients."""
        t = {}
        for i, c in enumerate(coeffs):
            if isinstance(c, PiRational):
                for j, v in c.coeffs.items():
                    t[(i, j)] = v
            else:
                t[(i, 0)] = c
        return cls(t)

    # -- structure ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self._t

    def degree(self) -> int:
        return max(i for i, _ in self._t) if self._t else -1

    def min_exponent(self) -> int:
        return min(i for i, _ in self._t) if self._t else 0

    def is_polynomial(self) -> bool:
        return self.min_exponent() >= 0

    def pi_degree(self) -> int:
        return max(j for _, j in self._t) if self._t else -1

    def coeff(self, i: int) -> PiRational:
        return PiRational({j: v for (a, j), v in self._t.items() if a == i})

    def leading_coeff(self) -> PiRational:
        return self.coeff(self.degree())

    def coeff_list(self) -> List[PiRational]:
        """Coefficients of x^0..x^deg; requires a genuine polynomial."""
        if not self.is_polynomial():
            raise ValueError("Laurent polynomial has negative exponents")
        buckets: List[Dict[int, Fraction]] = [dict() for _ in range(self.degree() + 1)]
        for (i, j), v in self._t.items():
            buckets[i][j] = v
        return [PiRational(b) for b in buckets]

    def terms(self) -> Iterator[Tuple[int, int, Fraction]]:
        for (i, j), v in sorted(self._t.items()):
            yield i, j, v

    # -- arithmetic -----------------------------------------------------
    def _coerce(self, other) -> "PiPoly":
        if isinstance(other, PiPoly):
            return other
        if isinstance(other, PiRational):
            return PiPoly.constant(other)
        return PiPoly({(0, 0): other})

    def __eq__(self, other) -> bool:
        try:
            return self._t == self._coerce(other)._t
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._t.items()))

    def __add__(self, other) -> "PiPoly":
        o = self._coerce(other)
        t = dict(self._t)
        for k, v in o._t.items():
            t[k] = t.get(k, 0) + v
        return PiPoly._raw(t)

    __radd__ = __add__

    def __neg__(self) -> "PiPoly":
        return PiPoly._raw({k: -v for k, v in self._t.items()})

    def __sub__(self, other) -> "PiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "PiPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "PiPoly":
        if isinstance(other, (int, Fraction)):
            if not other:
                return PiPoly()
            return PiPoly._raw({k: v * other for k, v in self._t.items()})
        o = self._coerce(other)
        acc: Dict[Tuple[int, int], Fraction] = defaultdict(Fraction)
        items = list(o._t.items())
        for (i1, j1), v1 in self._t.items():
            for (i2, j2), v2 in items:
                acc[(i1 + i2, j1 + j2)] += v1 * v2
        return PiPoly._raw(acc)

    __rmul__ = __mul__

    def __truediv__(self, c: Scalar) -> "PiPoly":
        c = Fraction(c)
        return PiPoly._raw({k: v / c for k, v in self._t.items()})

    def __pow__(self, n: int) -> "PiPoly":
        if n < 0:
            raise ValueError("negative power of a PiPoly")
        result = PiPoly({(0, 0): 1})
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k: int) -> "PiPoly":
        """Multiply by x**k."""
        return PiPoly._raw({(i + k, j): v for (i, j), v in self._t.items()})

    def scale_pi(self, k: int) -> "PiPoly":
        """Multiply by pi**k."""
        return PiPoly._raw({(i, j + k): v for (i, j), v in self._t.items()})

    def content_divide(self, c: Scalar) -> "PiPoly":
        return self / c

    def compose(self, inner: "PiPoly") -> "PiPoly":
        """``self(inner)``; ``self`` must be a genuine polynomial."""
        acc = PiPoly()
        for c in reversed(self.coeff_list()):
            acc = acc * inner + PiPoly.constant(c)
        return acc

    def divmod_poly(self, other: "PiPoly") -> Tuple["PiPoly", "PiPoly"]:
        """Long division by a polynomial whose leading coefficient is rational.

        Both operands must be genuine polynomials.
        """
        lead = other.leading_coeff()
        if lead.degree() != 0:
            raise ValueError("divisor must have a rational leading coefficient")
        lc = lead.coeffs[0]
        d = other.degree()
        rem = self
        quot: Dict[Tuple[int, int], Fraction] = {}
        while not rem.is_zero() and rem.degree() >= d:
            top = rem.degree()
            c = rem.coeff(top)
            step = PiPoly({(top - d, j): v / lc for j, v in c.coeffs.items()})
            for k, v in step._t.items():
                quot[k] = quot.get(k, 0) + v
            rem = rem - step * other
        return PiPoly(quot), rem

    # -- evaluation -----------------------------------------------------
    def interval_coeffs(self, prec: int) -> List[IntervalReal]:
        pi = pi_enclosure(prec)
        return [c.evaluate(pi) for c in self.coeff_list()]

    def evaluate(self, x: Union[Scalar, IntervalReal], prec: int = 128) -> IntervalReal:
        """Interval value at ``x`` (Horner in x, pi replaced by an enclosure)."""
        pi = pi_enclosure(prec)
        xi = IntervalReal.coerce(x, prec)
        lo = self.min_exponent()
        body = self.shift(-lo) if lo < 0 else self
        acc = IntervalReal(0, 0, 0, prec)
        for c in reversed(body.coeff_list()):
            acc = acc * xi + c.evaluate(pi)
        if lo < 0:
            acc = acc * (xi.reciprocal() ** (-lo))
        return acc

    def exact_value(self, x: Scalar, pi_value: Scalar) -> Fraction:
        """Value with x and pi both replaced by rationals (testing aid)."""
        x, pv = Fraction(x), Fraction(pi_value)
        return sum((v * x ** i * pv ** j for (i, j), v in self._t.items()), Fraction(0))

    # -- serialization --------------------------------------------------
    def to_json(self) -> List[Dict[str, str]]:
        if not self.is_polynomial():
            raise ValueError("only polynomials are serialized")
        return [c.to_json() for c in self.coeff_list()]

    @classmethod
    def from_json(cls, data: List[Mapping[str, str]]) -> "PiPoly":
        return cls.from_coeffs(PiRational.from_json(c) for c in data)

    def __repr__(self) -> str:
        if not self._t:
            return "PiPoly(0)"
        return f"PiPoly(deg={self.degree()}, min_exp={self.min_exponent()}, terms={len(self._t)})"


@dataclass(frozen=True)
class PiRationalFunction:
    """Quotient ``num/den`` kept exactly as constructed (no gcd cancellation)."""

    num: PiPoly
    den: PiPoly

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("denominator is identically zero")

    def evaluate(self, x: Union[Scalar, IntervalReal], prec: int = 128) -> IntervalReal:
        return self.num.evaluate(x, prec) / self.den.evaluate(x, prec)


# handy atoms
X = PiPoly.var()
ONE = PiPoly.constant(1)


def pi_times(c: Scalar, j: int = 1) -> PiRational:
    """``c * pi**j`` as a PiRational."""
    return PiRational.pi_power(j, c)
