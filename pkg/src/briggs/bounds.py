"""Explicit asymptotic sandwiches for the four counting functions.

All quantities are evaluated with :mod:`briggs.interval`, so a reported
containment ``lower < a(n) < upper`` is a rigorous statement about the
formula, not a floating-point estimate.

Families:

* ordinary and overpartition: ``C e^mu f(mu) < a(n) < C e^mu g(mu)`` with
  ``f, g = t^-2 (1 - 1/t -+ t^-10)``, valid from n = 1520 and n = 821;
* k-regular: ``M_k(n) (1 -+ mu_k^-6)`` with a Bessel main term, valid from
  the per-k thresholds below;
* k-regular overpartitions: ``C_k(n) I_1(mu-bar_k) (1 -+ mu-bar_k^-6)``.

The error machinery behind the k-regular bounds (the E and B envelopes of
Chern's formula specialised to ``(q^k;q^k)/(q;q)``) is also exposed, so the
per-k constants can be recomputed rather than trusted.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

from .interval import (
    DEFAULT_PREC,
    IntervalDomainError,
    IntervalReal,
    bessel_i1,
    exp_iv,
    pi_enclosure,
    sqrt_iv,
)
from .series import PartitionKind

# Validity thresholds of the bound families.
WANG_YANG_START = {PartitionKind.ORDINARY: 1520, PartitionKind.OVERPARTITION: 821}
CHERN_START = {2: 1067, 3: 821, 4: 711, 5: 695, 6: 677, 7: 652, 8: 651, 9: 615}
PZZ_START = {2: 375, 3: 365, 4: 250, 5: 427, 6: 2055, 7: 1230, 8: 1927, 9: 8187}
RHAT_START = {2: 60, 3: 40, 4: 42, 5: 47, 6: 46, 7: 75, 8: 87, 9: 130}

# C_k(n) = num * sqrt(rad) * pi^2 / mu-bar_k(n)
PZZ_PREFACTOR: Dict[int, Tuple[Fraction, int]] = {
    2: (Fraction(1, 4), 2),      # 1/sqrt(8) = sqrt(2)/4
    3: (Fraction(2, 9), 3),
    4: (Fraction(3, 4), 1),
    5: (Fraction(8, 25), 5),
    6: (Fraction(5, 18), 6),
    7: (Fraction(18, 49), 7),
    8: (Fraction(7, 8), 2),
    9: (Fraction(8, 9), 1),
}

# tabulated C_k divided by the derived main-term constant
PZZ_TABLE_EXCESS = {2: 2, 3: 2, 4: 4, 5: 4, 6: 4, 7: 6, 8: 8, 9: 6}

# R-hat_k(n) = num * pi^(3/2) / sqrt(rad * mu_k(n)) * exp(mu_k(n) / 2)
RHAT_PREFACTOR: Dict[int, Tuple[Fraction, int]] = {
    2: (Fraction(1, 3), 2),
    3: (Fraction(16, 27), 3),
    4: (Fraction(1, 4), 1),
    5: (Fraction(64, 75), 5),
    6: (Fraction(20, 27), 3),
    7: (Fraction(48, 49), 7),
    8: (Fraction(7, 16), 1),
    9: (Fraction(64, 243), 1),
}

DI_COEFFS = (
    Fraction(1),
    Fraction(-3, 8),
    Fraction(-15, 128),
    Fraction(-105, 1024),
    Fraction(-4725, 32768),
    Fraction(-72765, 262144),
)
DONG_JI_START = 26


class BoundError(ValueError):
    """A bound was requested outside the range where it is claimed."""


def _iv(x, prec: int) -> IntervalReal:
    return IntervalReal.coerce(x, prec)


# ---------------------------------------------------------------------------
# growth parameters
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GrowthParam:
    kind: PartitionKind
    n: int
    mu: IntervalReal


def mu(kind: PartitionKind, n: int, prec: int = DEFAULT_PREC) -> IntervalReal:
    """Enclosure of the growth parameter of ``kind`` at ``n``.

    ordinary           pi sqrt(24n - 1) / 6
    overpartition      pi sqrt(n)
    k-regular          (pi/6) sqrt((1 - 1/k)(24n + k - 1))
    k-regular over.    pi sqrt((1 - 1/k) n)
    """
    pi = pi_enclosure(prec)
    v = kind.variant
    if v == PartitionKind.ORDINARY:
        if n < 1:
            raise BoundError("mu(n) needs n >= 1")
        return pi * sqrt_iv(_iv(24 * n - 1, prec)) / 6
    if v == PartitionKind.OVERPARTITION:
        return pi * sqrt_iv(_iv(n, prec))
    k = kind.k
    if v == PartitionKind.REGULAR:
        return pi * sqrt_iv(_iv(Fraction(k - 1, k) * (24 * n + k - 1), prec)) / 6
    return pi * sqrt_iv(_iv(Fraction(k - 1, k) * n, prec))


def growth_param(kind: PartitionKind, n: int, prec: int = DEFAULT_PREC) -> GrowthParam:
    return GrowthParam(kind, n, mu(kind, n, prec))


# ---------------------------------------------------------------------------
# bound pairs
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class BoundPair:
    kind: PartitionKind
    n: int
    lower: IntervalReal
    upper: IntervalReal
    source: str

    @property
    def ordered(self) -> bool:
        return self.lower.certainly_lt(self.upper)

    def contains_strictly(self, value: int) -> bool:
        """``lower < value < upper`` for every point of both enclosures."""
        return self.lower.certainly_lt(value) and self.upper.certainly_gt(value)

    def max_rel_width(self) -> Fraction:
        return max(self.lower.rel_width(), self.upper.rel_width())

    def to_row(self, exact: Optional[int] = None) -> Dict[str, object]:
        return {
            "kind": self.kind.label,
            "k": None if self.kind.k is None else str(self.kind.k),
            "n": str(self.n),
            "lower": self.lower.to_json(),
            "upper": self.upper.to_json(),
            "exact": None if exact is None else str(exact),
            "inside": None if exact is None else self.contains_strictly(exact),
            "source": self.source,
        }

    @classmethod
    def from_row(cls, row: Dict[str, object]) -> "BoundPair":
        return cls(
            PartitionKind.parse(str(row["kind"])),
            int(row["n"]),  # type: ignore[arg-type]
            IntervalReal.from_json(row["lower"]),  # type: ignore[arg-type]
            IntervalReal.from_json(row["upper"]),  # type: ignore[arg-type]
            str(row["source"]),
        )


def wy_f(t: IntervalReal) -> IntervalReal:
    """t^-2 (1 - 1/t - t^-10)."""
    r = t.reciprocal()
    return r * r * (1 - r - r ** 10)


def wy_g(t: IntervalReal) -> IntervalReal:
    """t^-2 (1 - 1/t + t^-10)."""
    r = t.reciprocal()
    return r * r * (1 - r + r ** 10)


def wang_yang_bounds(kind: PartitionKind, n: int, prec: int = DEFAULT_PREC) -> BoundPair:
    if kind.variant not in WANG_YANG_START:
        raise BoundError(f"no Wang-Yang bound for {kind.label}")
    start = WANG_YANG_START[kind.variant]
    if n < start:
        raise BoundError(f"{kind.label}: bound claimed only for n >= {start}")
    pi = pi_enclosure(prec)
    m = mu(kind, n, prec)
    if kind.variant == PartitionKind.ORDINARY:
        pre = sqrt_iv(_iv(12, prec)) * pi * pi / 36
    else:
        pre = pi * pi / 8
    e = pre * exp_iv(m)
    return BoundPair(kind, n, e * wy_f(m), e * wy_g(m), "wang-yang")


def _check_k(k: int) -> None:
    if not 2 <= k <= 9:
        raise BoundError("k must lie in 2..9")


def chern_main_term(k: int, n: int, prec: int = DEFAULT_PREC) -> IntervalReal:
    """M_k(n) = (k - 1) pi^2 I_1(mu_k) / (3 k sqrt(k) mu_k)."""
    pi = pi_enclosure(prec)
    m = mu(PartitionKind.regular(k), n, prec)
    return (k - 1) * pi * pi * bessel_i1(m) / (3 * k * sqrt_iv(_iv(k, prec)) * m)


def chern_bounds_pk(k: int, n: int, prec: int = DEFAULT_PREC) -> BoundPair:
    _check_k(k)
    if n < CHERN_START[k]:
        raise BoundError(f"p_{k}: bound claimed only for n >= {CHERN_START[k]}")
    m = mu(PartitionKind.regular(k), n, prec)
    main = chern_main_term(k, n, prec)
    eps = m ** -6
    return BoundPair(PartitionKind.regular(k), n, main * (1 - eps), main * (1 + eps), "chern")


def pzz_prefactor(k: int, n: int, prec: int = DEFAULT_PREC, variant: str = "table") -> IntervalReal:
    """C_k(n) for the k-regular overpartition bound.

    ``variant="table"`` uses the tabulated constants.  ``variant="derived"``
    uses the main term of Chern's formula for ``E_2 E_k^2 / (E_1^2 E_2k)``,
    namely ``(k - 1) pi^2 / (2 k sqrt(k) mu-bar_k(n))``; the tabulated values
    exceed it by the factors in :data:`PZZ_TABLE_EXCESS`.
    """
    _check_k(k)
    pi = pi_enclosure(prec)
    m = mu(PartitionKind.regular_overpartition(k), n, prec)
    if variant == "table":
        num, rad = PZZ_PREFACTOR[k]
        return _iv(num, prec) * sqrt_iv(_iv(rad, prec)) * pi * pi / m
    if variant == "derived":
        return (k - 1) * pi * pi / (2 * k * sqrt_iv(_iv(k, prec)) * m)
    raise ValueError(f"unknown prefactor variant {variant!r}")


def pzz_bounds_opk(k: int, n: int, prec: int = DEFAULT_PREC, variant: str = "table") -> BoundPair:
    _check_k(k)
    if n < PZZ_START[k]:
        raise BoundError(f"op_{k}: bound claimed only for n >= {PZZ_START[k]}")
    m = mu(PartitionKind.regular_overpartition(k), n, prec)
    main = pzz_prefactor(k, n, prec, variant) * bessel_i1(m)
    eps = m ** -6
    source = "pzz" if variant == "table" else "pzz-derived"
    return BoundPair(PartitionKind.regular_overpartition(k), n, main * (1 - eps), main * (1 + eps), source)


def bounds_for(kind: PartitionKind, n: int, prec: int = DEFAULT_PREC, variant: str = "table") -> BoundPair:
    """Dispatch to the bound family that covers ``kind``."""
    if kind.variant in WANG_YANG_START:
        return wang_yang_bounds(kind, n, prec)
    if kind.variant == PartitionKind.REGULAR:
        return chern_bounds_pk(kind.k, n, prec)
    return pzz_bounds_opk(kind.k, n, prec, variant)


def bound_start(kind: PartitionKind) -> int:
    if kind.variant in WANG_YANG_START:
        return WANG_YANG_START[kind.variant]
    _check_k(kind.k)
    return CHERN_START[kind.k] if kind.variant == PartitionKind.REGULAR else PZZ_START[kind.k]


# ---------------------------------------------------------------------------
# Bessel envelopes
# ---------------------------------------------------------------------------

def dI(s) -> IntervalReal:
    """D_I(s) = 1 - 3/(8s) - 15/(128 s^2) - 105/(1024 s^3) - 4725/(32768 s^4) - 72765/(262144 s^5)."""
    s = IntervalReal.coerce(s)
    if s.lo <= 0:
        raise IntervalDomainError("dI needs s > 0")
    r = s.reciprocal()
    acc = _iv(DI_COEFFS[-1], s.prec)
    for c in reversed(DI_COEFFS[:-1]):
        acc = acc * r + c
    return acc


def dI_exact(s: Fraction) -> Fraction:
    """Exact rational value of D_I at a positive rational."""
    s = Fraction(s)
    if s <= 0:
        raise ValueError("dI needs s > 0")
    return sum((c / s ** i for i, c in enumerate(DI_COEFFS)), Fraction(0))


def dong_ji_envelope(s, prec: int = DEFAULT_PREC) -> Tuple[IntervalReal, IntervalReal]:
    """Lower and upper Bessel envelopes ``e^s/sqrt(2 pi s) (D_I(s) -+ 31/s^6)``."""
    s = IntervalReal.coerce(s, prec)
    if s.lower() < DONG_JI_START:
        raise BoundError(f"envelope is claimed only for s >= {DONG_JI_START}")
    base = exp_iv(s) / sqrt_iv(2 * pi_enclosure(s.prec) * s)
    d = dI(s)
    corr = 31 * s ** -6
    return base * (d - corr), base * (d + corr)


def simple_i1_bounds(s, prec: int = DEFAULT_PREC) -> Tuple[IntervalReal, IntervalReal]:
    """``e^s/sqrt(2 pi s) (1 - 1/(2s))`` and ``sqrt(2/(pi s)) e^s``."""
    s = IntervalReal.coerce(s, prec)
    pi = pi_enclosure(s.prec)
    e = exp_iv(s)
    lower = e / sqrt_iv(2 * pi * s) * (1 - s.reciprocal() / 2)
    upper = sqrt_iv(2 / (pi * s)) * e
    return lower, upper


def ftilde(t) -> IntervalReal:
    """The D_I series with the remainder replaced by -32 t^-6."""
    t = IntervalReal.coerce(t)
    return dI(t) - 32 * t ** -6


def gtilde(t) -> IntervalReal:
    t = IntervalReal.coerce(t)
    return dI(t) + 32 * t ** -6


def dj_f(t) -> IntervalReal:
    """(1 - t^-6)(D_I(t) - 31 t^-6)."""
    t = IntervalReal.coerce(t)
    e = t ** -6
    return (1 - e) * (dI(t) - 31 * e)


def dj_g(t) -> IntervalReal:
    """(1 + t^-6)(D_I(t) + 31 t^-6)."""
    t = IntervalReal.coerce(t)
    e = t ** -6
    return (1 + e) * (dI(t) + 31 * e)


# ---------------------------------------------------------------------------
# Chern constants and error envelopes
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class ChernConstants:
    """Constants of Chern's formula for the eta-quotient (q^k;q^k)/(q;q)."""

    k: int
    c2: int
    c3: Tuple[Fraction, ...]     # c3[l-1] = 1 - gcd(k,l)^2 / k
    c4_squared: Tuple[Fraction, ...]  # c4^2 = gcd(k,l) / k, kept exact
    positive: Tuple[int, ...]    # the l with c3 > 0

    @classmethod
    def for_k(cls, k: int) -> "ChernConstants":
        if k < 2:
            raise ValueError("k must be >= 2")
        c3 = tuple(1 - Fraction(math.gcd(k, l) ** 2, k) for l in range(1, k + 1))
        c4sq = tuple(Fraction(math.gcd(k, l), k) for l in range(1, k + 1))
        pos = tuple(l for l in range(1, k + 1) if c3[l - 1] > 0)
        return cls(k, k - 1, c3, c4sq, pos)

    def c3_at(self, l: int) -> Fraction:
        return self.c3[l - 1]

    def c4_at(self, l: int, prec: int = DEFAULT_PREC) -> IntervalReal:
        return sqrt_iv(_iv(self.c4_squared[l - 1], prec))

    @property
    def c4_max_squared(self) -> Fraction:
        return max(self.c4_squared[l - 1] for l in self.positive)

    def admissible(self) -> bool:
        return chern_admissible(self.k)


def chern_admissibility_margin(k: int) -> Fraction:
    """``min_l (min_r gcd(m_r,l)^2/m_r - C_3(l)/24)`` over 1 <= l <= k.

    The eta-quotient has ``m = (1, k)`` and ``delta = (-1, 1)``, so
    ``C_3(l) = gcd(1,l)^2 - gcd(k,l)^2/k``.  The margin is positive for
    k <= 24, exactly zero at k = 25 (l coprime to 25) and negative beyond.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    margin = None
    for l in range(1, k + 1):
        g = math.gcd(k, l)
        c3 = 1 - Fraction(g * g, k)
        lhs = min(Fraction(1), Fraction(g * g, k))
        d = lhs - c3 / 24
        margin = d if margin is None else min(margin, d)
    return margin


def chern_admissible(k: int) -> bool:
    """Whether the error terms of Chern's formula decay for the quotient of level k.

    The borderline case of zero margin (k = 25) leaves non-decaying error
    terms and is treated as inadmissible.
    """
    return chern_admissibility_margin(k) > 0


def _a(x: IntervalReal) -> IntervalReal:
    """a(x) = e^x / (1 - e^x)^2."""
    e = exp_iv(x)
    d = 1 - e
    return e / (d * d)


def chern_error_bounds(k: int, n: int, N: Optional[int] = None,
                       prec: int = DEFAULT_PREC) -> Tuple[IntervalReal, IntervalReal]:
    """Upper bounds on |E_k(n)| and |B_k(n)|.

    ``N`` defaults to ``floor(mu_k(n))``.  The B envelope uses only
    ``|A_t(n)| <= t`` and monotonicity of ``I_1``.
    """
    if not chern_admissible(k):
        raise BoundError(f"Chern's formula does not apply to k = {k}")
    if n < 1:
        raise BoundError("n must be >= 1")
    cc = ChernConstants.for_k(k)
    pi = pi_enclosure(prec)
    m = mu(PartitionKind.regular(k), n, prec)
    if N is None:
        N = math.floor(m.lower())
        if math.floor(m.upper()) != N:
            raise BoundError("floor(mu) is not decided at this precision")
    if N < 1:
        raise BoundError("N must be >= 1")
    big = 24 * n + cc.c2
    growth = exp_iv(pi * big / (12 * N * N))
    first = _iv(24 * N * N, prec) / (pi * big) * growth
    s1 = _iv(0, prec)
    for l in cc.positive:
        s1 = s1 + exp_iv(pi * cc.c3_at(l) / 3)
    a_pi = _a(-pi)
    ups = _iv(0, prec)
    for l in range(1, k + 1):
        g = math.gcd(k, l)
        ups = ups + cc.c4_at(l, prec) * exp_iv(pi * cc.c3_at(l) / 24 + a_pi + _a(-pi * Fraction(g * g, k)))
    for l in cc.positive:
        ups = ups - cc.c4_at(l, prec) * exp_iv(pi * cc.c3_at(l) / 24)
    e_bound = first * s1 + 2 * growth * ups

    pref = pi * pi * sqrt_iv(_iv(cc.c4_max_squared, prec)) * cc.c3_at(1) / (3 * m)
    total = _iv(0, prec)
    for t in range(2, N + 1):
        if (t - 1) % k + 1 in cc.positive:
            total = total + bessel_i1(m / t)
    return e_bound, pref * total


def e_desk_constant(k: int, prec: int = DEFAULT_PREC) -> IntervalReal:
    """n-free bound on |E_k(n)| valid whenever mu_k(n) >= 4 and N = floor(mu_k(n)).

    With ``y = mu_k(n)`` one has ``24n + c2 = 36 y^2 / (pi^2 c3(1))``; then
    ``N^2/y^2 <= 1`` and ``y^2/N^2 < 2`` for ``y >= 4`` remove the n dependence.
    """
    if not chern_admissible(k):
        raise BoundError(f"Chern's formula does not apply to k = {k}")
    cc = ChernConstants.for_k(k)
    pi = pi_enclosure(prec)
    c31 = cc.c3_at(1)
    growth = exp_iv(6 / (pi * c31))
    s1 = _iv(0, prec)
    for l in cc.positive:
        s1 = s1 + exp_iv(pi * cc.c3_at(l) / 3)
    a_pi = _a(-pi)
    ups = _iv(0, prec)
    for l in range(1, k + 1):
        g = math.gcd(k, l)
        ups = ups + cc.c4_at(l, prec) * exp_iv(pi * cc.c3_at(l) / 24 + a_pi + _a(-pi * Fraction(g * g, k)))
    for l in cc.positive:
        ups = ups - cc.c4_at(l, prec) * exp_iv(pi * cc.c3_at(l) / 24)
    return 2 * pi * c31 / 3 * growth * s1 + 2 * growth * ups


def rhat(k: int, n: int, prec: int = DEFAULT_PREC) -> IntervalReal:
    """The tabulated remainder bound ``c pi^(3/2) exp(mu/2) / sqrt(r mu)``."""
    _check_k(k)
    if n < RHAT_START[k]:
        raise BoundError(f"R-hat_{k} is claimed only for n >= {RHAT_START[k]}")
    num, rad = RHAT_PREFACTOR[k]
    pi = pi_enclosure(prec)
    m = mu(PartitionKind.regular(k), n, prec)
    return _iv(num, prec) * pi * sqrt_iv(pi) * exp_iv(m / 2) / sqrt_iv(rad * m)


def remainder_within_rhat(k: int, n: int, exact: int, prec: int = DEFAULT_PREC) -> bool:
    """``|p_k(n) - M_k(n)| <= R-hat_k(n)`` for the given exact value."""
    r = abs(_iv(exact, prec) - chern_main_term(k, n, prec))
    return r.certainly_le(rhat(k, n, prec))


def error_envelope_within_rhat(k: int, n: int, prec: int = DEFAULT_PREC) -> bool:
    """The recomputed E and B envelopes sum to at most R-hat_k(n)."""
    e, b = chern_error_bounds(k, n, prec=prec)
    return (e + b).certainly_le(rhat(k, n, prec))


def chern_envelope_holds(k: int, n: int, prec: int = DEFAULT_PREC) -> bool:
    """``R-hat_k(n) <= M_k(n) mu_k(n)^-6``, the step that turns R-hat into the sandwich."""
    _check_k(k)
    m = mu(PartitionKind.regular(k), n, prec)
    return rhat(k, n, prec).certainly_le(chern_main_term(k, n, prec) * m ** -6)


# ---------------------------------------------------------------------------
# desk checks for k = 6
# ---------------------------------------------------------------------------

def gamma6(n: int, prec: int = DEFAULT_PREC) -> IntervalReal:
    """gamma(n) = 10 pi^(3/2) e^(y/2) / (27 sqrt(3y)), y = mu_6(n)."""
    pi = pi_enclosure(prec)
    y = mu(PartitionKind.regular(6), n, prec)
    return 10 * pi * sqrt_iv(pi) * exp_iv(y / 2) / (27 * sqrt_iv(3 * y))


def L6(n: int, prec: int = DEFAULT_PREC) -> IntervalReal:
    """L(n) = 32 y^8 - 3 (2y - 1) e^(y/2), y = mu_6(n)."""
    y = mu(PartitionKind.regular(6), n, prec)
    return 32 * y ** 8 - 3 * (2 * y - 1) * exp_iv(y / 2)


def log_grid(lo: int, hi: int, points: int = 40) -> List[int]:
    """Sorted distinct integers spread logarithmically over [lo, hi]."""
    if points < 2 or lo >= hi:
        return [lo]
    r = math.log(hi / lo)
    grid = {lo, hi}
    for i in range(points):
        grid.add(int(round(lo * math.exp(r * i / (points - 1)))))
    return sorted(g for g in grid if lo <= g <= hi)


@dataclass
class GammaReport:
    gamma46_exceeds: bool
    gamma_increasing: bool
    L677_negative: bool
    L_decreasing: bool
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.gamma46_exceeds and self.gamma_increasing and self.L677_negative and self.L_decreasing


def gamma_monotone_report(points: int = 40, prec: int = DEFAULT_PREC) -> GammaReport:
    """Grid evidence for the k = 6 desk steps (a check on samples, not a proof)."""
    notes: List[str] = []
    g46 = gamma6(46, prec).certainly_gt(812)
    if not g46:
        notes.append("gamma(46) > 812 not certified")
    grid = log_grid(46, 5000, points)
    vals = [gamma6(n, prec) for n in grid]
    g_inc = all(a.certainly_lt(b) for a, b in zip(vals, vals[1:]))
    if not g_inc:
        notes.append("gamma not increasing on grid")
    l677 = L6(677, prec).is_negative()
    if not l677:
        notes.append("L(677) < 0 not certified")
    grid = log_grid(677, 5000, points)
    lv = [L6(n, prec) for n in grid]
    l_dec = all(a.certainly_gt(b) for a, b in zip(lv, lv[1:]))
    if not l_dec:
        notes.append("L not decreasing on grid")
    return GammaReport(g46, g_inc, l677, l_dec, notes)


def gamma_monotone_check(points: int = 40, prec: int = DEFAULT_PREC) -> bool:
    return gamma_monotone_report(points, prec).ok


# ---------------------------------------------------------------------------
# table exports
# ---------------------------------------------------------------------------

def _csv(rows: Sequence[Sequence[object]]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    for r in rows:
        w.writerow(r)
    return buf.getvalue()


def _sqrt_str(num: Fraction, rad: int) -> str:
    return f"{num}*sqrt({rad})" if rad != 1 else str(num)


def table1_csv() -> str:
    """k, threshold and C_k(n) prefactor for the k-regular overpartition bound."""
    rows: List[Sequence[object]] = [["k", "n_bar_k", "C_k(n)"]]
    for k in range(2, 10):
        num, rad = PZZ_PREFACTOR[k]
        rows.append([k, PZZ_START[k], f"{_sqrt_str(num, rad)}*pi^2/mu_bar_{k}(n)"])
    return _csv(rows)


def table2_csv() -> str:
    """k, threshold and remainder bound R-hat_k(n)."""
    rows: List[Sequence[object]] = [["k", "n_hat_k", "R_hat_k(n)"]]
    for k in range(2, 10):
        num, rad = RHAT_PREFACTOR[k]
        inner = f"{rad}*mu_{k}(n)" if rad != 1 else f"mu_{k}(n)"
        rows.append([k, RHAT_START[k], f"{num}*pi^(3/2)*exp(mu_{k}(n)/2)/sqrt({inner})"])
    return _csv(rows)


def chern_constants_csv(k: int) -> str:
    cc = ChernConstants.for_k(k)
    rows: List[Sequence[object]] = [["l", "c3", "c4_squared", "positive"]]
    for l in range(1, k + 1):
        rows.append([l, str(cc.c3_at(l)), str(cc.c4_squared[l - 1]), int(l in cc.positive)])
    return _csv(rows)
