"""Exact tables of partition-type counting functions.

Every generating function handled here is a quotient of Euler products
``E_m(q) = prod_{j>=1} (1 - q^(m j))``:

    ordinary               1 / E_1
    k-regular              E_k / E_1
    overpartition          (-q;q)_inf / (q;q)_inf       = E_2 / E_1^2
    k-regular overpartition  E_2 E_k^2 / (E_1^2 E_2k)

using ``(-q^m; q^m)_inf = E_2m / E_m``.  ``E_m`` is sparse (pentagonal
number theorem), so multiplying or dividing by it costs O(n sqrt(n)).
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from typing import Dict, Iterator, List, Sequence, Tuple

BRUTE_FORCE_MAX = 40


class PartitionKind:
    """One of the four counting functions: p, p-bar, p_k, p-bar_k."""

    ORDINARY = "ordinary"
    OVERPARTITION = "overpartition"
    REGULAR = "regular"
    REGULAR_OVERPARTITION = "regular_overpartition"

    _SHORT = {ORDINARY: "p", OVERPARTITION: "op", REGULAR: "p", REGULAR_OVERPARTITION: "op"}

    __slots__ = ("variant", "k")

    def __init__(self, variant: str, k: int | None = None):
        if variant not in (self.ORDINARY, self.OVERPARTITION, self.REGULAR, self.REGULAR_OVERPARTITION):
            raise ValueError(f"unknown partition kind {variant!r}")
        regular = variant in (self.REGULAR, self.REGULAR_OVERPARTITION)
        if regular:
            if k is None or int(k) != k or k < 2:
                raise ValueError("k-regular kinds need an integer k >= 2")
            k = int(k)
        elif k is not None:
            raise ValueError(f"{variant} takes no k")
        self.variant = variant
        self.k = k

    @classmethod
    def ordinary(cls) -> "PartitionKind":
        return cls(cls.ORDINARY)

    @classmethod
    def overpartition(cls) -> "PartitionKind":
        return cls(cls.OVERPARTITION)

    @classmethod
    def regular(cls, k: int) -> "PartitionKind":
        return cls(cls.REGULAR, k)

    @classmethod
    def regular_overpartition(cls, k: int) -> "PartitionKind":
        return cls(cls.REGULAR_OVERPARTITION, k)

    @property
    def is_over(self) -> bool:
        return self.variant in (self.OVERPARTITION, self.REGULAR_OVERPARTITION)

    @property
    def is_regular(self) -> bool:
        return self.k is not None

    @property
    def label(self) -> str:
        """Short name used by the CLI and reports: p, op, p6, op6, ..."""
        base = self._SHORT[self.variant]
        return f"{base}{self.k}" if self.k is not None else base

    @classmethod
    def parse(cls, label: str) -> "PartitionKind":
        """Inverse of :attr:`label` (``p``, ``op``, ``p<k>``, ``op<k>``)."""
        s = label.strip().lower()
        over = s.startswith("op")
        rest = s[2:] if over else s[1:] if s.startswith("p") else None
        if rest is None:
            raise ValueError(f"cannot parse partition kind {label!r}")
        if rest == "":
            return cls.overpartition() if over else cls.ordinary()
        if not rest.isdigit():
            raise ValueError(f"cannot parse partition kind {label!r}")
        k = int(rest)
        return cls.regular_overpartition(k) if over else cls.regular(k)

    def __eq__(self, other) -> bool:
        return isinstance(other, PartitionKind) and (self.variant, self.k) == (other.variant, other.k)

    def __hash__(self) -> int:
        return hash((self.variant, self.k))

    def __repr__(self) -> str:
        return f"PartitionKind({self.label})"


# ---------------------------------------------------------------------------
# Euler products
# ---------------------------------------------------------------------------

def pentagonal_terms(n_max: int) -> List[Tuple[int, int]]:
    """Nonzero terms ``(exponent, sign)`` of (q;q)_inf up to q^n_max."""
    terms = [(0, 1)]
    g = 1
    while True:
        e1 = g * (3 * g - 1) // 2
        if e1 > n_max:
            break
        sign = -1 if g % 2 else 1
        terms.append((e1, sign))
        e2 = g * (3 * g + 1) // 2
        if e2 <= n_max:
            terms.append((e2, sign))
        g += 1
    return terms


@dataclass(frozen=True)
class EulerSeries:
    """Truncation of ``prod_{j>=1} (1 - q^(m j))`` stored by its sparse support."""

    modulus: int
    n_max: int
    terms: Tuple[Tuple[int, int], ...]

    @classmethod
    def build(cls, modulus: int, n_max: int) -> "EulerSeries":
        if modulus < 1:
            raise ValueError("modulus must be >= 1")
        support = tuple((modulus * e, s) for e, s in pentagonal_terms(n_max // modulus))
        return cls(modulus, n_max, support)

    @property
    def coeffs(self) -> List[int]:
        dense = [0] * (self.n_max + 1)
        for e, s in self.terms:
            dense[e] = s
        return dense


def multiply_euler(a: Sequence[int], m: int) -> List[int]:
    """Coefficients of ``a(q) * E_m(q)`` truncated to len(a)."""
    n_max = len(a) - 1
    terms = EulerSeries.build(m, n_max).terms
    out = [0] * (n_max + 1)
    for e, s in terms:
        if s > 0:
            for i in range(e, n_max + 1):
                out[i] += a[i - e]
        else:
            for i in range(e, n_max + 1):
                out[i] -= a[i - e]
    return out


def divide_euler(a: Sequence[int], m: int) -> List[int]:
    """Coefficients of ``a(q) / E_m(q)``.

    Solves ``E_m * b = a`` term by term; E_m has constant term 1, so
    ``b[n] = a[n] - sum_{e>0} s_e b[n-e]``.
    """
    n_max = len(a) - 1
    terms = EulerSeries.build(m, n_max).terms[1:]
    b = [0] * (n_max + 1)
    for n in range(n_max + 1):
        acc = a[n]
        for e, s in terms:
            if e > n:
                break
            acc -= s * b[n - e]
        b[n] = acc
    return b


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class NaturalSeq:
    """Exact values a(0..n_max) of one counting function."""

    kind: PartitionKind
    n_max: int
    values: Tuple[int, ...]

    def __getitem__(self, n: int) -> int:
        if n < 0 or n > self.n_max:
            raise IndexError(f"index {n} outside table 0..{self.n_max}")
        return self.values[n]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["n", "value"])
        for n, v in enumerate(self.values):
            w.writerow([n, str(v)])
        return buf.getvalue()

    def to_json(self) -> Dict[str, object]:
        return {"kind": self.kind.label, "n_max": str(self.n_max), "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "NaturalSeq":
        values = tuple(int(v) for v in data["values"])  # type: ignore[union-attr]
        n_max = int(data["n_max"])  # type: ignore[arg-type]
        if len(values) != n_max + 1:
            raise ValueError("n_max does not match the number of values")
        return cls(PartitionKind.parse(str(data["kind"])), n_max, values)

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def partition_table(kind: PartitionKind, n_max: int) -> NaturalSeq:
    """Exact table of the counting function ``kind`` on 0..n_max."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    one = [1] + [0] * n_max
    v = kind.variant
    if v == PartitionKind.ORDINARY:
        a = divide_euler(one, 1)
    elif v == PartitionKind.REGULAR:
        a = divide_euler(multiply_euler(one, kind.k), 1)
    elif v == PartitionKind.OVERPARTITION:
        a = divide_euler(divide_euler(multiply_euler(one, 2), 1), 1)
    else:
        k = kind.k
        a = multiply_euler(multiply_euler(multiply_euler(one, 2), k), k)
        a = divide_euler(divide_euler(divide_euler(a, 1), 1), 2 * k)
    return NaturalSeq(kind, n_max, tuple(a))


def sequence_from_values(values: Sequence[int], kind: PartitionKind | None = None) -> NaturalSeq:
    """Wrap an arbitrary integer sequence (tests, synthetic inputs)."""
    return NaturalSeq(kind or PartitionKind.ordinary(), len(values) - 1, tuple(int(v) for v in values))


# ---------------------------------------------------------------------------
# brute-force oracle
# ---------------------------------------------------------------------------

def _multisets(n: int, largest: int, allowed) -> Iterator[List[Tuple[int, int]]]:
    """Partitions of n into allowed parts <= largest, as (part, multiplicity) lists."""
    if n == 0:
        yield []
        return
    for part in range(min(n, largest), 0, -1):
        if not allowed(part):
            continue
        for mult in range(n // part, 0, -1):
            for rest in _multisets(n - part * mult, part - 1, allowed):
                yield [(part, mult)] + rest


def brute_force_count(kind: PartitionKind, n: int) -> int:
    """Count partitions of ``n`` of the given kind by explicit enumeration.

    Each enumerated multiset of parts with ``d`` distinct sizes stands for
    ``2**d`` overpartitions (the first occurrence of each size may or may not
    carry an overline).
    """
    if not 0 <= n <= BRUTE_FORCE_MAX:
        raise ValueError(f"brute force is limited to 0 <= n <= {BRUTE_FORCE_MAX}")
    if kind.is_regular:
        k = kind.k
        allowed = lambda part: part % k != 0  # noqa: E731
    else:
        allowed = lambda part: True  # noqa: E731
    total = 0
    for ms in _multisets(n, n, allowed):
        if kind.is_over:
            total += 1 << len(ms)
        else:
            total += 1
    return total
