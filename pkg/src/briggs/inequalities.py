"""Exact checks of log-concavity and the two Briggs-type inequalities."""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .series import NaturalSeq, PartitionKind

WORKERS_ENV = "BRIGGS_WORKERS"


class WindowError(IndexError):
    """The window of terms needed at ``n`` does not fit in the table."""


class InequalityKind:
    LOG_CONCAVITY = "log-concavity"
    BRIGGS = "briggs"
    STRONG_BRIGGS = "strong-briggs"

    ALL = (LOG_CONCAVITY, BRIGGS, STRONG_BRIGGS)

    __slots__ = ("variant",)

    def __init__(self, variant: str):
        v = variant.strip().lower().replace("_", "-")
        if v not in self.ALL:
            raise ValueError(f"unknown inequality {variant!r}; expected one of {', '.join(self.ALL)}")
        self.variant = v

    @property
    def reach(self) -> int:
        """How many terms past ``n`` the predicate reads."""
        return 1 if self.variant == self.LOG_CONCAVITY else 2

    def __eq__(self, other) -> bool:
        return isinstance(other, InequalityKind) and self.variant == other.variant

    def __hash__(self) -> int:
        return hash(self.variant)

    def __repr__(self) -> str:
        return f"InequalityKind({self.variant})"

    def __str__(self) -> str:
        return self.variant


LOG_CONCAVITY = InequalityKind(InequalityKind.LOG_CONCAVITY)
BRIGGS = InequalityKind(InequalityKind.BRIGGS)
STRONG_BRIGGS = InequalityKind(InequalityKind.STRONG_BRIGGS)


def _coerce_kind(kind) -> InequalityKind:
    return kind if isinstance(kind, InequalityKind) else InequalityKind(str(kind))


# The predicates work on plain integer windows so that they can be reused on
# arbitrary sequences and shipped to worker processes cheaply.

def log_concave(a0: int, a1: int, a2: int) -> bool:
    return a1 * a1 - a0 * a2 >= 0


def briggs(a0: int, a1: int, a2: int, a3: int) -> bool:
    return a1 * a1 * (a1 * a1 - a0 * a2) > a0 * a0 * (a2 * a2 - a1 * a3)


def strong_briggs(a0: int, a1: int, a2: int, a3: int) -> bool:
    return a2 * a1 * a1 - 2 * a0 * a2 * a2 + a0 * a1 * a3 > 0


def _values(seq) -> Sequence[int]:
    return seq.values if isinstance(seq, NaturalSeq) else seq


def _check_window(values: Sequence[int], kind: InequalityKind, n: int) -> None:
    if n < 1 or n + kind.reach > len(values) - 1:
        raise WindowError(
            f"{kind} at n={n} needs a_{n - 1}..a_{n + kind.reach}, table has a_0..a_{len(values) - 1}"
        )


def _eval(values: Sequence[int], variant: str, n: int) -> bool:
    if variant == InequalityKind.LOG_CONCAVITY:
        return log_concave(values[n - 1], values[n], values[n + 1])
    w = values[n - 1], values[n], values[n + 1], values[n + 2]
    if variant == InequalityKind.BRIGGS:
        return briggs(*w)
    return strong_briggs(*w)


def check_at(seq, kind, n: int) -> bool:
    """Truth value of ``kind`` at index ``n`` by exact integer arithmetic."""
    kind = _coerce_kind(kind)
    values = _values(seq)
    _check_window(values, kind, n)
    return _eval(values, kind.variant, n)


def implication_check(seq, n: int) -> bool:
    """Check that log-concavity and strong Briggs at ``n`` give Briggs at ``n``."""
    values = _values(seq)
    _check_window(values, BRIGGS, n)
    lc = _eval(values, InequalityKind.LOG_CONCAVITY, n)
    sb = _eval(values, InequalityKind.STRONG_BRIGGS, n)
    if not (lc and sb):
        return True
    return _eval(values, InequalityKind.BRIGGS, n)


@dataclass
class VerificationReport:
    kind: InequalityKind
    sequence_kind: PartitionKind
    lo: int
    hi: int
    failures: List[int] = field(default_factory=list)
    elapsed: float = 0.0
    threshold: Optional[int] = None

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> Dict[str, object]:
        return {
            "kind": self.kind.variant,
            "sequence": self.sequence_kind.label,
            "lo": str(self.lo),
            "hi": str(self.hi),
            "failures": [str(n) for n in self.failures],
            "threshold": None if self.threshold is None else str(self.threshold),
            "elapsed": f"{self.elapsed:.6f}",
        }

    @classmethod
    def from_json(cls, data: Dict[str, object]) -> "VerificationReport":
        thr = data.get("threshold")
        return cls(
            kind=InequalityKind(str(data["kind"])),
            sequence_kind=PartitionKind.parse(str(data["sequence"])),
            lo=int(data["lo"]),  # type: ignore[arg-type]
            hi=int(data["hi"]),  # type: ignore[arg-type]
            failures=[int(n) for n in data["failures"]],  # type: ignore[union-attr]
            elapsed=float(data.get("elapsed", 0.0)),  # type: ignore[arg-type]
            threshold=None if thr is None else int(thr),  # type: ignore[arg-type]
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json())


def _scan_chunk(args: Tuple[Sequence[int], str, int, int]) -> List[int]:
    values, variant, lo, hi = args
    return [n for n in range(lo, hi + 1) if not _eval(values, variant, n)]


def worker_count(workers: Optional[int] = None) -> int:
    if workers is not None:
        return max(1, int(workers))
    raw = os.environ.get(WORKERS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def verify_range(seq, kind, lo: int, hi: int, workers: Optional[int] = None) -> VerificationReport:
    """Test ``kind`` at every n in [lo, hi] and list the failures.

    With more than one worker the range is cut into contiguous chunks that are
    scanned in separate processes; the merged failure list is sorted, so the
    result does not depend on the worker count.
    """
    kind = _coerce_kind(kind)
    if lo > hi:
        raise ValueError(f"empty range: lo={lo} > hi={hi}")
    values = tuple(_values(seq))
    _check_window(values, kind, lo)
    _check_window(values, kind, hi)
    seq_kind = seq.kind if isinstance(seq, NaturalSeq) else PartitionKind.ordinary()
    start = time.perf_counter()
    nw = min(worker_count(workers), hi - lo + 1)
    if nw <= 1:
        failures = _scan_chunk((values, kind.variant, lo, hi))
    else:
        step = -(-(hi - lo + 1) // nw)
        jobs = [(values, kind.variant, a, min(hi, a + step - 1)) for a in range(lo, hi + 1, step)]
        with ProcessPoolExecutor(max_workers=nw) as pool:
            failures = sorted(n for part in pool.map(_scan_chunk, jobs) for n in part)
    return VerificationReport(kind, seq_kind, lo, hi, failures, time.perf_counter() - start)


def find_threshold(seq, kind, hi: int) -> Optional[int]:
    """Smallest N with ``kind`` true on all of [N, hi]; None if it fails at hi.

    The search stops at n = 1, the first index with a full window.
    """
    kind = _coerce_kind(kind)
    values = _values(seq)
    _check_window(values, kind, hi)
    n = hi
    while n >= 1 and _eval(values, kind.variant, n):
        n -= 1
    return None if n == hi else n + 1
