"""Exact and certified tools for Briggs-type inequalities of partition functions."""

from __future__ import annotations

from .inequalities import (
    BRIGGS,
    LOG_CONCAVITY,
    STRONG_BRIGGS,
    InequalityKind,
    VerificationReport,
    check_at,
    find_threshold,
    implication_check,
    verify_range,
)
from .interval import IntervalReal
from .pipoly import PiPoly, PiRational, PiRationalFunction
from .series import NaturalSeq, PartitionKind, brute_force_count, partition_table

__all__ = [
    "BRIGGS",
    "LOG_CONCAVITY",
    "STRONG_BRIGGS",
    "InequalityKind",
    "IntervalReal",
    "NaturalSeq",
    "PartitionKind",
    "PiPoly",
    "PiRational",
    "PiRationalFunction",
    "VerificationReport",
    "brute_force_count",
    "check_at",
    "find_threshold",
    "implication_check",
    "partition_table",
    "verify_range",
]

__version__ = "0.1.0"
