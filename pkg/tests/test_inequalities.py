from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from briggs.inequalities import (
    BRIGGS,
    LOG_CONCAVITY,
    STRONG_BRIGGS,
    InequalityKind,
    VerificationReport,
    WindowError,
    briggs,
    check_at,
    find_threshold,
    implication_check,
    log_concave,
    strong_briggs,
    verify_range,
)
from briggs.series import PartitionKind, partition_table

# smallest N from which the inequality holds on [N, 3000], found by exact scan
STRONG_BRIGGS_FROM = {
    "p": 114, "op": 18,
    "p2": 150, "p3": 220, "p4": 75, "p5": 164, "p6": 60, "p7": 148, "p8": 78, "p9": 138,
    "op2": 75, "op3": 17, "op4": 33, "op5": 30, "op6": 10, "op7": 24, "op8": 27, "op9": 10,
}
LOG_CONCAVE_FROM = {
    "p": 26, "op": 1,
    "p2": 33, "p3": 58, "p4": 17, "p5": 42, "p6": 12, "p7": 36, "p8": 20, "p9": 34,
    "op2": 21, "op3": 4, "op4": 5, "op5": 6, "op6": 1, "op7": 1, "op8": 1, "op9": 1,
}


def test_predicates_on_small_windows():
    assert log_concave(1, 2, 4)
    assert not log_concave(1, 2, 5)
    # a geometric sequence is on the boundary of log-concavity
    assert not strong_briggs(1, 2, 4, 8)
    assert not briggs(1, 2, 4, 8)
    assert strong_briggs(1, 3, 4, 4)


def test_kind_parsing():
    assert InequalityKind("strong_briggs") == STRONG_BRIGGS
    assert LOG_CONCAVITY.reach == 1 and BRIGGS.reach == 2
    with pytest.raises(ValueError):
        InequalityKind("convexity")


def test_check_at_window(cached_table):
    seq = cached_table("p", 30)
    assert check_at(seq, "log-concavity", 29)
    assert not check_at(seq, "log-concavity", 25)
    assert check_at(seq.values, STRONG_BRIGGS, 28) == check_at(seq, STRONG_BRIGGS, 28)
    with pytest.raises(WindowError):
        check_at(seq, STRONG_BRIGGS, 29)
    with pytest.raises(WindowError):
        check_at(seq, STRONG_BRIGGS, 0)


@pytest.mark.parametrize("label", sorted(STRONG_BRIGGS_FROM))
def test_thresholds(cached_table, label):
    seq = cached_table(label, 3002)
    assert find_threshold(seq, STRONG_BRIGGS, 3000) == STRONG_BRIGGS_FROM[label]
    assert find_threshold(seq, LOG_CONCAVITY, 3000) == LOG_CONCAVE_FROM[label]


def test_partition_failures_below_threshold_are_odd(cached_table):
    rep = verify_range(cached_table("p", 200), STRONG_BRIGGS, 1, 113)
    assert rep.failures and rep.failures[-1] == 113
    assert all(n % 2 == 1 for n in rep.failures)


def test_workers_do_not_change_result(cached_table):
    seq = cached_table("p", 400)
    a = verify_range(seq, STRONG_BRIGGS, 1, 398, workers=1)
    b = verify_range(seq, STRONG_BRIGGS, 1, 398, workers=2)
    assert a.failures == b.failures


def test_worker_env(monkeypatch, cached_table):
    seq = cached_table("op", 100)
    serial = verify_range(seq, STRONG_BRIGGS, 1, 98, workers=1)
    monkeypatch.setenv("BRIGGS_WORKERS", "2")
    rep = verify_range(seq, STRONG_BRIGGS, 1, 98)
    assert rep.failures == serial.failures
    assert rep.failures[-1] == 17


def test_report_roundtrip(cached_table):
    rep = verify_range(cached_table("p6", 100), STRONG_BRIGGS, 1, 98)
    data = json.loads(rep.dumps())
    assert data["failures"] == [str(n) for n in rep.failures]
    back = VerificationReport.from_json(data)
    assert back.failures == rep.failures and back.kind == rep.kind
    assert back.sequence_kind == PartitionKind.regular(6)


def test_empty_range_rejected(cached_table):
    with pytest.raises(ValueError):
        verify_range(cached_table("p", 50), STRONG_BRIGGS, 10, 9)


@settings(max_examples=300, deadline=None)
@given(st.lists(st.integers(1, 10 ** 12), min_size=4, max_size=4))
def test_implication_law(window):
    assert implication_check(window, 1)

