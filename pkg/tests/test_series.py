from __future__ import annotations

import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from briggs.series import (
    BRUTE_FORCE_MAX,
    NaturalSeq,
    PartitionKind,
    brute_force_count,
    divide_euler,
    multiply_euler,
    partition_table,
    pentagonal_terms,
)


def coin_change(kind: PartitionKind, n_max: int) -> list[int]:
    """Independent oracle: product over allowed parts, one factor at a time."""
    a = [1] + [0] * n_max
    for m in range(1, n_max + 1):
        if kind.is_regular and m % kind.k == 0:
            continue
        # 1/(1 - q^m)
        for i in range(m, n_max + 1):
            a[i] += a[i - m]
        if kind.is_over:
            # (1 + q^m)
            for i in range(n_max, m - 1, -1):
                a[i] += a[i - m]
    return a


KINDS = [PartitionKind.ordinary(), PartitionKind.overpartition()]
KINDS += [PartitionKind.regular(k) for k in range(2, 10)]
KINDS += [PartitionKind.regular_overpartition(k) for k in range(2, 10)]


def test_small_values():
    assert partition_table(PartitionKind.ordinary(), 3)[3] == 3
    assert partition_table(PartitionKind.overpartition(), 3)[3] == 8
    assert partition_table(PartitionKind.ordinary(), 100)[100] == 190569292
    assert list(partition_table(PartitionKind.overpartition(), 9)) == [1, 2, 4, 8, 14, 24, 40, 64, 100, 154]
    # 2-regular partitions are partitions into distinct parts
    assert list(partition_table(PartitionKind.regular(2), 10)) == [1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10]


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.label)
def test_table_matches_coin_change(kind):
    assert list(partition_table(kind, 400)) == coin_change(kind, 400)


@pytest.mark.parametrize("kind", KINDS, ids=lambda k: k.label)
def test_table_matches_enumeration(kind):
    seq = partition_table(kind, 22)
    assert [brute_force_count(kind, n) for n in range(23)] == list(seq)


def test_brute_force_limit():
    with pytest.raises(ValueError):
        brute_force_count(PartitionKind.ordinary(), BRUTE_FORCE_MAX + 1)


def test_pentagonal_terms_start():
    terms = pentagonal_terms(30)
    assert [t[0] for t in terms] == [0, 1, 2, 5, 7, 12, 15, 22, 26]
    assert [t[1] for t in terms] == [1, -1, -1, 1, 1, -1, -1, 1, 1]


@settings(max_examples=50, deadline=None)
@given(st.lists(st.integers(-50, 50), min_size=1, max_size=40), st.integers(1, 7))
def test_euler_multiply_divide_inverse(a, m):
    assert divide_euler(multiply_euler(a, m), m) == a


def test_kind_labels_roundtrip():
    for kind in KINDS:
        assert PartitionKind.parse(kind.label) == kind
    with pytest.raises(ValueError):
        PartitionKind.parse("x3")


def test_natural_seq_serialization():
    seq = partition_table(PartitionKind.regular_overpartition(6), 30)
    back = NaturalSeq.from_json(json.loads(seq.dumps()))
    assert back.kind == seq.kind and list(back) == list(seq)
    lines = seq.to_csv().splitlines()
    assert lines[0] == "n,value"
    assert lines[4] == f"3,{seq[3]}"


def test_values_are_json_strings():
    data = partition_table(PartitionKind.ordinary(), 5).to_json()
    assert all(isinstance(v, str) for v in data["values"])
