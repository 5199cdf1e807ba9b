from __future__ import annotations

from functools import lru_cache

import pytest

from briggs.series import PartitionKind, partition_table


@lru_cache(maxsize=None)
def table(label: str, n_max: int):
    return partition_table(PartitionKind.parse(label), n_max)


@pytest.fixture
def cached_table():
    return table


# One line per acceptance criterion, printed at the end of the run.
ACCEPTANCE_LINES: dict[int, str] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        terminalreporter.write_line(ACCEPTANCE_LINES[number])
