"""Acceptance criteria 1 to 13, one test each.

Every run prints a pass/fail line per criterion; the lines are collected
and repeated in the terminal summary.  Run this file directly to get the
report without pytest.
"""

import sys

import pytest

from garsidekit.acceptance import CRITERIA, format_line, run_criterion

REPORT: list[str] = []


@pytest.mark.parametrize("number", [n for n, _, _ in CRITERIA], ids=lambda n: f"criterion-{n:02d}")
def test_criterion(number):
    result = run_criterion(number)
    line = format_line(result)
    REPORT.append(line)
    print(line)
    assert result.passed, line


def test_every_criterion_is_listed():
    assert [n for n, _, _ in CRITERIA] == list(range(1, 14))


if __name__ == "__main__":
    failures = 0
    for n, _, _ in CRITERIA:
        result = run_criterion(n)
        print(format_line(result))
        failures += not result.passed
    sys.exit(1 if failures else 0)
