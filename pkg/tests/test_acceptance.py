"""The thirteen acceptance criteria, each checked exactly.

One ``[PASS]``/``[FAIL]`` line per criterion is written to the terminal
summary regardless of output capturing.
"""

import pytest

from eqclass.verify import CRITERIA

RESULTS = {}


@pytest.mark.parametrize("crit", CRITERIA, ids=[f"{c.number:02d}-{c.name}" for c in CRITERIA])
def test_criterion(crit):
    passed, detail = crit.check()
    RESULTS[crit.number] = (crit.name, passed is True, detail)
    assert passed is True, detail


def pytest_terminal_summary_lines():
    for number in sorted(RESULTS):
        name, passed, detail = RESULTS[number]
        yield f"[{'PASS' if passed else 'FAIL'}] {number:2d} {name}: {detail}"
