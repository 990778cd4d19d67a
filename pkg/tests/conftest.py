"""Shared fixtures and the acceptance-criteria summary hook.

test_acceptance.py registers one line per criterion through record_criterion;
the terminal summary prints them so a run shows at a glance which contract
points hold.
"""

import pytest

from ewtab.diagrams import FerrersDiagram

ACCEPTANCE_RESULTS = []


def record_criterion(name, passed, detail=""):
    ACCEPTANCE_RESULTS.append((name, bool(passed), detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for name, passed, detail in ACCEPTANCE_RESULTS:
        line = "%s %s" % ("PASS" if passed else "FAIL", name)
        if detail:
            line += " (%s)" % detail
        terminalreporter.write_line(line)


@pytest.fixture
def d321():
    return FerrersDiagram((3, 2, 1))


@pytest.fixture
def d5332():
    return FerrersDiagram((5, 3, 3, 2))


@pytest.fixture
def d22():
    return FerrersDiagram((2, 2))
