import pytest

from markedord.marked import Marking
from markedord.poset import build_poset


@pytest.fixture
def chain3():
    return build_poset(["x1", "x2", "x3"], [("x1", "x2"), ("x2", "x3")])


@pytest.fixture
def diamond():
    return build_poset(["0", "p", "q", "1"], [("0", "p"), ("0", "q"), ("p", "1"), ("q", "1")])


@pytest.fixture
def pinned():
    # 0 < p < 1 with both ends marked 5
    return Marking(build_poset(["0", "p", "1"], [("0", "p"), ("p", "1")]), {"0": 5, "1": 5})


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
