import sys
from pathlib import Path

import pytest

from korobov import KorobovParams

sys.path.insert(0, str(Path(__file__).parent))

ACCEPTANCE_LINES = []


def make(gamma, alpha="const:1"):
    return KorobovParams.from_strings(gamma, alpha)


@pytest.fixture
def half2():
    """gamma = (0.5, 0.5, ...), alpha = 1: the running example of the module docs."""
    return make("const:0.5")


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
