import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cobwebcode import FSequence  # noqa: E402

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def fib():
    return FSequence.fibonacci()


@pytest.fixture(scope="session")
def nat():
    return FSequence.natural()


BUILTIN_SPECS = ["natural", "fibonacci", "const:2", "const:10", "gauss:2"]


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
