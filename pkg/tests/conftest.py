from pathlib import Path

import pytest

from gentle_hh.quiver import load_bound_quiver, parse_bound_quiver

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

KRONECKER = """
quiver K
vertex x y
arrow a x y
arrow b x y
"""


@pytest.fixture(scope="session")
def quiver_a():
    return load_bound_quiver(FIXTURES / "quiverA.bq")


@pytest.fixture(scope="session")
def quiver_b():
    return load_bound_quiver(FIXTURES / "quiverB.bq")


@pytest.fixture(scope="session")
def kronecker():
    return parse_bound_quiver(KRONECKER)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in RESULTS:
            terminalreporter.write_line(line)
