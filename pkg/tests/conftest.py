import pytest

from xxchain.experiments import chain_spectrum, concurrences_at
from xxchain.model import ChainSpec

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session", autouse=True)
def warm_jit():
    # compile (or load the cached) Jacobi kernel before anything is timed
    concurrences_at(ChainSpec(2, (1, 1)), 0.0)
    chain_spectrum(ChainSpec(3, (1, 1, 1)))


@pytest.fixture
def acceptance_line():
    return ACCEPTANCE_LINES.append


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
