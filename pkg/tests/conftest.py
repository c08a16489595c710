import numpy as np
import pytest

from galedesign import graphs

# Acceptance results collected by test_acceptance.py and echoed at the end of the run.
ACCEPTANCE_LINES: list = []


def small_corpus():
    """Connected regular graphs with at most 10 vertices."""
    out = [graphs.cycle(n) for n in range(3, 11)]
    out += [graphs.cocktail_party(d) for d in range(2, 6)]
    out += [graphs.hypercube(d) for d in (1, 2, 3)]
    out += [graphs.named("petersen"), graphs.named("octahedron")]
    cay = [(4, [1, 2, 3]), (5, [1, 2, 3, 4]), (6, [1, 3, 5]), (6, [2, 3, 4]),
           (8, [1, 4, 7]), (8, [1, 3, 5, 7]), (9, [1, 2, 7, 8]), (10, [1, 4, 6, 9]),
           (10, [1, 5, 9]), (7, [1, 2, 5, 6])]
    out += [graphs.cayley_cyclic(n, S) for n, S in cay]
    return out


@pytest.fixture(scope="session")
def corpus():
    return small_corpus()


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
