import pytest

from polarsrg.cliques import classify_all, maximal_cliques
from polarsrg.quadric import elliptic_solids, quadric_new
from polarsrg.srg import build_gn, build_no_plus

ACCEPTANCE_LINES = []


@pytest.fixture(scope="session")
def qc32():
    return quadric_new(3, 2)


@pytest.fixture(scope="session")
def solids32(qc32):
    return elliptic_solids(qc32)


@pytest.fixture(scope="session")
def g32():
    return build_gn(3, 2)


@pytest.fixture(scope="session")
def no8():
    return build_no_plus(3)


@pytest.fixture(scope="session")
def g32_cliques(g32):
    return maximal_cliques(g32, workers=1)


@pytest.fixture(scope="session")
def g32_classified(g32, qc32, g32_cliques):
    """(histogram, records) for every maximal clique of G_3(2)."""
    return classify_all(g32, qc32, g32_cliques, strict=False)


@pytest.fixture(scope="session")
def no8_cliques(no8):
    return maximal_cliques(no8, workers=1)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
