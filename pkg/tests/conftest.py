import pytest

from sylvan3.cli import generate_corpus
from sylvan3.ideal_staircase import parse_ideal

CORPUS_SEED = 20240601
CORPUS_SIZE = 100
CORPUS_MAX_EXPONENT = 6


@pytest.fixture(scope="session")
def staircase_ideal():
    """Five generators whose F0 <- F1 entries come from the grid-counting rule."""
    return parse_ideal("x^3z, xyz, y^2z, x^3y^2, x^2y^3")


@pytest.fixture(scope="session")
def three_generator_ideal():
    return parse_ideal("xy, y^3, z")


@pytest.fixture(scope="session")
def four_generator_ideal():
    return parse_ideal("yz, xz, xy^2, x^2y")


@pytest.fixture(scope="session")
def corpus():
    return generate_corpus(CORPUS_SEED, CORPUS_SIZE, CORPUS_MAX_EXPONENT)


@pytest.fixture(scope="session")
def small_corpus():
    return generate_corpus(7, 25, 4)


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import RESULTS

    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[n])
