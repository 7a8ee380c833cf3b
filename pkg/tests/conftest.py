import random

import pytest

from supersingular.ring import find_irreducible

DEFAULT_SEED = 20240229

_acceptance_lines: list[str] = []


def pytest_addoption(parser):
    parser.addoption(
        "--seed", type=int, default=DEFAULT_SEED, help="seed for randomized property tests"
    )


@pytest.fixture
def seed(request) -> int:
    return request.config.getoption("--seed")


@pytest.fixture
def rng(seed) -> random.Random:
    return random.Random(seed)


@pytest.fixture(scope="session")
def F5():
    return find_irreducible(5, 1)


@pytest.fixture(scope="session")
def F7():
    return find_irreducible(7, 1)


@pytest.fixture(scope="session")
def F25():
    return find_irreducible(5, 2)


@pytest.fixture(scope="session")
def acceptance_log():
    return _acceptance_lines


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
