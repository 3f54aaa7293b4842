import numpy as np
import pytest

from selforth.ff_core import default_tower


@pytest.fixture(scope="session")
def gf4():
    return default_tower(2, 2)


@pytest.fixture(scope="session")
def gf9():
    return default_tower(3, 2)


@pytest.fixture(scope="session")
def gf16():
    return default_tower(4, 2)


@pytest.fixture(scope="session")
def gf64():
    return default_tower(4, 3)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from test_acceptance import ACCEPTANCE_KEY

    lines = config.stash.get(ACCEPTANCE_KEY, [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
