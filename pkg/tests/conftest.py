import numpy as np
import pytest

from trigspec import make_grid, suite_signals


@pytest.fixture(scope="session")
def suite():
    return suite_signals()


@pytest.fixture(scope="session")
def grids():
    return {n: make_grid(n) for n in (2, 8, 16)}


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
