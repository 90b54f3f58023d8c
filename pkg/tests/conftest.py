import numpy as np
import pytest

from tests.utils import fixture_scenes


@pytest.fixture(scope='session')
def scenes():
    return fixture_scenes()


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
