import numpy as np
import pytest

import polymatkit as pk


@pytest.fixture(scope="session")
def fd():
    """Default NTT-friendly field."""
    return pk.default_field()


@pytest.fixture(scope="session")
def f97():
    """Small prime field for brute-force-friendly tests."""
    return pk.get_field(97)


@pytest.fixture
def rng():
    return np.random.default_rng(20240825)
