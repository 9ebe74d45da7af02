import numpy as np
import pytest

from hmwkit import FilamentField, ParticleState, circle


@pytest.fixture
def rng():
    return np.random.default_rng(20261016)


@pytest.fixture
def unit_field():
    return FilamentField(1.0, (0.0, 0.0))


@pytest.fixture
def unit_circle():
    return circle((0.0, 0.0), 1.0)


@pytest.fixture
def particle():
    return ParticleState(mu_e=1.0, s3=1, mass=1.0, k=(0.3, -0.2))
