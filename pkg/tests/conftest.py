import numpy as np
import pytest


def random_complex(rng, *shape):
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def inner(U, V):
    # <U, V> = sum U conj(V)
    return np.vdot(V, U)


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)
