import numpy as np
import pytest

from necklace_walks import make_custom_pearl


@pytest.fixture
def custom_pearl():
    """Asymmetric 4-vertex pearl used across cross-validation tests."""
    return make_custom_pearl(4, [(1, 2), (2, 3), (3, 4), (1, 3)], root_in=1, root_out=4)


@pytest.fixture
def rng():
    return np.random.default_rng(42)


def random_hermitian(rng, dim):
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return (a + a.conj().T) / 2.0
