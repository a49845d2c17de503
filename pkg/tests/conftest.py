import numpy as np
import pytest

from belldistill import SimplexCoefficients


def random_table(seed: int, d: int = 3) -> SimplexCoefficients:
    """Flat-Dirichlet coefficient table, reproducible per seed."""
    c = np.random.default_rng(seed).dirichlet(np.ones(d * d))
    return SimplexCoefficients(d=d, c=(c / c.sum()).reshape(d, d))


def pure_bell_table() -> SimplexCoefficients:
    c = np.zeros((3, 3))
    c[0, 0] = 1.0
    return SimplexCoefficients(d=3, c=c)


def isotropic_table(p: float) -> SimplexCoefficients:
    """Mixture (1-p) of the canonical Bell projector with p of white noise."""
    c = np.full((3, 3), p / 9.0)
    c[0, 0] = 1.0 - 8.0 * p / 9.0
    return SimplexCoefficients(d=3, c=c)


def uniform_table(d: int = 3) -> SimplexCoefficients:
    return SimplexCoefficients(d=d, c=np.full((d, d), 1.0 / (d * d)))


@pytest.fixture
def pure_bell():
    return pure_bell_table()


@pytest.fixture
def uniform():
    return uniform_table()
