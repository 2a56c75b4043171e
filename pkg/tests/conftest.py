import random

import pytest

from toricaps import domains
from toricaps.exactgeom import RationalPolytope


def _p(*pts):
    return RationalPolytope.from_points(pts)


@pytest.fixture
def square():
    return domains.polydisk(1, 1)


@pytest.fixture
def triangle():
    return domains.ball(1)


@pytest.fixture
def rect():
    return domains.polydisk(1, 2)


@pytest.fixture
def omega4():
    return _p((0, 0), (1, 0), ("3/4", 1), (0, 1))


def random_corpus(seed, n, **kwargs):
    rng = random.Random(seed)
    return [domains.random_strongly_convex(rng, n_points=rng.randint(1, 4), **kwargs) for _ in range(n)]
