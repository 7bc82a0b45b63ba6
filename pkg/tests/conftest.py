import random

import pytest
from hypothesis import HealthCheck, settings

from drinfeld import DrinfeldModule, ExtField

settings.register_profile(
    "default", max_examples=100, deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.data_too_large],
)
settings.load_profile("default")

# q = 5, f = z^4 + 4z^2 + 4z + 2, gamma(x) = zeta, g = Delta = 1
EXAMPLE_F = [2, 4, 4, 0, 1]


def example_module():
    L = ExtField(5, EXAMPLE_F)
    return DrinfeldModule(L, [0, 1], [1], [1])


@pytest.fixture
def example():
    return example_module()


def random_module(q, n, m, seed):
    return DrinfeldModule.random(q, n, m, random.Random(f"test/{q}/{n}/{m}/{seed}"))
