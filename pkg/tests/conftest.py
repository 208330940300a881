import functools

import pytest
from hypothesis import HealthCheck, settings

from hfsplice import knot_library

settings.register_profile(
    "suite", deadline=None, max_examples=40, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("suite")


@functools.lru_cache(maxsize=None)
def layout(name):
    return knot_library.get(name).layout()


@functools.lru_cache(maxsize=None)
def cfd(name):
    return knot_library.get(name).cfd()


@pytest.fixture
def lay():
    return layout


@pytest.fixture
def struct():
    return cfd
