"""
Shared fixtures for the test suite.
"""
import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def numerics_settings(settings):
    """Mutable copy of BERGMAN_NUMERICS for tests that override a tunable."""
    settings.BERGMAN_NUMERICS = dict(settings.BERGMAN_NUMERICS)
    return settings.BERGMAN_NUMERICS
