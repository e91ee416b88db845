"""Shared fixtures and hypothesis profiles."""
import os
from datetime import timedelta

import numpy as np
import pytest
from hypothesis import Verbosity, settings

from greedybasislab.spaces import (LpNormSpec, NormedSpace, PolyhedralNormSpec, QuadraticNormSpec,
                                   canonical_basis)
from greedybasislab.utils.settings_utils import AnalysisSettings

# register test flags for hypothesis; numerical examples routinely exceed the default deadline
settings.register_profile("gbl", deadline=None, max_examples=40)
settings.register_profile("ci", deadline=timedelta(milliseconds=5000), max_examples=100)
settings.register_profile("dev", deadline=None, max_examples=10)
settings.register_profile("debug", deadline=None, max_examples=10, verbosity=Verbosity.verbose)
settings.load_profile(os.getenv("HYPOTHESIS_PROFILE", "gbl"))


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full-size property sweeps (deselect with -m \"not slow\")")


SHEAR_GRAM = np.array([[1.0, 0.5], [0.5, 1.25]])
SQRT5_HALF = np.sqrt(5) / 2


def random_spd(rng, n, shift=0.5):
    A = rng.standard_normal((n, n))
    G = A.T @ A + shift * np.eye(n)
    return (G + G.T) / 2


def quadratic_instance(G):
    G = np.asarray(G, dtype=float)
    space = NormedSpace(G.shape[0], QuadraticNormSpec(gram=G))
    return space, canonical_basis(G.shape[0], space=space)


def summing_instance(n):
    space = NormedSpace(n, PolyhedralNormSpec(rows=np.tril(np.ones((n, n)))))
    return space, canonical_basis(n, space=space)


@pytest.fixture
def shear():
    """Canonical basis of R^2 under sqrt(x^T G x), G = [[1, 1/2], [1/2, 5/4]]."""
    return quadratic_instance(SHEAR_GRAM)


@pytest.fixture
def summing2():
    """Canonical basis of R^2 under max(|x_1|, |x_1 + x_2|)."""
    return summing_instance(2)


@pytest.fixture
def l2_canonical():
    space = NormedSpace(4, LpNormSpec(p=2.0))
    return space, canonical_basis(4, space=space)


@pytest.fixture
def fast_settings():
    """Small budget for tests that only need a search to run."""
    return AnalysisSettings(budget=1024, seed=0, chunk_size=256)


@pytest.fixture
def search_settings():
    return AnalysisSettings(budget=4096, seed=0, chunk_size=1024)
