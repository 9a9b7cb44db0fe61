"""Shared builders for the test suite."""

import numpy as np
import pytest

from airytunnel import TabulatedPotential


def tilted_gaussian_samples(n=1201, span=6.0):
    """Asymmetric single-hump barrier: exp(-x^2) * (1 + 0.3 tanh x)."""
    x = np.linspace(-span, span, n)
    v = np.exp(-(x ** 2)) * (1.0 + 0.3 * np.tanh(x))
    return x, v


def double_hump_samples(n=1601, span=6.0):
    """Two separated gaussian humps; unsupported by the single-hump method."""
    x = np.linspace(-span, span, n)
    v = np.exp(-((x - 2.0) ** 2)) + np.exp(-((x + 2.0) ** 2))
    return x, v


def linear_potential(span=8.0, n=321):
    """Tabulated V(x) = x; the natural spline reproduces a line exactly."""
    x = np.linspace(-span, span, n)
    return TabulatedPotential(x, x.copy())


@pytest.fixture
def tilted_barrier():
    return TabulatedPotential(*tilted_gaussian_samples())


@pytest.fixture
def double_hump_barrier():
    return TabulatedPotential(*double_hump_samples())
