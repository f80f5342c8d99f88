"""Shared fixtures."""

import numpy as np
import pytest

from spectral_gof.kernels import GaussianKernel, GramBundle, PeriodicSplineKernel
from spectral_gof.regularizers import ShowalterRegularizer, TikhonovRegularizer


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def gaussian_kernel():
    return GaussianKernel(bandwidth=1.0)


@pytest.fixture
def spline_kernel():
    return PeriodicSplineKernel()


@pytest.fixture(params=["tikhonov", "showalter"])
def regularizer(request):
    return TikhonovRegularizer() if request.param == "tikhonov" else ShowalterRegularizer()


@pytest.fixture
def gaussian_samples(rng):
    """(X, X0, Y0) all drawn from N(0, I_2) with n=20, m=30, s=15."""
    return rng.standard_normal((20, 2)), rng.standard_normal((30, 2)), rng.standard_normal((15, 2))


@pytest.fixture
def gaussian_bundle(gaussian_kernel, gaussian_samples):
    X, X0, Y0 = gaussian_samples
    return GramBundle.build(gaussian_kernel, X, X0, Y0)
