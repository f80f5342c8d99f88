"""Tests for the spectral, MMD, oracle and energy statistics."""

import itertools

import numpy as np
import pytest
from scipy import integrate

from spectral_gof.distributions import get_distribution
from spectral_gof.errors import InvalidParameterError, MissingClosedFormError
from spectral_gof.kernels import FiniteRankKernel, GaussianKernel, GramBundle, PeriodicSplineKernel
from spectral_gof.regularizers import ShowalterRegularizer, TikhonovRegularizer
from spectral_gof.spectral import FiniteRankMercer, PeriodicSplineMercer, centered_eigensystem
from spectral_gof.statistics import (
    PooledQuadraticForm,
    StatisticValue,
    closed_form_null,
    combine_components,
    energy_stat,
    eta_ts,
    mmd_hat,
    oracle_eta,
    oracle_modes,
    oracle_tail_bound,
    pooled_distances,
)


def _u_statistic(K_xx, K_00, K_x0):
    n, m = K_xx.shape[0], K_00.shape[0]
    return (
        (K_xx.sum() - np.trace(K_xx)) / (n * (n - 1))
        + (K_00.sum() - np.trace(K_00)) / (m * (m - 1))
        - 2.0 * K_x0.sum() / (n * m)
    )


def _feature_space_eta(kernel, reg, lam, X, X0, Y0):
    """Brute force: g applied to the explicit feature covariance of Y0."""
    psi_x, psi_0, psi_y = kernel.features(X), kernel.features(X0), kernel.features(Y0)
    centered = psi_y - psi_y.mean(axis=0)
    sigma = centered.T @ centered / (psi_y.shape[0] - 1)
    values, vectors = np.linalg.eigh(sigma)
    values = np.clip(values, 0.0, None)
    g_sigma = (vectors * reg.apply(lam, values)) @ vectors.T
    return _u_statistic(psi_x @ g_sigma @ psi_x.T, psi_0 @ g_sigma @ psi_0.T, psi_x @ g_sigma @ psi_0.T)


def _spectral_eta(kernel, reg, lam, X, X0, Y0):
    grams = GramBundle.build(kernel, X, X0, Y0)
    return eta_ts(grams, centered_eigensystem(grams.K_s, kernel.bound), reg, lam)


class TestStatisticValue:
    def test_non_finite_rejected(self):
        with pytest.raises(ValueError):
            StatisticValue(value=float("nan"))

    def test_float(self):
        assert float(StatisticValue(value=0.25, lam=0.1)) == 0.25


class TestEtaTwoSample:
    """The two-sample spectral regularized statistic."""

    @pytest.mark.parametrize("sizes", list(itertools.product([4, 8, 16], repeat=3)))
    @pytest.mark.parametrize("lam", [0.05, 0.5])
    def test_matches_feature_space(self, regularizer, sizes, lam):
        """Gram-matrix evaluation equals the explicit feature-space statistic."""
        kernel = FiniteRankKernel()
        n, m, s = sizes
        for seed in range(50):
            rng = np.random.default_rng(seed)
            X, X0, Y0 = rng.uniform(size=n), rng.uniform(size=m), rng.uniform(size=s)
            spectral = _spectral_eta(kernel, regularizer, lam, X, X0, Y0).value
            brute = _feature_space_eta(kernel, regularizer, lam, X, X0, Y0)
            assert abs(spectral - brute) <= 1e-8 * (1.0 + abs(brute))

    def test_components_recombine(self, gaussian_bundle):
        eigen = centered_eigensystem(gaussian_bundle.K_s)
        result = eta_ts(gaussian_bundle, eigen, TikhonovRegularizer(), 0.1, kernel_id="g")
        assert combine_components(result.components, 20, 30) == pytest.approx(result.value, abs=1e-10)
        assert result.lam == 0.1
        assert result.kernel_id == "g"

    def test_constant_kernel_is_zero(self):
        """Equal Gram entries everywhere give a zero statistic."""
        c = 0.7
        grams = GramBundle(
            K_n=np.full((4, 4), c), K_m=np.full((5, 5), c), K_mn=np.full((5, 4), c),
            K_ns=np.full((4, 3), c), K_ms=np.full((5, 3), c), K_s=np.full((3, 3), c),
        )
        eigen = centered_eigensystem(grams.K_s)
        assert eta_ts(grams, eigen, ShowalterRegularizer(), 0.2).value == pytest.approx(0.0, abs=1e-12)

    def test_invariant_to_reordering(self, gaussian_kernel, gaussian_samples, rng):
        """Shuffling within X, X0 or Y0 leaves the statistic unchanged."""
        X, X0, Y0 = gaussian_samples
        reg = TikhonovRegularizer()
        base = _spectral_eta(gaussian_kernel, reg, 0.05, X, X0, Y0).value
        for shuffled in (
            (X[rng.permutation(20)], X0, Y0),
            (X, X0[rng.permutation(30)], Y0),
            (X, X0, Y0[rng.permutation(15)]),
        ):
            value = _spectral_eta(gaussian_kernel, reg, 0.05, *shuffled).value
            assert value == pytest.approx(base, abs=1e-10 * (1 + abs(base)))

    def test_tikhonov_closed_form_operator(self, gaussian_bundle):
        """Terms built from the closed-form Tikhonov G match eta_ts."""
        grams = gaussian_bundle
        lam, s = 0.02, grams.s
        eigen = centered_eigensystem(grams.K_s)
        G = -np.linalg.inv(eigen.reconstruct() + lam * np.eye(s)) / lam
        H = np.eye(s) - np.ones((s, s)) / s
        C = H @ G @ H / (s - 1)
        g0 = 1.0 / lam
        expected = _u_statistic(
            g0 * grams.K_n + grams.K_ns @ C @ grams.K_ns.T,
            g0 * grams.K_m + grams.K_ms @ C @ grams.K_ms.T,
            g0 * grams.K_mn.T + grams.K_ns @ C @ grams.K_ms.T,
        )
        value = eta_ts(grams, eigen, TikhonovRegularizer(), lam).value
        assert value == pytest.approx(expected, abs=1e-8 * (1 + abs(expected)))

    def test_size_checks(self, gaussian_bundle):
        eigen = centered_eigensystem(gaussian_bundle.K_s)
        with pytest.raises(InvalidParameterError):
            eta_ts(gaussian_bundle, eigen, TikhonovRegularizer(), 0.1, n=21)
        other = centered_eigensystem(np.eye(4))
        with pytest.raises(InvalidParameterError):
            eta_ts(gaussian_bundle, other, TikhonovRegularizer(), 0.1)

    def test_needs_two_points(self, gaussian_kernel, rng):
        grams = GramBundle.build(gaussian_kernel, rng.standard_normal((1, 2)), rng.standard_normal((5, 2)),
                                 rng.standard_normal((4, 2)))
        with pytest.raises(InvalidParameterError):
            eta_ts(grams, centered_eigensystem(grams.K_s), TikhonovRegularizer(), 0.1)

    @pytest.mark.slow
    def test_unbiased_under_null(self, gaussian_kernel):
        """Mean over null replicates is zero within 4 standard errors."""
        rng = np.random.default_rng(2024)
        reg = TikhonovRegularizer()
        values = []
        for _ in range(2000):
            X, X0, Y0 = rng.standard_normal((15, 1)), rng.standard_normal((15, 1)), rng.standard_normal((15, 1))
            values.append(_spectral_eta(gaussian_kernel, reg, 0.1, X, X0, Y0).value)
        values = np.asarray(values)
        assert abs(values.mean()) <= 4.0 * values.std(ddof=1) / np.sqrt(values.size)


class TestPooledQuadraticForm:
    """Batched evaluation over splits of the pooled sample."""

    def test_identity_split_matches_eta(self, gaussian_bundle, regularizer):
        engine = PooledQuadraticForm.from_bundle(gaussian_bundle)
        eigen = centered_eigensystem(gaussian_bundle.K_s)
        batch = engine.prepare(engine.identity_order()[None, :])
        value = engine.eta_values(batch, eigen, regularizer, 0.3)[0]
        expected = eta_ts(gaussian_bundle, eigen, regularizer, 0.3).value
        assert value == pytest.approx(expected, abs=1e-10 * (1 + abs(expected)))

    def test_permuted_splits_match_rebuilt_bundle(self, gaussian_bundle, rng):
        engine = PooledQuadraticForm.from_bundle(gaussian_bundle)
        eigen = centered_eigensystem(gaussian_bundle.K_s)
        reg = TikhonovRegularizer()
        orders = np.array([rng.permutation(50) for _ in range(7)])
        values = engine.eta_values(engine.prepare(orders, batch_size=3), eigen, reg, 0.05)
        for order, value in zip(orders, values):
            expected = eta_ts(gaussian_bundle.permuted(order), eigen, reg, 0.05).value
            assert value == pytest.approx(expected, abs=1e-9 * (1 + abs(expected)))

    def test_from_points_matches_bundle(self, gaussian_kernel, gaussian_samples, gaussian_bundle):
        a = PooledQuadraticForm.from_points(gaussian_kernel, *gaussian_samples)
        b = PooledQuadraticForm.from_bundle(gaussian_bundle)
        np.testing.assert_allclose(a.K, b.K)
        np.testing.assert_allclose(a.L, b.L)

    def test_energy_through_engine(self, rng):
        """The plain quadratic form on negated distances is the energy statistic."""
        X, X0 = rng.standard_normal((6, 2)), rng.standard_normal((9, 2))
        engine = PooledQuadraticForm(pooled_distances(X, X0), 6)
        value = engine.evaluate(engine.prepare(engine.identity_order()))[0]
        assert value == pytest.approx(energy_stat(X, X0).value, abs=1e-12)

    def test_wrong_order_width(self, gaussian_bundle):
        engine = PooledQuadraticForm.from_bundle(gaussian_bundle)
        with pytest.raises(InvalidParameterError):
            engine.prepare(np.arange(10)[None, :])


class TestMmd:
    """MMD statistic and closed-form null embeddings."""

    def test_hand_example(self):
        K = np.array([[1.0, 0.5], [0.5, 1.0]])
        result = mmd_hat(K, [0.3, 0.4], 0.2)
        assert result.value == pytest.approx(0.0, abs=1e-15)
        assert sum(result.components.values()) == pytest.approx(result.value, abs=1e-12)

    def test_needs_two_points(self):
        with pytest.raises(InvalidParameterError):
            mmd_hat(np.ones((1, 1)), [0.5], 0.1)

    def test_gaussian_null_values(self):
        null = closed_form_null(GaussianKernel(1.0), "gaussian:d=1")
        assert null([[0.0]])[0] == pytest.approx(np.sqrt(0.5), rel=1e-12)
        assert null.squared_norm == pytest.approx(np.sqrt(1.0 / 3.0), rel=1e-12)

    def test_gaussian_null_quadrature(self):
        """Shifted, scaled Gaussian null against numerical integration."""
        h, shift, var = 0.6, 0.4, 2.0
        null = closed_form_null(GaussianKernel(h), f"gaussian:d=1,shift={shift},scale={var}")
        density = get_distribution(f"gaussian:d=1,shift={shift},scale={var}").density
        x = 1.3
        numeric, _ = integrate.quad(lambda y: np.exp(-(x - y) ** 2 / (2 * h)) * density([[y]])[0], -30, 30)
        assert null([[x]])[0] == pytest.approx(numeric, rel=1e-7)

    def test_cube_quadrature(self):
        h = 0.3
        null = closed_form_null(GaussianKernel(h), "uniform_cube:d=1")
        x = 0.2
        numeric, _ = integrate.quad(lambda y: np.exp(-(x - y) ** 2 / (2 * h)), 0.0, 1.0)
        assert null([[x]])[0] == pytest.approx(numeric, rel=1e-10)
        norm, _ = integrate.dblquad(lambda y, z: np.exp(-(z - y) ** 2 / (2 * h)), 0.0, 1.0, 0.0, 1.0)
        assert null.squared_norm == pytest.approx(norm, rel=1e-8)

    def test_cube_norm_is_product(self):
        one = closed_form_null(GaussianKernel(0.5), "uniform_cube:d=1").squared_norm
        three = closed_form_null(GaussianKernel(0.5), "uniform_cube:d=3").squared_norm
        assert three == pytest.approx(one ** 3)

    def test_sphere_closed_form(self):
        """On S^2 the embedding is h (1 - exp(-2/h)) / 2 everywhere."""
        h = 0.8
        null = closed_form_null(GaussianKernel(h), "sphere_uniform:d=3")
        expected = h * (1.0 - np.exp(-2.0 / h)) / 2.0
        assert null.squared_norm == pytest.approx(expected, rel=1e-12)
        np.testing.assert_allclose(null(np.eye(3)), expected, rtol=1e-12)

    def test_uniform_vmf_is_sphere(self):
        a = closed_form_null(GaussianKernel(1.0), "vmf:d=3,kappa=0")
        b = closed_form_null(GaussianKernel(1.0), "sphere_uniform:d=3")
        assert a.squared_norm == pytest.approx(b.squared_norm)

    def test_embedding_mean_matches_norm(self):
        """E_{P0} mu0(Y) equals ||mu0||^2 within 3 standard errors."""
        null = closed_form_null(GaussianKernel(0.5), "uniform_cube:d=2")
        sample = get_distribution("uniform_cube:d=2").sample(20000, np.random.default_rng(3))
        values = null(sample)
        se = values.std(ddof=1) / np.sqrt(values.size)
        assert abs(values.mean() - null.squared_norm) <= 3.0 * se

    def test_spline_null_is_centered(self):
        null = closed_form_null(PeriodicSplineKernel(), "uniform")
        assert null.squared_norm == 0.0
        np.testing.assert_array_equal(null([[0.1], [0.9]]), 0.0)
        assert isinstance(null.spectrum, PeriodicSplineMercer)

    @pytest.mark.parametrize(
        "kernel,spec",
        [
            (GaussianKernel(1.0), "watson_mixture:d=3"),
            (PeriodicSplineKernel(), "gaussian:d=1"),
            (PeriodicSplineKernel(), "perturbed_uniform:d=1,P=2"),
        ],
    )
    def test_missing_closed_form(self, kernel, spec):
        with pytest.raises(MissingClosedFormError):
            closed_form_null(kernel, spec)


class TestOracle:
    """Oracle statistic from the Mercer expansion."""

    def test_single_pair_at_zero(self):
        """X = (0, 0), one frequency, Tikhonov at lambda = 1."""
        lam1 = (2.0 * np.pi) ** -2
        result = oracle_eta(np.zeros(2), TikhonovRegularizer(), 1.0, PeriodicSplineMercer(), k_max=1)
        assert result.value == pytest.approx(2.0 * lam1 / (lam1 + 1.0), rel=1e-12)
        assert result.value == pytest.approx(0.049409, abs=1e-6)

    def test_matches_gram_u_statistic(self, rng, regularizer):
        """With finitely many modes the oracle equals a kernel U-statistic."""
        values = np.array([0.4, 0.2, 0.1, 0.05])
        system = FiniteRankMercer(values)
        x = rng.uniform(size=9)
        phi = system.features(x, 4)
        K = (phi * (regularizer.apply(0.1, values) * values)) @ phi.T
        expected = (K.sum() - np.trace(K)) / (9 * 8)
        assert oracle_eta(x, regularizer, 0.1, system, k_max=10).value == pytest.approx(expected, abs=1e-12)

    def test_truncation_within_tail_bound(self, rng):
        x = rng.uniform(size=50)
        reg, lam, system = TikhonovRegularizer(), 1e-4, PeriodicSplineMercer()
        coarse = oracle_eta(x, reg, lam, system, k_max=512).value
        fine = oracle_eta(x, reg, lam, system, k_max=1024).value
        assert abs(fine - coarse) <= oracle_tail_bound(system, reg, lam, 512)

    def test_truncation_negligible_for_large_lambda(self, rng):
        x = rng.uniform(size=50)
        reg, system = TikhonovRegularizer(), PeriodicSplineMercer()
        coarse = oracle_eta(x, reg, 1.0, system, k_max=512).value
        fine = oracle_eta(x, reg, 1.0, system, k_max=1024).value
        assert abs(fine - coarse) < 1e-6

    def test_modes_shape(self, rng):
        values, per_mode = oracle_modes(rng.uniform(size=5), PeriodicSplineMercer(), k_max=3)
        assert values.shape == per_mode.shape == (6,)

    def test_invalid_arguments(self):
        with pytest.raises(InvalidParameterError):
            oracle_modes(np.zeros(3), PeriodicSplineMercer(), k_max=0)
        with pytest.raises(InvalidParameterError):
            oracle_eta(np.zeros(1), TikhonovRegularizer(), 1.0, PeriodicSplineMercer(), k_max=2)
        with pytest.raises(InvalidParameterError):
            oracle_eta(np.zeros(3), TikhonovRegularizer(), 0.0, PeriodicSplineMercer(), k_max=2)

    @pytest.mark.slow
    def test_unbiased_under_null(self):
        rng = np.random.default_rng(11)
        reg, system = TikhonovRegularizer(), PeriodicSplineMercer()
        values = np.array([
            oracle_eta(rng.uniform(size=20), reg, 0.01, system, k_max=64).value for _ in range(2000)
        ])
        assert abs(values.mean()) <= 4.0 * values.std(ddof=1) / np.sqrt(values.size)


class TestEnergy:
    """Energy distance U-statistic."""

    def test_explicit_distances(self):
        assert energy_stat([[0.0], [0.0]], [[1.0], [1.0]]).value == pytest.approx(2.0)

    def test_identical_samples(self):
        """The cross mean includes zero self-distances, so X = X0 is slightly negative."""
        X = np.array([[0.0], [1.0], [3.0]])
        pair_sum = 2.0 * (1.0 + 3.0 + 2.0)
        expected = -2.0 * pair_sum / (9 * 2)
        assert energy_stat(X, X).value == pytest.approx(expected)

    def test_components(self, rng):
        result = energy_stat(rng.standard_normal((5, 2)), rng.standard_normal((7, 2)))
        assert sum(result.components.values()) == pytest.approx(result.value)

    def test_needs_two_points(self):
        with pytest.raises(InvalidParameterError):
            energy_stat([[0.0]], [[1.0], [2.0]])

    @pytest.mark.slow
    def test_unbiased_under_null(self):
        rng = np.random.default_rng(5)
        values = np.array([
            energy_stat(rng.standard_normal((200, 1)), rng.standard_normal((200, 1))).value
            for _ in range(500)
        ])
        assert abs(values.mean()) <= 3.0 * values.std(ddof=1) / np.sqrt(values.size)
