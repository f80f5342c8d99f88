"""Tests for the test procedures and method dispatch."""

import logging
import math

import numpy as np
import pytest

from spectral_gof.errors import ConfigError, InvalidParameterError, MissingClosedFormError
from spectral_gof.kernels import GaussianKernel, GramBundle, PeriodicSplineKernel
from spectral_gof.procedures import (
    MethodConfig,
    PermutationPlan,
    adaptive_oracle_test,
    adaptive_srct,
    adaptive_srpt,
    b1_constant,
    cell_ensembles,
    chebyshev_threshold,
    energy_perm_test,
    minimum_permutations,
    mmd_test,
    mmd_threshold,
    oracle_test,
    oracle_threshold,
    permutation_decision,
    rejection_budget,
    run_method,
    srct,
    srct_threshold,
    srpt,
)
from spectral_gof.regularizers import ShowalterRegularizer, TikhonovRegularizer
from spectral_gof.spectral import PeriodicSplineMercer, centered_eigensystem, population_summary
from spectral_gof.statistics import eta_ts


def _null_samples(seed, n=20, m=30, s=15, dim=1, shift=0.0):
    rng = np.random.default_rng(seed)
    X = rng.standard_normal((n, dim))
    X[:, 0] += shift
    return X, rng.standard_normal((m, dim)), rng.standard_normal((s, dim))


class TestPermutationRule:
    """Rank rule on the B + 1 ensemble."""

    def test_budget(self):
        assert rejection_budget(0.05, 100) == 5
        assert rejection_budget(0.05, 61) == 3
        assert rejection_budget(0.05, 10) == 0

    def test_minimum_permutations(self):
        assert minimum_permutations(1, 0.05) == 19
        assert minimum_permutations(6, 0.05) == 119

    def test_top_five_of_one_hundred(self):
        """B = 99, alpha = 0.05: reject iff observed is among the top 5."""
        rest = np.arange(100.0)
        for observed, expected in ((95.0, True), (99.0, True), (94.0, False), (0.0, False)):
            values = np.concatenate([[observed], np.delete(rest, int(observed))])
            reject, critical, exceed = permutation_decision(values, 0.05)
            assert reject is expected
            assert exceed == 100 - int(observed)
            assert critical == 95.0
            assert reject == (observed >= critical)

    def test_ties_do_not_reject(self):
        values = np.concatenate([[5.0], np.full(5, 5.0), np.zeros(94)])
        reject, _, exceed = permutation_decision(values, 0.05)
        assert exceed == 6
        assert not reject

    def test_near_ties_count_against_rejection(self):
        values = np.concatenate([[1.0], [1.0 - 1e-15] * 5, np.zeros(94)])
        assert not permutation_decision(values, 0.05)[0]

    def test_budget_zero_never_rejects(self):
        values = np.concatenate([[10.0], np.zeros(9)])
        assert not permutation_decision(values, 0.05)[0]

    def test_budget_zero_critical_is_inf(self):
        values = np.concatenate([[10.0], np.zeros(9)])
        assert permutation_decision(values, 0.05)[1] == math.inf

    @pytest.mark.parametrize("alpha", [0.05, 0.1, 0.3])
    def test_reject_iff_statistic_reaches_critical(self, alpha):
        rng = np.random.default_rng(17)
        for _ in range(200):
            values = rng.integers(0, 12, size=40).astype(float)
            reject, critical, _ = permutation_decision(values, alpha)
            assert reject == (values[0] >= critical)

    def test_tied_critical_value(self):
        values = np.concatenate([[3.0], [9.0, 9.0, 7.0, 7.0, 7.0, 7.0], np.zeros(93)])
        reject, critical, _ = permutation_decision(values, 0.05)
        assert critical == 9.0
        assert not reject


class TestPermutationPlan:
    """Ensembles of pooled orderings."""

    def test_identity_in_slot_zero(self):
        np.testing.assert_array_equal(PermutationPlan(5, seed=1).order(0, 7), np.arange(7))

    def test_orders_are_permutations(self):
        plan = PermutationPlan(20, seed=3)
        for i in range(1, 21):
            np.testing.assert_array_equal(np.sort(plan.order(i, 9)), np.arange(9))

    def test_deterministic(self):
        a, b = PermutationPlan(10, seed=42), PermutationPlan(10, seed=42)
        for i in range(11):
            np.testing.assert_array_equal(a.order(i, 12), b.order(i, 12))
        assert not np.array_equal(a.order(1, 12), PermutationPlan(10, seed=43).order(1, 12))

    def test_chunks_cover_every_slot(self):
        plan = PermutationPlan(16, seed=5)
        seen = []
        for start, orders in plan.chunks(6, batch_size=5):
            assert start == len(seen)
            seen.extend(orders)
        assert len(seen) == plan.size == 17
        for i, order in enumerate(seen):
            np.testing.assert_array_equal(order, plan.order(i, 6))

    def test_exhaustive(self):
        plan = PermutationPlan.exhaustive(2, 2)
        assert plan.is_exhaustive
        assert plan.size == 24
        orders = np.vstack([orders for _, orders in plan.chunks(4)])
        assert len({tuple(o) for o in orders}) == 24
        np.testing.assert_array_equal(orders[0], np.arange(4))

    def test_invalid(self):
        with pytest.raises(InvalidParameterError):
            PermutationPlan(0)
        with pytest.raises(InvalidParameterError):
            PermutationPlan.exhaustive(6, 6)


class TestExactLevel:
    """Exchangeability with every ordering of n = m = 2 enumerated."""

    @pytest.mark.parametrize("seed", range(5))
    @pytest.mark.parametrize("alpha", [0.05, 0.2, 0.34, 0.4, 0.5, 0.7])
    def test_rejection_fraction_at_most_alpha(self, seed, alpha):
        X, X0, Y0 = _null_samples(seed, n=2, m=2, s=6)
        plan = PermutationPlan.exhaustive(2, 2)
        values, _ = cell_ensembles(X, X0, Y0, [GaussianKernel(1.0)], TikhonovRegularizer(), [0.1], plan)
        v = values[0]
        rejects = 0
        for i in range(v.size):
            reordered = np.concatenate([[v[i]], np.delete(v, i)])
            rejects += permutation_decision(reordered, alpha)[0]
        assert rejects / v.size <= alpha


class TestSrpt:
    """Spectral regularized permutation test."""

    def test_observed_statistic_is_eta(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(0)
        outcome = srpt(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1, 0.05, 30, 7)
        grams = GramBundle.build(gaussian_kernel, X, X0, Y0)
        expected = eta_ts(grams, centered_eigensystem(grams.K_s, 1.0), TikhonovRegularizer(), 0.1).value
        assert outcome.statistic == pytest.approx(expected, abs=1e-10)
        assert outcome.method == "srpt"
        assert outcome.diagnostics["permutations"] == 30

    def test_deterministic(self, gaussian_kernel, regularizer):
        X, X0, Y0 = _null_samples(1)
        a = srpt(X, X0, Y0, gaussian_kernel, regularizer, 0.05, 0.05, 60, 123)
        b = srpt(X, X0, Y0, gaussian_kernel, regularizer, 0.05, 0.05, 60, 123)
        assert a == b

    def test_rejects_clear_shift(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(2, n=30, m=30, shift=3.0)
        outcome = srpt(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1, 0.05, 60, 9)
        assert outcome.reject
        assert outcome.statistic >= outcome.critical_value

    def test_covariance_sample_order_is_irrelevant(self, gaussian_kernel, rng):
        X, X0, Y0 = _null_samples(3)
        a = srpt(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1, 0.05, 40, 5)
        b = srpt(X, X0, Y0[rng.permutation(Y0.shape[0])], gaussian_kernel, TikhonovRegularizer(), 0.1, 0.05, 40, 5)
        assert a.reject == b.reject
        assert a.statistic == pytest.approx(b.statistic, abs=1e-10)
        assert a.critical_value == pytest.approx(b.critical_value, abs=1e-10)

    def test_singleton_grid_matches_srpt(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(4, shift=0.8)
        single = srpt(X, X0, Y0, gaussian_kernel, ShowalterRegularizer(), 0.2, 0.05, 50, 77)
        union = adaptive_srpt(X, X0, Y0, [gaussian_kernel], ShowalterRegularizer(), [0.2], 0.05, 50, 77)
        assert union.reject == single.reject
        assert union.statistic == single.statistic
        assert union.critical_value == single.critical_value
        assert len(union.per_grid_results) == 1

    def test_adaptive_grid(self):
        X, X0, Y0 = _null_samples(5, n=25, m=25, shift=2.5)
        kernels = [GaussianKernel(h) for h in (0.5, 1.0, 2.0)]
        outcome = adaptive_srpt(X, X0, Y0, kernels, TikhonovRegularizer(), [0.01, 0.1], 0.05, 119, 3)
        assert outcome.method == "adaptive-srpt"
        assert len(outcome.per_grid_results) == 6
        assert outcome.reject
        assert {cell.kernel_id for cell in outcome.per_grid_results} == {k.kernel_id for k in kernels}
        for cell in outcome.per_grid_results:
            assert cell.reject == (cell.statistic >= cell.critical_value)

    def test_warns_when_B_too_small(self, caplog):
        X, X0, Y0 = _null_samples(6)
        with caplog.at_level(logging.WARNING, logger="spectral_gof"):
            adaptive_srpt(X, X0, Y0, [GaussianKernel(1.0)], TikhonovRegularizer(), [0.1, 0.2], 0.05, 10, 1)
        assert "permutations" in caplog.text

    def test_plan_can_be_passed(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(7)
        plan = PermutationPlan(25, seed=11)
        a = srpt(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1, 0.05, rng=plan)
        b = srpt(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1, 0.05, 25, 11)
        assert a == b

    def test_invalid_inputs(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(8)
        with pytest.raises(InvalidParameterError):
            srpt(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1, alpha=1.5)
        with pytest.raises(InvalidParameterError):
            adaptive_srpt(X, X0, Y0, [], TikhonovRegularizer(), [0.1])
        with pytest.raises(InvalidParameterError):
            adaptive_srpt(X, X0, Y0, [gaussian_kernel], TikhonovRegularizer(), [])


class TestEnergyPermutation:
    def test_deterministic_and_powerful(self):
        X, X0, _ = _null_samples(9, n=30, m=30, shift=2.0)
        a = energy_perm_test(X, X0, 0.05, 60, 4)
        assert a == energy_perm_test(X, X0, 0.05, 60, 4)
        assert a.reject
        assert a.method == "energy-perm"
        assert a.statistic >= a.critical_value


class TestSrct:
    """Concentration test."""

    def test_b1(self):
        expected = math.sqrt(4 / 9 - 16 / (3 * math.sqrt(195)) - 32 / 585)
        assert b1_constant(65) == pytest.approx(expected)
        assert b1_constant(65) == pytest.approx(0.0884, abs=1e-4)

    def test_threshold(self):
        gamma = srct_threshold(1.0, 0.05, 100, 100, TikhonovRegularizer(), 65)
        assert gamma == pytest.approx(24.28, abs=0.02)

    def test_b1_grows_with_c1(self):
        assert b1_constant(200) > b1_constant(65)

    def test_c1_too_small(self):
        with pytest.raises(InvalidParameterError):
            b1_constant(64)

    def test_flat_covariance_sample_never_rejects(self, gaussian_kernel):
        X, X0, _ = _null_samples(14, shift=3.0)
        Y0 = np.zeros((15, 1))
        outcome = srct(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1)
        assert outcome.diagnostics["n2_hat"] == 0.0
        assert not outcome.reject
        assert outcome.critical_value == math.inf
        union = adaptive_srct(X, X0, Y0, [gaussian_kernel], TikhonovRegularizer(), [0.1, 0.2])
        assert not union.reject
        assert all(not cell.reject for cell in union.per_grid_results)

    def test_decision_and_diagnostics(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(10)
        outcome = srct(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1)
        assert outcome.reject == (outcome.statistic >= outcome.critical_value)
        assert outcome.diagnostics["n2_hat"] <= outcome.diagnostics["n1_hat"]
        expected = srct_threshold(outcome.diagnostics["n2_hat"], 0.05, 20, 30, TikhonovRegularizer())
        assert outcome.critical_value == pytest.approx(expected)

    def test_null_sample_accepted(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(11, n=50, m=50, s=30)
        assert not srct(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.1).reject

    def test_singleton_grid_matches_srct(self, gaussian_kernel):
        X, X0, Y0 = _null_samples(12, shift=1.0)
        single = srct(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), 0.3)
        union = adaptive_srct(X, X0, Y0, gaussian_kernel, TikhonovRegularizer(), [0.3])
        assert union.reject == single.reject
        assert union.method == "srct"

    def test_adaptive_normalization(self, gaussian_kernel):
        """Cells compare eta with gamma at alpha / |Lambda|; the summary is eta / N2."""
        X, X0, Y0 = _null_samples(13)
        lambdas = [0.01, 0.02, 0.04]
        outcome = adaptive_srct(X, X0, Y0, [gaussian_kernel], TikhonovRegularizer(), lambdas)
        for cell in outcome.per_grid_results:
            gamma = srct_threshold(cell.n2_hat, 0.05 / 3, 20, 30, TikhonovRegularizer())
            assert cell.critical_value == pytest.approx(gamma)
        best = max(cell.statistic / cell.n2_hat for cell in outcome.per_grid_results)
        assert outcome.statistic == pytest.approx(best)
        assert outcome.critical_value == pytest.approx(srct_threshold(1.0, 0.05 / 3, 20, 30, TikhonovRegularizer()))

    @pytest.mark.slow
    def test_size_under_null(self, spline_kernel):
        rng = np.random.default_rng(99)
        rejects = 0
        for _ in range(100):
            X, X0, Y0 = rng.uniform(size=(100, 1)), rng.uniform(size=(100, 1)), rng.uniform(size=(100, 1))
            rejects += srct(X, X0, Y0, spline_kernel, TikhonovRegularizer(), 0.01).reject
        assert rejects / 100 <= 0.05


class TestOracleTest:
    """Oracle test with the closed-form spline spectrum."""

    def test_population_n2_is_converged(self):
        system = PeriodicSplineMercer()
        a = population_summary(system, 0.01, truncation=100000).n2_hat
        b = population_summary(system, 0.01, truncation=200000).n2_hat
        assert a == pytest.approx(b, rel=1e-6)

    def test_threshold_decreases_in_alpha(self):
        reg = TikhonovRegularizer()
        values = [chebyshev_threshold(1.3, reg, alpha, 100) for alpha in (0.01, 0.05, 0.2, 0.9)]
        assert all(a > b for a, b in zip(values, values[1:]))

    def test_threshold_uses_population_n2(self):
        system, reg = PeriodicSplineMercer(), TikhonovRegularizer()
        n2 = population_summary(system, 0.01).n2_hat
        gamma = oracle_threshold(system, reg, 0.01, 0.05, 200)
        assert gamma == pytest.approx(chebyshev_threshold(n2, reg, 0.05, 200))
        assert gamma == pytest.approx(4 * n2 / (200 * math.sqrt(0.05)))

    def test_rejects_concentrated_sample(self, rng):
        X = 0.2 * rng.uniform(size=200)
        outcome = oracle_test(X, TikhonovRegularizer(), 0.01, 0.05, k_max=256)
        assert outcome.reject
        assert outcome.method == "oracle"
        assert outcome.diagnostics["tail_bound"] > 0

    def test_accepts_uniform_sample(self, rng):
        outcome = oracle_test(rng.uniform(size=200), TikhonovRegularizer(), 0.01, 0.05, k_max=256)
        assert not outcome.reject

    def test_simulated_threshold(self, rng):
        X = 0.2 * rng.uniform(size=100)
        outcome = oracle_test(X, TikhonovRegularizer(), 0.01, 0.05, k_max=64, threshold="simulated", B=60, rng=3)
        again = oracle_test(X, TikhonovRegularizer(), 0.01, 0.05, k_max=64, threshold="simulated", B=60, rng=3)
        assert outcome == again
        assert outcome.reject
        assert outcome.diagnostics["null_draws"] == 60

    def test_adaptive_grid(self, rng):
        X = rng.uniform(size=100)
        outcome = adaptive_oracle_test(X, TikhonovRegularizer(), [0.01, 0.1], 0.05, PeriodicSplineMercer(), k_max=64)
        assert outcome.method == "adaptive-oracle"
        assert len(outcome.per_grid_results) == 2

    def test_unknown_threshold(self, rng):
        with pytest.raises(ConfigError):
            oracle_test(rng.uniform(size=10), TikhonovRegularizer(), 0.1, threshold="bootstrap")


class TestMmdTest:
    """MMD test with the Chebyshev threshold."""

    def test_thresholds(self):
        assert mmd_threshold(1.0 / 12.0, 0.05, 100) == pytest.approx(0.014907, abs=1e-6)
        assert mmd_threshold(1.0, 0.05, 100) == pytest.approx(0.178885, abs=1e-6)

    def test_rejects_shift(self, rng):
        X = rng.standard_normal((100, 1)) + 3.0
        outcome = mmd_test(X, GaussianKernel(1.0), "gaussian:d=1")
        assert outcome.reject
        assert outcome.critical_value == pytest.approx(0.178885, abs=1e-6)

    def test_accepts_null(self, rng):
        assert not mmd_test(rng.standard_normal((100, 2)), GaussianKernel(1.0), "gaussian:d=2").reject

    def test_missing_closed_form(self, rng):
        with pytest.raises(MissingClosedFormError):
            mmd_test(rng.uniform(size=(10, 1)), PeriodicSplineKernel(), "gaussian:d=1")


@pytest.mark.slow
class TestSizeUnderNull:
    """Rejection rates over 1000 standard-normal null replicates, n = m = s = 100."""

    REPS = 1000

    @pytest.fixture(scope="class")
    def rejections(self):
        kernel, reg = GaussianKernel(1.0), TikhonovRegularizer()
        counts = {"srpt": 0, "srct": 0, "mmd": 0}
        for rep in range(self.REPS):
            X, X0, Y0 = _null_samples(5000 + rep, n=100, m=100, s=100)
            counts["srpt"] += srpt(X, X0, Y0, kernel, reg, 0.1, 0.05, 60, rep).reject
            counts["srct"] += srct(X, X0, Y0, kernel, reg, 0.1, 0.05).reject
            counts["mmd"] += mmd_test(X, kernel, "gaussian:d=1", 0.05).reject
        return {name: count / self.REPS for name, count in counts.items()}

    def test_srpt_inside_binomial_band(self, rejections):
        assert 0.033 <= rejections["srpt"] <= 0.067

    @pytest.mark.parametrize("method", ["srct", "mmd"])
    def test_conservative_tests_stay_below_band(self, rejections, method):
        assert rejections[method] <= 0.067

    def test_oracle_on_uniform_null(self):
        rng = np.random.default_rng(77)
        rejects = sum(
            oracle_test(rng.uniform(size=100), TikhonovRegularizer(), 0.01, 0.05, k_max=128).reject
            for _ in range(self.REPS)
        )
        assert rejects / self.REPS <= 0.067


class TestDispatch:
    """MethodConfig resolution and run_method."""

    def test_defaults_resolve_full_grids(self, rng):
        method = MethodConfig(name="srpt")
        assert len(method.resolve_lambdas()) == 23
        X, X0 = rng.standard_normal((10, 2)), rng.standard_normal((10, 2))
        assert len(method.resolve_kernels(X, X0)) == 14

    def test_mmd_auto_is_median(self, rng):
        X, X0 = rng.standard_normal((10, 2)), rng.standard_normal((10, 2))
        assert len(MethodConfig(name="mmd").resolve_kernels(X, X0)) == 1

    def test_explicit_grids(self, rng):
        method = MethodConfig.from_dict({"name": "srct", "bandwidths": [0.5, 1.0], "lambdas": 0.1})
        assert method.resolve_lambdas() == [0.1]
        kernels = method.resolve_kernels(rng.standard_normal((5, 1)), rng.standard_normal((5, 1)))
        assert [k.bandwidth for k in kernels] == [0.5, 1.0]

    def test_auto_permutations(self):
        method = MethodConfig(name="srpt", permutations="auto")
        assert method.resolve_permutations(1, 0.05) == 60
        assert method.resolve_permutations(20, 0.05) == 399

    @pytest.mark.parametrize(
        "data",
        [{"name": "ks"}, {"name": "srpt", "colour": 1}, {"bandwidths": 1.0}, {"name": "srpt", "permutations": "many"}],
    )
    def test_invalid_configs(self, data):
        with pytest.raises(ConfigError):
            MethodConfig.from_dict(data)

    def test_round_trip(self):
        method = MethodConfig(name="srpt", label="SRPT-T", lambdas=[0.1, 0.2])
        assert MethodConfig.from_dict(method.to_dict()) == method

    def test_run_srpt(self):
        X, X0, Y0 = _null_samples(20, shift=3.0)
        method = MethodConfig(name="srpt", bandwidths=[1.0], lambdas=[0.1], permutations=40)
        outcome = run_method(method, X, X0, Y0, seed=1)
        assert outcome.reject
        assert outcome == run_method(method, X, X0, Y0, seed=1)

    def test_run_oracle(self, rng):
        method = MethodConfig(name="oracle", kernel="periodic_spline", lambdas=[0.01], k_max=64)
        outcome = run_method(method, rng.uniform(size=(50, 1)), null="uniform")
        assert outcome.method == "oracle"

    def test_run_mmd_and_energy(self, rng):
        X, X0, _ = _null_samples(21)
        assert run_method(MethodConfig(name="mmd"), X, null="gaussian:d=1").method == "mmd"
        assert run_method(MethodConfig(name="energy-perm"), X, X0, seed=2).method == "energy-perm"

    @pytest.mark.parametrize("name", ["srct", "srpt", "energy-perm"])
    def test_missing_samples(self, name, rng):
        with pytest.raises(ConfigError):
            run_method(MethodConfig(name=name), rng.standard_normal((5, 1)))

    def test_missing_null(self, rng):
        with pytest.raises(ConfigError):
            run_method(MethodConfig(name="mmd"), rng.standard_normal((5, 1)))
