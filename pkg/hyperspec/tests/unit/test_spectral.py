import numpy as np
import pytest

from hyperspec.core.config import settings
from hyperspec.exceptions import (
    DimensionMismatchError,
    InstanceTooLargeError,
    InvalidAlphaError,
    MaxIterationsExceededError,
    NonPositiveVectorError,
    NotConnectedError,
    NotUnitVectorError,
)
from hyperspec.schemas import SolverOptions
from hyperspec.services.constructions import hyperstar
from hyperspec.services.enumeration import enumerate_supertrees
from hyperspec.services.hypergraph_service import build, single_vertex
from hyperspec.services.lemmas import random_supertree
from hyperspec.services.spectral import (
    alpha_spectral_radius,
    apply_a_alpha,
    check_alpha,
    contract,
    dense_a_alpha,
    dense_power_method,
    rayleigh,
    residual,
)


def hyperstar_eigenpair(m, k):
    """Точная пара для S_{m,k} при alpha = 0: центр a = lambda * b, листья b = (mk)^(-1/k)"""
    rho = m ** (1.0 / k)
    leaf = (m * k) ** (-1.0 / k)
    x = np.full(m * (k - 1) + 1, leaf)
    x[0] = rho * leaf
    return rho, x


def unit(x, k):
    x = np.asarray(x, dtype=np.float64)
    return x / np.sum(x ** k) ** (1.0 / k)


class TestOperator:
    """Тесты оператора A_alpha"""

    def test_single_edge_uniform(self, single_edge):
        x = np.full(3, 3 ** (-1 / 3))
        result = apply_a_alpha(single_edge, 0.5, x)
        assert np.allclose(result, x ** 2)

    def test_star_center_entry(self, star_3_3):
        x = np.ones(star_3_3.n)
        result = apply_a_alpha(star_3_3, 0.0, x)
        assert result[0] == pytest.approx(3.0)
        assert np.allclose(result[1:], 1.0)

    def test_alpha_weight_on_diagonal(self, star_2_3):
        x = np.full(star_2_3.n, 2.0)
        result = apply_a_alpha(star_2_3, 0.25, x)
        # center: 0.25 * 2 * 4 + 0.75 * 2 * 4
        assert result[0] == pytest.approx(8.0)

    def test_dimension_mismatch(self, single_edge):
        with pytest.raises(DimensionMismatchError):
            apply_a_alpha(single_edge, 0.0, [1.0, 1.0])

    def test_non_positive_vector(self, single_edge):
        with pytest.raises(NonPositiveVectorError):
            apply_a_alpha(single_edge, 0.0, [1.0, 0.0, 1.0])

    @pytest.mark.parametrize("alpha", [-0.1, 1.0, 1.5])
    def test_invalid_alpha(self, single_edge, alpha):
        with pytest.raises(InvalidAlphaError):
            apply_a_alpha(single_edge, alpha, [1.0, 1.0, 1.0])

    def test_check_alpha_accepts_range(self):
        assert check_alpha(0) == 0.0
        assert check_alpha(0.99) == 0.99

    def test_compensated_sum_agrees(self, monkeypatch, rng):
        g = random_supertree(6, 3, rng)
        x = rng.uniform(0.1, 1.0, g.n)
        plain = apply_a_alpha(g, 0.3, x)
        monkeypatch.setattr(settings, "COMPENSATED_SUM_THRESHOLD", 0)
        compensated = apply_a_alpha(g, 0.3, x)
        assert np.allclose(plain, compensated, rtol=1e-14, atol=0)


class TestDenseOracle:
    """Сверка с плотным тензором"""

    @pytest.mark.parametrize("alpha", [0.0, 0.4])
    def test_contraction_matches_operator(self, rng, alpha):
        for m, k in [(1, 3), (2, 3), (5, 2)]:
            g = random_supertree(m, k, rng)
            x = rng.uniform(0.2, 1.0, g.n)
            dense = contract(dense_a_alpha(g, alpha), x)
            assert np.allclose(dense, apply_a_alpha(g, alpha, x))

    @pytest.mark.parametrize("alpha", [0.0, 0.5])
    def test_power_methods_agree(self, rng, solver_opts, alpha):
        for m, k in [(2, 3), (4, 2), (5, 2)]:
            g = random_supertree(m, k, rng)
            sparse = alpha_spectral_radius(g, alpha, solver_opts)
            dense = dense_power_method(g, alpha, solver_opts)
            assert sparse.converged and dense.converged
            assert sparse.rho == pytest.approx(dense.rho, abs=1e-8)

    @pytest.mark.slow
    @pytest.mark.parametrize("alpha", [0.0, 0.5])
    def test_every_small_class(self, solver_opts, alpha):
        for m in (1, 2, 3):
            for certificate in enumerate_supertrees(m=m, k=3):
                sparse = alpha_spectral_radius(certificate, alpha, solver_opts)
                dense = dense_power_method(certificate, alpha, solver_opts)
                assert sparse.converged and dense.converged
                assert sparse.rho == pytest.approx(dense.rho, abs=1e-8)

    def test_dense_limit(self):
        g = hyperstar(8, 5)
        with pytest.raises(InstanceTooLargeError):
            dense_a_alpha(g, 0.0)


class TestRayleigh:
    """Тесты функционала Рэлея"""

    @pytest.mark.parametrize("alpha", [0.0, 0.3, 0.9])
    def test_single_edge_uniform(self, single_edge, alpha):
        x = np.full(3, 3 ** (-1 / 3))
        assert rayleigh(single_edge, alpha, x) == pytest.approx(1.0)

    def test_hyperstar_perron_vector(self, star_3_3):
        rho, x = hyperstar_eigenpair(3, 3)
        assert rayleigh(star_3_3, 0.0, x) == pytest.approx(3 ** (1 / 3))

    def test_not_unit(self, single_edge):
        with pytest.raises(NotUnitVectorError):
            rayleigh(single_edge, 0.0, [1.0, 1.0, 1.0])

    def test_variational_bound(self, loose_path_3, solver_opts, rng):
        for alpha in (0.0, 0.5):
            rho = alpha_spectral_radius(loose_path_3, alpha, solver_opts).rho
            for _ in range(20):
                x = unit(rng.uniform(0.05, 1.0, loose_path_3.n), 3)
                assert rayleigh(loose_path_3, alpha, x) <= rho + 1e-9


class TestPerron:
    """Тесты степенного метода"""

    @pytest.mark.parametrize("k", [2, 3, 4])
    def test_hyperstar_closed_form(self, solver_opts, k):
        for m in range(1, 9):
            result = alpha_spectral_radius(hyperstar(m, k), 0.0, solver_opts)
            assert result.converged
            assert result.rho == pytest.approx(m ** (1.0 / k), abs=1e-9)
            assert result.residual <= 1e-9

    @pytest.mark.parametrize("alpha", [0.0, 0.25, 0.5, 0.75, 0.99])
    def test_single_edge(self, single_edge, solver_opts, alpha):
        result = alpha_spectral_radius(single_edge, alpha, solver_opts)
        assert result.rho == pytest.approx(1.0, abs=1e-9)

    def test_vector_is_positive_unit(self, loose_path_3, solver_opts):
        result = alpha_spectral_radius(loose_path_3, 0.3, solver_opts)
        x = np.asarray(result.vector)
        assert np.all(x > 0)
        assert np.sum(x ** 3) == pytest.approx(1.0)

    def test_symmetric_entries_equal(self, star_3_3, solver_opts):
        x = alpha_spectral_radius(star_3_3, 0.5, solver_opts).vector
        assert max(x[1:]) - min(x[1:]) < 1e-8
        assert x[0] > x[1]

    def test_single_vertex(self):
        result = alpha_spectral_radius(single_vertex(3), 0.5)
        assert result.rho == 0.0
        assert result.vector == [1.0]

    def test_not_connected(self):
        with pytest.raises(NotConnectedError):
            alpha_spectral_radius(build(3, 6, [[0, 1, 2], [3, 4, 5]]), 0.0)

    def test_iteration_cap(self, loose_path_3):
        result = alpha_spectral_radius(loose_path_3, 0.5, SolverOptions(max_iterations=1))
        assert not result.converged
        assert result.iterations == 1
        with pytest.raises(MaxIterationsExceededError):
            result.require_converged()

    @pytest.mark.parametrize("alpha", [1e-7, 1e-5])
    def test_graph_star_near_zero_alpha_with_shift(self, alpha):
        # K_{1,3}: (lambda - 3 alpha)(lambda - alpha) = 3 (1 - alpha)^2
        expected = 2 * alpha + np.sqrt(alpha ** 2 + 3 * (1 - alpha) ** 2)
        opts = SolverOptions(tolerance=1e-10, max_iterations=200_000, shift=1.0)
        result = alpha_spectral_radius(hyperstar(3, 2), alpha, opts)
        assert result.converged
        assert result.rho == pytest.approx(expected, abs=1e-9)


class TestStartVector:
    """Начальный вектор не влияет на rho"""

    @pytest.mark.parametrize("alpha", [0.0, 0.5])
    def test_random_starts_agree(self, loose_path_3, solver_opts, rng, alpha):
        reference = alpha_spectral_radius(loose_path_3, alpha, solver_opts)
        for _ in range(10):
            start = rng.uniform(0.05, 1.0, loose_path_3.n)
            result = alpha_spectral_radius(loose_path_3, alpha, solver_opts, start=start)
            assert result.converged
            assert abs(result.rho - reference.rho) <= 10 * solver_opts.tolerance

    def test_start_is_normalized(self, star_3_3, solver_opts):
        result = alpha_spectral_radius(star_3_3, 0.0, solver_opts, start=np.full(7, 5.0))
        assert result.rho == pytest.approx(3 ** (1 / 3), abs=1e-9)

    def test_start_dimension(self, single_edge):
        with pytest.raises(DimensionMismatchError):
            alpha_spectral_radius(single_edge, 0.0, start=[1.0, 1.0])

    def test_start_not_positive(self, single_edge):
        with pytest.raises(NonPositiveVectorError):
            alpha_spectral_radius(single_edge, 0.0, start=[1.0, 0.0, 1.0])


class TestResidual:
    """Тесты невязки"""

    def test_exact_eigenpair(self):
        for m, k in [(3, 3), (5, 4), (4, 2)]:
            rho, x = hyperstar_eigenpair(m, k)
            assert residual(hyperstar(m, k), 0.0, rho, x) <= 1e-12

    def test_perturbed_eigenpair(self, star_3_3):
        rho, x = hyperstar_eigenpair(3, 3)
        x[1] += 0.1
        assert residual(star_3_3, 0.0, rho, x) > 1e-3
