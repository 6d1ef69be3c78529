"""Finite-type kernel models: spectral radius, survival, instantiations."""

from __future__ import annotations

import math

import numpy as np
import pytest

from cascade import theory
from cascade.kernel import (
    KernelModel,
    er_two_type_kernel,
    load_kernel_model,
    spectral_radius,
    survival_probability,
    triple_epidemic_size,
    triple_network_kernel,
)


def charpoly_radius_oracle(m: np.ndarray) -> float:
    """Independent route: numpy characteristic polynomial + root scan."""
    return float(np.abs(np.roots(np.poly(m))).max())


def scalar_er_root(strength: float) -> float:
    lo, hi = 1e-12, 1.0
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if 1.0 - math.exp(-strength * mid) > mid:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


class TestSpectralRadius:
    def test_diagonal(self):
        assert spectral_radius(np.diag([2.0, 3.0])) == pytest.approx(3.0, abs=1e-10)
        assert spectral_radius(np.array([[4.0]])) == pytest.approx(4.0)

    def test_zero_matrix(self):
        assert spectral_radius(np.zeros((3, 3))) == 0.0

    def test_two_type_er_matches_closed_form(self):
        rng = np.random.default_rng(13)
        for _ in range(50):
            alpha = rng.uniform(0.05, 1.0)
            a_w = rng.uniform(0.0, 2.0)
            a_f = rng.uniform(0.0, 2.0)
            model = er_two_type_kernel(alpha, a_w, a_f)
            sigma = spectral_radius(model.m_matrix)
            assert sigma == pytest.approx(er_threshold_oracle(alpha, a_f, a_w),
                                          abs=1e-8)

    def test_random_4x4_vs_polyroot_oracle(self):
        rng = np.random.default_rng(14)
        for _ in range(50):
            m = rng.random((4, 4)) * 3.0
            assert spectral_radius(m) == pytest.approx(
                charpoly_radius_oracle(m), abs=1e-8)

    def test_defective_and_periodic_patterns(self):
        assert spectral_radius(np.array([[0.0, 1.0], [0.0, 0.0]])) == 0.0
        assert spectral_radius(np.array([[0.0, 2.0], [0.5, 0.0]])) == pytest.approx(
            1.0, abs=1e-10)

    def test_similarity_scaling_invariant(self):
        rng = np.random.default_rng(15)
        for _ in range(20):
            m = rng.random((4, 4))
            d = rng.uniform(0.5, 2.0, size=4)
            scaled = np.diag(d) @ m @ np.diag(1.0 / d)
            assert spectral_radius(np.abs(scaled)) >= 0.0  # well-defined
            assert spectral_radius(m) == pytest.approx(
                charpoly_radius_oracle(scaled), abs=1e-8)

    def test_domain(self):
        with pytest.raises(ValueError):
            spectral_radius(np.array([[1.0, -0.1], [0.0, 1.0]]))
        with pytest.raises(ValueError):
            spectral_radius(np.ones((2, 3)))
        with pytest.raises(ValueError):
            spectral_radius(np.array([[np.inf, 0.0], [0.0, 1.0]]))


def er_threshold_oracle(alpha, a_f, a_w):
    s = a_f + a_w
    return 0.5 * s + 0.5 * math.sqrt(max(s * s - 4.0 * (1.0 - alpha) * a_f * a_w, 0.0))


class TestSurvivalProbability:
    def test_scalar_strength_two(self):
        model = KernelModel(mu=np.array([1.0]), kappa=np.array([[2.0]]))
        rho_vec, rho = survival_probability(model)
        assert rho == pytest.approx(scalar_er_root(2.0), abs=1e-9)
        assert rho_vec[0] == pytest.approx(rho)

    def test_subcritical_zeros(self):
        model = er_two_type_kernel(0.5, 0.4, 0.4)
        rho_vec, rho = survival_probability(model)
        assert rho == 0.0
        assert np.all(rho_vec == 0.0)

    def test_matches_er_epidemic_size(self):
        rng = np.random.default_rng(16)
        for _ in range(50):
            alpha = rng.uniform(0.05, 1.0)
            a_w = rng.uniform(1.05, 2.5)
            a_f = rng.uniform(1.05, 2.5)
            model = er_two_type_kernel(alpha, a_w, a_f)
            _vec, rho = survival_probability(model)
            assert abs(rho - theory.er_epidemic_size(alpha, a_f, a_w)[2]) <= 1e-8

    def test_bounded_in_unit_interval(self):
        model = triple_network_kernel(0.5, 0.5, 1.0, 1.0, 1.0)
        rho_vec, rho = survival_probability(model)
        assert np.all((rho_vec >= 0.0) & (rho_vec <= 1.0))
        assert 0.0 <= rho <= 1.0


class TestErTwoTypeKernel:
    def test_alpha_one_constant_kernel(self):
        # full membership: the populated type sees a constant strength sum
        model = er_two_type_kernel(1.0, 0.6, 0.8)
        assert model.mu[1] == 0.0
        assert model.kappa[0, 0] == pytest.approx(1.4)
        assert spectral_radius(model.m_matrix) == pytest.approx(1.4, abs=1e-10)

    def test_reference_sigma(self):
        model = er_two_type_kernel(0.2, 0.6, 0.8)
        assert spectral_radius(model.m_matrix) == pytest.approx(1.03, abs=5e-3)

    def test_social_off(self):
        model = er_two_type_kernel(0.3, 0.7, 0.0)
        assert spectral_radius(model.m_matrix) == pytest.approx(0.7, abs=1e-10)

    def test_alpha_zero_rejected(self):
        with pytest.raises(ValueError):
            er_two_type_kernel(0.0, 0.5, 0.5)


class TestTripleNetworkKernel:
    def test_second_social_off_matches_two_type(self):
        rng = np.random.default_rng(17)
        for _ in range(10):
            alpha_f = rng.uniform(0.1, 1.0)
            alpha_t = rng.uniform(0.1, 1.0)
            a_w = rng.uniform(0.2, 2.0)
            a_f = rng.uniform(0.2, 2.0)
            triple = triple_network_kernel(alpha_f, alpha_t, a_w, a_f, 0.0)
            two = er_two_type_kernel(alpha_f, a_w, a_f)
            rho_t = survival_probability(triple)[1]
            rho_2 = survival_probability(two)[1]
            assert abs(rho_t - rho_2) <= 1e-8

    def test_full_membership_scalar_reduction(self):
        model = triple_network_kernel(1.0, 1.0, 0.7, 0.7, 0.6)
        assert np.allclose(model.mu, [1.0, 0.0, 0.0, 0.0])
        assert model.kappa[0, 0] == pytest.approx(2.0)
        assert triple_epidemic_size(model) == pytest.approx(
            scalar_er_root(2.0), abs=1e-4)

    def test_sigma_vs_polyroot_oracle(self):
        model = triple_network_kernel(0.5, 0.5, 0.3, 0.3, 0.3)
        assert spectral_radius(model.m_matrix) == pytest.approx(
            charpoly_radius_oracle(model.m_matrix), abs=1e-8)

    def test_measure_is_product(self):
        model = triple_network_kernel(0.3, 0.6, 1.0, 1.0, 1.0)
        assert np.allclose(model.mu, [0.18, 0.12, 0.42, 0.28])


class TestTripleEpidemicSize:
    def test_subcritical_zero(self):
        model = triple_network_kernel(0.5, 0.5, 0.2, 0.2, 0.2)
        assert triple_epidemic_size(model) == 0.0

    def test_requires_four_types(self):
        with pytest.raises(ValueError):
            triple_epidemic_size(er_two_type_kernel(0.5, 1.0, 1.0))

    def test_second_social_off_matches_two_network_size(self):
        model = triple_network_kernel(0.4, 0.3, 0.9, 0.8, 0.0)
        assert triple_epidemic_size(model) == pytest.approx(
            theory.er_epidemic_size(0.4, 0.8, 0.9)[2], abs=1e-8)


class TestKernelModelValidation:
    def test_mu_must_sum_to_one(self):
        with pytest.raises(ValueError):
            KernelModel(mu=np.array([0.5, 0.6]), kappa=np.ones((2, 2)))

    def test_kappa_must_be_symmetric(self):
        with pytest.raises(ValueError):
            KernelModel(mu=np.array([0.5, 0.5]),
                        kappa=np.array([[1.0, 2.0], [3.0, 1.0]]))

    def test_kappa_must_be_nonnegative(self):
        with pytest.raises(ValueError):
            KernelModel(mu=np.array([0.5, 0.5]),
                        kappa=np.array([[1.0, -0.5], [-0.5, 1.0]]))


class TestKernelFile:
    def test_load_round_trip(self, tmp_path):
        path = tmp_path / "model.txt"
        path.write_text("# two-type\nr = 2\nmu = 0.2 0.8\nkappa = 4.6 0.6 0.6 0.6\n")
        model = load_kernel_model(path)
        assert model.r == 2
        assert np.allclose(model.mu, [0.2, 0.8])
        assert model.kappa[0, 0] == pytest.approx(4.6)
        reference = er_two_type_kernel(0.2, 0.6, 0.8)
        assert np.allclose(model.kappa, reference.kappa)

    def test_missing_key(self, tmp_path):
        path = tmp_path / "bad.txt"
        path.write_text("r = 2\nmu = 0.5 0.5\n")
        with pytest.raises(ValueError):
            load_kernel_model(path)

    def test_wrong_lengths(self, tmp_path):
        path = tmp_path / "bad2.txt"
        path.write_text("r = 2\nmu = 0.5 0.5\nkappa = 1 2 3\n")
        with pytest.raises(ValueError):
            load_kernel_model(path)
