"""Degree distributions: polylog series, moments, pgf expectations, sampling."""

from __future__ import annotations

import math

import numpy as np
import pytest
from scipy import stats

from cascade.dist import (
    DegreeDistribution,
    beta,
    expect_h_pow_k,
    expect_k_h_pow_km1,
    polylog,
    sample_degree,
)


def brute_polylog(m: float, z: float, terms: int = 1_000_000) -> float:
    k = np.arange(1, terms + 1, dtype=np.float64)
    return float(np.sum(np.exp(k * math.log(z) - m * np.log(k)))) if z > 0 else 0.0


class TestPolylog:
    def test_order_one_is_log(self):
        assert polylog(1.0, 0.5) == pytest.approx(math.log(2.0), abs=1e-12)

    def test_empty_series_at_zero(self):
        assert polylog(2.5, 0.0) == 0.0

    def test_against_brute_series(self):
        # independent oracle: direct summation to 1e6 terms
        assert polylog(2.0, 0.5) == pytest.approx(brute_polylog(2.0, 0.5), abs=1e-10)
        assert polylog(1.7, 0.9) == pytest.approx(brute_polylog(1.7, 0.9), abs=1e-10)

    def test_domain_errors(self):
        with pytest.raises(ValueError):
            polylog(2.0, 1.0)
        with pytest.raises(ValueError):
            polylog(2.0, -0.1)
        with pytest.raises(ValueError):
            polylog(0.0, 0.5)
        with pytest.raises(ValueError):
            polylog(-1.0, 0.5)


class TestBeta:
    @pytest.mark.parametrize("lam", [0.1, 0.5, 1.0, 2.0, 5.0])
    def test_poisson_exact(self, lam):
        assert beta(DegreeDistribution.poisson(lam)) == pytest.approx(lam, abs=1e-12)

    def test_powerlaw_value(self):
        # reference value for exponent 2.5, cutoff 10
        d = DegreeDistribution.powerlaw_cutoff(2.5, 10.0)
        assert beta(d) == pytest.approx(1.545, abs=1e-3)

    def test_point_mass(self):
        for degree in (1, 3, 7):
            pmf = np.zeros(degree + 1)
            pmf[degree] = 1.0
            d = DegreeDistribution.explicit(pmf)
            assert beta(d) == pytest.approx(degree - 1, abs=1e-12)

    def test_degenerate_rejected(self):
        d = DegreeDistribution.explicit([1.0])
        with pytest.raises(ValueError):
            beta(d)


class TestNormalization:
    def test_all_kinds_sum_to_one(self):
        dists = [
            DegreeDistribution.poisson(0.3),
            DegreeDistribution.poisson(4.0),
            DegreeDistribution.powerlaw_cutoff(2.5, 10.0),
            DegreeDistribution.powerlaw_cutoff(3.5, 40.0),
            DegreeDistribution.explicit([0.25, 0.5, 0.25]),
        ]
        for d in dists:
            assert abs(float(d.pmf.sum()) - 1.0) <= 1e-9

    def test_explicit_renormalises_file_rounding(self):
        d = DegreeDistribution.explicit([0.5, 0.4995])  # sums to 0.9995
        assert float(d.pmf.sum()) == pytest.approx(1.0, abs=1e-15)

    def test_explicit_rejects_garbage(self):
        with pytest.raises(ValueError):
            DegreeDistribution.explicit([0.5, 0.4])
        with pytest.raises(ValueError):
            DegreeDistribution.explicit([0.7, 0.7])
        with pytest.raises(ValueError):
            DegreeDistribution.explicit([1.2, -0.2])


class TestExpectations:
    def test_h_one_is_normalisation(self):
        for d in (DegreeDistribution.poisson(1.3),
                  DegreeDistribution.powerlaw_cutoff(2.5, 10.0),
                  DegreeDistribution.explicit([0.2, 0.3, 0.5])):
            assert expect_h_pow_k(d, 1.0) == pytest.approx(1.0, abs=1e-9)
            assert expect_k_h_pow_km1(d, 1.0) == pytest.approx(d.mean(), abs=1e-9)

    def test_powerlaw_h_zero(self):
        d = DegreeDistribution.powerlaw_cutoff(2.5, 10.0)
        assert expect_h_pow_k(d, 0.0) == 0.0  # no degree-0 nodes
        assert expect_k_h_pow_km1(d, 0.0) == pytest.approx(float(d.pmf[1]), abs=1e-15)

    def test_poisson_identity(self):
        # E[k h**(k-1)] = lam * exp(lam (h-1)) for Poisson
        d = DegreeDistribution.poisson(2.0)
        assert expect_k_h_pow_km1(d, 0.5) == pytest.approx(2.0 * math.exp(-1.0),
                                                           abs=1e-9)
        assert expect_h_pow_k(d, 0.5) == pytest.approx(math.exp(-1.0), abs=1e-9)

    def test_powerlaw_closed_form_vs_direct_sum(self):
        d = DegreeDistribution.powerlaw_cutoff(2.5, 10.0)
        k = np.arange(d.pmf.size, dtype=np.float64)
        h = 0.7
        direct = float(np.dot(d.pmf, h ** k))
        assert expect_h_pow_k(d, h) == pytest.approx(direct, abs=1e-9)
        direct_k = float(np.dot(k[1:] * d.pmf[1:], h ** (k[1:] - 1.0)))
        assert expect_k_h_pow_km1(d, h) == pytest.approx(direct_k, abs=1e-9)

    def test_closed_forms_random_tuples(self):
        rng = np.random.default_rng(20240811)
        for _ in range(20):
            exponent = rng.uniform(2.0, 4.0)
            cutoff = rng.uniform(2.0, 50.0)
            h = rng.uniform(0.0, 1.0)
            d = DegreeDistribution.powerlaw_cutoff(exponent, cutoff)
            k = np.arange(d.pmf.size, dtype=np.float64)
            direct = float(np.dot(d.pmf, h ** k))
            assert expect_h_pow_k(d, h) == pytest.approx(direct, abs=1e-9)
            if h > 0.0:
                direct_k = float(np.dot(k[1:] * d.pmf[1:], h ** (k[1:] - 1.0)))
                assert expect_k_h_pow_km1(d, h) == pytest.approx(direct_k, abs=1e-9)

    def test_monotone_in_h(self):
        for d in (DegreeDistribution.poisson(2.2),
                  DegreeDistribution.powerlaw_cutoff(3.0, 20.0)):
            hs = np.linspace(0.0, 1.0, 21)
            values = [expect_h_pow_k(d, h) for h in hs]
            assert all(a <= b + 1e-12 for a, b in zip(values, values[1:]))
            assert values[-1] == pytest.approx(1.0, abs=1e-9)

    def test_domain_errors(self):
        d = DegreeDistribution.poisson(1.0)
        for h in (-0.1, 1.1):
            with pytest.raises(ValueError):
                expect_h_pow_k(d, h)
            with pytest.raises(ValueError):
                expect_k_h_pow_km1(d, h)


class TestSampling:
    def test_same_seed_same_sequence(self):
        d = DegreeDistribution.powerlaw_cutoff(2.5, 10.0)
        a = sample_degree(d, np.random.default_rng(7), size=1000)
        b = sample_degree(d, np.random.default_rng(7), size=1000)
        assert np.array_equal(a, b)
        assert isinstance(sample_degree(d, np.random.default_rng(7)), int)

    def test_poisson_mean_clt(self):
        lam, n = 1.5, 100_000
        d = DegreeDistribution.poisson(lam)
        samples = sample_degree(d, np.random.default_rng(123), size=n)
        assert abs(samples.mean() - lam) <= 3.0 * math.sqrt(lam / n)

    def test_powerlaw_chi_square_gof(self):
        d = DegreeDistribution.powerlaw_cutoff(2.5, 10.0)
        n = 100_000
        samples = sample_degree(d, np.random.default_rng(42), size=n)
        counts = np.bincount(samples, minlength=d.pmf.size)
        observed = np.append(counts[1:21], counts[21:].sum())
        expected = np.append(d.pmf[1:21], d.pmf[21:].sum()) * n
        _chi2, pvalue = stats.chisquare(observed, expected)
        assert pvalue > 1e-3


class TestPmfFile:
    def test_round_trip(self, tmp_path):
        path = tmp_path / "pmf.csv"
        path.write_text("k,p_k\n0,0.25\n1,0.5\n3,0.25\n")
        d = DegreeDistribution.from_pmf_file(path)
        assert np.allclose(d.pmf, [0.25, 0.5, 0.0, 0.25])
        assert d.mean() == pytest.approx(1.25)

    def test_rejects_duplicates_and_bad_k(self, tmp_path):
        path = tmp_path / "dup.csv"
        path.write_text("k,p_k\n1,0.5\n1,0.5\n")
        with pytest.raises(ValueError):
            DegreeDistribution.from_pmf_file(path)
        path.write_text("k,p_k\n1.5,1.0\n")
        with pytest.raises(ValueError):
            DegreeDistribution.from_pmf_file(path)

    def test_empty_file_rejected(self, tmp_path):
        path = tmp_path / "empty.csv"
        path.write_text("")
        with pytest.raises(ValueError):
            DegreeDistribution.from_pmf_file(path)
