"""Degree distributions over k = 0, 1, 2, ...

Three kinds are supported:

* ``poisson(mean)``
* ``powerlaw_cutoff(exponent, cutoff)`` -- p_0 = 0 and
  p_k proportional to k**(-exponent) * exp(-k/cutoff) for k >= 1,
  normalised by the polylogarithm Li_exponent(exp(-1/cutoff));
* ``explicit(pmf)`` -- a finite user-supplied probability vector.

Besides moments, the module provides the two probability-generating-
function expectations the fixed-point solvers need, E[h**k] and
E[k * h**(k-1)], with polylog closed forms on the power-law path and
direct pmf summation otherwise, plus inverse-CDF sampling.
"""

from __future__ import annotations

import math

import numpy as np

# Series truncation: stop once a term drops below _LI_REL_TERM of the
# running sum (tail then adds < 1e-12 for the z range we evaluate at).
_LI_REL_TERM = 1e-15
_LI_BLOCK = 4096
_LI_HARD_CAP = 50_000_000

_EXPLICIT_SUM_LO = 0.999
_EXPLICIT_SUM_HI = 1.001


def _li_series(order: float, z: float) -> float:
    """sum_{k>=1} z**k / k**order for 0 <= z < 1, any real order.

    The exponential factor makes the series converge for every order;
    orders <= 0 arise for second moments of low-exponent power laws.
    """
    if z == 0.0:
        return 0.0
    log_z = math.log(z)
    total = 0.0
    start = 1
    while start <= _LI_HARD_CAP:
        stop = min(start + _LI_BLOCK, _LI_HARD_CAP + 1)
        k = np.arange(start, stop, dtype=np.float64)
        terms = np.exp(k * log_z - order * np.log(k))
        total += float(terms.sum())
        if terms[-1] < _LI_REL_TERM * total:
            break
        start = stop
    return total


def polylog(m: float, z: float) -> float:
    """Polylogarithm sum_{k>=1} z**k / k**m by direct series summation.

    Valid for 0 <= z < 1 and m > 0; no analytic continuation.
    """
    if not 0.0 <= z < 1.0:
        raise ValueError(f"polylog requires 0 <= z < 1, got z={z}")
    if not m > 0.0:
        raise ValueError(f"polylog requires m > 0, got m={m}")
    return _li_series(m, z)


class DegreeDistribution:
    """Immutable pmf over non-negative integer degrees.

    Construct via :meth:`poisson`, :meth:`powerlaw_cutoff`,
    :meth:`explicit` or :meth:`from_pmf_file`. Instances precompute the
    truncated pmf/CDF tables used for sampling and direct summation and
    are safe to share across workers; sampling takes a caller-supplied
    ``numpy.random.Generator``.
    """

    def __init__(self, kind: str, pmf: np.ndarray, mean: float, second_moment: float,
                 params: dict):
        self.kind = kind
        self.pmf = pmf
        self.pmf.setflags(write=False)
        self.cdf = np.cumsum(pmf)
        self.cdf.setflags(write=False)
        self.truncation_k_max = len(pmf) - 1
        self.params = dict(params)
        self._mean = float(mean)
        self._second_moment = float(second_moment)
        total = float(self.pmf.sum())
        if not math.isfinite(total) or abs(total - 1.0) > 1e-9:
            raise ValueError(f"pmf sums to {total}, expected 1 within 1e-9")
        if np.any(pmf < 0.0):
            raise ValueError("pmf has negative entries")

    # -- constructors -------------------------------------------------

    @classmethod
    def poisson(cls, mean: float) -> "DegreeDistribution":
        if not (mean > 0.0 and math.isfinite(mean)):
            raise ValueError(f"poisson mean must be positive, got {mean}")
        # Inverse-CDF table out to where the CDF clears 1 - 1e-12.
        probs = [math.exp(-mean)]
        cum = probs[0]
        k = 0
        while cum <= 1.0 - 1e-12:
            k += 1
            probs.append(probs[-1] * mean / k)
            cum += probs[-1]
            if k > 100_000:
                raise ValueError(f"poisson mean {mean} too large to tabulate")
        pmf = np.asarray(probs, dtype=np.float64)
        return cls("poisson", pmf, mean, mean + mean * mean, {"mean": mean})

    @classmethod
    def powerlaw_cutoff(cls, exponent: float, cutoff: float) -> "DegreeDistribution":
        if not (exponent > 0.0 and math.isfinite(exponent)):
            raise ValueError(f"power-law exponent must be positive, got {exponent}")
        if not (cutoff > 0.0 and math.isfinite(cutoff)):
            raise ValueError(f"power-law cutoff must be positive, got {cutoff}")
        z = math.exp(-1.0 / cutoff)
        norm = _li_series(exponent, z)
        k_max = max(1000, int(50 * cutoff))
        k = np.arange(1, k_max + 1, dtype=np.float64)
        pmf = np.zeros(k_max + 1, dtype=np.float64)
        pmf[1:] = np.exp(-exponent * np.log(k) - k / cutoff) / norm
        mean = _li_series(exponent - 1.0, z) / norm
        second = _li_series(exponent - 2.0, z) / norm
        self = cls("powerlaw_cutoff", pmf, mean, second,
                   {"exponent": exponent, "cutoff": cutoff})
        self._li_z = z
        self._li_norm = norm
        return self

    @classmethod
    def explicit(cls, pmf) -> "DegreeDistribution":
        arr = np.asarray(pmf, dtype=np.float64)
        if arr.ndim != 1 or arr.size == 0:
            raise ValueError("explicit pmf must be a non-empty 1-d vector")
        if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
            raise ValueError("explicit pmf entries must be finite and non-negative")
        total = float(arr.sum())
        # Tolerate file rounding, reject anything worse.
        if not _EXPLICIT_SUM_LO <= total <= _EXPLICIT_SUM_HI:
            raise ValueError(
                f"explicit pmf sums to {total}, outside "
                f"[{_EXPLICIT_SUM_LO}, {_EXPLICIT_SUM_HI}]")
        arr = arr / total
        k = np.arange(arr.size, dtype=np.float64)
        mean = float(np.dot(k, arr))
        second = float(np.dot(k * k, arr))
        return cls("explicit", arr, mean, second, {})

    @classmethod
    def from_pmf_file(cls, path) -> "DegreeDistribution":
        """Load an explicit pmf from a two-column ``k,p_k`` text file.

        The first line is a mandatory header and is skipped; remaining
        lines hold a non-negative integer k and a decimal float p_k.
        """
        with open(path, "r", encoding="utf-8") as fh:
            lines = [ln.strip() for ln in fh]
        if not lines:
            raise ValueError(f"{path}: empty pmf file (header line required)")
        entries: dict[int, float] = {}
        for lineno, line in enumerate(lines[1:], start=2):
            if not line:
                continue
            parts = [p.strip() for p in line.split(",")]
            if len(parts) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'k,p_k', got {line!r}")
            k_val = float(parts[0])
            if k_val < 0 or k_val != int(k_val):
                raise ValueError(f"{path}:{lineno}: k must be a non-negative integer")
            k = int(k_val)
            if k in entries:
                raise ValueError(f"{path}:{lineno}: duplicate k={k}")
            entries[k] = float(parts[1])
        if not entries:
            raise ValueError(f"{path}: no pmf rows after the header")
        pmf = np.zeros(max(entries) + 1, dtype=np.float64)
        for k, p in entries.items():
            pmf[k] = p
        return cls.explicit(pmf)

    # -- moments ------------------------------------------------------

    def mean(self) -> float:
        return self._mean

    def second_moment(self) -> float:
        return self._second_moment

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}={v:g}" for k, v in self.params.items())
        return f"DegreeDistribution({self.kind}{', ' + inner if inner else ''})"


def beta(dist: DegreeDistribution) -> float:
    """Mean excess degree (<k^2> - <k>) / <k>, the per-layer branching factor."""
    mean = dist.mean()
    if mean <= 0.0:
        raise ValueError("degenerate distribution: mean degree is zero")
    return (dist.second_moment() - mean) / mean


def expect_h_pow_k(dist: DegreeDistribution, h: float) -> float:
    """E[h**k] for 0 <= h <= 1."""
    if not 0.0 <= h <= 1.0:
        raise ValueError(f"h must lie in [0, 1], got {h}")
    if dist.kind == "powerlaw_cutoff":
        if h == 0.0:
            return 0.0
        return _li_series(dist.params["exponent"], h * dist._li_z) / dist._li_norm
    k = np.arange(dist.pmf.size, dtype=np.float64)
    return float(np.dot(dist.pmf, np.power(h, k)))


def expect_k_h_pow_km1(dist: DegreeDistribution, h: float) -> float:
    """E[k * h**(k-1)] for 0 <= h <= 1; the h=0 value is the limit p_1."""
    if not 0.0 <= h <= 1.0:
        raise ValueError(f"h must lie in [0, 1], got {h}")
    if h == 0.0:
        return float(dist.pmf[1]) if dist.pmf.size > 1 else 0.0
    if dist.kind == "powerlaw_cutoff":
        num = _li_series(dist.params["exponent"] - 1.0, h * dist._li_z)
        return num / (dist._li_norm * h)
    k = np.arange(1, dist.pmf.size, dtype=np.float64)
    return float(np.dot(k * dist.pmf[1:], np.power(h, k - 1.0)))


def sample_degree(dist: DegreeDistribution, rng: np.random.Generator, size=None):
    """Draw degrees by inverse-CDF lookup over the precomputed table.

    Returns an int for ``size=None``, else an int64 array.
    """
    u = rng.random(size)
    idx = np.searchsorted(dist.cdf, u, side="right")
    idx = np.minimum(idx, dist.truncation_k_max)
    if size is None:
        return int(idx)
    return idx.astype(np.int64)
