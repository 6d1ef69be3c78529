"""Finite-type inhomogeneous random-graph analytics.

A model is (mu, kappa): a probability vector over r vertex types and a
symmetric non-negative connection kernel whose entries divided by n give
pair probabilities. Criticality is governed by the spectral radius of
M(i, j) = kappa(i, j) * mu_j, and the giant-component fraction by the
survival probabilities rho_i = 1 - exp(-sum_j M(i, j) rho_j).

Instantiations cover the coupled two-layer ER case (two types: social
members and non-members) and the three-layer case with two independent
membership sets (four types).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import SolverError

FP_TOL = 1e-12
FP_MAX_ITER = 1_000_000
POWER_REL_TOL = 1e-10
POWER_MAX_ITER = 200_000
_R2_CROSSCHECK_TOL = 1e-8


@dataclass(frozen=True)
class KernelModel:
    """Type measure mu and symmetric non-negative kernel kappa."""

    mu: np.ndarray
    kappa: np.ndarray

    def __post_init__(self):
        mu = np.asarray(self.mu, dtype=np.float64)
        kappa = np.asarray(self.kappa, dtype=np.float64)
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "kappa", kappa)
        r = mu.size
        if mu.ndim != 1 or r == 0:
            raise ValueError("mu must be a non-empty vector")
        if kappa.shape != (r, r):
            raise ValueError(f"kappa must be {r}x{r}, got {kappa.shape}")
        if not np.all(np.isfinite(mu)) or np.any(mu < 0.0):
            raise ValueError("mu entries must be finite and non-negative")
        if abs(float(mu.sum()) - 1.0) > 1e-9:
            raise ValueError(f"mu sums to {mu.sum()}, expected 1 within 1e-9")
        if not np.all(np.isfinite(kappa)) or np.any(kappa < 0.0):
            raise ValueError("kappa entries must be finite and non-negative")
        if not np.allclose(kappa, kappa.T, rtol=0.0, atol=1e-12):
            raise ValueError("kappa must be symmetric")

    @property
    def r(self) -> int:
        return int(self.mu.size)

    @property
    def m_matrix(self) -> np.ndarray:
        return self.kappa * self.mu[np.newaxis, :]


def _charpoly_radius(m: np.ndarray) -> float:
    """Spectral radius by root-scanning the characteristic polynomial.

    Coefficients come from the Faddeev-LeVerrier recurrence, so this
    route shares nothing with the power iteration it backs up.
    """
    r = m.shape[0]
    coeffs = np.empty(r + 1, dtype=np.float64)
    coeffs[0] = 1.0
    work = np.array(m, dtype=np.float64)
    for k in range(1, r + 1):
        c = -np.trace(work) / k
        coeffs[k] = c
        if k < r:
            work = m @ (work + c * np.eye(r))
    return float(np.abs(np.roots(coeffs)).max())


def spectral_radius(m) -> float:
    """Largest eigenvalue magnitude of a non-negative matrix.

    Shifted power iteration (the shift suppresses rotational modes of
    periodic structures); falls back to a characteristic-polynomial
    root scan for r <= 4 if the iteration stalls. The r = 2 result is
    cross-checked against the closed-form quadratic.
    """
    m = np.asarray(m, dtype=np.float64)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError(f"matrix must be square, got shape {m.shape}")
    if not np.all(np.isfinite(m)) or np.any(m < 0.0):
        raise ValueError("matrix entries must be finite and non-negative")
    r = m.shape[0]
    if r == 1:
        return float(m[0, 0])
    row_max = float(m.sum(axis=1).max())
    if row_max == 0.0:
        return 0.0
    shift = 0.5 * row_max
    shifted = m + shift * np.eye(r)
    x = np.full(r, 1.0 / r)
    est = math.inf
    value = None
    for _ in range(POWER_MAX_ITER):
        y = shifted @ x
        new_est = float(y.sum())  # L1 Rayleigh quotient for stochastic-normalised x
        x = y / new_est
        if abs(new_est - est) <= POWER_REL_TOL * new_est:
            residual = float(np.abs(shifted @ x - new_est * x).max())
            if residual <= 1e-8 * new_est:
                value = new_est - shift
                break
        est = new_est
    if r <= 4:
        # Defective spectra make the iteration stall (or settle first-order
        # off); the root scan is authoritative whenever they disagree.
        scan = _charpoly_radius(m)
        if value is None or abs(value - scan) > 1e-8 * max(1.0, scan):
            value = scan
    elif value is None:
        raise SolverError("power iteration failed to converge (r > 4)")
    if r == 2:
        a, b = m[0, 0], m[0, 1]
        c, d = m[1, 0], m[1, 1]
        closed = 0.5 * (a + d + math.sqrt((a - d) ** 2 + 4.0 * b * c))
        if abs(value - closed) > _R2_CROSSCHECK_TOL * max(1.0, closed):
            raise SolverError(
                f"power iteration ({value}) disagrees with the 2x2 closed form "
                f"({closed})")
        value = closed
    return value


def survival_probability(model: KernelModel) -> tuple[np.ndarray, float]:
    """Per-type survival probabilities and their mu-weighted total.

    Subcritical models (spectral radius of M at most 1) return zeros;
    otherwise the monotone map is iterated downward from the all-ones
    vector to its largest fixed point.
    """
    m = model.m_matrix
    if spectral_radius(m) <= 1.0:
        return np.zeros(model.r), 0.0
    rho = np.ones(model.r)
    for _ in range(FP_MAX_ITER):
        new = 1.0 - np.exp(-(m @ rho))
        delta = float(np.abs(new - rho).max())
        rho = new
        if delta < FP_TOL:
            break
    else:
        raise SolverError(
            f"survival fixed point: no convergence within {FP_MAX_ITER} iterations")
    return rho, float(np.dot(model.mu, rho))


def er_two_type_kernel(alpha: float, t_w_lambda_w: float,
                       t_f_lambda_f: float) -> KernelModel:
    """Two-type model of the coupled ER overlay (members vs non-members).

    The O(1/n) cross term in the member-member entry is dropped; the
    model is asymptotic-only.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    a_w, a_f = t_w_lambda_w, t_f_lambda_f
    if a_w < 0.0 or a_f < 0.0:
        raise ValueError("layer strengths must be non-negative")
    kappa = np.array([
        [a_w + a_f / alpha, a_w],
        [a_w, a_w],
    ])
    return KernelModel(mu=np.array([alpha, 1.0 - alpha]), kappa=kappa)


def triple_network_kernel(alpha_f: float, alpha_t: float, t_w_lambda_w: float,
                          t_f_lambda_f: float, t_t_lambda_t: float) -> KernelModel:
    """Four-type model of the physical layer plus two social layers.

    Types order the two memberships as (F and T), (F only), (T only),
    (neither); a social strength contributes to kappa(i, j) only when
    both endpoint types carry that membership.
    """
    for name, a in (("alpha_f", alpha_f), ("alpha_t", alpha_t)):
        if not 0.0 < a <= 1.0:
            raise ValueError(f"{name} must lie in (0, 1], got {a}")
    a_w, a_f, a_t = t_w_lambda_w, t_f_lambda_f, t_t_lambda_t
    if min(a_w, a_f, a_t) < 0.0:
        raise ValueError("layer strengths must be non-negative")
    has_f = (True, True, False, False)
    has_t = (True, False, True, False)
    kappa = np.full((4, 4), a_w)
    for i in range(4):
        for j in range(4):
            if has_f[i] and has_f[j]:
                kappa[i, j] += a_f / alpha_f
            if has_t[i] and has_t[j]:
                kappa[i, j] += a_t / alpha_t
    mu = np.array([
        alpha_f * alpha_t,
        alpha_f * (1.0 - alpha_t),
        (1.0 - alpha_f) * alpha_t,
        (1.0 - alpha_f) * (1.0 - alpha_t),
    ])
    return KernelModel(mu=mu, kappa=kappa)


def triple_epidemic_size(model: KernelModel) -> float:
    """Giant-component fraction of a four-type triple-network model."""
    if model.r != 4:
        raise ValueError(f"expected a 4-type model, got r={model.r}")
    _rho, fraction = survival_probability(model)
    return fraction


def load_kernel_model(path) -> KernelModel:
    """Read a model from key-value text: keys r, mu, kappa (row-major)."""
    values: dict[str, str] = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise ValueError(f"{path}:{lineno}: expected 'key = value'")
            key, _, val = line.partition("=")
            key = key.strip()
            if key in values:
                raise ValueError(f"{path}:{lineno}: duplicate key {key!r}")
            values[key] = val.strip()
    missing = {"r", "mu", "kappa"} - values.keys()
    if missing:
        raise ValueError(f"{path}: missing keys {sorted(missing)}")
    r = int(values["r"])
    mu = np.array([float(x) for x in values["mu"].split()])
    kappa_flat = np.array([float(x) for x in values["kappa"].split()])
    if mu.size != r:
        raise ValueError(f"{path}: mu has {mu.size} entries, expected {r}")
    if kappa_flat.size != r * r:
        raise ValueError(
            f"{path}: kappa has {kappa_flat.size} entries, expected {r * r}")
    return KernelModel(mu=mu, kappa=kappa_flat.reshape(r, r))
