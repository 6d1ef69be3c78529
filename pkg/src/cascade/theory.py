"""Analytical engine for the two-layer overlay network.

Closed-form epidemic threshold, the two-variable fixed point behind the
giant-component size, the subcritical mean outbreak from a 2x2 linear
system, ER specialisations, phase-boundary tracing, and transmissibility
of a contact process. All functions are pure; fixed points are found by
monotone iteration toward the extremal solution the theory selects
(smallest for the h pair from (0,0), largest for the rho pair from
(1,1)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import integrate

from .dist import DegreeDistribution, beta, expect_h_pow_k, expect_k_h_pow_km1
from .errors import SolverError, SupercriticalError

FP_TOL = 1e-12
FP_RESIDUAL_TOL = 1e-10
FP_MAX_ITER = 1_000_000
NEAR_CRITICAL_BAND = 1e-4
BISECT_TOL = 1e-6


@dataclass(frozen=True)
class TheoryResult:
    """Threshold, fixed point, epidemic size and (subcritical) mean outbreak."""

    sigma_star: float
    supercritical: bool
    near_critical: bool
    h1: float
    h2: float
    epidemic_size: float
    s1: float | None = None
    s2: float | None = None
    mean_outbreak: float | None = None


@dataclass(frozen=True)
class ContactProcess:
    """Per-link contact rate and per-node spreading duration models.

    Each of rate/duration is either ``constant`` (the value itself) or
    ``exponential`` (parameterised by its mean).
    """

    rate_kind: str
    rate_value: float
    duration_kind: str
    duration_value: float

    def __post_init__(self):
        for name, kind in (("rate_kind", self.rate_kind),
                           ("duration_kind", self.duration_kind)):
            if kind not in ("constant", "exponential"):
                raise ValueError(f"{name} must be 'constant' or 'exponential'")
        for name, value in (("rate_value", self.rate_value),
                            ("duration_value", self.duration_value)):
            if not (value > 0.0 and math.isfinite(value)):
                raise ValueError(f"{name} must be positive, got {value}")


def transmissibility(cp: ContactProcess) -> float:
    """Mean probability 1 - E[exp(-r*tau)] that a link transmits.

    Closed forms cover three of the four model combinations; the
    exponential/exponential case falls back to an adaptive double
    quadrature accurate to 1e-8.
    """
    r, tau = cp.rate_value, cp.duration_value
    if cp.rate_kind == "constant" and cp.duration_kind == "constant":
        return 1.0 - math.exp(-r * tau)
    if cp.rate_kind == "constant" and cp.duration_kind == "exponential":
        return r * tau / (1.0 + r * tau)
    if cp.rate_kind == "exponential" and cp.duration_kind == "constant":
        return r * tau / (1.0 + r * tau)
    survive, _err = integrate.dblquad(
        lambda t, rr: math.exp(-rr * t)
        * math.exp(-rr / r) / r
        * math.exp(-t / tau) / tau,
        0.0, np.inf,
        lambda rr: 0.0, lambda rr: np.inf,
        epsabs=1e-10, epsrel=1e-10,
    )
    return 1.0 - survive


def _validate_common(alpha: float, t_f: float, t_w: float) -> None:
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    for name, t in (("t_f", t_f), ("t_w", t_w)):
        if not 0.0 <= t <= 1.0:
            raise ValueError(f"{name} must lie in [0, 1], got {t}")


def threshold_sigma(alpha: float, dist_f: DegreeDistribution,
                    dist_w: DegreeDistribution, t_f: float, t_w: float) -> float:
    """Spectral-radius threshold of the two-type branching process.

    Information epidemics are possible iff the returned value exceeds 1.
    """
    _validate_common(alpha, t_f, t_w)
    bf, bw = beta(dist_f), beta(dist_w)
    lam_f, lam_w = dist_f.mean(), dist_w.mean()
    a = t_f * bf
    d = t_w * bw
    disc = (a - d) ** 2 + 4.0 * alpha * t_f * t_w * lam_f * lam_w
    return 0.5 * (a + d + math.sqrt(disc))


def naive_threshold(alpha: float, t_f_lambda_f: float, t_w_lambda_w: float) -> float:
    """Single-network mean-excess-degree criterion applied to the union.

    Ignores the coupling structure; provided for comparison plots only.
    """
    a_f, a_w = t_f_lambda_f, t_w_lambda_w
    if a_f < 0.0 or a_w < 0.0:
        raise ValueError("layer strengths must be non-negative")
    denom = alpha * a_f + a_w
    if denom == 0.0:
        raise ValueError("both layer strengths are zero")
    return (alpha * (a_f + a_w) ** 2 + (1.0 - alpha) * a_w ** 2) / denom


def solve_h(alpha: float, dist_f: DegreeDistribution, dist_w: DegreeDistribution,
            t_f: float, t_w: float) -> tuple[float, float]:
    """Smallest simultaneous solution in (0, 1]^2 of the pgf fixed point.

    Subcritical parameters return the trivial point (1, 1) directly
    (the iteration's limit there). Supercritical parameters iterate the
    monotone map from (0, 0) until the sup-norm step falls below
    ``FP_TOL``; both residuals are then checked against
    ``FP_RESIDUAL_TOL``.
    """
    _validate_common(alpha, t_f, t_w)
    lam_f, lam_w = dist_f.mean(), dist_w.mean()
    if lam_f <= 0.0 or lam_w <= 0.0:
        raise ValueError("degenerate distribution: mean degree is zero")
    if threshold_sigma(alpha, dist_f, dist_w, t_f, t_w) <= 1.0:
        return 1.0, 1.0

    def step(h1, h2):
        n1 = (t_f / lam_f) * expect_k_h_pow_km1(dist_f, h1) \
            * expect_h_pow_k(dist_w, h2) + 1.0 - t_f
        n2 = (t_w / lam_w) * (alpha * expect_h_pow_k(dist_f, h1) + 1.0 - alpha) \
            * expect_k_h_pow_km1(dist_w, h2) + 1.0 - t_w
        return n1, n2

    h1, h2 = 0.0, 0.0
    for _ in range(FP_MAX_ITER):
        n1, n2 = step(h1, h2)
        delta = max(abs(n1 - h1), abs(n2 - h2))
        h1, h2 = n1, n2
        if delta < FP_TOL:
            break
    else:
        raise SolverError(
            f"h fixed point: no convergence within {FP_MAX_ITER} iterations")
    r1, r2 = step(h1, h2)
    if max(abs(r1 - h1), abs(r2 - h2)) > FP_RESIDUAL_TOL:
        raise SolverError("h fixed point: residual exceeds tolerance")
    return h1, h2


def epidemic_size(alpha: float, dist_f: DegreeDistribution,
                  dist_w: DegreeDistribution, t_f: float, t_w: float) -> float:
    """Asymptotic giant-component fraction; zero when subcritical."""
    h1, h2 = solve_h(alpha, dist_f, dist_w, t_f, t_w)
    if h1 == 1.0 and h2 == 1.0:
        return 0.0
    outside = alpha * expect_h_pow_k(dist_f, h1) + 1.0 - alpha
    return 1.0 - outside * expect_h_pow_k(dist_w, h2)


def _outbreak_system(alpha: float, dist_f: DegreeDistribution,
                     dist_w: DegreeDistribution, t_f: float, t_w: float
                     ) -> tuple[float, float, float]:
    """Solve the linear pair (s1, s2) exactly and return (s1, s2, <s>)."""
    bf, bw = beta(dist_f), beta(dist_w)
    lam_f, lam_w = dist_f.mean(), dist_w.mean()
    a11 = bf * t_f
    a12 = lam_w * t_f
    a21 = alpha * lam_f * t_w
    a22 = bw * t_w
    det = (1.0 - a11) * (1.0 - a22) - a12 * a21
    if det <= 0.0:
        raise SolverError("outbreak system singular (at or above threshold)")
    s1 = ((1.0 - a22) * t_f + a12 * t_w) / det
    s2 = (a21 * t_f + (1.0 - a11) * t_w) / det
    return s1, s2, 1.0 + alpha * lam_f * s1 + lam_w * s2


def mean_outbreak(alpha: float, dist_f: DegreeDistribution,
                  dist_w: DegreeDistribution, t_f: float, t_w: float) -> float:
    """Subcritical mean outbreak size; requires sigma_star < 1 strictly."""
    _validate_common(alpha, t_f, t_w)
    if threshold_sigma(alpha, dist_f, dist_w, t_f, t_w) >= 1.0:
        raise SupercriticalError("mean outbreak is defined below threshold only")
    return _outbreak_system(alpha, dist_f, dist_w, t_f, t_w)[2]


def er_threshold(alpha: float, t_f_lambda_f: float, t_w_lambda_w: float) -> float:
    """Closed-form threshold for coupled ER layers (occupied mean degrees)."""
    a_f, a_w = t_f_lambda_f, t_w_lambda_w
    if a_f < 0.0 or a_w < 0.0:
        raise ValueError("layer strengths must be non-negative")
    s = a_f + a_w
    disc = s * s - 4.0 * (1.0 - alpha) * a_f * a_w
    return 0.5 * s + 0.5 * math.sqrt(max(disc, 0.0))


def er_epidemic_size(alpha: float, t_f_lambda_f: float, t_w_lambda_w: float
                     ) -> tuple[float, float, float]:
    """Largest fixed point (rho1, rho2) and the fraction alpha*rho1+(1-alpha)*rho2."""
    a_f, a_w = t_f_lambda_f, t_w_lambda_w
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    if a_f < 0.0 or a_w < 0.0:
        raise ValueError("layer strengths must be non-negative")
    if er_threshold(alpha, a_f, a_w) <= 1.0:
        return 0.0, 0.0, 0.0
    rho1, rho2 = 1.0, 1.0
    for _ in range(FP_MAX_ITER):
        n1 = 1.0 - math.exp(-rho1 * (alpha * a_w + a_f) - rho2 * (1.0 - alpha) * a_w)
        n2 = 1.0 - math.exp(-rho1 * alpha * a_w - rho2 * (1.0 - alpha) * a_w)
        delta = max(abs(n1 - rho1), abs(n2 - rho2))
        rho1, rho2 = n1, n2
        if delta < FP_TOL:
            break
    else:
        raise SolverError(
            f"rho fixed point: no convergence within {FP_MAX_ITER} iterations")
    return rho1, rho2, alpha * rho1 + (1.0 - alpha) * rho2


def phase_boundary(alpha: float, sweep, mode: str = "er",
                   dist_f: DegreeDistribution | None = None,
                   dist_w: DegreeDistribution | None = None) -> np.ndarray:
    """Minimal social-layer strength putting the threshold at 1, per abscissa.

    ``er`` mode sweeps x = T_w*lambda_w and solves for y = T_f*lambda_f;
    ``general`` mode sweeps the excess-degree-scaled x = T_w*beta_w and
    solves for y = T_f*beta_f over the given distributions. Points whose
    crossing exceeds the feasible cap (T_f = 1 in general mode) come back
    as ``inf`` -- an open boundary.
    """
    if not 0.0 < alpha <= 1.0:
        raise ValueError(f"alpha must lie in (0, 1], got {alpha}")
    sweep = np.asarray(sweep, dtype=np.float64)
    if np.any(sweep < 0.0):
        raise ValueError("sweep values must be non-negative")
    if mode == "er":
        cap = 2.0

        def thr(y, x):
            return er_threshold(alpha, y, x)

    elif mode == "general":
        if dist_f is None or dist_w is None:
            raise ValueError("general mode needs dist_f and dist_w")
        bf, bw = beta(dist_f), beta(dist_w)
        cap = bf
        if np.any(sweep > bw):
            raise ValueError("abscissa exceeds beta_w: T_w would exceed 1")

        def thr(y, x):
            return threshold_sigma(alpha, dist_f, dist_w, y / bf, x / bw)

    else:
        raise ValueError(f"mode must be 'er' or 'general', got {mode!r}")

    out = np.empty(sweep.size, dtype=np.float64)
    for i, x in enumerate(sweep):
        if thr(0.0, x) >= 1.0:
            out[i] = 0.0
            continue
        if thr(cap, x) < 1.0:
            out[i] = math.inf
            continue
        lo, hi = 0.0, cap
        while hi - lo > BISECT_TOL:
            mid = 0.5 * (lo + hi)
            if thr(mid, x) >= 1.0:
                hi = mid
            else:
                lo = mid
        out[i] = 0.5 * (lo + hi)
    return out


def analyze(alpha: float, dist_f: DegreeDistribution, dist_w: DegreeDistribution,
            t_f: float, t_w: float) -> TheoryResult:
    """Full analytical summary at one parameter point."""
    sigma = threshold_sigma(alpha, dist_f, dist_w, t_f, t_w)
    h1, h2 = solve_h(alpha, dist_f, dist_w, t_f, t_w)
    if h1 == 1.0 and h2 == 1.0:
        size = 0.0
    else:
        outside = alpha * expect_h_pow_k(dist_f, h1) + 1.0 - alpha
        size = 1.0 - outside * expect_h_pow_k(dist_w, h2)
    s1 = s2 = outbreak = None
    if sigma < 1.0:
        s1, s2, outbreak = _outbreak_system(alpha, dist_f, dist_w, t_f, t_w)
    return TheoryResult(
        sigma_star=sigma,
        supercritical=sigma > 1.0,
        near_critical=abs(sigma - 1.0) <= NEAR_CRITICAL_BAND,
        h1=h1,
        h2=h2,
        epidemic_size=size,
        s1=s1,
        s2=s2,
        mean_outbreak=outbreak,
    )
