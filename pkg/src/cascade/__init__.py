"""Information diffusion over coupled social-physical networks.

Monte-Carlo simulation of bond percolation on coupled random graphs and
the matching analytical machinery: epidemic thresholds, giant-component
sizes, subcritical mean outbreak sizes, and finite-type kernel models.
"""

from ._backend import backend_name
from .dist import DegreeDistribution, beta, expect_h_pow_k, expect_k_h_pow_km1, \
    polylog, sample_degree
from .errors import ConfigError, InvariantViolation, SolverError, SupercriticalError
from .kernel import KernelModel, er_two_type_kernel, load_kernel_model, \
    spectral_radius, survival_probability, triple_epidemic_size, \
    triple_network_kernel
from .netgen import CoupledSpec, LayeredGraph, config_model_coupled, er_coupled, \
    er_triple, sample_colored_degrees, sample_membership, sublinear_membership
from .percolate import ComponentStats, avg_outbreak_size, components, \
    epidemic_fraction
from .theory import ContactProcess, TheoryResult, analyze, epidemic_size, \
    er_epidemic_size, er_threshold, mean_outbreak, naive_threshold, \
    phase_boundary, solve_h, threshold_sigma, transmissibility

__version__ = "0.1.0"

__all__ = [
    "backend_name",
    "DegreeDistribution", "beta", "expect_h_pow_k", "expect_k_h_pow_km1",
    "polylog", "sample_degree",
    "ConfigError", "InvariantViolation", "SolverError", "SupercriticalError",
    "KernelModel", "er_two_type_kernel", "load_kernel_model", "spectral_radius",
    "survival_probability", "triple_epidemic_size", "triple_network_kernel",
    "CoupledSpec", "LayeredGraph", "config_model_coupled", "er_coupled",
    "er_triple", "sample_colored_degrees", "sample_membership",
    "sublinear_membership",
    "ComponentStats", "avg_outbreak_size", "components", "epidemic_fraction",
    "ContactProcess", "TheoryResult", "analyze", "epidemic_size",
    "er_epidemic_size", "er_threshold", "mean_outbreak", "naive_threshold",
    "phase_boundary", "solve_h", "threshold_sigma", "transmissibility",
    "__version__",
]
