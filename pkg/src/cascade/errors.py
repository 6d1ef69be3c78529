"""Exception types shared across the package.

The CLI maps these onto exit codes: usage/config problems (including
plain ValueError) exit 1, solver failures exit 2, invariant violations
exit 3.
"""


class ConfigError(ValueError):
    """Malformed or inconsistent experiment configuration."""


class SolverError(RuntimeError):
    """A fixed-point or eigenvalue solver failed to converge."""


class SupercriticalError(SolverError):
    """An operation defined only in the subcritical regime was called above threshold."""


class InvariantViolation(AssertionError):
    """A deterministic invariant (e.g. a proved inequality) failed on real data."""
