"""Backend selection for the hot kernels.

The component-labelling kernel (union-find over the edge list) has two
implementations: a numba ``@njit`` version and a plain Python/NumPy
fallback that runs the identical algorithm. Both produce bit-identical
results; only speed differs.

Selection is controlled by the ``CASCADE_BACKEND`` environment variable,
read once at import time:

* ``auto`` (default) -- numba when it imports cleanly, else the fallback;
* ``numba``          -- require numba, fail loudly if unavailable;
* ``numpy``          -- force the fallback even when numba is installed.

``benchmarks/bench_backends.py`` times the two paths against each other.
"""

from __future__ import annotations

import os

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only on numba-less installs
    HAVE_NUMBA = False

    def njit(*args, **kwargs):  # type: ignore[misc]
        def wrap(func):
            return func

        if args and callable(args[0]):
            return args[0]
        return wrap


_requested = os.environ.get("CASCADE_BACKEND", "auto").strip().lower()
if _requested not in ("auto", "numba", "numpy"):
    raise ValueError(
        f"CASCADE_BACKEND must be 'auto', 'numba' or 'numpy', got {_requested!r}"
    )
if _requested == "numba" and not HAVE_NUMBA:
    raise ImportError("CASCADE_BACKEND=numba but numba is not importable")

USE_NUMBA = HAVE_NUMBA if _requested == "auto" else _requested == "numba"


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
