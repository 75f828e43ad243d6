"""Backend selection for the word-sized scan kernels.

Two interchangeable implementations of the same contract live here:
a numba-jitted one and a vectorized pure-numpy one. Selection order:
an explicit name argument, then the LUCAS_DUALS_BACKEND environment
variable ("numba" or "numpy"), then numba if it imports, else numpy.

Both backends expose:
    NAME: str
    MAX_MODULUS: largest supported modulus (exclusive bound 2^47)
    u_mod_batch(P, Q, n, m) -> int64 array of U_n mod m per pair
    wss_scan_arrays(primes) -> (entry points, mod-p^2 hit mask)
and are required to produce identical outputs on identical inputs.
"""

from __future__ import annotations

import os
from types import ModuleType

BACKEND_ENV_VAR = "LUCAS_DUALS_BACKEND"
BACKEND_NAMES = ("numba", "numpy")


def get_backend(name: str | None = None) -> ModuleType:
    requested = name if name is not None else os.environ.get(BACKEND_ENV_VAR)
    requested = requested.strip().lower() if requested else None
    if requested is not None and requested not in BACKEND_NAMES:
        raise ValueError(
            f"unknown backend {requested!r}; expected one of {BACKEND_NAMES}"
        )
    if requested == "numpy":
        from . import numpy_backend

        return numpy_backend
    if requested == "numba":
        from . import numba_backend

        return numba_backend
    try:
        from . import numba_backend

        return numba_backend
    except ImportError:
        from . import numpy_backend

        return numpy_backend
