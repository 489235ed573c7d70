"""Kernel backend selection.

The sweep kernels in :mod:`lrftrees._kernels` exist twice: a numba-jitted
loop and a vectorised pure-numpy fallback. ``LRFTREES_BACKEND=numpy``
forces the fallback, ``LRFTREES_BACKEND=numba`` requires the jit path
(raising if numba is missing); when unset, numba is used if importable.
The variable is read at call time, so callers may flip it per run.
"""

from __future__ import annotations

import os

try:
    import numba  # noqa: F401

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAVE_NUMBA = False

ENV_VAR = "LRFTREES_BACKEND"


def backend() -> str:
    """Return the active kernel backend, ``"numba"`` or ``"numpy"``."""
    choice = os.environ.get(ENV_VAR, "").strip().lower()
    if choice == "numpy":
        return "numpy"
    if choice == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError(f"{ENV_VAR}=numba but numba is not importable")
        return "numba"
    if choice:
        raise ValueError(f"unknown {ENV_VAR} value {choice!r} (use 'numba' or 'numpy')")
    return "numba" if HAVE_NUMBA else "numpy"
