"""Kernel backend selection.

Hot numeric kernels ship in two flavours: numba @njit and pure numpy.
``STAUG_BACKEND=numpy`` forces the numpy path; ``STAUG_BACKEND=numba``
requires numba (raises if unavailable). Default is numba when importable.
The active backend is recorded in every run manifest.
"""

import os

_env = os.environ.get("STAUG_BACKEND", "").strip().lower()

if _env not in ("", "numba", "numpy"):
    raise ValueError(f"STAUG_BACKEND must be 'numba' or 'numpy', got {_env!r}")

if _env == "numpy":
    HAS_NUMBA = False
else:
    try:
        import numba  # noqa: F401

        HAS_NUMBA = True
    except ImportError:
        if _env == "numba":
            raise
        HAS_NUMBA = False

USE_NUMBA = HAS_NUMBA and _env != "numpy"


def backend_name() -> str:
    return "numba" if USE_NUMBA else "numpy"
