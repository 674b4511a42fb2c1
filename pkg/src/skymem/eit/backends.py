"""Stepping-kernel backend selection.

The compiled Cython kernel is preferred when it imported cleanly; the
numpy implementation is the always-available fallback.  Set
SKYMEM_BACKEND=numpy (or =cython) to force a choice, e.g. for the
benchmark in benchmarks/bench_backends.py.
"""

from __future__ import annotations

import os

from . import _mb_numpy

try:
    from . import _mb_cython
except ImportError:  # pragma: no cover - depends on build environment
    _mb_cython = None

_FORCED = os.environ.get("SKYMEM_BACKEND", "").strip().lower()

if _FORCED == "numpy":
    BACKEND = "numpy"
elif _FORCED == "cython":
    if _mb_cython is None:
        raise ImportError("SKYMEM_BACKEND=cython but the compiled kernel "
                          "is not available")
    BACKEND = "cython"
elif _FORCED:
    raise ImportError(f"unknown SKYMEM_BACKEND value: {_FORCED!r}")
else:
    BACKEND = "cython" if _mb_cython is not None else "numpy"

integrate_mb = (_mb_cython.integrate_mb if BACKEND == "cython"
                else _mb_numpy.integrate_mb)


def get_backend(name: str | None = None):
    """Return (label, integrate_mb) for an explicit backend request."""
    if name in (None, "", "auto"):
        return BACKEND, integrate_mb
    if name == "numpy":
        return "numpy", _mb_numpy.integrate_mb
    if name == "cython":
        if _mb_cython is None:
            raise ImportError("compiled kernel not available")
        return "cython", _mb_cython.integrate_mb
    raise ValueError(f"unknown backend {name!r}")
