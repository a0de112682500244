"""Backend selection for the hot per-edge kernels.

The numba backend is the default when numba imports cleanly; set
CYCLECON_NUMBA=0 to force the pure numpy fallback (or =1 to insist on
numba and fail loudly if it is missing).  ``use_backend`` switches at
runtime, which the benchmark uses to time both paths in one process.
"""

from __future__ import annotations

import os

from . import _kernels_py

ENV_NUMBA = "CYCLECON_NUMBA"

try:
    from . import _kernels_numba
    HAS_NUMBA = True
except ImportError:
    _kernels_numba = None
    HAS_NUMBA = False

_active_name = "python"
_active = _kernels_py


def _initial_backend() -> str:
    flag = os.environ.get(ENV_NUMBA, "").strip().lower()
    if flag in ("0", "false", "no", "off"):
        return "python"
    if flag in ("1", "true", "yes", "on"):
        if not HAS_NUMBA:
            raise ImportError(f"{ENV_NUMBA}={flag} but numba is not importable")
        return "numba"
    return "numba" if HAS_NUMBA else "python"


def use_backend(name: str) -> None:
    global _active_name, _active
    if name == "numba":
        if not HAS_NUMBA:
            raise ValueError("numba backend requested but numba is not importable")
        _active = _kernels_numba
        _active_name = "numba"
    elif name == "python":
        _active = _kernels_py
        _active_name = "python"
    else:
        raise ValueError(f"unknown backend {name!r}")


def active_backend() -> str:
    return _active_name


def available_backends() -> list[str]:
    return ["python", "numba"] if HAS_NUMBA else ["python"]


def intersect_sorted(a, b):
    return _active.intersect_sorted(a, b)


def triangle_weights(indptr, indices, edge_u, edge_v):
    return _active.triangle_weights(indptr, indices, edge_u, edge_v)


def k3_labels(indptr, indices):
    return _active.k3_labels(indptr, indices)


def l3_labels(indptr, indices, csr_eids, edge_u, edge_v):
    return _active.l3_labels(indptr, indices, csr_eids, edge_u, edge_v)


def directed_triangle_counts(out_indptr, out_indices, in_indptr, in_indices,
                             arc_u, arc_v):
    return _active.directed_triangle_counts(
        out_indptr, out_indices, in_indptr, in_indices, arc_u, arc_v
    )


use_backend(_initial_backend())
