"""Kernel backend selection: compiled extension if present, numpy otherwise."""

from __future__ import annotations

try:
    from . import _fast_cy as kernels
except ImportError:  # extension not built on this platform
    from . import _fast_py as kernels

BACKEND = kernels.BACKEND


def backend_name() -> str:
    """Name of the active kernel backend: "ext" or "python"."""
    return BACKEND
