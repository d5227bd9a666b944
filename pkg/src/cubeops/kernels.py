"""Backend selection for the rational kernels.

The compiled extension is used when it imports; ``CUBEOPS_PURE_PYTHON=1``
forces the pure-Python fallback. ``BACKEND`` names the active one.
"""

import os

from . import _kernels_py

if os.environ.get("CUBEOPS_PURE_PYTHON", "") not in ("", "0"):
    _impl = _kernels_py
else:
    try:
        from . import _kernels as _impl
    except ImportError:  # extension not built
        _impl = _kernels_py

BACKEND = "python" if _impl is _kernels_py else "cython"

apply = _impl.apply
invert = _impl.invert
compose = _impl.compose
contains_open = _impl.contains_open
contains_closed = _impl.contains_closed
interiors_overlap = _impl.interiors_overlap
intersect = _impl.intersect
cube_st = _impl.cube_st
interpolate = _impl.interpolate

__all__ = [
    "BACKEND", "apply", "invert", "compose", "contains_open",
    "contains_closed", "interiors_overlap", "intersect", "cube_st",
    "interpolate",
]
