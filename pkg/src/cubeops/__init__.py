"""Exact little n-cubes operad, its comonad on pointed spaces, and the suspension recognition machinery."""

from .kernels import BACKEND

__version__ = "0.1.0"

__all__ = ["BACKEND", "__version__"]
