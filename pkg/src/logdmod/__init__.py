"""Exact engine for D-module computations attached to integrable
logarithmic connections along quasi-homogeneous plane curves."""

from .kernel import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
__all__ = ["KERNEL_BACKEND", "__version__"]
