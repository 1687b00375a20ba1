"""Exact-arithmetic toolkit for Salem polynomials of negative trace.

Modules: polycore (integer polynomial arithmetic, Sturm counting, Salem
certification), families (prime-tuple constructions), coverage
(residue-class degree coverage), curvecheck (cyclotomic-point
exclusion), search (CRT/unit search), cli (command-line front end).
"""

from .kernels import BACKEND as kernel_backend

__version__ = "0.1.0"
__all__ = ["kernel_backend", "__version__"]
