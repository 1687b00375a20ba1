"""Kernel backend selection.

Imports the compiled extension when present, otherwise the pure-Python
fallback.  Set SALEMNUM_PURE=1 in the environment to force the fallback
(used by the benchmark and the backend-parity tests).
"""

import os

if os.environ.get("SALEMNUM_PURE"):
    from . import _kernels_py as _impl
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernels_py as _impl

BACKEND = _impl.BACKEND
mul = _impl.mul
prem = _impl.prem
exact_div = _impl.exact_div
eval_at = _impl.eval_at
content = _impl.content
scalar_div_exact = _impl.scalar_div_exact
