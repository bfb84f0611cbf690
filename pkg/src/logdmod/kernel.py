"""Kernel backend selection.

Imports the compiled extension when available, otherwise the pure-Python
fallback.  Set LOGDMOD_PURE=1 to force the fallback (used by the
benchmark and the parity tests).
"""

import os

if os.environ.get("LOGDMOD_PURE"):
    from . import _kernel_py as _impl
else:
    try:
        from . import _speedups as _impl  # type: ignore[attr-defined]
    except ImportError:
        from . import _kernel_py as _impl

BACKEND = _impl.BACKEND

mono_mul = _impl.mono_mul
mono_divides = _impl.mono_divides
mono_div = _impl.mono_div
mono_lcm = _impl.mono_lcm
drl_key = _impl.drl_key
block_drl_key = _impl.block_drl_key
weyl_term_mul = _impl.weyl_term_mul
terms_mul_weyl = _impl.terms_mul_weyl
terms_mul_comm = _impl.terms_mul_comm
terms_add_scaled = _impl.terms_add_scaled
terms_scale = _impl.terms_scale
axpy_weyl = _impl.axpy_weyl
int_content = _impl.int_content
max_total_degree = _impl.max_total_degree
