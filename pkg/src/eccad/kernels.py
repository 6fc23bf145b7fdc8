"""Kernel dispatch: the compiled extension when it was built, else pure Python.

Set ``ECCAD_PURE_PYTHON=1`` to force the fallback.
"""

import os

from . import _kernels_py

BACKEND = "python"
_impl = _kernels_py

if not os.environ.get("ECCAD_PURE_PYTHON"):
    try:
        from . import _ckernels as _impl  # type: ignore[no-redef]

        BACKEND = "cython"
    except ImportError:
        pass

mul_terms = _impl.mul_terms
dup_shift1 = _impl.dup_shift1
sign_variations = _impl.sign_variations
dup_eval_scaled = _impl.dup_eval_scaled
descartes_01 = _impl.descartes_01
dup_prem = _impl.dup_prem

__all__ = [
    "BACKEND",
    "mul_terms",
    "dup_shift1",
    "sign_variations",
    "dup_eval_scaled",
    "descartes_01",
    "dup_prem",
]
