"""Kernel selection: compiled extension when importable, Python otherwise.

Set ``EQCLASS_PURE_PYTHON=1`` to force the pure-Python kernels.
"""

import os

from eqclass import _kernels_py

BACKEND = "python"

if os.environ.get("EQCLASS_PURE_PYTHON", "") not in ("1", "true", "yes"):
    try:
        from eqclass import _ckernels as _impl

        BACKEND = "cython"
    except ImportError:  # extension not built
        _impl = _kernels_py
else:
    _impl = _kernels_py

reduce_mod = _impl.reduce_mod
mul_mod = _impl.mul_mod
lin_comb = _impl.lin_comb
normalize = _impl.normalize
ypoly_mul_mod = _impl.ypoly_mul_mod

__all__ = ["BACKEND", "reduce_mod", "mul_mod", "lin_comb", "normalize", "ypoly_mul_mod"]
