"""Kernel selection.

The compiled extension is used when it imports; otherwise the pure-Python
kernels. ``METDIM_PURE_PYTHON=1`` forces the fallback.
"""

import os

from . import _pykernel

if os.environ.get("METDIM_PURE_PYTHON") == "1":
    kernel = _pykernel
else:
    try:
        from . import _kernel as kernel
    except ImportError:
        kernel = _pykernel

BACKEND = kernel.BACKEND


def available():
    """Names and modules of every kernel importable in this environment."""
    out = {"python": _pykernel}
    try:
        from . import _kernel
    except ImportError:
        pass
    else:
        out["cython"] = _kernel
    return out
