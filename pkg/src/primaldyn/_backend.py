"""Kernel selection.

The compiled ``_ckernels`` extension is used when it imports; otherwise, or
when ``PRIMALDYN_PURE`` is set to a non-empty value, the pure-Python twin
``_pykernels`` is used. Both expose the same functions.
"""

import os

from . import _pykernels

if os.environ.get("PRIMALDYN_PURE"):
    kernels = _pykernels
    BACKEND = "python"
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        kernels = _pykernels
        BACKEND = "python"
    else:
        BACKEND = "cython"


def available_backends():
    """Map backend name to module for every kernel set that imports."""
    out = {"python": _pykernels}
    try:
        from . import _ckernels
    except ImportError:
        pass
    else:
        out["cython"] = _ckernels
    return out
