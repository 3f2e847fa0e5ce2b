"""Backend selection for the exhaustive-search kernels.

The compiled extension is used when it imports; otherwise the pure-Python
module is.  Setting ``SIGCAYLEY_PURE=1`` forces the fallback.
"""

import os

from . import _kernels_py

try:
    if os.environ.get("SIGCAYLEY_PURE", "") not in ("", "0"):
        raise ImportError("pure backend requested")
    from . import _ckernels as _backend
    BACKEND = "cython"
except ImportError:
    _backend = _kernels_py
    BACKEND = "python"

simple_cycles = _backend.simple_cycles
negative_histogram = _backend.negative_histogram
first_valid_marking = _backend.first_valid_marking

BACKENDS = {"python": _kernels_py}
if BACKEND == "cython":
    BACKENDS["cython"] = _backend
else:
    try:
        from . import _ckernels

        BACKENDS["cython"] = _ckernels
    except ImportError:
        pass
