"""Select the kernel implementation at import time.

The compiled ``_ckernels`` extension is used when it imports; setting
``DTGRAPHS_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

if os.environ.get("DTGRAPHS_PURE_PYTHON", "") not in ("", "0"):
    from . import _pykernels as kernels
else:
    try:
        from . import _ckernels as kernels
    except ImportError:
        from . import _pykernels as kernels

BACKEND = kernels.BACKEND
