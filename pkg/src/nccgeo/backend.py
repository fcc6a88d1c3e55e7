"""Kernel backend selection: compiled extension when available, numpy
fallback otherwise.  Set NCCGEO_PURE_PYTHON=1 to force the fallback."""

import os

from . import _kernels_py

if os.environ.get("NCCGEO_PURE_PYTHON", "").strip() not in ("", "0"):
    kernels = _kernels_py
else:
    try:
        from . import _kernels as kernels  # type: ignore[attr-defined]
    except ImportError:
        kernels = _kernels_py

USING_COMPILED = bool(getattr(kernels, "COMPILED", False))
