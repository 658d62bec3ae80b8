"""Backend selection for the hot loops.

The compiled extension is used when it has been built; setting
``DISKSTAB_PURE_PYTHON=1`` forces the pure-Python fallback.
"""
import os

from . import _scan_py

if os.environ.get("DISKSTAB_PURE_PYTHON"):
    ViolationScanner = _scan_py.ViolationScanner
    COMPILED = False
else:
    try:
        from ._scan import ViolationScanner
        COMPILED = True
    except ImportError:
        ViolationScanner = _scan_py.ViolationScanner
        COMPILED = False

BACKEND = "cython" if COMPILED else "python"


def scanner_class(backend=None):
    """Return the scanner class for ``backend`` ("cython", "python" or None)."""
    if backend is None:
        return ViolationScanner
    if backend == "python":
        return _scan_py.ViolationScanner
    if backend == "cython":
        from ._scan import ViolationScanner as compiled
        return compiled
    raise ValueError(f"unknown backend {backend!r}")
