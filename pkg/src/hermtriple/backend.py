"""Kernel backend selection.

The compiled extension (``_kernels_cy``) and the numpy module
(``_kernels_py``) expose the same three kernels.  The extension is picked
when importable; set HERMTRIPLE_BACKEND=python to force the fallback or
HERMTRIPLE_BACKEND=cython to require the extension.

Both backends run the identical algorithms with the same deterministic
conventions; within one backend results are reproducible bit for bit.
Across backends results agree to roundoff (the compilers schedule floating
point slightly differently), which tests pin at the 1e-12 level.
"""

import os

from . import _kernels_py

_choice = os.environ.get("HERMTRIPLE_BACKEND", "auto").strip().lower()

if _choice in ("python", "pure"):
    kernels = _kernels_py
elif _choice == "cython":
    from . import _kernels_cy as kernels  # noqa: F401  (ImportError is the point)
else:
    try:
        from . import _kernels_cy as kernels
    except ImportError:
        kernels = _kernels_py


def backend_name() -> str:
    """Name of the active kernel backend: "cython" or "python"."""
    return kernels.BACKEND
