"""Select the compiled Sturm kernels when built, else the pure-Python ones.

Set ``DELTABOUND_PURE_PYTHON=1`` to force the fallback.
"""
import os

if os.environ.get("DELTABOUND_PURE_PYTHON"):
    from ._sturm_py import bisect_eigenvalues, sturm_count
    BACKEND = "python"
else:
    try:
        from ._sturm import bisect_eigenvalues, sturm_count
        BACKEND = "cython"
    except ImportError:
        from ._sturm_py import bisect_eigenvalues, sturm_count
        BACKEND = "python"

__all__ = ["BACKEND", "bisect_eigenvalues", "sturm_count"]
