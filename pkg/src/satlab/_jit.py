"""Optional numba acceleration for the hot enumeration and saturation loops.

Kernels are written in the subset of Python numba compiles; without numba
(or with ``SATLAB_NO_JIT=1``) they run unchanged as plain Python.
"""
import os

try:
    if os.environ.get("SATLAB_NO_JIT"):
        raise ImportError
    from numba import njit as _njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised only without numba
    HAVE_NUMBA = False


def jit(fn):
    if HAVE_NUMBA:
        return _njit(cache=True, nogil=True)(fn)
    return fn
