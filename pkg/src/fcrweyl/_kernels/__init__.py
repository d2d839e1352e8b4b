"""Signed-permutation kernels with a compiled core and a Python fallback.

The compiled extension ``_signed`` is used when it has been built; otherwise
the pure-Python module is used.  Set ``FCRWEYL_PURE_PYTHON=1`` to force the
fallback (the benchmark and the backend-parity tests rely on this switch).
"""
import os

from . import _signed_py as python_backend

compiled_backend = None
if not os.environ.get("FCRWEYL_PURE_PYTHON"):
    try:
        from . import _signed as compiled_backend
    except ImportError:
        compiled_backend = None

_impl = compiled_backend if compiled_backend is not None else python_backend
BACKEND = "compiled" if compiled_backend is not None else "python"

identity = _impl.identity
compose = _impl.compose
invert = _impl.invert
act = _impl.act
negative_indices = _impl.negative_indices
count_negative = _impl.count_negative
enumerate_bfs = _impl.enumerate_bfs

__all__ = [
    "BACKEND",
    "act",
    "compiled_backend",
    "compose",
    "count_negative",
    "enumerate_bfs",
    "identity",
    "invert",
    "negative_indices",
    "python_backend",
]
