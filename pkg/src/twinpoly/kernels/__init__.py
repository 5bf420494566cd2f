"""Hot kernels with two interchangeable backends.

The numba backend is used when numba imports cleanly; setting the environment
variable ``TWINPOLY_BACKEND=numpy`` (or ``TWINPOLY_DISABLE_NUMBA=1``) selects the
pure-numpy path instead. Both backends honour identical contracts and the test
suite runs the cross-backend comparisons in ``tests/test_kernels.py``.
"""

import contextlib
import os

import numpy as np

from . import _numpy

try:
    if os.environ.get("TWINPOLY_DISABLE_NUMBA", "").lower() in ("1", "true", "yes"):
        raise ImportError("numba disabled by TWINPOLY_DISABLE_NUMBA")
    from . import _numba
    NUMBA_AVAILABLE = True
except ImportError:
    _numba = None
    NUMBA_AVAILABLE = False

_BACKENDS = {"numpy": _numpy}
if NUMBA_AVAILABLE:
    _BACKENDS["numba"] = _numba


def _initial_backend():
    name = os.environ.get("TWINPOLY_BACKEND", "").strip().lower()
    if name:
        if name not in ("numpy", "numba"):
            raise ValueError(f"TWINPOLY_BACKEND must be 'numpy' or 'numba', got {name!r}")
        if name == "numba" and not NUMBA_AVAILABLE:
            raise ImportError("TWINPOLY_BACKEND=numba but numba is not importable")
        return name
    return "numba" if NUMBA_AVAILABLE else "numpy"


_active = _initial_backend()


def backend():
    """Name of the active backend."""
    return _active


def available_backends():
    return sorted(_BACKENDS)


def set_backend(name):
    global _active
    if name not in _BACKENDS:
        raise ValueError(f"backend {name!r} not available (have {available_backends()})")
    _active = name


@contextlib.contextmanager
def use_backend(name):
    previous = _active
    set_backend(name)
    try:
        yield
    finally:
        set_backend(previous)


def _impl():
    return _BACKENDS[_active]


def _i64(a):
    return np.ascontiguousarray(a, dtype=np.int64)


def field_mul(a, b, p, e, mod):
    a, b = np.broadcast_arrays(_i64(a), _i64(b))
    return _impl().field_mul(_i64(a.ravel()), _i64(b.ravel()), p, e, _i64(mod)).reshape(a.shape)


def field_add(a, b, p, e):
    a, b = np.broadcast_arrays(_i64(a), _i64(b))
    return _impl().field_add(_i64(a.ravel()), _i64(b.ravel()), p, e).reshape(a.shape)


def field_neg(a, p, e):
    a = _i64(a)
    return _impl().field_neg(_i64(a.ravel()), p, e).reshape(a.shape)


def poly_roots(coeffs, p, e, mod, first_only=False):
    return _impl().poly_roots(_i64(coeffs), p, e, _i64(mod), bool(first_only))


def rootless_mask(q, d, add_t, mul_t, lo=0, hi=None):
    if hi is None:
        hi = q ** d
    return _impl().rootless_mask(q, d, add_t, mul_t, lo, hi)


def mark_products(out, q, d, k, factors, add_t, mul_t):
    _impl().mark_products(out, q, d, k, _i64(factors), add_t, mul_t)


def scalar_shift_counts(bitmap, q, add_t):
    return _impl().scalar_shift_counts(np.ascontiguousarray(bitmap, dtype=np.bool_), q, add_t)


def affine_curve_count(h, p, e, mod):
    return int(_impl().affine_curve_count(int(h), p, e, _i64(mod)))
