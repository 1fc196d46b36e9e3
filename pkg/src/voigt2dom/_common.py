"""Shared input-coercion helpers."""

import numpy as np

from .exceptions import InputDomainError


def as_complex_array(z, name="z"):
    """Coerce ``z`` to a complex128 ndarray, rejecting NaN/Inf in either part."""
    arr = np.asarray(z, dtype=np.complex128)
    if arr.size and not np.all(np.isfinite(arr)):
        raise InputDomainError(f"{name} must be finite (no NaN/Inf)")
    return arr


def as_real_array(x, name="x"):
    """Coerce ``x`` to a float64 ndarray, rejecting non-real or non-finite input."""
    arr = np.asarray(x)
    if np.iscomplexobj(arr):
        raise InputDomainError(f"{name} must be real-valued")
    try:
        arr = arr.astype(np.float64, copy=False)
    except (TypeError, ValueError) as exc:
        raise InputDomainError(f"{name} must be real-valued") from exc
    if arr.size and not np.all(np.isfinite(arr)):
        raise InputDomainError(f"{name} must be finite (no NaN/Inf)")
    return arr


def restore_shape(values, like):
    """Return a Python scalar when the original input was scalar."""
    if np.ndim(like) == 0:
        return values[()].item() if isinstance(values, np.ndarray) else values
    return values
