"""Not-a-knot cubic spline for complex-valued data on strictly increasing knots.

Construction assembles the classical second-derivative (moment) system, with
the not-a-knot end rows folded into the first and last interior equations so
the whole solve stays tridiagonal, O(n).  Complex data is handled by running
the real elimination on a complex right-hand side, which is identical to
splining the real and imaginary parts separately on the shared knots.
"""

from dataclasses import dataclass

import numpy as np
from scipy.linalg import solve_banded

from .exceptions import ExtrapolationError, SplineConstructionError

__all__ = ["CubicSpline", "build_spline", "eval_spline"]


@dataclass(frozen=True)
class CubicSpline:
    """Knot array plus per-interval cubic coefficients.

    ``coeffs`` has shape (4, n-1); on interval i the spline is
    ``a[i] + b[i] d + c[i] d^2 + e[i] d^3`` with ``d = x - knots[i]``.
    ``right_value`` is the data value at the last knot, kept so queries
    landing exactly on it are returned without polynomial rounding.
    """

    knots: np.ndarray
    coeffs: np.ndarray
    right_value: complex


def build_spline(knots, values):
    """Construct the not-a-knot cubic spline through (knots, values).

    Parameters
    ----------
    knots : array_like of float
        Strictly increasing, at least 4 entries.
    values : array_like of complex
        Same length as ``knots``.

    Returns
    -------
    CubicSpline
    """
    x = np.asarray(knots, dtype=np.float64)
    y = np.asarray(values, dtype=np.complex128)
    if x.ndim != 1 or y.ndim != 1:
        raise SplineConstructionError("knots and values must be one-dimensional")
    if x.size != y.size:
        raise SplineConstructionError(
            f"length mismatch: {x.size} knots vs {y.size} values"
        )
    if x.size < 4:
        raise SplineConstructionError("not-a-knot spline needs at least 4 points")
    if not np.all(np.isfinite(x)) or not np.all(np.isfinite(y)):
        raise SplineConstructionError("knots and values must be finite")
    h = np.diff(x)
    if np.any(h <= 0):
        raise SplineConstructionError("knots must be strictly increasing")

    n = x.size
    slope = np.diff(y) / h
    rhs = 6.0 * np.diff(slope)            # one row per interior knot

    # tridiagonal system for the interior moments sigma_1 .. sigma_{n-2};
    # the not-a-knot conditions eliminate sigma_0 and sigma_{n-1}
    main = 2.0 * (h[:-1] + h[1:])
    lower = np.zeros(n - 2)
    upper = np.zeros(n - 2)
    lower[1:] = h[1:-1]
    upper[:-1] = h[1:-1]

    r0 = h[0] / h[1]
    main[0] += h[0] * (1.0 + r0)
    upper[0] = h[1] - h[0] * r0
    r1 = h[-1] / h[-2]
    main[-1] += h[-1] * (1.0 + r1)
    lower[-1] = h[-2] - h[-1] * r1

    band = np.zeros((3, n - 2))
    band[0, 1:] = upper[:-1]
    band[1, :] = main
    band[2, :-1] = lower[1:]
    interior = solve_banded((1, 1), band, rhs)

    sigma = np.empty(n, dtype=np.complex128)
    sigma[1:-1] = interior
    sigma[0] = interior[0] * (1.0 + r0) - interior[1] * r0
    sigma[-1] = interior[-1] * (1.0 + r1) - interior[-2] * r1

    coeffs = np.empty((4, n - 1), dtype=np.complex128)
    coeffs[0] = y[:-1]
    coeffs[1] = slope - h * (2.0 * sigma[:-1] + sigma[1:]) / 6.0
    coeffs[2] = sigma[:-1] / 2.0
    coeffs[3] = (sigma[1:] - sigma[:-1]) / (6.0 * h)

    xs = x.copy()
    xs.flags.writeable = False
    coeffs.flags.writeable = False
    return CubicSpline(xs, coeffs, complex(y[-1]))


def eval_spline(spline, x):
    """Evaluate the spline at points ``x`` (each inside the knot range).

    Queries may come in any order; each one binary-searches its interval
    independently.  A query equal to a knot returns the interpolated value
    exactly (to rounding).  Out-of-range queries raise
    :class:`ExtrapolationError`.
    """
    xq = np.asarray(x, dtype=np.float64)
    flat = np.atleast_1d(xq)
    k = spline.knots
    if flat.size:
        if not np.all(np.isfinite(flat)):
            raise ExtrapolationError("query points must be finite")
        if flat.min() < k[0] or flat.max() > k[-1]:
            raise ExtrapolationError(
                f"query outside knot range [{k[0]!r}, {k[-1]!r}]"
            )

    idx = np.searchsorted(k, flat, side="right") - 1
    np.clip(idx, 0, k.size - 2, out=idx)
    d = flat - k[idx]
    a, b, c, e = spline.coeffs
    out = ((e[idx] * d + c[idx]) * d + b[idx]) * d + a[idx]
    # queries on interior knots return the data exactly (d == 0); do the
    # same for the right endpoint instead of evaluating the last cubic
    last = flat == k[-1]
    if last.any():
        out[last] = spline.right_value
    if np.ndim(x) == 0:
        return out[0].item()
    return out.reshape(xq.shape)
