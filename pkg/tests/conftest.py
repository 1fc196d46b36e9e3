"""Shared helpers for the test suite."""

import numpy as np
import pytest

from voigt2dom import reference_values


def complex_rel(values, reference):
    """Max relative error |a - b| / |b| of complex arrays."""
    a = np.atleast_1d(np.asarray(values))
    b = np.atleast_1d(np.asarray(reference))
    return float(np.max(np.abs(a - b) / np.abs(b)))


def partwise_rel(values, reference):
    """(max rel err of real part, max rel err of imag part).

    Where a reference part is exactly zero the absolute difference is used
    instead (the imaginary part vanishes identically on the x = 0 axis).
    """
    a = np.atleast_1d(np.asarray(values))
    b = np.atleast_1d(np.asarray(reference))
    out = []
    for pa, pb in ((a.real, b.real), (a.imag, b.imag)):
        diff = np.abs(pa - pb)
        with np.errstate(divide="ignore", invalid="ignore"):
            rel = diff / np.abs(pb)
        out.append(float(np.max(np.where(pb != 0, rel, diff))))
    return tuple(out)


def oracle(z):
    return np.atleast_1d(np.asarray(reference_values(np.atleast_1d(z))))


@pytest.fixture(scope="session")
def rng():
    return np.random.default_rng(20240214)
