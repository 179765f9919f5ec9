"""
Log-gamma, digamma and trigamma on the positive real axis.

Thin, domain-checked wrappers over :mod:`scipy.special`. Every closed form in
the package goes through these three functions, so they share one validation
rule: arguments must be finite and strictly positive. Scalars return Python
floats; arrays return arrays.
"""

from numbers import Real

import numpy as np
from scipy import special

from logentropy.errors import DomainError

__all__ = ["PositiveReal", "ln_gamma", "digamma", "trigamma"]


class PositiveReal(float):
    """A float constrained to ``0 < value < inf``."""

    def __new__(cls, value):
        if isinstance(value, bool) or not isinstance(value, (Real, np.floating, np.integer)):
            raise DomainError(f"expected a real number, got {value!r}")
        value = float(value)
        if not np.isfinite(value) or value <= 0.0:
            raise DomainError(f"expected a finite positive real, got {value!r}")
        return super().__new__(cls, value)


def _check(nu):
    arr = np.asarray(nu, dtype=float)
    if not np.all(np.isfinite(arr)) or np.any(arr <= 0.0):
        raise DomainError(f"argument must be finite and > 0, got {nu!r}")
    return arr


def _out(arr):
    return float(arr) if arr.ndim == 0 else arr


def ln_gamma(nu):
    """ln Γ(ν) for ν > 0."""
    return _out(special.gammaln(_check(nu)))


def digamma(nu):
    """Ψ(ν) = d/dν ln Γ(ν) for ν > 0."""
    return _out(special.digamma(_check(nu)))


def trigamma(nu):
    """Ψ'(ν), the derivative of the digamma function, for ν > 0."""
    return _out(special.polygamma(1, _check(nu)))
