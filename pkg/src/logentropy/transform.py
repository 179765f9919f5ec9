"""
Entropy bookkeeping for Y = aX^b (a > 0, b > 0).

With g(x) = ax^b, ln g'(x) = ln(ab) + (b-1) ln x, so the entropy of Y needs
nothing about X beyond H[X] and E[ln X]. Replacing a and b by the log-moments
of X and Y gives an entropy difference built only from E[ln ·] and V[ln ·],
and hence H = E[ln X] + ln(V[ln X]) / 2 + K with K fixed within one aX^b family.

Entropy is H = -E[ln f(X)] throughout.
"""

from dataclasses import dataclass
import math

from logentropy.errors import DegenerateVarianceError, DomainError
from logentropy.gg import LogMoments
from logentropy.specfun import PositiveReal

__all__ = [
    "TransformParams",
    "InfoMoments",
    "VAR_EPS",
    "DEFAULT_K",
    "K_UNIFORM",
    "K_LOGNORMAL",
    "entropy_after_transform",
    "forward_log_moments",
    "recover_transform",
    "entropy_from_log_moments",
    "entropy_shift",
    "entropy_shift_via_b",
]

#: var_log at or below this is a point mass; no differential entropy exists.
VAR_EPS = 1e-300

#: Mid-range K when the family is unknown.
DEFAULT_K = 1.2
#: K for Uniform and Pareto; the low end of the usual range.
K_UNIFORM = 1.0
#: K of the lognormal, ½ln(2πe), the maximum under fixed log-moments.
K_LOGNORMAL = 0.5 * math.log(2.0 * math.pi * math.e)


@dataclass(frozen=True)
class TransformParams:
    """Multiplier ``a`` and exponent ``b`` of y = a·x^b; both > 0."""

    a: float
    b: float

    def __post_init__(self):
        object.__setattr__(self, "a", float(PositiveReal(self.a)))
        object.__setattr__(self, "b", float(PositiveReal(self.b)))


@dataclass(frozen=True)
class InfoMoments:
    """Entropy (nats) and entropy variance (nats²)."""

    entropy: float
    entropy_variance: float

    def __post_init__(self):
        if self.entropy_variance < 0.0:
            raise DomainError(f"entropy variance must be >= 0, got {self.entropy_variance}")


def _check_var(*variances):
    for v in variances:
        if not v > VAR_EPS:
            raise DegenerateVarianceError(f"log-variance {v!r} is degenerate")


def entropy_after_transform(h_x, mean_log_x, t):
    """H[aX^b] = H[X] + ln b + (b-1) E[ln X] + ln a."""
    if not (math.isfinite(h_x) and math.isfinite(mean_log_x)):
        raise DomainError("entropy and mean log must be finite")
    return h_x + math.log(t.b) + (t.b - 1.0) * mean_log_x + math.log(t.a)


def forward_log_moments(base, t):
    """Log-moments of aX^b: (ln a + b·E[ln X], b²·V[ln X])."""
    return LogMoments(math.log(t.a) + t.b * base.mean_log, t.b**2 * base.var_log)


def recover_transform(base, transformed):
    """Solve for (a, b) given the log-moments of X and of aX^b.

    Only b > 0 is recoverable, since b comes out of a square root.
    """
    _check_var(base.var_log, transformed.var_log)
    b = math.sqrt(transformed.var_log / base.var_log)
    return TransformParams(math.exp(transformed.mean_log - b * base.mean_log), b)


def entropy_from_log_moments(m, k):
    """H = E[ln X] + ln(V[ln X]) / 2 + K."""
    _check_var(m.var_log)
    return m.mean_log + 0.5 * math.log(m.var_log) + k


def entropy_shift(mean_log_x, mean_log_y, var_log_x, var_log_y):
    """H[Y] - H[X] for Y in the aX^b family of X, from log-moments alone."""
    _check_var(var_log_x, var_log_y)
    return (mean_log_y - mean_log_x) + 0.5 * (math.log(var_log_y) - math.log(var_log_x))


def entropy_shift_via_b(mean_log_x, mean_log_y, b):
    """H[Y] - H[X] = E[ln Y] - E[ln X] + ln b, with b supplied directly."""
    return mean_log_y - mean_log_x + math.log(b)
