"""
Entropy variance HV[X] = Var[ln f(X)] and how it moves under Y = aX^b.

Writing ln g'(x) = ln(ab) + (b-1) ln x into the second moment of
self-information and subtracting the squared entropy gives, after the ln(ab)
terms cancel::

    HV[Y] = HV[X]
            + b² V
            + b (-2V + 2 E[ln f] E[ln X] - 2 E[ln f · ln X])
            + V - 2 E[ln f] E[ln X] + 2 E[ln f · ln X]

with V = V[ln X]. The multiplier ``a`` drops out entirely, so rescaling a
variable leaves its entropy variance unchanged.
"""

from dataclasses import dataclass
import math
import warnings

import numpy as np

from logentropy.errors import DegenerateVarianceError, DomainError, InconsistentMomentsError
from logentropy.transform import VAR_EPS, InfoMoments

__all__ = [
    "CrossMoments",
    "NEGATIVE_HV_TOLERANCE",
    "hv_after_transform",
    "hv_after_transform_logvar_form",
    "hv_transform_terms",
    "cross_moments_closed_form_exponential",
    "cross_moments_closed_form_uniform",
    "hv_mc",
]

#: Negative HV results down to this value are rounding and get clamped to 0.
NEGATIVE_HV_TOLERANCE = 1e-9

_EULER_GAMMA = 0.5772156649015329


@dataclass(frozen=True)
class CrossMoments:
    """The expectations that enter the HV transform law.

    e_logf
        E[ln f(X)] (that is, -H[X]).
    e_logx
        E[ln X].
    e_logf_logx
        E[ln f(X) · ln X].
    var_logx
        V[ln X].
    hv
        HV[X] = Var[ln f(X)].
    """

    e_logf: float
    e_logx: float
    e_logf_logx: float
    var_logx: float
    hv: float

    def __post_init__(self):
        values = (self.e_logf, self.e_logx, self.e_logf_logx, self.var_logx, self.hv)
        if not all(math.isfinite(v) for v in values):
            raise DomainError("cross-moments must be finite")
        if self.var_logx < 0.0 or self.hv < 0.0:
            raise DomainError("var_logx and hv must be >= 0")
        cov = self.e_logf_logx - self.e_logf * self.e_logx
        bound = math.sqrt(self.hv * self.var_logx)
        if abs(cov) > bound + 1e-12 * max(1.0, abs(self.e_logf_logx)):
            raise InconsistentMomentsError(
                f"|Cov[ln f, ln X]| = {abs(cov):.6g} exceeds sqrt(HV·V) = {bound:.6g}"
            )

    @property
    def covariance(self):
        """Cov[ln f(X), ln X]."""
        return self.e_logf_logx - self.e_logf * self.e_logx


def _clamp(hv):
    if hv >= 0.0:
        return hv
    if hv >= -NEGATIVE_HV_TOLERANCE:
        warnings.warn(f"entropy variance {hv:.3g} clamped to 0", RuntimeWarning, stacklevel=3)
        return 0.0
    raise InconsistentMomentsError(f"transformed entropy variance is negative ({hv:.6g})")


def hv_after_transform(cm, b):
    """HV[aX^b] from the cross-moments of X and the exponent ``b``."""
    if not b > 0.0 or not math.isfinite(b):
        raise DomainError(f"exponent b must be finite and > 0, got {b!r}")
    # b²V + b(-2V + c) + (V - c) == (b-1)²V + (b-1)c, which is exact at b = 1
    c = 2.0 * cm.e_logf * cm.e_logx - 2.0 * cm.e_logf_logx
    d = b - 1.0
    return _clamp(cm.hv + d * d * cm.var_logx + d * c)


def hv_after_transform_logvar_form(cm, var_log_y):
    """HV[aX^b] written through V[ln Y] instead of ``b``.

    b = sqrt(V[ln Y] / V[ln X]), after which this is the same law as
    :func:`hv_after_transform`.
    """
    if not cm.var_logx > VAR_EPS:
        raise DegenerateVarianceError("V[ln X] is degenerate")
    if not var_log_y > VAR_EPS:
        raise DegenerateVarianceError("V[ln Y] is degenerate")
    return hv_after_transform(cm, math.sqrt(var_log_y / cm.var_logx))


def hv_transform_terms(cm, a, b):
    """The four pieces of HV[Y] before regrouping by powers of ``b``.

    Returns ``(HV[X], V[ln g'], E[-2 ln f · ln g'], -2 H[X] E[ln g'])`` for
    g(x) = a·x^b. Their sum equals :func:`hv_after_transform` for any ``a``.
    """
    log_ab = math.log(a) + math.log(b)
    v_dg = (b - 1.0) ** 2 * cm.var_logx
    e_cross = -2.0 * log_ab * cm.e_logf - 2.0 * (b - 1.0) * cm.e_logf_logx
    h_term = 2.0 * cm.e_logf * (log_ab + (b - 1.0) * cm.e_logx)
    return cm.hv, v_dg, e_cross, h_term


def cross_moments_closed_form_exponential():
    """Exact cross-moments of Exp(1), where ln f(x) = -x.

    E[X ln X] = Γ'(2) = 1 - γ.
    """
    return CrossMoments(
        e_logf=-1.0,
        e_logx=-_EULER_GAMMA,
        e_logf_logx=-(1.0 - _EULER_GAMMA),
        var_logx=math.pi**2 / 6.0,
        hv=1.0,
    )


def cross_moments_closed_form_uniform():
    """Exact cross-moments of Uniform(0, 1); ln f ≡ 0 and -ln X ~ Exp(1)."""
    return CrossMoments(e_logf=0.0, e_logx=-1.0, e_logf_logx=0.0, var_logx=1.0, hv=0.0)


def hv_mc(log_density, samples):
    """Sample estimates of (H, HV) and every cross-moment from one sample.

    Variances are unbiased (n - 1) and computed two-pass around the mean.
    """
    x = np.asarray(samples, dtype=float)
    if x.size < 2:
        raise DomainError("need at least two samples")
    if np.any(~(x > 0.0)):
        raise DomainError("samples must be positive")
    lf = np.asarray(log_density(x), dtype=float)
    if not np.all(np.isfinite(lf)):
        raise DomainError("log-density is not finite at every sample")
    lx = np.log(x)
    e_logf = float(lf.mean())
    e_logx = float(lx.mean())
    hv = float(np.sum((lf - e_logf) ** 2) / (x.size - 1))
    var_logx = float(np.sum((lx - e_logx) ** 2) / (x.size - 1))
    cov = float(np.mean((lf - e_logf) * (lx - e_logx)))
    cm = CrossMoments(
        e_logf=e_logf,
        e_logx=e_logx,
        e_logf_logx=cov + e_logf * e_logx,
        var_logx=var_logx,
        hv=hv,
    )
    return InfoMoments(-e_logf, hv), cm
