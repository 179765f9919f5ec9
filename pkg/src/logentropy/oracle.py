"""
Monte Carlo estimates of every quantity that has a closed form.

All estimators draw through :func:`logentropy._streams.draw`, so a result is
bit-identical for a fixed ``(n, seed, partitions)``; ``partitions`` is stored
on each :class:`McEstimate`.
"""

from dataclasses import dataclass
import math

import numpy as np

from logentropy._streams import draw
from logentropy.errors import DegenerateVarianceError, DomainError
from logentropy.families import Family, generalized_gamma
from logentropy.gg import GGParams
from logentropy.transform import TransformParams

__all__ = [
    "McEstimate",
    "mc_entropy",
    "mc_hv",
    "mc_log_moments",
    "mc_K",
    "mc_recover_transform",
    "N_BOOTSTRAP",
]

N_BOOTSTRAP = 200
_BOOTSTRAP_KEY = 0xB0B


@dataclass(frozen=True)
class McEstimate:
    value: float
    std_error: float
    n: int
    seed: int
    partitions: int = 1

    def z_score(self, target):
        """(value - target) / std_error; 0 when both coincide exactly."""
        diff = self.value - target
        if self.std_error == 0.0:
            return 0.0 if diff == 0.0 else math.copysign(math.inf, diff)
        return diff / self.std_error

    def agrees(self, target, n_se=4.0):
        return abs(self.z_score(target)) <= n_se


def _require_n(n, minimum):
    if n < minimum:
        raise DomainError(f"n must be >= {minimum}, got {n}")


def _log_density_values(log_density, x):
    lf = np.asarray(log_density(x), dtype=float)
    if not np.all(np.isfinite(lf)):
        raise DomainError("log-density is not finite at every sample")
    return lf


def _mean_estimate(values, n, seed, partitions):
    se = float(np.std(values, ddof=1) / math.sqrt(values.size))
    return McEstimate(float(values.mean()), se, n, seed, partitions)


def _variance_estimate(values, n, seed, partitions):
    # SE of the sample variance: sqrt((μ4 - σ⁴) / n)
    centered = values - values.mean()
    var = float(np.sum(centered**2) / (values.size - 1))
    m4 = float(np.mean(centered**4))
    se = math.sqrt(max(m4 - var**2, 0.0) / values.size)
    return McEstimate(var, se, n, seed, partitions)


def mc_entropy(log_density, sampler, n, seed, partitions=1):
    """H ≈ -mean(ln f(xᵢ)) over ``n`` seeded draws."""
    _require_n(n, 100)
    x = draw(sampler, n, seed, partitions)
    return _mean_estimate(-_log_density_values(log_density, x), n, seed, partitions)


def mc_hv(log_density, sampler, n, seed, partitions=1):
    """HV ≈ unbiased sample variance of ln f(xᵢ)."""
    _require_n(n, 100)
    x = draw(sampler, n, seed, partitions)
    return _variance_estimate(_log_density_values(log_density, x), n, seed, partitions)


def mc_log_moments(sampler, n, seed, partitions=1):
    """Estimates of (E[ln X], V[ln X])."""
    _require_n(n, 100)
    x = draw(sampler, n, seed, partitions)
    if np.any(~(x > 0.0)):
        raise DomainError("sampler produced a non-positive value")
    lx = np.log(x)
    mean = _mean_estimate(lx, n, seed, partitions)
    var = _variance_estimate(lx, n, seed, partitions)
    if var.value <= 0.0:
        raise DegenerateVarianceError("sampled log-variate has zero variance")
    return mean, var


def _k_hat(lf, lx):
    return -lf.mean() - lx.mean() - 0.5 * math.log(lx.var(ddof=1))


def mc_K(params, n, seed, partitions=1, se_method="bootstrap"):
    """K ≈ H - E[ln X] - ln(V[ln X]) / 2, all three from one sample.

    ``params`` is a :class:`GGParams` or any :class:`Family`. The standard
    error comes from a seeded nonparametric bootstrap (200 resamples), or from
    the delta method when ``se_method="delta"``.
    """
    _require_n(n, 1000)
    fam = params if isinstance(params, Family) else generalized_gamma(params)
    x = draw(fam.sampler, n, seed, partitions)
    lf = _log_density_values(fam.log_pdf, x)
    lx = np.log(x)
    k = _k_hat(lf, lx)
    if se_method == "bootstrap":
        rng = np.random.default_rng(np.random.SeedSequence(seed, spawn_key=(_BOOTSTRAP_KEY,)))
        reps = np.empty(N_BOOTSTRAP)
        for i in range(N_BOOTSTRAP):
            idx = rng.integers(0, x.size, x.size)
            reps[i] = _k_hat(lf[idx], lx[idx])
        se = float(np.std(reps, ddof=1))
    elif se_method == "delta":
        clx = lx - lx.mean()
        var = float(np.sum(clx**2) / (x.size - 1))
        influence = -(lf - lf.mean()) - clx - (clx**2 - var) / (2.0 * var)
        se = float(np.std(influence, ddof=1) / math.sqrt(x.size))
    else:
        raise ValueError(f"unknown se_method {se_method!r}")
    return McEstimate(float(k), se, n, seed, partitions)


def mc_recover_transform(base, t, n, seed, partitions=1):
    """Recover (a, b) from two independent samples: X ~ base and a·X'^b.

    Returns ``(a_hat, b_hat)`` as McEstimates with delta-method errors.
    The two samples use seeds derived from ``seed``.
    """
    _require_n(n, 100)
    t = t if isinstance(t, TransformParams) else TransformParams(*t)
    seed_x, seed_y = (int(s.generate_state(1)[0]) for s in np.random.SeedSequence(seed).spawn(2))
    lx = np.log(draw(base.sampler, n, seed_x, partitions))
    ly = math.log(t.a) + t.b * np.log(draw(base.sampler, n, seed_y, partitions))
    mx, my = lx.mean(), ly.mean()
    cx, cy = lx - mx, ly - my
    vx, vy = float(np.sum(cx**2) / (n - 1)), float(np.sum(cy**2) / (n - 1))
    if vx <= 0.0 or vy <= 0.0:
        raise DegenerateVarianceError("sampled log-variate has zero variance")
    b = math.sqrt(vy / vx)
    log_a = my - b * mx
    infl_b_x = -b / (2.0 * vx) * (cx**2 - vx)
    infl_b_y = b / (2.0 * vy) * (cy**2 - vy)
    infl_la_x = -b * cx - mx * infl_b_x
    infl_la_y = cy - mx * infl_b_y
    se_b = math.sqrt((np.var(infl_b_x) + np.var(infl_b_y)) / n)
    se_la = math.sqrt((np.var(infl_la_x) + np.var(infl_la_y)) / n)
    a = math.exp(log_a)
    return (
        McEstimate(a, a * se_la, n, seed, partitions),
        McEstimate(b, se_b, n, seed, partitions),
    )
