"""
Reference distributions with known entropy and log-moments.

Each :class:`Family` bundles a seeded sampler, an exact log-density and the
closed forms the Monte Carlo oracle checks against. Uniform and Pareto sit
outside the generalized gamma family; both have K = 1.
"""

from dataclasses import dataclass
from typing import Callable, Optional
import math

import numpy as np

from logentropy import gg as _gg
from logentropy._streams import draw
from logentropy.errors import DomainError
from logentropy.specfun import PositiveReal
from logentropy.transform import TransformParams, entropy_after_transform

__all__ = [
    "Family",
    "exponential",
    "generalized_gamma",
    "uniform",
    "pareto",
    "lognormal",
    "power_transform",
]


@dataclass(frozen=True)
class Family:
    name: str
    sampler: Callable  # sampler(rng, size) -> ndarray
    log_pdf: Callable  # log_pdf(x) -> ndarray
    entropy: float
    mean_log: float
    var_log: float
    hv: Optional[float] = None

    def sample(self, n, seed, partitions=1):
        return draw(self.sampler, n, seed, partitions)

    @property
    def K(self):
        return self.entropy - self.mean_log - 0.5 * math.log(self.var_log)


def generalized_gamma(params):
    m = _gg.gg_log_moments(params)
    hv = 1.0 if (params.b == 1.0 and params.nu == 1.0) else None
    return Family(
        name=f"GG(a={params.a:g}, b={params.b:g}, nu={params.nu:g})",
        sampler=_gg.gg_sampler(params),
        log_pdf=lambda x: _gg.gg_log_pdf(params, x),
        entropy=_gg.gg_entropy(params),
        mean_log=m.mean_log,
        var_log=m.var_log,
        hv=hv,
    )


def exponential():
    """Exp(1) = GG(1, 1, 1); HV = Var[X] = 1."""
    fam = generalized_gamma(_gg.GGParams(1.0, 1.0, 1.0))
    return Family("Exp(1)", fam.sampler, fam.log_pdf, fam.entropy, fam.mean_log, fam.var_log, 1.0)


def uniform():
    """Uniform(0, 1): H = 0, ln X ~ -Exp(1), HV = 0."""

    def sampler(rng, size):
        # 1 - U maps [0, 1) onto (0, 1]
        return 1.0 - rng.random(size)

    def log_pdf(x):
        return np.zeros_like(np.asarray(x, dtype=float))

    return Family("Uniform(0,1)", sampler, log_pdf, 0.0, -1.0, 1.0, 0.0)


def pareto(alpha, x_min=1.0):
    """Pareto(α, x_min) via inverse CDF; ln X = ln x_min + Exp(α)."""
    alpha = float(PositiveReal(alpha))
    x_min = float(PositiveReal(x_min))
    log_norm = math.log(alpha) + alpha * math.log(x_min)

    def sampler(rng, size):
        return x_min * (1.0 - rng.random(size)) ** (-1.0 / alpha)

    def log_pdf(x):
        x = np.asarray(x, dtype=float)
        return log_norm - (alpha + 1.0) * np.log(x)

    return Family(
        name=f"Pareto(alpha={alpha:g}, x_min={x_min:g})",
        sampler=sampler,
        log_pdf=log_pdf,
        entropy=math.log(x_min / alpha) + 1.0 + 1.0 / alpha,
        mean_log=math.log(x_min) + 1.0 / alpha,
        var_log=1.0 / alpha**2,
        hv=(1.0 + 1.0 / alpha) ** 2,
    )


def lognormal(mu=0.0, sigma=1.0):
    """Lognormal(μ, σ): H = μ + ½ln(2πeσ²), HV = σ² + ½."""
    sigma = float(PositiveReal(sigma))
    log_norm = -math.log(sigma) - 0.5 * math.log(2.0 * math.pi)

    def sampler(rng, size):
        return np.exp(mu + sigma * rng.standard_normal(size))

    def log_pdf(x):
        lx = np.log(np.asarray(x, dtype=float))
        return log_norm - lx - 0.5 * ((lx - mu) / sigma) ** 2

    return Family(
        name=f"Lognormal(mu={mu:g}, sigma={sigma:g})",
        sampler=sampler,
        log_pdf=log_pdf,
        entropy=mu + 0.5 * math.log(2.0 * math.pi * math.e * sigma**2),
        mean_log=float(mu),
        var_log=sigma**2,
        hv=sigma**2 + 0.5,
    )


def power_transform(base, a, b, hv=None):
    """Distribution of Y = a·X^b for X ~ ``base``.

    f_Y(y) = f_X(x) / (a b x^(b-1)) with x = (y/a)^(1/b). Entropy and
    log-moments follow from the base; ``hv`` may be supplied when known.
    """
    t = TransformParams(a, b)
    if base.var_log <= 0.0:
        raise DomainError("base family has degenerate log-variance")
    log_ab = math.log(t.a) + math.log(t.b)

    def sampler(rng, size):
        return t.a * base.sampler(rng, size) ** t.b

    def log_pdf(y):
        ly = np.log(np.asarray(y, dtype=float))
        lx = (ly - math.log(t.a)) / t.b
        return base.log_pdf(np.exp(lx)) - log_ab - (t.b - 1.0) * lx

    return Family(
        name=f"{t.a:g}*[{base.name}]^{t.b:g}",
        sampler=sampler,
        log_pdf=log_pdf,
        entropy=entropy_after_transform(base.entropy, base.mean_log, t),
        mean_log=math.log(t.a) + t.b * base.mean_log,
        var_log=t.b**2 * base.var_log,
        hv=hv,
    )
