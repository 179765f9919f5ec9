import math

import mpmath
import numpy as np
import pytest
from hypothesis import given, strategies as st

from logentropy.errors import DomainError
from logentropy.specfun import PositiveReal, digamma, ln_gamma, trigamma

mpmath.mp.dps = 40
EULER = float(mpmath.euler)
GRID = np.geomspace(1e-3, 1e3, 61)


@pytest.mark.parametrize("nu", GRID)
def test_against_mpmath(nu):
    assert abs(ln_gamma(nu) - float(mpmath.loggamma(nu))) <= 1e-12 * max(1.0, abs(ln_gamma(nu)))
    assert abs(digamma(nu) - float(mpmath.digamma(nu))) <= 1e-12 * max(1.0, abs(digamma(nu)))
    assert abs(trigamma(nu) - float(mpmath.polygamma(1, nu))) <= 1e-12 * max(1.0, trigamma(nu))


def test_examples():
    assert ln_gamma(1.0) == 0.0
    assert ln_gamma(0.5) == pytest.approx(0.572365, abs=5e-7)
    assert ln_gamma(10.0) == pytest.approx(12.8018, abs=5e-5)
    assert digamma(1.0) == pytest.approx(-EULER, abs=1e-14)
    assert digamma(2.0) == pytest.approx(1.0 - EULER, abs=1e-14)
    assert digamma(0.5) == pytest.approx(-EULER - 2.0 * math.log(2.0), abs=1e-14)
    assert trigamma(1.0) == pytest.approx(math.pi**2 / 6.0, abs=1e-14)
    assert trigamma(0.5) == pytest.approx(math.pi**2 / 2.0, abs=1e-14)
    assert trigamma(2.0) == pytest.approx(math.pi**2 / 6.0 - 1.0, abs=1e-14)


def test_table_cross_checks():
    assert -digamma(1.0) == pytest.approx(0.57721, abs=1e-5)
    assert -2.0 * digamma(2.0) == pytest.approx(-0.84556, abs=1e-5)
    assert -math.log(trigamma(0.5)) / 2.0 == pytest.approx(-0.7981561, abs=1e-6)
    assert -math.log(trigamma(2.0)) / 2.0 == pytest.approx(0.21931, abs=1e-5)


nus = st.floats(min_value=1e-3, max_value=1e3)


@given(nus)
def test_recurrences(nu):
    assert digamma(nu + 1.0) - digamma(nu) == pytest.approx(1.0 / nu, abs=1e-10, rel=1e-12)
    assert trigamma(nu + 1.0) - trigamma(nu) == pytest.approx(-1.0 / nu**2, abs=1e-10, rel=1e-12)
    assert ln_gamma(nu + 1.0) - ln_gamma(nu) == pytest.approx(math.log(nu), abs=1e-10)


@pytest.mark.parametrize("nu", [0.1, 0.3, 1.0, 2.5, 10.0, 100.0])
def test_finite_differences(nu):
    h = 1e-5
    assert (ln_gamma(nu + h) - ln_gamma(nu - h)) / (2 * h) == pytest.approx(digamma(nu), abs=1e-6)
    assert (digamma(nu + h) - digamma(nu - h)) / (2 * h) == pytest.approx(trigamma(nu), abs=1e-6, rel=1e-8)


def test_small_nu_limits():
    nu = 1e-3
    assert nu * math.exp(ln_gamma(nu)) == pytest.approx(1.0, abs=1e-2)
    # tends to -1 (Ψ(ν) ~ -1/ν), not +1
    assert nu * digamma(nu) == pytest.approx(-1.0, abs=1e-2)
    assert nu**2 * trigamma(nu) == pytest.approx(1.0, abs=1e-2)


@pytest.mark.parametrize("bad", [0.0, -1.0, math.inf, math.nan, -math.inf])
@pytest.mark.parametrize("fn", [ln_gamma, digamma, trigamma])
def test_domain_errors(fn, bad):
    with pytest.raises(DomainError):
        fn(bad)


def test_array_input():
    out = digamma(np.array([1.0, 2.0]))
    assert out.shape == (2,)
    with pytest.raises(DomainError):
        trigamma(np.array([1.0, -2.0]))


def test_positive_real():
    assert PositiveReal(2) == 2.0
    for bad in (0, -3.0, math.nan, "1", True):
        with pytest.raises(DomainError):
            PositiveReal(bad)
