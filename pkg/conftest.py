"""Shared fixtures: mpmath as the independent high-precision oracle."""

import mpmath
import pytest


@pytest.fixture(scope="session")
def mp():
    mpmath.mp.dps = 30
    return mpmath


@pytest.fixture(scope="session")
def ln_glaisher(mp):
    """ln A to binary64."""
    return float(mp.log(mp.glaisher))


@pytest.fixture(scope="session")
def zeta_prime_m1(mp):
    """ζ'(-1) to binary64."""
    return float(mp.zeta(-1, derivative=1))
