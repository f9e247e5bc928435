#!/usr/bin/env python3
"""Tests for the classical building blocks: ln Γ, ψ, ζ, Bernoulli numbers."""

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gammamorphic.errors import DomainError, PoleError
from gammamorphic.special_base import (
    RouteTag,
    ValueWithError,
    bernoulli_number,
    bernoulli_poly,
    digamma,
    euler_gamma,
    hurwitz_zeta,
    log_gamma,
    log_sin_pi,
    polygamma,
    riemann_zeta,
)


def test_log_gamma_at_integers_and_half():
    assert abs(log_gamma(5).value - math.log(24)) < 1e-13
    assert abs(log_gamma(0.5).value - 0.5 * math.log(math.pi)) < 1e-13
    assert log_gamma(3.0).route is RouteTag.STIRLING


@pytest.mark.parametrize("z", [0.1, 2.7, 17.5, 123.25])
def test_log_gamma_matches_math_lgamma(z):
    assert abs(log_gamma(z).value - math.lgamma(z)) < 1e-12 * max(1.0, abs(math.lgamma(z)))


@pytest.mark.parametrize("z", [1 + 2j, 0.5 - 3j, -2.5 + 0.5j, 10 + 10j])
def test_log_gamma_complex_matches_mpmath(mp, z):
    expected = complex(mp.loggamma(z))
    assert abs(log_gamma(z).value - expected) < 1e-11


def test_log_gamma_reflection_far_left(mp):
    z = -25.5
    value = log_gamma(z)
    assert value.route is RouteTag.REFLECTION
    # real part is ln|Γ|; the imaginary part carries the sign as a multiple of π
    assert abs(complex(value.value).real - math.lgamma(z)) < 1e-10


@pytest.mark.parametrize("z", [0, -1, -7])
def test_log_gamma_poles(z):
    with pytest.raises(PoleError):
        log_gamma(z)


def test_digamma_and_polygamma(mp):
    assert abs(digamma(1).value + euler_gamma()) < 1e-14
    assert abs(euler_gamma() - float(mp.euler)) < 1e-15
    assert abs(digamma(0.3).value - float(mp.digamma(0.3))) < 1e-12
    assert abs(polygamma(1, 1).value - math.pi ** 2 / 6) < 1e-13
    assert abs(polygamma(2, 2.5).value - float(mp.polygamma(2, 2.5))) < 1e-12
    with pytest.raises(PoleError):
        digamma(-2)


def test_zeta_values(mp):
    assert abs(riemann_zeta(2).value - math.pi ** 2 / 6) < 1e-13
    assert abs(riemann_zeta(3).value - float(mp.zeta(3))) < 1e-14
    assert abs(hurwitz_zeta(3, 0.25).value - float(mp.zeta(3, 0.25))) < 1e-11
    assert abs(hurwitz_zeta(2.5, 7.0).value - float(mp.zeta(2.5, 7))) < 1e-14


def test_bernoulli_numbers_exact():
    assert bernoulli_number(0) == 1
    assert bernoulli_number(1) == Fraction(-1, 2)
    assert bernoulli_number(12) == Fraction(-691, 2730)
    assert all(bernoulli_number(n) == 0 for n in (3, 5, 7, 21))


def test_bernoulli_poly_exact_and_float():
    assert bernoulli_poly(2, Fraction(1, 2)) == Fraction(-1, 12)
    assert abs(bernoulli_poly(3, 0.3) - (0.027 - 1.5 * 0.09 + 0.5 * 0.3)) < 1e-15
    with pytest.raises(DomainError):
        bernoulli_poly(-1, 0.5)


@settings(max_examples=50, deadline=None)
@given(p=st.integers(min_value=1, max_value=12), x=st.integers(min_value=-30, max_value=30))
def test_bernoulli_difference_is_exact(p, x):
    assert bernoulli_poly(p, x + 1) - bernoulli_poly(p, x) == p * Fraction(x) ** (p - 1)


def test_log_sin_pi_real_part():
    assert abs(log_sin_pi(0.5)) < 1e-15
    assert abs(complex(log_sin_pi(0.25)).real - math.log(math.sqrt(0.5))) < 1e-15


def test_value_with_error_rejects_negative_error():
    with pytest.raises(ValueError):
        ValueWithError(1.0, -1e-3, RouteTag.EXACT)
    with pytest.raises(DomainError):
        ValueWithError(float("inf"), 0.0, RouteTag.EXACT)
