#!/usr/bin/env python3
"""Tests for the double-exponential rules and Richardson differentiation."""

import math

import numpy as np
import pytest

from gammamorphic.errors import DomainError, NonConvergence, SingularIntegrand
from gammamorphic.quadrature import (
    derivative_at,
    derivative_with_error,
    integrate_finite,
    integrate_semi_infinite,
    pointwise,
)


def test_semi_infinite_exponential():
    result = integrate_semi_infinite(lambda u: np.exp(-u))
    assert abs(result.value - 1.0) < 1e-12
    assert result.abs_error < 1e-10
    assert result.evaluations > 0


def test_semi_infinite_endpoint_singularity():
    # ∫_0^∞ e^{-u} / sqrt(u) du = sqrt(π)
    result = integrate_semi_infinite(lambda u: np.exp(-u) / np.sqrt(u))
    assert abs(result.value - math.sqrt(math.pi)) < 1e-10


def test_finite_polynomial_and_log_singularity():
    assert abs(integrate_finite(lambda x: x ** 2, 0.0, 1.0).value - 1.0 / 3.0) < 1e-12
    assert abs(integrate_finite(np.log, 0.0, 1.0).value + 1.0) < 1e-10


def test_finite_reversed_and_empty():
    forward = integrate_finite(np.cos, 0.0, 1.0).value
    backward = integrate_finite(np.cos, 1.0, 0.0).value
    assert abs(forward - math.sin(1.0)) < 1e-12
    assert backward == -forward
    assert integrate_finite(np.cos, 2.0, 2.0).value == 0.0


def test_complex_integrand():
    result = integrate_finite(lambda x: np.exp(1j * x), 0.0, math.pi)
    assert abs(result.value - 2j) < 1e-12


def test_pointwise_wraps_scalar_functions():
    result = integrate_finite(pointwise(lambda t: math.lgamma(1.0 + t)), 0.0, 1.0)
    # ∫_0^1 ln Γ(1+t) dt = (1/2) ln 2π - 1
    assert abs(result.value - (0.5 * math.log(2 * math.pi) - 1.0)) < 1e-10


def test_non_finite_integrand_raises():
    with pytest.raises(SingularIntegrand):
        integrate_finite(lambda x: np.full_like(x, np.inf), 0.0, 1.0)


def test_oscillating_integrand_does_not_converge():
    with pytest.raises(NonConvergence) as info:
        integrate_semi_infinite(lambda u: np.sin(u), max_depth=4)
    assert info.value.abs_error is not None


def test_bad_tolerance():
    with pytest.raises(DomainError):
        integrate_semi_infinite(lambda u: np.exp(-u), tol=0.0)


def test_derivatives():
    assert abs(derivative_at(math.sin, 0.3) - math.cos(0.3)) < 1e-9
    second = derivative_with_error(math.sin, 0.3, order=2)
    assert abs(second.value + math.sin(0.3)) < 1e-7
    with pytest.raises(DomainError):
        derivative_with_error(math.sin, 0.3, order=3)
    with pytest.raises(DomainError):
        derivative_with_error(math.sin, 0.3, h=0.0)
