#!/usr/bin/env python3
"""Tests for ln G: routes, anchors, functional equation and closed-form integrals."""

import cmath
import itertools
import math

import numpy as np
import pytest

from gammamorphic import oracle
from gammamorphic.barnes_g import (
    PHI_ONE,
    GRoute,
    asymptotic_check,
    duplication_check,
    euler_limit_check,
    functional_equation_check,
    integer_values_check,
    integral_log_sin,
    integral_x_cot,
    log_g,
    log_g_euler_limit,
    log_g_half,
    log_g_weierstrass,
    malmsten_log_gamma,
    multiplication_check,
    phi,
    zeta_prime_minus_one,
)
from gammamorphic.errors import RouteDomainError, ZeroError
from gammamorphic.report import residuals
from gammamorphic.special_base import RouteTag


@pytest.mark.parametrize("n", range(1, 13))
def test_integer_anchors_match_exact_recursion(n):
    expected = oracle.log_exact(oracle.g_integer(n))
    got = log_g(float(n)).value
    assert abs(got - expected) <= 1e-11 * max(1.0, abs(expected))


def test_g_of_four_is_two():
    result = log_g(4)
    assert abs(result.value - math.log(2.0)) < 1e-14
    assert result.route is RouteTag.SERIES_RECURSION


@pytest.mark.parametrize("x", [0, -1, -4])
def test_zeros_raise(x):
    with pytest.raises(ZeroError):
        log_g(x)


def test_constants_against_mpmath(mp, zeta_prime_m1):
    assert abs(zeta_prime_minus_one().value - zeta_prime_m1) < 1e-13
    assert abs(log_g_half().value - float(mp.log(mp.barnesg(0.5)))) < 1e-13


@pytest.mark.parametrize("x", [0.3, 1.7, 2.5, 6.2, 11.5])
def test_auto_route_against_mpmath(mp, x):
    expected = float(mp.log(mp.barnesg(x)))
    assert abs(log_g(x).value - expected) <= 1e-11 * max(1.0, abs(expected))


@pytest.mark.parametrize("z", [2 + 1j, 0.5 - 0.3j, 9 + 2j, 3 + 4j])
def test_complex_arguments_against_mpmath(mp, z):
    expected = complex(mp.barnesg(z))
    got = cmath.exp(log_g(z).value)
    assert abs(got - expected) <= 1e-9 * abs(expected)


@pytest.mark.parametrize("route", [GRoute.SERIES, GRoute.WEIERSTRASS, GRoute.INTEGRAL])
@pytest.mark.parametrize("x", [0.7, 2.5, 5.3])
def test_routes_agree(mp, route, x):
    expected = float(mp.log(mp.barnesg(x)))
    assert abs(log_g(x, route).value - expected) < 1e-9


def test_euler_limit_is_a_slow_oracle(mp):
    result = log_g(2.5, GRoute.EULER_LIMIT)
    expected = float(mp.log(mp.barnesg(2.5)))
    assert abs(result.value - expected) < 1e-2
    assert result.route is RouteTag.EULER_LIMIT
    assert result.abs_error > 0


def test_asymptotic_route_needs_large_argument():
    with pytest.raises(RouteDomainError):
        log_g(3.0, GRoute.ASYMPTOTIC)
    assert log_g(12.0, GRoute.ASYMPTOTIC).route is RouteTag.ASYMPTOTIC


def test_phi(mp):
    assert phi(1).value == PHI_ONE
    expected = float(mp.diff(lambda t: mp.log(mp.barnesg(t)), 2.5))
    assert abs(phi(2.5).value - expected) < 1e-12


@pytest.mark.parametrize("x", [0.4, 2.5, 1.3 + 0.7j, 9.5])
def test_functional_equation(x):
    assert functional_equation_check(x).passed


def test_duplication_and_multiplication():
    assert duplication_check(1.3).passed
    assert multiplication_check(3, 0.8).passed


def test_integral_closed_forms():
    # ∫_0^{1/2} ln sin πt dt = -(1/2) ln 2
    assert abs(integral_log_sin(0.5).value + 0.5 * math.log(2.0)) < 1e-12
    # ∫_0^{1/2} πt cot πt dt = (1/2) ln 2
    assert abs(integral_x_cot(0.5).value - 0.5 * math.log(2.0)) < 1e-12


def test_integer_values_keeps_printed_fraction_in_notes():
    report = integer_values_check(4)
    assert report.passed
    # G(5) = 12 while the inverted fraction gives 1/12
    assert report.printed_residual == pytest.approx(2 * math.log(12.0), rel=1e-9)
    assert "inverted printed fraction" in report.notes


def test_asymptotic_tail_sign():
    report = asymptotic_check(10.0)
    assert report.passed
    assert report.printed_residual > 1e-6


def test_malmsten_integral(mp):
    assert abs(malmsten_log_gamma(2.5).value - math.lgamma(2.5)) < 1e-10


@pytest.mark.parametrize("x", [1e-8, 1e-17, 1e-300])
def test_tiny_arguments_follow_g_of_x_near_x(x):
    # G(x) = x + O(x^2) near 0; x + 1 rounds to 1 below 1.1e-16
    result = log_g(x)
    assert math.isfinite(result.value)
    assert abs(result.value - math.log(x)) < 2 * x + 1e-13


def test_tiny_argument_functional_equation():
    assert functional_equation_check(1e-17).passed


def test_euler_limit_at_two():
    report = euler_limit_check(2.0, n=10_000)
    assert report.passed
    assert report.abs_residual < 1e-3


@pytest.mark.parametrize("x", [2.5, 0.7])
def test_euler_limit_converges_monotonically(mp, x):
    expected = float(mp.log(mp.barnesg(x)))
    errors = [abs(log_g_euler_limit(x, n).value - expected) for n in (1000, 2000, 4000, 8000, 10_000)]
    assert all(later < earlier for earlier, later in zip(errors, errors[1:])), errors
    assert errors[-1] < 1e-3


@pytest.mark.parametrize("n", [4, 8, 12])
def test_series_anchor_is_the_exact_integer_value(n):
    result = log_g(float(n), GRoute.SERIES)
    assert result.value == oracle.log_exact(oracle.g_integer(n))
    assert result.route is RouteTag.SERIES


@pytest.mark.parametrize("x", [7.6, 8.3, 11.7])
def test_series_route_near_asymptotic_threshold(mp, x):
    expected = float(mp.log(mp.barnesg(x)))
    result = log_g(x, GRoute.SERIES)
    assert result.route is RouteTag.SERIES
    assert abs(result.value - expected) <= 1e-11 * max(1.0, abs(expected))


@pytest.mark.parametrize("x", [0.3, 1.7, 2.5, 4.1, 6.2])
def test_weierstrass_error_bounds_the_true_error(mp, x):
    result = log_g_weierstrass(x - 1)
    expected = float(mp.log(mp.barnesg(x)))
    assert abs(result.value - expected) <= result.abs_error
    assert result.abs_error < 1e-10


def test_weierstrass_truncation_levels_agree_within_bounds():
    coarse = log_g_weierstrass(2.5, n_terms=50)
    fine = log_g_weierstrass(2.5)
    assert abs(coarse.value - fine.value) <= coarse.abs_error + fine.abs_error


FE_GRID = [float(x) for x in np.linspace(0.01, 12.0, 200)] + [1e-6, 1e-10, 1e-17, 1e-300]


@pytest.mark.parametrize("x", FE_GRID)
def test_functional_equation_on_real_grid(x):
    report = functional_equation_check(x)
    assert report.passed, (x, report.abs_residual, report.rel_residual)


CROSS_GRID = [1e-6, 1e-3] + [float(x) for x in np.linspace(0.05, 10.0, 28)]


@pytest.mark.slow
@pytest.mark.parametrize("x", CROSS_GRID)
def test_routes_agree_pairwise(x):
    routes = [GRoute.AUTO, GRoute.WEIERSTRASS, GRoute.INTEGRAL]
    # the series about round(x) needs |x - a| < a
    if x >= 0.5:
        routes.append(GRoute.SERIES)
    values = {route: log_g(x, route).value for route in routes}
    for first, second in itertools.combinations(routes, 2):
        abs_res, rel_res = residuals(values[first], values[second])
        assert min(abs_res, rel_res) < 1e-8, (x, first, second, abs_res)
