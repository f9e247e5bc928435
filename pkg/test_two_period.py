#!/usr/bin/env python3
"""Tests for G(x; α): integral, relations, Euler limits, lattice product and the q-product."""

import cmath
import math

import pytest

from gammamorphic.errors import DomainError, ZeroError
from gammamorphic.special_base import RouteTag
from gammamorphic.two_period import (
    QInterpretation,
    alpha1_degeneration_check,
    alpha_alpha_check,
    euler_limit_g2,
    fe1_check,
    functional_eq2_check,
    g_alpha_alpha,
    inversion_check,
    is_lattice_zero,
    lattice_check,
    lattice_product,
    log_g2,
    q_of,
    q_theta_product,
    reflection_diagnostic,
    representation_check,
)


def test_normalisation():
    result = log_g2(1, 1.7)
    assert result.value == 0.0
    assert result.route is RouteTag.EXACT


@pytest.mark.parametrize("x", [0.6, 2.3, 5.5])
def test_alpha_one_is_barnes_g(mp, x):
    assert abs(log_g2(x, 1.0).value - float(mp.log(mp.barnesg(x)))) < 1e-8
    assert alpha1_degeneration_check(x).passed


def test_lattice_zeros():
    assert is_lattice_zero(0.0, 0.5)
    assert is_lattice_zero(-1.5, 0.5)
    assert not is_lattice_zero(-0.3, 0.5)
    with pytest.raises(ZeroError):
        log_g2(-2.0, 0.7)


def test_alpha_must_have_positive_real_part():
    with pytest.raises(DomainError):
        log_g2(1.5, -0.5)


@pytest.mark.parametrize("x, alpha", [(1.5, 0.7), (2.4, 1.75), (0.5, 3.0)])
def test_functional_equations(x, alpha):
    assert fe1_check(x, alpha).passed
    assert functional_eq2_check(x, alpha).passed


def test_alpha_alpha_closed_form():
    assert g_alpha_alpha(1.0).value == pytest.approx(0.0, abs=1e-15)
    assert alpha_alpha_check(2.0).passed


def test_inversion():
    assert inversion_check(1.3, 2.0).passed


def test_representation_against_rational_reduction():
    report = representation_check(1.5, 1, 2)
    assert report.passed
    assert report.printed_residual > 1e-4


def test_euler_limit_approaches_integral():
    x, alpha = 1.5, 0.7
    limit = euler_limit_g2(x, alpha, 2000, variant=1)
    assert abs(limit.value - log_g2(x, alpha).value) < 1e-3
    assert limit.abs_error < 1e-2


def test_lattice_product_with_computed_constants():
    report = lattice_check(1.5, 1.1)
    assert report.passed
    assert report.printed_residual > 1e-4
    value = lattice_product(1.5, 1.1)
    assert value.route is RouteTag.LATTICE_PRODUCT


def test_q_product_edge_cases():
    with pytest.raises(DomainError):
        q_theta_product(0.3, 1.0)
    assert q_theta_product(0.3, 0.0).value == 0.0
    assert abs(q_of(1 + 0.5j, QInterpretation.AS_PRINTED) - 1j * math.pi * (1 + 0.5j)) < 1e-15


def test_q_product_matches_direct_product():
    q, x = 0.3 + 0.2j, 0.25 + 0.1j
    z = cmath.exp(2j * math.pi * x)
    direct = 1.0
    for k in range(1, 61):
        direct *= 1 - q ** (2 * k) * z
    got = cmath.exp(q_theta_product(x, q, k_max=60).value)
    assert abs(got - direct) < 1e-13


@pytest.mark.slow
def test_reflection_diagnostic_runs_each_reading():
    diag = reflection_diagnostic(1 + 0.5j, QInterpretation.EXPONENTIAL_FULL)
    assert diag.samples == 16
    assert math.isfinite(diag.residual_variance)
    assert abs(diag.q) < 1
    # |πiα| > 1 here, so the literal reading diverges
    with pytest.raises(DomainError):
        reflection_diagnostic(1 + 0.5j, QInterpretation.AS_PRINTED)
