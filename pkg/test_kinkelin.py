#!/usr/bin/env python3
"""Tests for Kinkelin's K, the constant ω̃ and the Glaisher–Kinkelin constant."""

import math

import pytest

from gammamorphic.errors import DomainError
from gammamorphic.kinkelin import (
    OmegaRoute,
    gk_relation_check,
    glaisher_check,
    glaisher_constant,
    glaisher_from_g_half,
    k_asymptotic_check,
    kinkelin_definition_check,
    kinkelin_fe_check,
    kinkelin_multiplication_check,
    log_glaisher,
    log_k,
    omega_tilde,
    raabe_analog_check,
)
from gammamorphic.special_base import LN_2PI


def test_k_at_small_integers():
    assert log_k(1).value == 0.0
    assert abs(log_k(2).value) < 1e-13
    assert abs(log_k(3).value - math.log(4.0)) < 1e-12
    assert abs(log_k(4).value - math.log(108.0)) < 1e-12


def test_log_k_needs_positive_real_part():
    with pytest.raises(DomainError):
        log_k(-0.5)


def test_glaisher_constant(mp, ln_glaisher):
    assert abs(glaisher_constant().value - 1.2824271291006226) < 1e-14
    assert abs(log_glaisher().value - ln_glaisher) < 1e-14
    assert abs(glaisher_from_g_half().value - ln_glaisher) < 1e-13
    assert glaisher_check().passed


def test_omega_routes_agree(ln_glaisher):
    series = omega_tilde(OmegaRoute.ZETA_SERIES).value
    assert abs(series - 2 * (ln_glaisher - 1.0 / 12)) < 1e-13
    for n in (2, 5):
        assert abs(omega_tilde(OmegaRoute.PRELIMIT, n).value - series) < 1e-9
    assert abs(omega_tilde(OmegaRoute.INTEGRAL_OF_LN_K).value - series) < 1e-8
    with pytest.raises(DomainError):
        omega_tilde(OmegaRoute.PRELIMIT, 1)


@pytest.mark.parametrize("x", [0.5, 2.5, 1.2 - 0.4j])
def test_difference_equation(x):
    assert kinkelin_fe_check(x).passed


@pytest.mark.parametrize("x", [0.8, 2.5, 6.5])
def test_g_times_k(x):
    assert gk_relation_check(x).passed


def test_multiplication_formula():
    assert kinkelin_multiplication_check(2, 0.8).passed
    assert kinkelin_multiplication_check(3, 1.3).passed


def test_definition_sign_of_last_term():
    report = kinkelin_definition_check(2.0)
    assert report.passed
    assert report.printed_residual == pytest.approx(2.0 * LN_2PI, rel=1e-6)


def test_raabe_analog_reads_ln_k():
    report = raabe_analog_check(1.5)
    assert report.passed
    assert report.printed_residual > 1e-3


def test_large_n_asymptotics():
    assert k_asymptotic_check(1000).passed


@pytest.mark.parametrize("x", [1e-17, 1e-300])
def test_log_k_near_zero(x):
    # ∫_0^x ln Γ vanishes like x ln(1/x); the two ln terms cancel near |ln x|
    assert abs(log_k(x).value) < 1e-11
