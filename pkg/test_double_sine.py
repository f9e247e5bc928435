#!/usr/bin/env python3
"""Tests for the double sine: G-ratio route, sinh integral and the derived relations."""

import pytest

from gammamorphic.double_sine import (
    PeriodPair,
    log_s2,
    log_s2_integral,
    s2_crossroute_check,
    s2_homogeneity_check,
    s2_inversion_check,
    s2_prefactor_check,
    s2_shift_check,
    s2_symmetry_check,
)
from gammamorphic.errors import DomainError, PoleError, ZeroError
from gammamorphic.special_base import RouteTag


def test_value_at_the_centre_vanishes():
    assert log_s2(1.0, 1.0, 1.0).value == pytest.approx(0.0, abs=1e-15)
    result = log_s2_integral(1.5, 1.0, 2.0)
    assert result.value == 0.0
    assert result.route is RouteTag.SINH_INTEGRAL


def test_zero_and_pole():
    with pytest.raises(ZeroError):
        log_s2(0.0, 1.0, 1.0)
    with pytest.raises(PoleError):
        log_s2(2.0, 1.0, 1.0)


def test_period_validation():
    with pytest.raises(DomainError):
        PeriodPair(-1.0, 1.0)
    with pytest.raises(DomainError):
        log_s2_integral(2.5, 1.0, 1.0)
    with pytest.raises(DomainError):
        log_s2_integral(0.5, 1.0, 1.0 + 0.5j)


@pytest.mark.parametrize("x, omega1, omega2", [(0.6, 1.0, 1.0), (0.9, 1.0, 2.0), (1.2, 0.5, 1.5)])
def test_routes_agree(x, omega1, omega2):
    assert s2_crossroute_check(x, omega1, omega2).passed


def test_shift_by_a_period():
    # S_2(x+1)/S_2(x) = 1/(2 sin πx) for unit periods
    assert s2_shift_check(0.3, 1.0, 1.0).passed
    assert s2_shift_check(0.4, 1.0, 2.0).passed


def test_symmetry_inversion_homogeneity():
    assert s2_symmetry_check(0.7, 1.0, 2.0).passed
    assert s2_inversion_check(0.7, 1.0, 2.0).passed
    assert s2_homogeneity_check(0.4, 1.0, 1.5, 2.0).passed


def test_printed_prefactor_is_recorded():
    report = s2_prefactor_check(0.9, 1.0, 2.0)
    assert report.passed
    assert report.printed_residual > 1e-3
