#!/usr/bin/env python3
"""Tests for G_n and K_n: exact differences, integer anchors, recursions and the conversion."""

import math
from fractions import Fraction

import pytest

from gammamorphic import oracle
from gammamorphic.errors import DomainError, PoleError, ZeroError
from gammamorphic.kinkelin import log_k
from gammamorphic.multi_gamma import (
    forward_difference,
    gn_fe_check,
    kn_conversion,
    kn_conversion_check,
    kn_fe_check,
    log_gn,
    log_kn,
    monomial,
    pn_telescope_check,
    poly_difference,
    poly_eval,
)


def test_exact_differences():
    assert poly_difference(2, 2) == (Fraction(2),)
    assert poly_difference(2, 1) == (Fraction(1), Fraction(2))
    assert poly_difference(3, 4) == (Fraction(0),)
    assert forward_difference(monomial(0)) == (Fraction(0),)
    assert poly_eval(poly_difference(3, 1), 2) == 19
    assert poly_eval(poly_difference(3, 1), 2.0) == 19.0


def test_low_orders_delegate():
    assert abs(log_gn(0, 2.0).value - math.log(2.0)) < 1e-15
    assert abs(log_gn(1, 3).value - math.log(2.0)) < 1e-14
    assert abs(log_gn(2, 4).value - math.log(2.0)) < 1e-14
    with pytest.raises(DomainError):
        log_gn(-1, 2.0)


@pytest.mark.parametrize("order", [3, 4])
@pytest.mark.parametrize("n", [1, 2, 3, 5, 7])
def test_integer_anchors(order, n):
    expected = oracle.log_exact(oracle.gn_integer(order, n))
    assert abs(log_gn(order, float(n)).value - expected) < 1e-8 * max(1.0, abs(expected))


def test_zeros_and_poles_alternate_with_parity():
    with pytest.raises(PoleError):
        log_gn(3, 0)
    with pytest.raises(ZeroError):
        log_gn(4, -1)


@pytest.mark.parametrize("n, x", [(3, 2.5), (3, 0.3), (4, 1.5), (3, 9.2)])
def test_recursion(n, x):
    assert gn_fe_check(n, x).passed


def test_kernel_telescopes():
    assert pn_telescope_check(2, 1.5, 0.7).passed
    assert pn_telescope_check(3, 0.4 + 0.2j, 2.0).passed


def test_k1_is_kinkelin():
    assert abs(log_kn(1, 2.5).value - log_k(2.5).value) < 1e-11


def test_kn_against_recursion_oracle():
    # K_2(3) = 1^1 · 2^4
    assert abs(log_kn(2, 3.0).value - math.log(16.0)) < 1e-8
    assert log_kn(2, 1).value == 0.0
    report = kn_conversion_check(2, 4)
    assert report.passed
    assert report.printed_residual > 1e-6


def test_kn_recursion():
    assert kn_fe_check(2, 1.5).passed


def test_conversion_rejects_unknown_variant():
    with pytest.raises(DomainError):
        kn_conversion(2, 1.5, variant="other")
    with pytest.raises(DomainError):
        kn_conversion(2, -0.5)
