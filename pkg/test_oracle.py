#!/usr/bin/env python3
"""Tests for the exact recursion oracles and the brute-force lattice sums."""

import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gammamorphic import oracle
from gammamorphic.errors import DomainError, OracleOverflow


def test_g_anchors():
    assert oracle.g_integer(1) == 1
    assert oracle.g_integer(2) == 1
    assert oracle.g_integer(4) == 2
    assert oracle.g_integer(6) == 288


@given(st.integers(min_value=1, max_value=40))
def test_g_recursion(n):
    assert oracle.g_integer(n + 1) == math.factorial(n - 1) * oracle.g_integer(n)


def test_k_family_anchors():
    assert oracle.k_integer(3) == 4
    assert oracle.kn_integer(2, 3) == 16
    assert oracle.kn_integer(1, 5) == oracle.k_integer(5)
    assert oracle.gn_integer(3, 5) == 2
    assert oracle.gn_integer(2, 6) == oracle.g_integer(6)
    assert oracle.gn_integer(1, 5) == 24
    assert oracle.gn_integer(0, 5) == 5


def test_superfactorial_ratio_is_g():
    for n in range(1, 12):
        assert oracle.superfactorial_ratio(n) == oracle.g_integer(n + 1)


def test_cap_and_domain():
    with pytest.raises(OracleOverflow):
        oracle.g_integer(51)
    with pytest.raises(DomainError):
        oracle.k_integer(0)
    with pytest.raises(DomainError):
        oracle.gn_integer(-1, 3)


def test_log_exact_handles_huge_values():
    assert oracle.log_exact(Fraction(10 ** 400)) == pytest.approx(400 * math.log(10.0), rel=1e-14)
    assert oracle.log_exact(Fraction(1, 10 ** 400)) == pytest.approx(-400 * math.log(10.0), rel=1e-14)
    with pytest.raises(DomainError):
        oracle.log_exact(Fraction(-1))


def _doubling_ratio(power, n):
    s1, s2, s4 = (oracle.lattice_sum_brute(0.5, 1.0, power, k) for k in (n, 2 * n, 4 * n))
    return abs(s2 - s1) / abs(s4 - s2)


def test_lattice_tails_decay_at_the_expected_order():
    assert _doubling_ratio(3, 100) == pytest.approx(2.0, rel=0.1)
    assert _doubling_ratio(4, 100) == pytest.approx(4.0, rel=0.15)


def test_lattice_sum_validation():
    with pytest.raises(DomainError):
        oracle.lattice_sum_brute(0.5, 1.0, 1, 10)
    with pytest.raises(DomainError):
        oracle.lattice_sum_brute(0.5, -1.0, 3, 10)
    with pytest.raises(DomainError):
        oracle.lattice_sum_brute(-1.0, 1.0, 3, 10)
