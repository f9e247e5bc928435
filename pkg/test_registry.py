#!/usr/bin/env python3
"""Tests for the function registry shared by the CLI and the service."""

import math

import pytest

from gammamorphic.errors import DomainError, RouteDomainError
from gammamorphic.registry import EvalParams, evaluate, function_names, parse_number
from gammamorphic.special_base import RouteTag


def test_parse_number():
    assert parse_number("2.5") == 2.5
    assert parse_number("1+2i") == 1 + 2j
    assert parse_number(" 1 - 2j ") == 1 - 2j
    with pytest.raises(DomainError):
        parse_number("two")


def test_names():
    assert function_names()[:2] == ["gamma", "barnes-g"]


def test_natural_and_log_space():
    natural = evaluate("barnes-g", 5.0)
    logged = evaluate("barnes-g", 5.0, log=True)
    assert abs(natural.value - 12.0) < 1e-11
    assert abs(logged.value - math.log(12.0)) < 1e-13


def test_explicit_route():
    result = evaluate("barnes-g", 2.5, EvalParams(route="weierstrass"), log=True)
    assert result.route is RouteTag.WEIERSTRASS
    with pytest.raises(RouteDomainError):
        evaluate("barnes-g", 2.5, EvalParams(route="nope"))
    with pytest.raises(RouteDomainError):
        evaluate("gamma", 2.5, EvalParams(route="series"))


def test_missing_parameters():
    with pytest.raises(DomainError):
        evaluate("g2", 1.5)
    with pytest.raises(DomainError):
        evaluate("barnes-g")
    with pytest.raises(DomainError):
        evaluate("nope", 1.0)


def test_constants_need_no_argument():
    assert abs(evaluate("glaisher").value - 1.2824271291006226) < 1e-14


def test_overflow_asks_for_the_logarithm():
    with pytest.raises(DomainError, match="logarithm"):
        evaluate("barnes-g", 200.0)
