"""
Double sine S_2(x; ω1, ω2).

The G-ratio route is authoritative:

    ln S_2(x) = ln G(y; α) - ln G(1+α-y; α) + ((1+α-2y)/2) ln 2π,
    α = ω2/ω1, y = x/ω1

The sinh integral is the cross-check for real positive periods on
0 < x < ω1 + ω2.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Optional

from . import kernels
from .errors import DomainError, PoleError, ZeroError
from .quadrature import integrate_semi_infinite
from .report import IdentityId, IdentityReport, make_report, residuals
from .special_base import LN_2PI, Number, RouteTag, ValueWithError, _log, _tidy, as_number, is_real, log_sin_pi
from .two_period import log_g2

logger = logging.getLogger(__name__)

PREFACTORS = ("corrected", "as_printed")


@dataclass(frozen=True)
class PeriodPair:
    """Quasi-periods (ω1, ω2) with positive real parts."""
    omega1: Number
    omega2: Number

    def __post_init__(self):
        w1, w2 = complex(self.omega1), complex(self.omega2)
        if w1.real <= 0 or w2.real <= 0:
            raise DomainError(f"periods need positive real parts, got ({self.omega1}, {self.omega2})")
        if (w2 / w1).real <= 0:
            raise DomainError(f"ω2/ω1 needs a positive real part, got {w2 / w1}")

    @property
    def ratio(self) -> Number:
        return _tidy(as_number(self.omega2) / as_number(self.omega1))

    @property
    def total(self) -> Number:
        return as_number(self.omega1) + as_number(self.omega2)

    def is_real(self) -> bool:
        return is_real(as_number(self.omega1)) and is_real(as_number(self.omega2))


def _pair(omega1, omega2) -> PeriodPair:
    return PeriodPair(as_number(omega1), as_number(omega2))


def log_s2_gratio(x, omega1=1.0, omega2=1.0, prefactor: str = "corrected") -> ValueWithError:
    """
    ln S_2 through two values of ln G(·; ω2/ω1).

    prefactor="as_printed" multiplies in ω2^{x(ω1+ω2)/(ω1 ω2)} and uses the
    argument 1 - x + α in the denominator; kept only as evidence.

    Raises
    ------
    ZeroError at zeros (numerator G vanishes), PoleError at poles (denominator G vanishes)
    """
    if prefactor not in PREFACTORS:
        raise DomainError(f"prefactor must be one of {PREFACTORS}, got {prefactor!r}")
    periods = _pair(omega1, omega2)
    x = as_number(x)
    alpha = periods.ratio
    y = _tidy(x / as_number(periods.omega1))
    top = log_g2(y, alpha)
    other = 1 - x + alpha if prefactor == "as_printed" else 1 + alpha - y
    try:
        bottom = log_g2(other, alpha)
    except ZeroError as e:
        raise PoleError(f"S_2 has a pole at x = {x} (periods {periods.omega1}, {periods.omega2})") from e
    value = top.value - bottom.value + 0.5 * (1 + alpha - 2 * y) * LN_2PI
    if prefactor == "as_printed":
        w1, w2 = as_number(periods.omega1), as_number(periods.omega2)
        value += x * (w1 + w2) / (w1 * w2) * _log(w2)
    return ValueWithError(_tidy(value), top.abs_error + bottom.abs_error, RouteTag.G_RATIO)


def log_s2_integral(x: float, omega1: float = 1.0, omega2: float = 1.0) -> ValueWithError:
    """
    ∫_0^∞ [sinh((x-c)t) / (2 sinh(ω1 t/2) sinh(ω2 t/2)) - (2x-ω1-ω2)/(ω1 ω2 t)] dt/t,
    c = (ω1+ω2)/2, real positive periods, 0 < x < ω1 + ω2.
    """
    periods = _pair(omega1, omega2)
    if not periods.is_real() or not is_real(as_number(x)):
        raise DomainError("the sinh integral needs real x and real periods")
    x, w1, w2 = float(complex(x).real), float(complex(omega1).real), float(complex(omega2).real)
    if not 0 < x < w1 + w2:
        raise DomainError(f"the sinh integral needs 0 < x < ω1 + ω2 = {w1 + w2}, got x = {x}")
    if x == 0.5 * (w1 + w2):
        return ValueWithError(0.0, 0.0, RouteTag.SINH_INTEGRAL)
    result = integrate_semi_infinite(kernels.double_sine_integrand(x, w1, w2))
    return result.as_value(RouteTag.SINH_INTEGRAL)


def log_s2(x, omega1=1.0, omega2=1.0) -> ValueWithError:
    return log_s2_gratio(x, omega1, omega2)


def s2_shift_ratio(x, omega1=1.0, omega2=1.0) -> ValueWithError:
    """ln S_2(x+ω1) - ln S_2(x)."""
    x = as_number(x)
    upper = log_s2_gratio(x + as_number(omega1), omega1, omega2)
    lower = log_s2_gratio(x, omega1, omega2)
    return ValueWithError(_tidy(upper.value - lower.value), upper.abs_error + lower.abs_error, RouteTag.G_RATIO)


# ============================================================================
# Residual checks
# ============================================================================

def s2_crossroute_check(x: float, omega1: float, omega2: float, tolerance: float = 1e-6) -> IdentityReport:
    lhs = log_s2_gratio(x, omega1, omega2).value
    rhs = log_s2_integral(x, omega1, omega2).value
    params = {"x": x, "omega1": omega1, "omega2": omega2}
    notes = "integrand sinh((x-c)t) / (2 sinh(ω1 t/2) sinh(ω2 t/2)); G-ratio without the ω2 power"
    # printed numerator sinh(x - c) has no t: the printed integrand grows like 1/t^3 at 0
    return make_report(
        IdentityId.S2_CROSSROUTE, params, lhs, rhs, tolerance, notes=notes, printed_residual=math.inf
    )


def s2_symmetry_check(x, omega1, omega2, tolerance: float = 1e-10) -> IdentityReport:
    """S_2(x; ω1, ω2) = S_2(x; ω2, ω1); the sinh integral for real periods, the G-ratio otherwise."""
    periods = _pair(omega1, omega2)
    x = as_number(x)
    if periods.is_real() and is_real(x) and 0 < complex(x).real < complex(periods.total).real:
        route = log_s2_integral
        source = "sinh integral"
    else:
        route = log_s2_gratio
        source = "G-ratio"
    lhs = route(x, omega1, omega2).value
    rhs = route(x, omega2, omega1).value
    notes = f"swap of the periods through the {source}"
    return make_report(IdentityId.S2_SYMMETRY, {"x": x, "omega1": omega1, "omega2": omega2}, lhs, rhs, tolerance, notes=notes)


def s2_inversion_check(x, omega1, omega2, tolerance: float = 1e-6) -> IdentityReport:
    """ln S_2(x) + ln S_2(ω1 + ω2 - x) = 0."""
    periods = _pair(omega1, omega2)
    x = as_number(x)
    lhs = log_s2_gratio(x, omega1, omega2).value + log_s2_gratio(periods.total - x, omega1, omega2).value
    notes = "observed through the G-ratio"
    return make_report(
        IdentityId.S2_INVERSION, {"x": x, "omega1": omega1, "omega2": omega2}, lhs, 0.0, tolerance, notes=notes
    )


def s2_shift_check(x, omega1, omega2, tolerance: float = 1e-5) -> IdentityReport:
    """ln S_2(x+ω1) - ln S_2(x) against -ln(2 sin(πx/ω2))."""
    x = as_number(x)
    lhs = s2_shift_ratio(x, omega1, omega2).value
    rhs = -(math.log(2.0) + log_sin_pi(_tidy(x / as_number(omega2))))
    notes = "S_2(x+ω1)/S_2(x) = 1/(2 sin(πx/ω2)), observed through the G-ratio"
    return make_report(IdentityId.S2_SHIFT, {"x": x, "omega1": omega1, "omega2": omega2}, lhs, _tidy(rhs), tolerance, notes=notes)


def s2_homogeneity_check(x, omega1, omega2, lam: float, tolerance: float = 1e-7) -> IdentityReport:
    """S_2(λx; λω1, λω2) = S_2(x; ω1, ω2)."""
    x = as_number(x)
    omega1, omega2 = as_number(omega1), as_number(omega2)
    lhs = log_s2_gratio(lam * x, lam * omega1, lam * omega2).value
    rhs = log_s2_gratio(x, omega1, omega2).value
    params = {"x": x, "omega1": omega1, "omega2": omega2, "lambda": lam}
    return make_report(IdentityId.S2_HOMOGENEITY, params, lhs, rhs, tolerance, notes="depends on the ratios only")


def s2_prefactor_check(x: float, omega1: float, omega2: float, tolerance: float = 1e-6) -> IdentityReport:
    """
    Inversion through the corrected G-ratio; the printed form with its ω2
    power is evaluated against the sinh integral and recorded.
    """
    periods = _pair(omega1, omega2)
    total = periods.total
    corrected = log_s2_gratio(x, omega1, omega2).value + log_s2_gratio(total - x, omega1, omega2).value
    gap: Optional[float]
    try:
        printed = log_s2_gratio(x, omega1, omega2, prefactor="as_printed").value
        gap = residuals(printed, log_s2_integral(x, omega1, omega2).value)[0]
    except DomainError as e:
        logger.debug("printed prefactor not evaluable at x=%r: %s", x, e)
        gap = math.inf
    notes = f"prefactor ((1+α-2y)/2) ln 2π without ω2^(x(ω1+ω2)/(ω1ω2)); the printed form is off by {gap:.3e}"
    return make_report(
        IdentityId.S2_PREFACTOR,
        {"x": x, "omega1": omega1, "omega2": omega2},
        corrected,
        0.0,
        tolerance,
        notes=notes,
        printed_residual=gap,
    )
