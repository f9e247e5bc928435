"""
Kinkelin's function K(x+1) = x^x K(x), K(1) = 1, the constant ω̃ of its
multiplication formula, and the Glaisher–Kinkelin constant A = ω̃^{1/2} e^{1/12}.
"""

from __future__ import annotations

import cmath
import logging
import math
from enum import Enum
from functools import lru_cache

import numpy as np

from . import config, oracle
from .barnes_g import integral_log_gamma, log_g, zeta_prime_minus_one
from .errors import DomainError
from .quadrature import integrate_finite, pointwise
from .report import IdentityId, IdentityReport, make_report
from .special_base import (
    EPS,
    LN_2PI,
    RouteTag,
    ValueWithError,
    _tidy,
    as_number,
    euler_gamma,
    hurwitz_zeta,
    log_gamma,
)

logger = logging.getLogger(__name__)

_ZETA_SERIES_TERMS = 40


class OmegaRoute(str, Enum):
    PRELIMIT = "prelimit"
    INTEGRAL_OF_LN_K = "integral-of-ln-k"
    ZETA_SERIES = "zeta-series"


def log_k(x) -> ValueWithError:
    """
    ln K(x) = ∫_0^x ln Γ(t) dt + x(x-1)/2 - (x/2) ln 2π, Re x > 0.

    Equivalent to G(x) K(x) = Γ(x)^{x-1}.
    """
    x = as_number(x)
    if complex(x).real <= 0:
        raise DomainError(f"log_k needs Re x > 0, got x = {x}")
    if x == 1:
        return ValueWithError(0.0, 0.0, RouteTag.EXACT)
    base = integral_log_gamma(x)
    value = base.value + 0.5 * x * (x - 1) - 0.5 * x * LN_2PI
    return ValueWithError(_tidy(value), base.abs_error + 4 * EPS * (abs(value) + 1), RouteTag.CLOSED_FORM)


# ============================================================================
# ω̃ and A
# ============================================================================

def _omega_zeta_series() -> ValueWithError:
    # (1/2) ln ω̃ = -1/24 + γ/3 + sum_λ (ζ(2λ+1) - 1) / ((2λ+1)(2λ+3))
    terms = []
    for lam in range(1, _ZETA_SERIES_TERMS + 1):
        s = 2 * lam + 1
        terms.append(hurwitz_zeta(s, 2.0).value / (s * (s + 2)))
    half = -1.0 / 24 + euler_gamma() / 3 + math.fsum(terms)
    return ValueWithError(2 * half, 4 * EPS + 2 * terms[-1], RouteTag.ZETA_SERIES)


def _omega_prelimit(n: int) -> ValueWithError:
    # ln ω̃ = (2n/(n²-1)) ((ln n)/(12n) + sum_{j<n} ln K(j/n)), ln K(0) = 0
    if n < 2:
        raise DomainError(f"prelimit route needs n >= 2, got {n}")
    parts = [log_k(j / n) for j in range(1, n)]
    inner = math.log(n) / (12 * n) + math.fsum(p.value for p in parts)
    scale = 2 * n / (n * n - 1)
    err = scale * sum(p.abs_error for p in parts)
    return ValueWithError(scale * inner, err + 4 * EPS, RouteTag.PRELIMIT)


def _omega_integral() -> ValueWithError:
    result = integrate_finite(pointwise(lambda t: log_k(t).value), 0.0, 1.0)
    return ValueWithError(2 * result.value, 2 * result.abs_error, RouteTag.INTEGRAL_OF_LN_K)


def omega_tilde(route: OmegaRoute = OmegaRoute.ZETA_SERIES, n: int = 2) -> ValueWithError:
    """
    ln ω̃ by one of three routes.

    Args:
        route: ZETA_SERIES (production), PRELIMIT or INTEGRAL_OF_LN_K
        n: order of the prelimit formula (n >= 2)

    Returns:
        ValueWithError holding ln ω̃
    """
    route = OmegaRoute(route)
    if route is OmegaRoute.ZETA_SERIES:
        return _omega_zeta_cached()
    if route is OmegaRoute.PRELIMIT:
        return _omega_prelimit(n)
    return _omega_integral()


@lru_cache(maxsize=None)
def _omega_zeta_cached() -> ValueWithError:
    value = _omega_zeta_series()
    logger.debug("ln ω̃ cached: %r", value.value)
    return value


def log_glaisher() -> ValueWithError:
    """ln A = (1/2) ln ω̃ + 1/12."""
    om = omega_tilde()
    return ValueWithError(0.5 * om.value + 1.0 / 12, 0.5 * om.abs_error, RouteTag.ZETA_SERIES)


def glaisher_constant() -> ValueWithError:
    """A = exp((1/2) ln ω̃ + 1/12) ≈ 1.2824271291006226."""
    ln_a = log_glaisher()
    value = math.exp(ln_a.value)
    return ValueWithError(value, value * ln_a.abs_error + EPS * value, RouteTag.ZETA_SERIES)


def glaisher_from_g_half() -> ValueWithError:
    """ln A = 1/12 - ζ'(-1), with ζ'(-1) taken from ln G(1/2)."""
    zp = zeta_prime_minus_one()
    return ValueWithError(1.0 / 12 - zp.value, zp.abs_error, RouteTag.SERIES)


def kinkelin_asymptotic(n: int) -> float:
    """(1/2) ln ω̃ - n²/4 + 1/12 + ((n²+n)/2 + 1/12) ln n, the large-n form of ln K(n+1)."""
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    return 0.5 * omega_tilde().value - n * n / 4 + 1.0 / 12 + (0.5 * (n * n + n) + 1.0 / 12) * math.log(n)


def log_k_integer(n: int) -> float:
    """ln K(n+1) = sum_{j<=n} j ln j; exact big integers while under the oracle cap."""
    if n + 1 <= config.ORACLE_MAX_ARGUMENT:
        return oracle.log_exact(oracle.k_integer(n + 1))
    j = np.arange(1, n + 1, dtype=float)
    return math.fsum(j * np.log(j))


# ============================================================================
# Residual checks
# ============================================================================

def kinkelin_fe_check(x, tolerance: float = 1e-10) -> IdentityReport:
    """ln K(x+1) - ln K(x) = x ln x."""
    x = as_number(x)
    lhs = log_k(x + 1).value - log_k(x).value
    rhs = x * math.log(x) if isinstance(x, float) else x * cmath.log(x)
    return make_report(IdentityId.KINKELIN_FE, {"x": x}, lhs, _tidy(rhs), tolerance)


def kinkelin_definition_check(x: float, tolerance: float = 1e-7) -> IdentityReport:
    """
    The integral definition of ln K against the recursion anchor at integers
    or G K = Γ^{x-1} elsewhere, with ∫ ln Γ done by quadrature.
    """
    integral = integrate_finite(pointwise(lambda t: log_gamma(t).value), 0.0, x).value
    lhs = integral + 0.5 * x * (x - 1) - 0.5 * x * LN_2PI
    if float(x).is_integer() and 1 <= x <= config.ORACLE_MAX_ARGUMENT:
        rhs = oracle.log_exact(oracle.k_integer(int(x)))
        source = "recursion oracle"
    else:
        rhs = (x - 1) * log_gamma(x).value - log_g(x).value
        source = "G K = Γ^(x-1)"
    gap = abs(lhs + x * LN_2PI - rhs)
    notes = f"-(x/2) ln 2π; checked against {source}; the printed +(x/2) ln 2π is off by {gap:.3e}"
    return make_report(IdentityId.KINKELIN_DEF, {"x": x}, lhs, rhs, tolerance, notes=notes, printed_residual=gap)


def gk_relation_check(x, tolerance: float = 1e-10) -> IdentityReport:
    """ln G(x) + ln K(x) = (x-1) ln Γ(x)."""
    x = as_number(x)
    lhs = log_g(x).value + log_k(x).value
    rhs = (x - 1) * log_gamma(x).value
    return make_report(IdentityId.GK_RELATION, {"x": x}, lhs, rhs, tolerance)


def kinkelin_multiplication_rhs(n: int, x: float) -> float:
    """ln of n^{nx(nx-1)/2 + 1/12} ω̃^{-(n²-1)/2} prod_{j<n} K(x + j/n)^n."""
    if n < 2:
        raise DomainError(f"multiplication needs n >= 2, got {n}")
    if x <= 0:
        raise DomainError(f"multiplication needs x > 0, got x = {x}")
    total = math.fsum(log_k(x + j / n).value for j in range(n))
    return (0.5 * n * x * (n * x - 1) + 1.0 / 12) * math.log(n) - 0.5 * (n * n - 1) * omega_tilde().value + n * total


def kinkelin_multiplication_check(n: int, x: float, tolerance: float = 1e-9) -> IdentityReport:
    if x <= 0:
        raise DomainError(f"multiplication needs x > 0, got x = {x}")
    lhs = log_k(n * x).value
    return make_report(IdentityId.KINKELIN_MULT, {"n": n, "x": x}, lhs, kinkelin_multiplication_rhs(n, x), tolerance)


def omega_routes_check(n: int, tolerance: float = 1e-8) -> IdentityReport:
    """
    Three-way agreement of the ln ω̃ routes. The report compares the prelimit
    of order n with the zeta series and records the integral route in notes;
    the worst pairwise difference decides.
    """
    series = omega_tilde(OmegaRoute.ZETA_SERIES).value
    pre = omega_tilde(OmegaRoute.PRELIMIT, n).value
    integral = omega_tilde(OmegaRoute.INTEGRAL_OF_LN_K).value
    pairs = {"prelimit": pre, "integral": integral}
    worst = max(pairs, key=lambda k: abs(pairs[k] - series))
    printed = 0.5 * pre
    gap = abs(printed - series)
    notes = (
        f"zeta series {series!r}, prelimit(n={n}) {pre!r}, integral {integral!r}; "
        f"prelimit factor 2n/(n^2-1), the printed n/(n^2-1) is off by {gap:.3e}"
    )
    return make_report(
        IdentityId.OMEGA_ROUTES,
        {"n": n, "worst": worst},
        pairs[worst],
        series,
        tolerance,
        notes=notes,
        printed_residual=gap,
    )


def raabe_analog_rhs(x: float) -> float:
    """(1/2) ln ω̃ + (1/4) x² (2 ln x - 1)."""
    if x < 0:
        raise DomainError(f"Raabe analog needs x >= 0, got x = {x}")
    poly = 0.0 if x == 0 else 0.25 * x * x * (2 * math.log(x) - 1)
    return 0.5 * omega_tilde().value + poly


def raabe_analog_check(x: float, tolerance: float = 1e-8) -> IdentityReport:
    """
    ∫_x^{x+1} ln K(t) dt against the closed form. The integrand is read as
    ln K; the literal reading with K(t) is evaluated and reported.
    """
    if x < 0:
        raise DomainError(f"Raabe analog needs x >= 0, got x = {x}")
    lhs = integrate_finite(pointwise(lambda t: log_k(t).value), x, x + 1).value
    rhs = raabe_analog_rhs(x)
    literal = integrate_finite(pointwise(lambda t: math.exp(log_k(t).value)), x, x + 1).value
    gap = abs(literal - rhs)
    notes = f"integrand ln K(t); with K(t) the integral is {literal!r}, off by {gap:.3e}"
    return make_report(IdentityId.RAABE_ANALOG, {"x": x}, lhs, rhs, tolerance, notes=notes, printed_residual=gap)


def k_asymptotic_check(n: int, tolerance: float = 1e-5) -> IdentityReport:
    """ln K(n+1) against its large-n form; the error decays like 1/(720 n²)."""
    lhs = log_k_integer(n)
    rhs = kinkelin_asymptotic(n)
    return make_report(IdentityId.K_ASYMPTOTIC, {"n": n}, lhs, rhs, tolerance, notes="exact side from sum j ln j")


def glaisher_check(tolerance: float = 1e-12) -> IdentityReport:
    """ln A from ω̃ against ln A from ln G(1/2)."""
    lhs = log_glaisher().value
    rhs = glaisher_from_g_half().value
    return make_report(IdentityId.GLAISHER_DEF, {}, lhs, rhs, tolerance)
