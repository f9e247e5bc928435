"""
Multiple gammas G_n(x+1) = G_{n-1}(x) G_n(x), G_n(1) = 1 (G_1 = Γ, G_2 = G),
and the higher Kinkelin functions K_n(x+1) = x^{x^n} K_n(x), K_n(1) = 1.

ln G_n(x) = ∫_0^∞ (e^{-u}/u) P_n(x) du for n >= 3. K_n is assembled from
the G_j by the finite-difference conversion

    ln K_n(x) = sum_{j=0}^{n} (-1)^j (Δ^j t^n)(x) ln G_{j+1}(x+j),

with Δ^j t^n expanded exactly over the rationals.
"""

from __future__ import annotations

import cmath
import logging
import math
from fractions import Fraction
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from . import config, kernels, oracle
from .barnes_g import log_g
from .errors import DomainError, PoleError, RouteDomainError, ZeroError
from .quadrature import integrate_semi_infinite
from .report import IdentityId, IdentityReport, make_report, residuals
from .special_base import (
    EPS,
    Number,
    RouteTag,
    ValueWithError,
    _log,
    _tidy,
    as_number,
    is_nonpositive_integer,
    log_gamma,
)

logger = logging.getLogger(__name__)

# real parts where the P_n integral is evaluated directly
_DIRECT_LOW = 0.5
_DIRECT_HIGH = 8.0

Polynomial = Tuple[Fraction, ...]

CONVERSION_VARIANTS = ("corrected", "printed", "unshifted")


# ============================================================================
# Exact polynomial differences
# ============================================================================

def monomial(n: int) -> Polynomial:
    """Coefficients of t^n, lowest degree first."""
    if n < 0:
        raise DomainError(f"degree must be >= 0, got {n}")
    return tuple([Fraction(0)] * n + [Fraction(1)])


def forward_difference(p: Polynomial) -> Polynomial:
    """Δp(t) = p(t+1) - p(t)."""
    out = [Fraction(0)] * max(len(p) - 1, 1)
    for k, c in enumerate(p):
        # (t+1)^k - t^k = sum_{i<k} C(k, i) t^i
        for i in range(k):
            out[i] += c * math.comb(k, i)
    return _trim(out)


def _trim(coeffs: List[Fraction]) -> Polynomial:
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


@lru_cache(maxsize=None)
def poly_difference(n: int, j: int) -> Polynomial:
    """Δ^j t^n, exact. poly_difference(2, 2) == (2,)."""
    if j < 0:
        raise DomainError(f"difference order must be >= 0, got {j}")
    if j == 0:
        return monomial(n)
    return forward_difference(poly_difference(n, j - 1))


def poly_eval(p: Polynomial, x):
    """Horner evaluation; exact for int/Fraction x, binary64 otherwise."""
    if isinstance(x, (int, Fraction)):
        acc = Fraction(0)
        for c in reversed(p):
            acc = acc * x + c
        return acc
    acc: Number = 0.0
    for c in reversed(p):
        acc = acc * x + float(c)
    return acc


# ============================================================================
# G_n
# ============================================================================

def _singular(n: int, x: Number):
    if is_nonpositive_integer(x):
        if n % 2 == 0:
            raise ZeroError(f"G_{n} has a zero at x = {x}")
        raise PoleError(f"G_{n} has a pole at x = {x}")


def _log_gn_integral(n: int, x: Number) -> ValueWithError:
    result = integrate_semi_infinite(kernels.pn_integrand(n, x))
    return result.as_value(RouteTag.INTEGRAL)


def log_gn(n: int, x) -> ValueWithError:
    """
    ln G_n(x).

    n = 0 gives ln x, n = 1 delegates to log_gamma, n = 2 to log_g. For
    n >= 3 the P_n integral is evaluated on 0.5 <= Re x < 8 and the recursion
    carries other arguments into that strip.

    Raises
    ------
    ZeroError / PoleError at non-positive integers (zeros for even n, poles for odd n)
    """
    if n < 0:
        raise DomainError(f"order must be >= 0, got {n}")
    x = as_number(x)
    if n == 0:
        if x == 0:
            raise ZeroError("G_0(x) = x vanishes at x = 0")
        return ValueWithError(_log(x), 4 * EPS, RouteTag.EXACT)
    if n == 1:
        return log_gamma(x)
    if n == 2:
        return log_g(x)
    _singular(n, x)
    re = complex(x).real
    if re < _DIRECT_LOW:
        # ln G_n(x) = ln G_n(x+1) - ln G_{n-1}(x)
        upper, lower = log_gn(n, x + 1), log_gn(n - 1, x)
        value = upper.value - lower.value
        return ValueWithError(_tidy(value), upper.abs_error + lower.abs_error, RouteTag.INTEGRAL)
    if re >= _DIRECT_HIGH:
        # ln G_n(x) = ln G_n(x-1) + ln G_{n-1}(x-1)
        below, lower = log_gn(n, x - 1), log_gn(n - 1, x - 1)
        value = below.value + lower.value
        return ValueWithError(_tidy(value), below.abs_error + lower.abs_error, RouteTag.INTEGRAL)
    logger.debug("log_gn(%d, %r) by P_n quadrature", n, x)
    return _log_gn_integral(n, x)


def p_kernel(n: int, x, u) -> np.ndarray:
    """P_n(x) as a function of u (array in, array out)."""
    if n < 1:
        raise DomainError(f"kernel order must be >= 1, got {n}")
    return kernels.pn_kernel(n, as_number(x))(np.atleast_1d(np.asarray(u, dtype=float)))


# ============================================================================
# K_n
# ============================================================================

def kn_conversion(n: int, x, variant: str = "corrected") -> ValueWithError:
    """
    ln K_n(x) from the multiple gammas.

    variant="corrected" uses ln G_{j+1}(x+j); "printed" uses ln G_j(x+j) and
    "unshifted" ln G_j(x). Only the corrected form satisfies the K_n recursion.
    """
    if n < 1:
        raise DomainError(f"K_n order must be >= 1, got {n}")
    if variant not in CONVERSION_VARIANTS:
        raise DomainError(f"variant must be one of {CONVERSION_VARIANTS}, got {variant!r}")
    x = as_number(x)
    if complex(x).real <= 0:
        raise DomainError(f"K_n conversion needs Re x > 0, got x = {x}")
    total: Number = 0.0
    err = 0.0
    for j in range(n + 1):
        coeff = poly_eval(poly_difference(n, j), x)
        if coeff == 0:
            continue
        if variant == "corrected":
            g = log_gn(j + 1, x + j)
        elif variant == "printed":
            g = log_gn(j, x + j)
        else:
            g = log_gn(j, x)
        total += (-1) ** j * coeff * g.value
        err += abs(coeff) * g.abs_error
    return ValueWithError(_tidy(total), err + 8 * EPS * abs(total), RouteTag.CONVERSION)


def log_kn(n: int, x) -> ValueWithError:
    """ln K_n(x), Re x > 0, through kn_conversion."""
    x = as_number(x)
    if x == 1:
        return ValueWithError(0.0, 0.0, RouteTag.EXACT)
    return kn_conversion(n, x)


# ============================================================================
# Residual checks
# ============================================================================

def gn_fe_check(n: int, x, tolerance: float = 1e-6) -> IdentityReport:
    """ln G_n(x+1) = ln G_{n-1}(x) + ln G_n(x)."""
    x = as_number(x)
    lhs = log_gn(n, x + 1).value
    rhs = log_gn(n - 1, x).value + log_gn(n, x).value
    return make_report(IdentityId.GN_FE, {"n": n, "x": x}, lhs, rhs, tolerance)


def pn_telescope_check(n: int, x, u: float, tolerance: float = 1e-12) -> IdentityReport:
    """P_{n+1}(x+1) - P_{n+1}(x) = P_n(x), pointwise in u."""
    x = as_number(x)
    lhs = complex(p_kernel(n + 1, x + 1, u)[0] - p_kernel(n + 1, x, u)[0])
    rhs = complex(p_kernel(n, x, u)[0])
    return make_report(IdentityId.PN_TELESCOPE, {"n": n, "x": x, "u": u}, _tidy(lhs), _tidy(rhs), tolerance, log_space=False)


def kn_fe_check(n: int, x, tolerance: float = 1e-6) -> IdentityReport:
    """ln K_n(x+1) - ln K_n(x) = x^n ln x."""
    x = as_number(x)
    lhs = log_kn(n, x + 1).value - log_kn(n, x).value
    rhs = x ** n * (math.log(x) if isinstance(x, float) and x > 0 else cmath.log(x))
    return make_report(IdentityId.KN_FE, {"n": n, "x": x}, lhs, _tidy(rhs), tolerance)


def kn_conversion_check(n: int, x: int, tolerance: float = 1e-10) -> IdentityReport:
    """
    Conversion against the exact recursion K_n(x) = prod_{j<x} j^(j^n). The
    printed argument pattern G_j(x+j) and the variant G_j(x) are evaluated too.
    """
    if int(x) != x or x < 1 or x > config.ORACLE_MAX_ARGUMENT:
        raise DomainError(f"conversion check needs an integer 1 <= x <= {config.ORACLE_MAX_ARGUMENT}, got {x}")
    x = int(x)
    exact = oracle.log_exact(oracle.kn_integer(n, x))
    lhs = kn_conversion(n, float(x)).value
    gaps = {}
    for variant in ("printed", "unshifted"):
        try:
            gaps[variant] = residuals(kn_conversion(n, float(x), variant).value, exact)[0]
        except (ZeroError, PoleError, RouteDomainError) as e:
            gaps[variant] = math.inf
            logger.debug("%s conversion variant not evaluable at x=%d: %s", variant, x, e)
    described = ", ".join(f"{k} {v:.3e}" for k, v in gaps.items())
    notes = f"ln G_(j+1)(x+j) against the recursion oracle; residuals of the other forms: {described}"
    return make_report(
        IdentityId.KN_CONVERSION,
        {"n": n, "x": x},
        lhs,
        exact,
        tolerance,
        notes=notes,
        printed_residual=min(gaps.values()),
    )
