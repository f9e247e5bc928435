"""
Barnes double gamma G(x) with G(x+1) = Γ(x) G(x), G(1) = 1.

Routes
------
Series       power series of ln G(x+a) with Hurwitz-zeta coefficients
Weierstrass  canonical product with an analytic zeta tail
Asymptotic   Stirling-type expansion, optimally truncated
Integral     Malmsten-type integral over the P_2 kernel
EulerLimit   prefix of the Euler-type limit (slow oracle)
Auto         series about 1, 2 or 3 after integer shifts; asymptotic for Re x >= 8

Also: φ = (ln G)', the closed-form integrals of ln Γ, ln sin and x cot,
and the right sides of the duplication and multiplication formulas.
"""

from __future__ import annotations

import cmath
import logging
import math
from enum import Enum
from functools import lru_cache
from typing import List

import numpy as np

from . import config, kernels, oracle
from .errors import DivergentSeries, DomainError, NonConvergence, RouteDomainError, ZeroError
from .quadrature import derivative_with_error, integrate_finite, integrate_semi_infinite, pointwise
from .report import IdentityId, IdentityReport, make_report, residuals
from .special_base import (
    EPS,
    LN_2PI,
    LN_PI,
    Number,
    RouteTag,
    ValueWithError,
    _bernoulli_float,
    _tidy,
    as_number,
    digamma,
    euler_gamma,
    hurwitz_zeta,
    is_nonpositive_integer,
    is_real,
    log_gamma,
    polygamma,
)

logger = logging.getLogger(__name__)

PHI_ONE = -0.5 + 0.5 * LN_2PI

_SERIES_MAX_TERMS = 2000
_ASYMPTOTIC_MAX_TERMS = 60
_AUTO_IMAG_LIMIT = 0.45


class GRoute(str, Enum):
    SERIES = "series"
    WEIERSTRASS = "weierstrass"
    ASYMPTOTIC = "asymptotic"
    INTEGRAL = "integral"
    EULER_LIMIT = "euler-limit"
    AUTO = "auto"


def _check_zero(x: Number):
    if is_nonpositive_integer(x):
        raise ZeroError(f"G has a zero at x = {x}")


def _c_coefficient(j: int, a: Number) -> Number:
    """C_j = sum_{k>=1} k/(a+k-1)^j = ζ(j-1, a) + (1-a) ζ(j, a)."""
    first = hurwitz_zeta(j - 1, a).value
    if a == 1:
        return first
    return first + (1 - a) * hurwitz_zeta(j, a).value


# ============================================================================
# φ and its derivative
# ============================================================================

def phi(x) -> ValueWithError:
    """φ(x) = d/dx ln G(x) = (x-1)(ψ(x)-1) + φ(1), φ(1) = -1/2 + (1/2) ln 2π."""
    x = as_number(x)
    if x == 1:
        return ValueWithError(PHI_ONE, EPS, RouteTag.EXACT)
    psi = digamma(x)
    value = (x - 1) * (psi.value - 1) + PHI_ONE
    err = abs(x - 1) * psi.abs_error + 4 * EPS * (abs(value) + 1)
    return ValueWithError(_tidy(value), err, RouteTag.CLOSED_FORM)


def phi_derivative(x) -> ValueWithError:
    """φ'(x) = ψ(x) - 1 + (x-1) ψ'(x)."""
    x = as_number(x)
    psi = digamma(x)
    tri = polygamma(1, x)
    value = psi.value - 1 + (x - 1) * tri.value
    err = psi.abs_error + abs(x - 1) * tri.abs_error + 4 * EPS * (abs(value) + 1)
    return ValueWithError(_tidy(value), err, RouteTag.CLOSED_FORM)


# ============================================================================
# Routes
# ============================================================================

def log_g_series(x, a) -> ValueWithError:
    """
    ln G(x+a) = ln G(a) + x φ(a) + x²/2 φ'(a) + sum_{j>=3} (-1)^{j+1} C_j x^j / j.

    Terms are summed until one falls below 1e-17 of the running total.

    Raises
    ------
    DivergentSeries when |x/a| >= 1
    """
    x, a = as_number(x), as_number(a)
    if complex(a).real <= 0:
        raise DomainError(f"series centre needs Re a > 0, got a = {a}")
    if abs(x) >= abs(a):
        raise DivergentSeries(f"|x/a| = {abs(x / a):.3f} >= 1 (x = {x}, a = {a})")

    if is_real(a) and float(complex(a).real).is_integer():
        base = _integer_anchor(int(complex(a).real))
    else:
        base = log_g(a)
    p = phi(a)
    dp = phi_derivative(a)
    total = base.value + x * p.value + 0.5 * x * x * dp.value
    err = base.abs_error + abs(x) * p.abs_error + 0.5 * abs(x) ** 2 * dp.abs_error

    xpow = x * x
    magnitude = abs(total)
    for j in range(3, _SERIES_MAX_TERMS):
        xpow = xpow * x
        term = (-1) ** (j + 1) * _c_coefficient(j, a) * xpow / j
        total += term
        magnitude += abs(term)
        if abs(term) < 1e-17 * max(1.0, abs(total)):
            ratio = abs(x / a)
            err += abs(term) * ratio / (1 - ratio) + 4 * EPS * magnitude
            return ValueWithError(_tidy(total), err, RouteTag.SERIES)
    raise NonConvergence(f"power series of ln G at a = {a} did not settle for x = {x}", estimate=total)


def _integer_anchor(n: int) -> ValueWithError:
    """ln G(n) from the exact recursion oracle; the auto route past its cap."""
    if n <= 3:
        return ValueWithError(0.0, 0.0, RouteTag.EXACT)
    if n > config.ORACLE_MAX_ARGUMENT:
        return log_g(float(n))
    value = oracle.log_exact(oracle.g_integer(n))
    return ValueWithError(value, 2 * EPS * abs(value), RouteTag.EXACT)


def log_g_weierstrass(x, n_terms: int = None) -> ValueWithError:
    """
    ln G(1+x) from the Weierstrass product

        (x/2) ln 2π - (x + (1+γ) x²)/2 + sum_{n<=N} [n ln(1+x/n) - x + x²/(2n)]

    with the factors beyond N replaced by sum_{k>=3} (-1)^{k+1} (x^k/k) ζ(k-1, N+1).

    Since ζ(k, N+1) <= ζ(k-1, N+1) / (N+1), successive tail terms shrink by at
    least r = |x|/(N+1); the truncation bound is the last kept term times
    r/(1-r). Rounding is bounded by 2 EPS times the summed magnitudes of every
    piece of the explicit factors, the tail terms and the head.
    """
    n_terms = config.WEIERSTRASS_TERMS if n_terms is None else n_terms
    if n_terms < 1:
        raise DomainError(f"n_terms must be >= 1, got {n_terms}")
    x = as_number(x)
    if is_nonpositive_integer(x + 1):
        raise ZeroError(f"G(1+x) has a zero at x = {x}")
    if abs(x) >= n_terms + 1:
        raise RouteDomainError(f"|x| = {abs(x)} too large for {n_terms} explicit factors")

    n = np.arange(1, n_terms + 1, dtype=float)
    use_complex = isinstance(x, complex) or x < -1
    xv = complex(x) if use_complex else x
    with np.errstate(invalid="ignore"):
        logs = n * np.log1p(xv / (n.astype(complex) if use_complex else n))
    quad = xv * xv / (2 * n)
    terms = logs - xv + quad
    body = complex(np.sum(terms)) if use_complex else math.fsum(terms)
    body_magnitude = float(np.sum(np.abs(logs)) + n_terms * abs(xv) + np.sum(np.abs(quad)))

    gamma = euler_gamma()
    head = 0.5 * x * LN_2PI - 0.5 * (x + (1 + gamma) * x * x)

    tail = 0.0
    tail_magnitude = 0.0
    zeta_err = 0.0
    xpow = x * x
    last = 0.0
    for k in range(3, 400):
        xpow = xpow * x
        hz = hurwitz_zeta(k - 1, n_terms + 1.0)
        last = (-1) ** (k + 1) * xpow / k * hz.value
        tail += last
        tail_magnitude += abs(last)
        zeta_err += abs(xpow) / k * hz.abs_error
        if abs(last) < 1e-17 * max(1.0, abs(body + head)):
            break
    value = head + body + tail
    ratio = abs(x) / (n_terms + 1)
    truncation = abs(last) * ratio / (1 - ratio)
    rounding = 2 * EPS * (body_magnitude + tail_magnitude + abs(0.5 * x * LN_2PI) + abs(x) + abs(x * x) * (1 + gamma))
    err = truncation + rounding + zeta_err
    return ValueWithError(_tidy(value), err, RouteTag.WEIERSTRASS)


@lru_cache(maxsize=None)
def log_g_half() -> ValueWithError:
    """ln G(1/2) from the power series about a = 1 (never the asymptotic route)."""
    return log_g_series(-0.5, 1.0)


@lru_cache(maxsize=None)
def zeta_prime_minus_one() -> ValueWithError:
    """
    ζ'(-1), the constant of the Stirling-type expansion, in the form
    (1/6) ln π + (2/3) ln G(1/2) - (ln 2)/36.
    """
    half = log_g_half()
    value = LN_PI / 6 + 2.0 / 3.0 * half.value - math.log(2.0) / 36
    logger.debug("asymptotic constant bootstrapped from ln G(1/2): %r", value)
    return ValueWithError(value, 2.0 / 3.0 * half.abs_error + 4 * EPS, RouteTag.SERIES)


def asymptotic_terms(z: Number, signed: bool = False) -> List[Number]:
    """
    Terms B_{2n+2} / (4n(n+1) z^{2n}) of the expansion in powers of 1/z,
    up to and including the first one that stops decreasing.

    signed=True multiplies term n by (-1)^n.
    """
    out = []
    inv2 = 1.0 / (z * z)
    zpow = inv2
    prev = math.inf
    for k in range(1, _ASYMPTOTIC_MAX_TERMS):
        term = _bernoulli_float(2 * k + 2) / (4 * k * (k + 1)) * zpow
        if signed:
            term *= (-1) ** k
        out.append(term)
        if abs(term) >= prev or abs(term) < 1e-18 * abs(z) ** 2:
            break
        prev = abs(term)
        zpow *= inv2
    return out


def log_g_asymptotic(x, signed_tail: bool = False) -> ValueWithError:
    """
    ln G(x) for Re x >= 8 from the expansion of ln G(z+1), z = x - 1:

        z²/2 ln z - 3z²/4 + (z/2) ln 2π - (1/12) ln z + ζ'(-1)
            + sum_{n>=1} B_{2n+2} / (4n(n+1) z^{2n})

    truncated before the smallest term. signed_tail=True reproduces the
    printed alternating sign on the tail (for the erratum record).
    """
    x = as_number(x)
    if complex(x).real < config.ASYMPTOTIC_THRESHOLD:
        raise RouteDomainError(f"asymptotic route needs Re x >= {config.ASYMPTOTIC_THRESHOLD}, got x = {x}")
    z = x - 1
    lz = cmath.log(z) if isinstance(z, complex) else math.log(z)
    const = zeta_prime_minus_one()
    value = 0.5 * z * z * lz - 0.75 * z * z + 0.5 * z * LN_2PI - lz / 12 + const.value
    terms = asymptotic_terms(z, signed_tail)
    kept, dropped = terms[:-1], terms[-1]
    value += sum(kept)
    err = abs(dropped) + const.abs_error + 8 * EPS * abs(value)
    return ValueWithError(_tidy(value), err, RouteTag.ASYMPTOTIC)


def log_g_integral(x) -> ValueWithError:
    """ln G(x) = ∫ (e^{-u}/u) P_2(x) du, shifted by the functional equation when Re x < 1."""
    x = as_number(x)
    if complex(x).real <= 0:
        raise RouteDomainError(f"integral route needs Re x > 0, got x = {x}")
    if complex(x).real < 1:
        upper = log_g_integral(x + 1)
        lg = log_gamma(x)
        return ValueWithError(_tidy(upper.value - lg.value), upper.abs_error + lg.abs_error, RouteTag.INTEGRAL)
    result = integrate_semi_infinite(kernels.pn_integrand(2, x))
    return result.as_value(RouteTag.INTEGRAL)


def log_g_euler_limit(x, n: int) -> ValueWithError:
    """
    n-th prefix of the Euler-type limit in ln-space:

        ((x-1)(x-2)/2) ln(n+1) + (x-1) ln n! + sum_{k<n} [ln Γ(k+1) - ln Γ(k+x)]

    The difference ln Γ(k+1) - ln Γ(k+x) is accumulated as
    -ln Γ(x) - sum_{j<k} log1p((x-1)/(j+1)). The error estimate is the change
    from level n/2 to n.
    """
    if n < 2:
        raise DomainError(f"Euler limit needs n >= 2, got {n}")
    x = as_number(x)
    _check_zero(x)
    value = _euler_prefix(x, n)
    coarse = _euler_prefix(x, n // 2)
    return ValueWithError(_tidy(value), abs(value - coarse), RouteTag.EULER_LIMIT)


def _euler_prefix(x: Number, n: int) -> Number:
    if x == 1:
        return 0.0
    j = np.arange(n - 1, dtype=float)
    c = x - 1
    arg = c / (j + 1)
    if isinstance(x, complex):
        d = -np.log1p(arg.astype(complex))
        s = complex(np.sum((n - 1 - j) * d))
    else:
        d = -np.log1p(arg)
        s = math.fsum((n - 1 - j) * d)
    lgx = log_gamma(x).value
    return 0.5 * c * (x - 2) * math.log(n + 1) + c * log_gamma(n + 1).value - n * lgx + s


def _auto(x: Number) -> ValueWithError:
    xr = complex(x).real
    if xr >= config.ASYMPTOTIC_THRESHOLD:
        return log_g_asymptotic(x)
    if abs(complex(x).imag) < _AUTO_IMAG_LIMIT:
        # shift into Re in [0.5, 3.5) and expand about the nearest of 1, 2, 3
        shift = 0
        w = x
        while complex(w).real >= 3.5:
            w -= 1
            shift += 1
        while complex(w).real < 0.5:
            w += 1
            shift -= 1
        a = float(min(3, max(1, math.floor(complex(w).real + 0.5))))
        core = log_g_series(w - a, a)
        corr, corr_err = _recursion_correction(x, shift)
        value = core.value + corr
        return ValueWithError(_tidy(value), core.abs_error + corr_err, RouteTag.SERIES_RECURSION)
    shift = int(math.ceil(config.ASYMPTOTIC_THRESHOLD - xr))
    core = log_g_asymptotic(x + shift)
    corr, corr_err = _recursion_correction(x, -shift)
    return ValueWithError(_tidy(core.value + corr), core.abs_error + corr_err, RouteTag.ASYMPTOTIC_RECURSION)


def _recursion_correction(x: Number, shift: int):
    """
    ln G(x) - ln G(x - shift) from G(x+1) = Γ(x) G(x).

    shift > 0: + sum_{k=1}^{shift} ln Γ(x-k); shift < 0: - sum_{k<|shift|} ln Γ(x+k).
    Γ arguments come from x, not from the shifted point: x + 1 rounds to 1 for tiny x.
    """
    total: Number = 0.0
    err = 0.0
    if shift > 0:
        for k in range(1, shift + 1):
            lg = log_gamma(x - k)
            total += lg.value
            err += lg.abs_error
    else:
        for k in range(-shift):
            lg = log_gamma(x + k)
            total -= lg.value
            err += lg.abs_error
    return total, err


def log_g(x, route: GRoute = GRoute.AUTO) -> ValueWithError:
    """
    ln G(x) on the branch real for real x > 0.

    Raises
    ------
    ZeroError        at x = 0, -1, -2, ...
    RouteDomainError when the requested route cannot handle x
    """
    x = as_number(x)
    route = GRoute(route)
    _check_zero(x)
    logger.debug("log_g(%r, route=%s)", x, route.value)
    if route is GRoute.AUTO:
        return _auto(x)
    if route is GRoute.SERIES:
        a = float(max(1, round(complex(x).real)))
        try:
            return log_g_series(x - a, a)
        except DivergentSeries as e:
            raise RouteDomainError(str(e)) from e
    if route is GRoute.WEIERSTRASS:
        return log_g_weierstrass(x - 1)
    if route is GRoute.ASYMPTOTIC:
        return log_g_asymptotic(x)
    if route is GRoute.INTEGRAL:
        return log_g_integral(x)
    if route is GRoute.EULER_LIMIT:
        return log_g_euler_limit(x, 10_000)
    raise RouteDomainError(f"unknown route {route}")


def malmsten_log_gamma(z) -> ValueWithError:
    """ln Γ(z) by quadrature of the Malmsten integral (test oracle, Re z > 0)."""
    z = as_number(z)
    if complex(z).real <= 0:
        raise DomainError(f"Malmsten integral needs Re z > 0, got z = {z}")
    return integrate_semi_infinite(kernels.malmsten_integrand(z)).as_value(RouteTag.INTEGRAL)


# ============================================================================
# Integrals in closed form
# ============================================================================

def integral_log_gamma(a) -> ValueWithError:
    """∫_0^a ln Γ(t) dt = -ln G(a) + (a-1) ln Γ(a) - a(a-1)/2 + (a/2) ln 2π."""
    a = as_number(a)
    if complex(a).real <= 0:
        raise DomainError(f"integral_log_gamma needs Re a > 0, got a = {a}")
    lg = log_g(a)
    lgam = log_gamma(a)
    value = -lg.value + (a - 1) * lgam.value - 0.5 * a * (a - 1) + 0.5 * a * LN_2PI
    err = lg.abs_error + abs(a - 1) * lgam.abs_error + 4 * EPS * abs(value)
    return ValueWithError(_tidy(value), err, RouteTag.CLOSED_FORM)


def _unit_interval(x: float, what: str) -> float:
    x = float(x)
    if not 0 < x < 1:
        raise DomainError(f"{what} needs 0 < x < 1, got x = {x}")
    return x


def integral_log_sin(x) -> ValueWithError:
    """∫_0^x ln sin πt dt = x ln(sin πx / 2π) + ln G(1+x) - ln G(1-x)."""
    x = _unit_interval(x, "integral_log_sin")
    up, down = log_g(1 + x), log_g(1 - x)
    value = x * (math.log(math.sin(math.pi * x)) - LN_2PI) + up.value - down.value
    return ValueWithError(value, up.abs_error + down.abs_error + 4 * EPS, RouteTag.CLOSED_FORM)


def integral_x_cot(x) -> ValueWithError:
    """∫_0^x πt cot πt dt = x ln 2π + ln G(1-x) - ln G(1+x)."""
    x = _unit_interval(x, "integral_x_cot")
    up, down = log_g(1 + x), log_g(1 - x)
    value = x * LN_2PI + down.value - up.value
    return ValueWithError(value, up.abs_error + down.abs_error + 4 * EPS, RouteTag.CLOSED_FORM)


def quadrature_log_gamma(a: float, b: float = None) -> ValueWithError:
    """∫ ln Γ over [0, a] (or [a, b]) by tanh-sinh quadrature."""
    lo, hi = (0.0, a) if b is None else (a, b)
    f = pointwise(lambda t: log_gamma(t).value)
    return integrate_finite(f, lo, hi).as_value()


def quadrature_log_sin(x: float) -> ValueWithError:
    f = lambda t: np.log(np.sin(np.pi * t))
    return integrate_finite(f, 0.0, x).as_value()


def quadrature_x_cot(x: float) -> ValueWithError:
    f = lambda t: np.pi * t / np.tan(np.pi * t)
    return integrate_finite(f, 0.0, x).as_value()


# ============================================================================
# Duplication and multiplication
# ============================================================================

def duplication_rhs(x) -> ValueWithError:
    """ln of G(1/2)^{-2} 2^{(x-1)(2x-1)} π^{-x} Γ(x) G(x)² G(x+1/2)²."""
    x = as_number(x)
    half = log_g_half()
    parts = [log_gamma(x), log_g(x), log_g(x + 0.5)]
    value = (
        -2 * half.value
        + (x - 1) * (2 * x - 1) * math.log(2.0)
        - x * LN_PI
        + parts[0].value
        + 2 * parts[1].value
        + 2 * parts[2].value
    )
    err = 2 * half.abs_error + parts[0].abs_error + 2 * (parts[1].abs_error + parts[2].abs_error)
    return ValueWithError(_tidy(value), err + 8 * EPS * abs(value), RouteTag.CLOSED_FORM)


def multiplication_rhs(n: int, x) -> ValueWithError:
    """
    ln of the right side of the multiplication formula for G(nx):

        n^{(nx-1)²/2} (2π)^{-(n-1)(nx-1)/2}
            prod_{j=1}^{n-1} [Γ(x+(j-1)/n) / Γ(j/n)]^{n-j}
            prod_{j=0}^{n-1} [G(x+j/n) / G((1+j)/n)]^n
    """
    if n < 2:
        raise DomainError(f"multiplication needs n >= 2, got {n}")
    x = as_number(x)
    value = 0.5 * (n * x - 1) ** 2 * math.log(n) - 0.5 * (n - 1) * (n * x - 1) * LN_2PI
    err = 0.0
    for j in range(1, n):
        num, den = log_gamma(x + (j - 1) / n), log_gamma(j / n)
        value += (n - j) * (num.value - den.value)
        err += (n - j) * (num.abs_error + den.abs_error)
    for j in range(n):
        num, den = log_g(x + j / n), log_g((1 + j) / n)
        value += n * (num.value - den.value)
        err += n * (num.abs_error + den.abs_error)
    return ValueWithError(_tidy(value), err + 8 * EPS * abs(value), RouteTag.CLOSED_FORM)


# ============================================================================
# Series identities for φ and the roots-of-unity product
# ============================================================================

def phi_series_value(x: float, k_explicit: int = 1000) -> ValueWithError:
    """
    φ(1+x) = -1/2 + (1/2) ln 2π - x(1+γ) + sum_{k>=1} x²/(k(x+k)), x > -1.

    Terms beyond k_explicit are summed as sum_j (-1)^j x^{j+2} ζ(j+2, K+1).
    """
    x = float(x)
    if x <= -1:
        raise DivergentSeries(f"φ(1+x) series needs x > -1, got x = {x}")
    k = np.arange(1, k_explicit + 1, dtype=float)
    body = math.fsum(x * x / (k * (x + k)))
    tail = 0.0
    xpow = x * x
    for j in range(0, 200):
        term = (-1) ** j * xpow * hurwitz_zeta(j + 2, k_explicit + 1.0).value
        tail += term
        if abs(term) < 1e-18:
            break
        xpow *= x
    value = PHI_ONE - x * (1 + euler_gamma()) + body + tail
    return ValueWithError(value, 1e-15 * (1 + abs(value)), RouteTag.SERIES)


def phi_shift_series_value(a: float, x: float, numerator: str = "corrected", j_max: int = 20000) -> ValueWithError:
    """
    φ(a+x) = φ(a) + x ψ(a) + sum_{j>=1} (-1)^{j-1} [x]_{j+1} / (j(j+1)(a)_j)

    [x]_m is the falling factorial x(x-1)...(x-m+1). numerator="printed" uses
    [x]_j instead. Terms decay like j^{-(1+x+a)}; the remainder is estimated
    from the last term by the Euler–Maclaurin integral of that power law.
    """
    a, x = float(a), float(x)
    if a <= 0:
        raise DomainError(f"shift series needs a > 0, got a = {a}")
    p = 1 + x + a
    if numerator == "corrected" and p <= 1:
        raise DivergentSeries(f"shift series diverges for x + a <= 0 (x = {x}, a = {a})")
    j = np.arange(1, j_max + 1, dtype=float)
    if numerator == "corrected":
        # t_1 = x(x-1)/(2a); t_{j+1}/t_j = -(x-j-1) j / ((j+2)(a+j))
        ratios = -(x - j[:-1] - 1) * j[:-1] / ((j[:-1] + 2) * (a + j[:-1]))
        first = x * (x - 1) / (2 * a)
    elif numerator == "printed":
        # t_1 = x/(2a); t_{j+1}/t_j = -(x-j) j / ((j+2)(a+j))
        ratios = -(x - j[:-1]) * j[:-1] / ((j[:-1] + 2) * (a + j[:-1]))
        first = x / (2 * a)
    else:
        raise DomainError(f"numerator must be 'corrected' or 'printed', got {numerator!r}")
    terms = first * np.concatenate([[1.0], np.cumprod(ratios)])
    body = math.fsum(terms)
    last = terms[-1]
    tail = last * (j_max / max(p - 1, 1e-12) - 0.5) if p > 1 else 0.0
    base = phi(a).value + x * digamma(a).value
    value = base + body + tail
    return ValueWithError(value, abs(tail) * 0.1 + 1e-15 * (1 + abs(value)), RouteTag.SERIES)


def phi_series_check(x: float, tolerance: float = 1e-10) -> IdentityReport:
    """Residual of the φ(1+x) series against the closed form."""
    lhs = phi(1 + x).value
    rhs = phi_series_value(x).value
    return make_report(IdentityId.PHI_SERIES_1, {"x": x}, lhs, rhs, tolerance)


def phi_shift_series_check(a: float, x: float, tolerance: float = 1e-10) -> IdentityReport:
    """Residual of the φ(a+x) falling-factorial series; the printed numerator is reported in notes."""
    lhs = phi(a + x).value
    rhs = phi_shift_series_value(a, x).value
    printed = phi_shift_series_value(a, x, numerator="printed").value
    gap = abs(printed - lhs)
    notes = f"numerator [x]_(j+1); the printed [x]_j gives {printed!r} (residual {gap:.3e})"
    return make_report(
        IdentityId.PHI_SERIES_2, {"a": a, "x": x}, lhs, rhs, tolerance, notes=notes, printed_residual=gap
    )


def roots_of_unity_product_check(a, x, n: int, m_max: int = 2000, tolerance: float = 1e-8) -> IdentityReport:
    """
    prod_{k<n} G(a - e^{2πik/n} x)/G(a) = prod_{m>=0} (1 - x^n/(a+m)^n)^{m+1}

    The right side converges for n >= 3. For n = 1, 2 every factor is
    multiplied by exp(sum_{l: nl<=2} x^{nl}/(l (a+m)^{nl})), and the left side
    loses the matching Taylor terms -x φ(a) and x²φ'(a)/2 (n = 1) or x²φ'(a)
    (n = 2). The product beyond m_max is replaced by
    -sum_l (x^{nl}/l) [ζ(nl-1, a+M+1) + (1-a) ζ(nl, a+M+1)].
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    a, x = as_number(a), as_number(x)
    if complex(a).real <= 0:
        raise DomainError(f"roots-of-unity product needs Re a > 0, got a = {a}")
    if abs(x) >= abs(a):
        raise DomainError(f"roots-of-unity product needs |x| < |a|, got x = {x}, a = {a}")
    params = {"n": n, "a": a, "x": x, "m_max": m_max}

    lga = log_g(a).value
    lhs: Number = 0.0
    for k in range(n):
        arg = a - cmath.exp(2j * math.pi * k / n) * x
        arg = _tidy(arg)
        lhs += log_g(arg).value - lga
    if n == 1:
        lhs += x * phi(a).value - 0.5 * x * x * phi_derivative(a).value
    elif n == 2:
        lhs -= x * x * phi_derivative(a).value

    m = np.arange(m_max + 1, dtype=float)
    w = (a + m).astype(complex)
    xn = complex(x) ** n
    body = (m + 1) * np.log1p(-xn / w ** n)
    for l in range(1, 3):
        if n * l <= 2:
            body = body + (m + 1) * xn ** l / (l * w ** (n * l))
    rhs = complex(np.sum(body))

    shifted = a + m_max + 1
    l = 1
    while True:
        if n * l >= 3:
            j = n * l
            t = (xn ** l / l) * (hurwitz_zeta(j - 1, shifted).value + (1 - a) * hurwitz_zeta(j, shifted).value)
            rhs -= t
            if abs(t) < 1e-18 or l > 400:
                break
        l += 1
    lhs, rhs = _tidy(complex(lhs)), _tidy(rhs)
    if n >= 3:
        form = "printed product"
        printed_gap = residuals(lhs, rhs)[0]
    else:
        form = "product with convergence factors (printed product diverges for n <= 2)"
        printed_gap = math.inf
    return make_report(
        IdentityId.ROOTS_OF_UNITY, params, lhs, rhs, tolerance, notes=form, printed_residual=printed_gap
    )


# ============================================================================
# Residual checks used by the identity catalog
# ============================================================================

def functional_equation_check(x, tolerance: float = 1e-10) -> IdentityReport:
    """ln G(x+1) = ln Γ(x) + ln G(x)."""
    x = as_number(x)
    lhs = log_g(x + 1).value
    rhs = log_gamma(x).value + log_g(x).value
    return make_report(IdentityId.FE_G, {"x": x}, lhs, rhs, tolerance)


def integer_values_check(n: int, tolerance: float = 1e-12) -> IdentityReport:
    """
    G(n+1) = prod_{k=1}^{n-1} k! = (n!)^n / (1^1 2^2 ... n^n) against the
    exact recursion; the inverted printed fraction is the printed variant.
    """
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    lhs = log_g(float(n + 1)).value
    exact = oracle.log_exact(oracle.g_integer(n + 1))
    closed = oracle.log_exact(oracle.superfactorial_ratio(n))
    gap = abs(lhs + closed)
    notes = (
        f"recursion oracle G({n + 1}) = {oracle.g_integer(n + 1)}; "
        f"(n!)^n/(1^1...n^n) agrees to {abs(exact - closed):.1e}; "
        f"the inverted printed fraction is off by {gap:.3e} in ln"
    )
    return make_report(IdentityId.INTEGER_VALUES, {"n": n}, lhs, exact, tolerance, notes=notes, printed_residual=gap)


def duplication_check(x, tolerance: float = 1e-9) -> IdentityReport:
    x = as_number(x)
    return make_report(IdentityId.DUPLICATION, {"x": x}, log_g(2 * x).value, duplication_rhs(x).value, tolerance)


def multiplication_check(n: int, x, tolerance: float = 1e-8) -> IdentityReport:
    x = as_number(x)
    lhs = log_g(n * x).value
    return make_report(IdentityId.MULTIPLICATION, {"n": n, "x": x}, lhs, multiplication_rhs(n, x).value, tolerance)


def asymptotic_check(x: float, tolerance: float = 1e-10) -> IdentityReport:
    """Optimally truncated expansion against the Weierstrass product."""
    lhs = log_g_asymptotic(x).value
    rhs = log_g_weierstrass(x - 1).value
    gap = abs(log_g_asymptotic(x, signed_tail=True).value - rhs)
    notes = f"Bernoulli tail without alternating sign; the alternating printed tail is off by {gap:.3e}"
    return make_report(IdentityId.ASYMPTOTIC, {"x": x}, lhs, rhs, tolerance, notes=notes, printed_residual=gap)


def int_log_gamma_check(a: float, tolerance: float = 1e-8) -> IdentityReport:
    lhs = quadrature_log_gamma(a).value
    return make_report(IdentityId.INT_LOG_GAMMA, {"a": a}, lhs, integral_log_gamma(a).value, tolerance)


def int_log_sin_check(x: float, tolerance: float = 1e-8) -> IdentityReport:
    lhs = quadrature_log_sin(x).value
    return make_report(IdentityId.INT_LOG_SIN, {"x": x}, lhs, integral_log_sin(x).value, tolerance)


def int_x_cot_check(x: float, tolerance: float = 1e-8) -> IdentityReport:
    lhs = quadrature_x_cot(x).value
    return make_report(IdentityId.INT_X_COT, {"x": x}, lhs, integral_x_cot(x).value, tolerance)


def phi_closed_check(x: float, tolerance: float = 1e-8) -> IdentityReport:
    """Closed form of φ against a Richardson derivative of ln G."""
    numeric = derivative_with_error(lambda t: log_g(t).value, float(x), order=1, h=0.05)
    return make_report(IdentityId.PHI_CLOSED, {"x": x}, phi(x).value, numeric.value, tolerance)


def power_series_check(x, a: float, tolerance: float = 1e-10) -> IdentityReport:
    """Power series about a against the Weierstrass product at x + a."""
    lhs = log_g_series(x, a).value
    rhs = log_g_weierstrass(as_number(x) + a - 1).value
    return make_report(IdentityId.LNG_POWER_SERIES, {"x": x, "a": a}, lhs, rhs, tolerance)


def cross_route_check(x, tolerance: float = 1e-8) -> IdentityReport:
    """
    Series, integral and (Re x >= 8) asymptotic values of ln G against the
    Weierstrass product; the report carries the worst route.
    """
    x = as_number(x)
    reference = log_g_weierstrass(x - 1).value
    values = {}
    for route in (GRoute.SERIES, GRoute.INTEGRAL, GRoute.ASYMPTOTIC):
        try:
            values[route.value] = log_g(x, route).value
        except RouteDomainError:
            continue
    gaps = {name: residuals(v, reference)[0] for name, v in values.items()}
    worst = max(gaps, key=gaps.get)
    notes = "against weierstrass: " + ", ".join(f"{name} {gap:.2e}" for name, gap in gaps.items())
    return make_report(IdentityId.LNG_ROUTES, {"x": x, "worst": worst}, values[worst], reference, tolerance, notes=notes)


def euler_limit_check(x, n: int = 10_000, tolerance: float = 1e-3) -> IdentityReport:
    """n-th prefix of the Euler-type limit against the auto route."""
    x = as_number(x)
    limit = log_g_euler_limit(x, n)
    notes = f"prefix change n/2 -> n: {limit.abs_error:.3e}"
    return make_report(IdentityId.G_EULER_LIMIT, {"x": x, "n": n}, limit.value, log_g(x).value, tolerance, notes=notes)
