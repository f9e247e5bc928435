"""
Two-period double gamma G(x; α):

    G(x+1; α) = Γ(x/α) G(x; α),    G(1; α) = 1

computed from its Malmsten-type integral (measure du/u), with the second
functional equation, inversion, three-term and rational-period relations as
residual checks, the Euler-type limits, the quarter-lattice Weierstrass
product with its constants a and b, and the q-product of the reflection
formula together with the experiment that decides how q is to be read.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from . import config, kernels
from .barnes_g import log_g
from .errors import DomainError, PoleError, RouteDomainError, ZeroError
from .quadrature import derivative_with_error, integrate_semi_infinite
from .report import IdentityId, IdentityReport, make_report, residuals
from .special_base import (
    EPS,
    LN_2PI,
    Number,
    RouteTag,
    ValueWithError,
    _em_coeff,
    _log,
    _rising,
    _tidy,
    as_number,
    digamma,
    euler_gamma,
    hurwitz_zeta,
    log_gamma,
    polygamma,
)

logger = logging.getLogger(__name__)

# strip of Re x where the integral is used without functional-equation shifts
_STRIP_LOW = 0.5
_STRIP_HIGH = 4.5

_LATTICE_EM_TERMS = 3
_Q_PRODUCT_TERMS = 80


def _check_alpha(alpha) -> Number:
    alpha = as_number(alpha)
    if complex(alpha).real <= 0:
        raise DomainError(f"period ratio needs Re α > 0, got α = {alpha}")
    return alpha


def is_lattice_zero(x: Number, alpha: Number, tol: float = 1e-12) -> bool:
    """True when x = -(m + nα) for some m, n >= 0."""
    x, alpha = complex(x), complex(alpha)
    n_max = int(max(0.0, (-x.real + 0.5) / alpha.real)) + 1
    for n in range(n_max + 1):
        t = -x - n * alpha
        if abs(t.imag) <= tol * (1 + abs(t)) and t.real > -0.5 and abs(t.real - round(t.real)) <= tol * (1 + abs(t)):
            return True
    return False


# ============================================================================
# ln G(x; α)
# ============================================================================

def _integral(x: Number, alpha: Number) -> ValueWithError:
    return integrate_semi_infinite(kernels.two_period_integrand(x, alpha)).as_value(RouteTag.INTEGRAL)


def log_g2(x, alpha, direct: bool = False) -> ValueWithError:
    """
    ln G(x; α) for Re α > 0.

    The integral is evaluated for 0.5 <= Re x < 4.5; other arguments are
    carried there by G(x+1; α) = Γ(x/α) G(x; α). direct=True evaluates the
    integral at x itself (Re x > 0 required).

    Raises
    ------
    ZeroError        at the lattice zeros x = -(m + nα)
    RouteDomainError direct=True with Re x <= 0
    """
    x, alpha = as_number(x), _check_alpha(alpha)
    if is_lattice_zero(x, alpha):
        raise ZeroError(f"G(x; α) vanishes at x = {x} (α = {alpha})")
    if x == 1:
        return ValueWithError(0.0, 0.0, RouteTag.EXACT)
    re = complex(x).real
    if direct:
        if re <= 0:
            raise RouteDomainError(f"the integral needs Re x > 0, got x = {x}")
        return _integral(x, alpha)
    if _STRIP_LOW <= re < _STRIP_HIGH:
        return _integral(x, alpha)

    shift = 0
    w = x
    while complex(w).real >= _STRIP_HIGH:
        w -= 1
        shift += 1
    while complex(w).real < _STRIP_LOW:
        w += 1
        shift -= 1
    core = _integral(w, alpha)
    total: Number = core.value
    err = core.abs_error
    # Γ arguments come from x, not from w: x + 1 rounds to 1 for tiny x
    if shift > 0:
        # ln G(x) = ln G(w) + sum_{k=1}^{shift} ln Γ((x-k)/α)
        terms = [log_gamma((x - k) / alpha) for k in range(1, shift + 1)]
        total += sum(t.value for t in terms)
    else:
        # ln G(x) = ln G(w) - sum_{k<|shift|} ln Γ((x+k)/α)
        terms = [log_gamma((x + k) / alpha) for k in range(-shift)]
        total -= sum(t.value for t in terms)
    err += sum(t.abs_error for t in terms)
    return ValueWithError(_tidy(total), err, RouteTag.INTEGRAL)


def log_g2_printed_measure(x, alpha) -> ValueWithError:
    """The same braces integrated against du/(1 - e^{-u}); not ln G(x; α)."""
    x, alpha = as_number(x), _check_alpha(alpha)
    result = integrate_semi_infinite(kernels.two_period_integrand_printed_measure(x, alpha))
    return result.as_value(RouteTag.INTEGRAL)


def log_g2_derivative(x, alpha, order: int = 1) -> ValueWithError:
    """∂^order/∂x^order ln G(x; α), order 1 or 2, differentiated under the integral (Re x > 0)."""
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order}")
    x, alpha = as_number(x), _check_alpha(alpha)
    if complex(x).real <= 0:
        raise RouteDomainError(f"the integral needs Re x > 0, got x = {x}")
    result = integrate_semi_infinite(kernels.two_period_integrand(x, alpha, derivative=order))
    return result.as_value(RouteTag.INTEGRAL)


def g_alpha_alpha(alpha) -> ValueWithError:
    """ln G(α; α) = -(1/2) ln α + ((α-1)/2) ln 2π."""
    alpha = _check_alpha(alpha)
    value = -0.5 * _log(alpha) + 0.5 * (alpha - 1) * LN_2PI
    return ValueWithError(_tidy(value), 4 * EPS * (abs(value) + 1), RouteTag.CLOSED_FORM)


# ============================================================================
# Relations between values
# ============================================================================

def fe1_check(x, alpha, tolerance: float = 1e-7) -> IdentityReport:
    """ln G(x+1; α) = ln Γ(x/α) + ln G(x; α), both sides by direct quadrature."""
    x, alpha = as_number(x), _check_alpha(alpha)
    lhs = log_g2(x + 1, alpha, direct=True).value
    rhs = log_gamma(x / alpha).value + log_g2(x, alpha, direct=True).value
    return make_report(IdentityId.G2_FE1, {"x": x, "alpha": alpha}, lhs, rhs, tolerance)


def functional_eq2_check(x, alpha, tolerance: float = 1e-7) -> IdentityReport:
    """ln G(x+α; α) = ((α-1)/2) ln 2π - ((2x-1)/2) ln α + ln Γ(x) + ln G(x; α)."""
    x, alpha = as_number(x), _check_alpha(alpha)
    lhs = log_g2(x + alpha, alpha).value
    rhs = 0.5 * (alpha - 1) * LN_2PI - 0.5 * (2 * x - 1) * _log(alpha) + log_gamma(x).value + log_g2(x, alpha).value
    return make_report(IdentityId.G2_FE2, {"x": x, "alpha": alpha}, lhs, rhs, tolerance)


def inversion_check(x, alpha, tolerance: float = 1e-7) -> IdentityReport:
    """ln G(x; 1/α) = ln G(αx; α) - x ln G(α, α) + ((x-1)(αx-2)/2) ln α."""
    x, alpha = as_number(x), _check_alpha(alpha)
    lhs = log_g2(x, 1 / alpha).value
    rhs = log_g2(alpha * x, alpha).value - x * g_alpha_alpha(alpha).value + 0.5 * (x - 1) * (alpha * x - 2) * _log(alpha)
    return make_report(IdentityId.G2_INVERSION, {"x": x, "alpha": alpha}, lhs, rhs, tolerance)


def three_term_check(x, alpha, tolerance: float = 1e-6) -> IdentityReport:
    """
    G(x; α) / (G(x/(α+1); 1/(α+1)) G(x/(α+1); α/(α+1)))
        = G(α, α)^{x/(α+1)} α^{-x(x-α-1)/(2(α+1))} (α+1)^{(x-α-1)/(α+1)} Γ(x/(α+1))
    """
    x, alpha = as_number(x), _check_alpha(alpha)
    s = alpha + 1
    lhs = log_g2(x, alpha).value - log_g2(x / s, 1 / s).value - log_g2(x / s, alpha / s).value
    rhs = (
        x / s * g_alpha_alpha(alpha).value
        - x * (x - s) / (2 * s) * _log(alpha)
        + (x - s) / s * _log(s)
        + log_gamma(x / s).value
    )
    return make_report(IdentityId.G2_THREE_TERM, {"x": x, "alpha": alpha}, lhs, rhs, tolerance)


def alpha_alpha_check(alpha, tolerance: float = 1e-7) -> IdentityReport:
    alpha = _check_alpha(alpha)
    lhs = log_g2(alpha, alpha).value
    return make_report(IdentityId.G2_ALPHA_ALPHA, {"alpha": alpha}, lhs, g_alpha_alpha(alpha).value, tolerance)


def alpha1_degeneration_check(x, tolerance: float = 1e-8) -> IdentityReport:
    """G(x; 1) = G(x)."""
    x = as_number(x)
    return make_report(IdentityId.G2_ALPHA1_DEGENERATION, {"x": x}, log_g2(x, 1.0).value, log_g(x).value, tolerance)


Base = Callable[[Number, Number], ValueWithError]


def rational_period_rhs(x, alpha, m: int, n: int, base: Optional[Base] = None) -> ValueWithError:
    """
    ln G(x; (m/n) α) from values at period ratio α:

        ((x-1)(nx-mα)/(2mα)) ln n - ((n-1)(x-1)/2) ln 2π
            + sum_{k<n} sum_{j<m} [ln G((nx+nj+kmα)/(mn); α) - ln G((n+nj+kmα)/(mn); α)]

    base evaluates ln G(·; α) (log_g2 by default).
    """
    if m < 1 or n < 1:
        raise DomainError(f"m and n must be >= 1, got m = {m}, n = {n}")
    x, alpha = as_number(x), _check_alpha(alpha)
    base = base or log_g2
    mn = m * n
    value: Number = (x - 1) * (n * x - m * alpha) / (2 * m * alpha) * math.log(n) - 0.5 * (n - 1) * (x - 1) * LN_2PI
    err = 0.0
    for k in range(n):
        for j in range(m):
            top = base((n * x + n * j + k * m * alpha) / mn, alpha)
            bottom = base((n + n * j + k * m * alpha) / mn, alpha)
            value += top.value - bottom.value
            err += top.abs_error + bottom.abs_error
    return ValueWithError(_tidy(value), err, RouteTag.CLOSED_FORM)


def rational_period_check(x, alpha, m: int, n: int, tolerance: float = 1e-6) -> IdentityReport:
    x, alpha = as_number(x), _check_alpha(alpha)
    lhs = log_g2(x, m * alpha / n).value
    rhs = rational_period_rhs(x, alpha, m, n).value
    return make_report(IdentityId.G2_RATIONAL, {"x": x, "alpha": alpha, "m": m, "n": n}, lhs, rhs, tolerance)


def _barnes_base(y: Number, alpha: Number) -> ValueWithError:
    return log_g(y)


def representation_check(x: float, m: int, n: int, tolerance: float = 1e-7) -> IdentityReport:
    """
    The integral at α = m/n against the rational-period reduction to G(·; 1) = G,
    which involves no quadrature. The printed measure du/(1-e^{-u}) is evaluated
    against the same right side.
    """
    alpha = m / n
    lhs = log_g2(x, alpha, direct=True).value
    rhs = rational_period_rhs(x, 1.0, m, n, base=_barnes_base).value
    gap = residuals(log_g2_printed_measure(x, alpha).value, rhs)[0]
    notes = f"measure du/u; the printed du/(1-e^(-u)) is off by {gap:.3e}"
    return make_report(
        IdentityId.G2_REPRESENTATION,
        {"x": x, "m": m, "n": n},
        lhs,
        rhs,
        tolerance,
        notes=notes,
        printed_residual=gap,
    )


# ============================================================================
# Euler-type limits
# ============================================================================

def _euler_g2_prefix(x: Number, alpha: Number, n: int, variant: int, printed: bool) -> Number:
    c = x - 1
    if variant == 1:
        expo = c * (x - 2 * alpha) / (2 * alpha)
        top = 1 + n / alpha
        head = expo * _log(top) + c * log_gamma(top).value
        body = [log_gamma((1 + k) / alpha).value - log_gamma((x + k) / alpha).value for k in range(n)]
    else:
        expo = c * (x - 2 * alpha) / (2 * alpha) if printed else c * (x - 2) / (2 * alpha)
        top = 1 / alpha + n
        head = n * c * _log(alpha) + expo * _log(top) + c * log_gamma(top).value
        body = [log_gamma(1 + k * alpha).value - log_gamma(x + k * alpha).value for k in range(n)]
    if any(isinstance(b, complex) for b in body) or isinstance(head, complex):
        return head + complex(np.sum(np.asarray(body, dtype=complex)))
    return head + math.fsum(body)


def euler_limit_g2(x, alpha, n: int, variant: int = 1, printed: bool = False) -> ValueWithError:
    """
    n-th prefix of one of the two Euler-type limits for ln G(x; α).

    Variant 1: ((x-1)(x-2α)/(2α)) ln(1+n/α) + (x-1) ln Γ(1+n/α)
               + sum_{k<n} [ln Γ((1+k)/α) - ln Γ((x+k)/α)]
    Variant 2: n(x-1) ln α + ((x-1)(x-2)/(2α)) ln(1/α+n) + (x-1) ln Γ(1/α+n)
               + sum_{k<n} [ln Γ(1+kα) - ln Γ(x+kα)]

    printed=True uses the exponent (x-1)(x-2α)/(2α) in variant 2. The error
    estimate is the change from n/2 to n.
    """
    if n < 2:
        raise DomainError(f"Euler limit needs n >= 2, got {n}")
    if variant not in (1, 2):
        raise DomainError(f"variant must be 1 or 2, got {variant}")
    x, alpha = as_number(x), _check_alpha(alpha)
    if x == 1:
        return ValueWithError(0.0, 0.0, RouteTag.EULER_LIMIT)
    value = _euler_g2_prefix(x, alpha, n, variant, printed)
    coarse = _euler_g2_prefix(x, alpha, n // 2, variant, printed)
    return ValueWithError(_tidy(value), abs(value - coarse), RouteTag.EULER_LIMIT)


def euler_limit_check(variant: int, x, alpha, n: int = 2000, tolerance: float = 1e-3) -> IdentityReport:
    x, alpha = as_number(x), _check_alpha(alpha)
    identity = IdentityId.G2_EULER_LIM1 if variant == 1 else IdentityId.G2_EULER_LIM2
    limit = euler_limit_g2(x, alpha, n, variant)
    rhs = log_g2(x, alpha).value
    params = {"x": x, "alpha": alpha, "n": n}
    if variant == 1:
        notes = f"prefix change n/2 -> n: {limit.abs_error:.3e}"
        return make_report(identity, params, limit.value, rhs, tolerance, notes=notes)
    gap = residuals(euler_limit_g2(x, alpha, n, 2, printed=True).value, rhs)[0]
    notes = f"exponent (x-1)(x-2)/(2α); the printed (x-1)(x-2α)/(2α) is off by {gap:.3e}"
    return make_report(identity, params, limit.value, rhs, tolerance, notes=notes, printed_residual=gap)


# ============================================================================
# Quarter-lattice Weierstrass product
# ============================================================================

@dataclass(frozen=True)
class LatticeConstants:
    """Constants a, b of the Weierstrass product for one period ratio."""
    a: Number
    b: Number
    alpha: Number
    abs_error: float = 0.0
    method: str = "integral"

    def as_printed(self) -> "LatticeConstants":
        """Constants with the signs of the γ and π² terms reversed."""
        gamma = euler_gamma()
        return LatticeConstants(
            self.a - 2 * gamma / self.alpha,
            self.b + math.pi ** 2 / (6 * self.alpha ** 2),
            self.alpha,
            self.abs_error,
            self.method + "+printed",
        )


@lru_cache(maxsize=64)
def lattice_constants(alpha, method: str = "integral", h: float = 0.1) -> LatticeConstants:
    """
    a = ∂ ln G(1; α) + γ/α and b = (1/2) ∂² ln G(1; α) - π²/(12α²).

    method="integral" differentiates under the integral sign;
    "finite_difference" runs a Richardson tableau on log_g2 with step h.
    """
    alpha = _check_alpha(alpha)
    if method == "integral":
        d1 = log_g2_derivative(1.0, alpha, 1)
        d2 = log_g2_derivative(1.0, alpha, 2)
    elif method == "finite_difference":
        f = lambda t: log_g2(t, alpha, direct=True).value
        d1 = derivative_with_error(f, 1.0, order=1, h=h)
        d2 = derivative_with_error(f, 1.0, order=2, h=h)
    else:
        raise DomainError(f"method must be 'integral' or 'finite_difference', got {method!r}")
    a = d1.value + euler_gamma() / alpha
    b = 0.5 * d2.value - math.pi ** 2 / (12 * alpha ** 2)
    logger.debug("lattice constants α=%r (%s): a=%r b=%r", alpha, method, a, b)
    return LatticeConstants(_tidy(a), _tidy(b), alpha, d1.abs_error + d2.abs_error, method)


@lru_cache(maxsize=64)
def _row_terms(beta: Number, n_max: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """ln Γ(c), ψ(c), ψ'(c) at c = nβ, n = 1..n_max."""
    cs = [n * beta for n in range(1, n_max + 1)]
    lg = np.array([complex(log_gamma(c).value) for c in cs])
    psi = np.array([complex(digamma(c).value) for c in cs])
    tri = np.array([complex(polygamma(1, c).value) for c in cs])
    return np.array(cs, dtype=complex), lg, psi, tri


def _row_tail(y: Number, beta: Number, n_max: int) -> Tuple[Number, float]:
    """
    sum over rows n > n_max, expanded in powers of y:
    sum_{k>=3} (-1)^{k+1} (y^k/k) sum_{n>N} ζ(k, nβ), with
    sum_{n>N} ζ(k, nβ) from the Euler–Maclaurin form of ζ(k, c) in c.
    """
    start = n_max + 1.0
    total: Number = 0.0
    last = 0.0
    ypow = y * y
    for k in range(3, 200):
        ypow = ypow * y
        t_k = beta ** (1 - k) * hurwitz_zeta(k - 1, start).value / (k - 1) + 0.5 * beta ** (-k) * hurwitz_zeta(k, start).value
        for j in range(1, _LATTICE_EM_TERMS + 1):
            t_k += _em_coeff(j) * _rising(k, 2 * j - 1) * beta ** (-k - 2 * j + 1) * hurwitz_zeta(k + 2 * j - 1, start).value
        term = (-1) ** (k + 1) * ypow / k * t_k
        total += term
        last = abs(term)
        if last < 1e-18 * max(1.0, abs(total)):
            break
    return total, last


def normalized_lattice_log(y, beta, n_max: Optional[int] = None) -> ValueWithError:
    """
    ln[(y/β) prod_{(m,n) != (0,0)} (1 + y/w) exp(-y/w + y²/(2w²))], w = m + nβ.

    Row n = 0 is -ln Γ(1+y) - γy + π²y²/12; row n >= 1 is
    ln Γ(c) - ln Γ(c+y) + y ψ(c) + (y²/2) ψ'(c) with c = nβ; rows beyond n_max
    come from _row_tail. β only needs the lattice to avoid 0 (β = -α is allowed).
    """
    n_max = config.LATTICE_N_MAX if n_max is None else n_max
    if n_max < 1:
        raise DomainError(f"n_max must be >= 1, got {n_max}")
    y, beta = as_number(y), as_number(beta)
    if y == 0:
        raise ZeroError("the lattice product vanishes at x = 0")
    gamma = euler_gamma()
    try:
        row0 = -log_gamma(1 + y).value - gamma * y + math.pi ** 2 * y * y / 12
        cs, lg, psi, tri = _row_terms(beta, n_max)
        shifted = np.array([complex(log_gamma(c + y).value) for c in cs])
    except PoleError as e:
        raise ZeroError(f"x = {y} is a lattice zero for β = {beta}") from e
    rows = lg - shifted + y * psi + 0.5 * y * y * tri
    tail, last = _row_tail(y, beta, n_max)
    value = _log(y / beta) + row0 + complex(np.sum(rows)) + tail
    err = 8 * EPS * float(np.sum(np.abs(lg))) + last
    return ValueWithError(_tidy(value), err, RouteTag.LATTICE_PRODUCT)


def lattice_product(x, alpha, constants: Optional[LatticeConstants] = None, n_max: Optional[int] = None) -> ValueWithError:
    """
    ln G(x; α) = a x + b x² + ln[(x/α) prod (1 + x/w) exp(-x/w + x²/(2w²))].

    constants default to lattice_constants(alpha). abs_error includes the
    row-tail remainder and the error of a and b.
    """
    x, alpha = as_number(x), _check_alpha(alpha)
    if is_lattice_zero(x, alpha):
        raise ZeroError(f"G(x; α) vanishes at x = {x} (α = {alpha})")
    constants = constants or lattice_constants(alpha)
    core = normalized_lattice_log(x, alpha, n_max)
    value = constants.a * x + constants.b * x * x + core.value
    err = core.abs_error + constants.abs_error * (abs(x) + abs(x) ** 2)
    return ValueWithError(_tidy(value), err, RouteTag.LATTICE_PRODUCT)


def lattice_check(x, alpha, tolerance: float = 1e-6) -> IdentityReport:
    """Weierstrass product with computed constants against the integral."""
    x, alpha = as_number(x), _check_alpha(alpha)
    constants = lattice_constants(alpha)
    lhs = lattice_product(x, alpha, constants).value
    rhs = log_g2(x, alpha).value
    gap = residuals(lattice_product(x, alpha, constants.as_printed()).value, rhs)[0]
    notes = (
        f"a = {constants.a!r}, b = {constants.b!r}; factor exp(-x/w + x^2/(2w^2)) and "
        f"a = ∂lnG + γ/α, b = ∂²lnG/2 - π²/(12α²); the printed signs of a, b are off by {gap:.3e}"
    )
    return make_report(IdentityId.G2_LATTICE, {"x": x, "alpha": alpha}, lhs, rhs, tolerance, notes=notes, printed_residual=gap)


# ============================================================================
# Reflection q-product
# ============================================================================

class QInterpretation(str, Enum):
    AS_PRINTED = "as-printed"              # q = πiα, k >= 1
    EXPONENTIAL = "exponential"            # q = e^{πiα}, k >= 1
    EXPONENTIAL_FULL = "exponential-full"  # q = e^{πiα}, k >= 0


def q_of(alpha: Number, interpretation: QInterpretation) -> complex:
    interpretation = QInterpretation(interpretation)
    if interpretation is QInterpretation.AS_PRINTED:
        return 1j * math.pi * complex(alpha)
    return cmath.exp(1j * math.pi * complex(alpha))


def q_theta_product(x, q, k_max: int = 60, start: int = 1) -> ValueWithError:
    """
    ln prod_{k=start}^{k_max} (1 - q^{2k} e^{2πix}) with a geometric tail bound.

    Raises
    ------
    DomainError for |q| >= 1
    ZeroError   when a factor vanishes
    """
    x, q = as_number(x), complex(q)
    if abs(q) >= 1:
        raise DomainError(f"q-product diverges for |q| = {abs(q):.6g} >= 1")
    if start not in (0, 1):
        raise DomainError(f"start must be 0 or 1, got {start}")
    z = cmath.exp(2j * math.pi * x)
    if q == 0:
        if start == 0:
            if abs(1 - z) < EPS:
                raise ZeroError(f"factor 1 - e^(2πix) vanishes at x = {x}")
            return ValueWithError(_tidy(complex(np.log1p(-z))), EPS, RouteTag.Q_PRODUCT)
        return ValueWithError(0.0, 0.0, RouteTag.Q_PRODUCT)
    k = np.arange(start, k_max + 1)
    t = np.power(q, 2 * k) * z
    factors = 1 - t
    if np.any(np.abs(factors) < EPS):
        raise ZeroError(f"a factor of the q-product vanishes at x = {x}")
    value = complex(np.sum(np.log1p(-t)))
    nxt = abs(q) ** (2 * (k_max + 1)) * abs(z)
    tail = nxt / ((1 - abs(q) ** 2) * (1 - nxt)) if nxt < 1 else math.inf
    if not math.isfinite(tail):
        raise DomainError(f"k_max = {k_max} too small for a bounded tail at x = {x}")
    return ValueWithError(_tidy(value), tail + 4 * EPS * len(k), RouteTag.Q_PRODUCT)


def default_reflection_samples(count: int = 16) -> List[complex]:
    """Points on a short segment away from the zeros m - nα of both sides."""
    t = np.linspace(0.0, 1.0, count)
    return [complex(0.2 + 0.05j + s * (0.6 + 0.2j)) for s in t]


@dataclass
class ReflectionDiagnostic:
    """Outcome of fitting ln C + c1 x + c2 x² between both sides of the reflection formula."""
    alpha: complex
    interpretation: QInterpretation
    q: complex
    log_c: complex
    coefficients: Tuple[complex, complex]
    residual_variance: float
    split_difference: float
    holdout_residual: float
    holdout_point: complex = 0j
    holdout_lhs: complex = 0j
    holdout_rhs: complex = 0j
    samples: int = 0
    notes: List[str] = field(default_factory=list)


def _fit(xs: np.ndarray, d: np.ndarray) -> np.ndarray:
    design = np.stack([np.ones_like(xs), xs, xs * xs], axis=1)
    coef, *_ = np.linalg.lstsq(design, d, rcond=None)
    return coef


def _predict(coef: np.ndarray, xs: np.ndarray) -> np.ndarray:
    return coef[0] + coef[1] * xs + coef[2] * xs * xs


def reflection_diagnostic(
    alpha,
    q_interpretation: QInterpretation = QInterpretation.EXPONENTIAL_FULL,
    sample_xs: Optional[Sequence[complex]] = None,
    n_max: Optional[int] = None,
    k_max: int = _Q_PRODUCT_TERMS,
) -> ReflectionDiagnostic:
    """
    Compare G(1+x; α) G(-x; -α) with O(x) = prod (1 - q^{2k} e^{2πix}).

    Both G factors come from the normalized lattice product, so the unknown
    constants of G(·; -α) sit in the fitted quadratic. The fit uses complex
    least squares after unwrapping the imaginary part along the samples;
    split-sample stability fits even and odd samples separately.

    Raises DomainError when |q| >= 1 for the chosen interpretation.
    """
    interpretation = QInterpretation(q_interpretation)
    alpha = complex(_check_alpha(alpha))
    q = q_of(alpha, interpretation)
    if abs(q) >= 1:
        raise DomainError(f"{interpretation.value}: |q| = {abs(q):.6g} >= 1, the product diverges")
    xs = np.array(list(sample_xs) if sample_xs is not None else default_reflection_samples(), dtype=complex)
    if xs.size < 6:
        raise DomainError(f"need at least 6 sample points, got {xs.size}")
    start = 0 if interpretation is QInterpretation.EXPONENTIAL_FULL else 1

    lhs = np.array([
        complex(normalized_lattice_log(1 + x, alpha, n_max).value) + complex(normalized_lattice_log(-x, -alpha, n_max).value)
        for x in xs
    ])
    rhs = np.array([complex(q_theta_product(x, q, k_max, start).value) for x in xs])
    d = lhs - rhs
    d = d.real + 1j * np.unwrap(d.imag)

    coef = _fit(xs, d)
    resid = d - _predict(coef, xs)
    variance = float(np.mean(np.abs(resid) ** 2))

    even, odd = xs[::2], xs[1::2]
    coef_even = _fit(even, d[::2])
    coef_odd = _fit(odd, d[1::2])
    predicted = _predict(coef_even, odd)
    held = np.abs(d[1::2] - predicted)
    worst = int(np.argmax(held))

    diag = ReflectionDiagnostic(
        alpha=alpha,
        interpretation=interpretation,
        q=q,
        log_c=complex(coef[0]),
        coefficients=(complex(coef[1]), complex(coef[2])),
        residual_variance=variance,
        split_difference=float(abs(coef_even[0] - coef_odd[0])),
        holdout_residual=float(held[worst]),
        holdout_point=complex(odd[worst]),
        holdout_lhs=complex(d[1::2][worst]),
        holdout_rhs=complex(predicted[worst]),
        samples=int(xs.size),
    )
    logger.info("reflection %s α=%s: variance %.3e, split ΔlnC %.3e", interpretation.value, alpha, variance, diag.split_difference)
    return diag


def reflection_check(alpha, tolerance: float = 1e-6) -> IdentityReport:
    """
    Runs every q interpretation. The report carries the full exponential
    reading (held-out residual of the fitted model); the others go to notes.
    """
    alpha = complex(_check_alpha(alpha))
    outcomes = {}
    for interpretation in QInterpretation:
        try:
            outcomes[interpretation] = reflection_diagnostic(alpha, interpretation)
        except DomainError as e:
            outcomes[interpretation] = e
    notes = []
    for interpretation, out in outcomes.items():
        if isinstance(out, ReflectionDiagnostic):
            notes.append(
                f"{interpretation.value}: variance {out.residual_variance:.3e}, "
                f"held-out {out.holdout_residual:.3e}, split ΔlnC {out.split_difference:.3e}"
            )
        else:
            notes.append(f"{interpretation.value}: {type(out).__name__} ({out})")
    printed = outcomes[QInterpretation.AS_PRINTED]
    printed_gap = printed.holdout_residual if isinstance(printed, ReflectionDiagnostic) else math.inf
    full = outcomes[QInterpretation.EXPONENTIAL_FULL]
    if not isinstance(full, ReflectionDiagnostic):
        raise full
    return make_report(
        IdentityId.REFLECTION,
        {"alpha": alpha, "samples": full.samples},
        full.holdout_lhs,
        full.holdout_rhs,
        tolerance,
        notes="; ".join(notes),
        log_space=False,
        printed_residual=printed_gap,
    )
