"""
Integrands of the Malmsten-type representations.

Every factory returns a vectorised integrand for quadrature.integrate_semi_infinite.
Near u = 0 the printed braces cancel to high order, so each integrand switches
to a truncated power series below a small cutoff; the series coefficients are
assembled with numpy convolutions of the generating functions

    u/(1 - e^{-u})   = sum (-1)^n B_n u^n / n!
    u/(1 - e^{-au})  = (1/a) sum (-1)^n B_n a^n u^n / n!
    e^{cu}           = sum c^n u^n / n!
"""

from __future__ import annotations

import math
from functools import lru_cache
from typing import Callable

import numpy as np
from numpy.polynomial import polynomial as P

from .special_base import Number, bernoulli_number

Integrand = Callable[[np.ndarray], np.ndarray]

_SERIES_ORDER = 18
_SMALL_U = 0.1
_PN_SMALL_U = 0.25
_PN_BINOMIAL_TERMS = 40


@lru_cache(maxsize=None)
def _bernoulli_over_factorial(order: int) -> np.ndarray:
    return np.array([float(bernoulli_number(n)) / math.factorial(n) for n in range(order + 1)])


def exp_series(c: Number, order: int = _SERIES_ORDER) -> np.ndarray:
    """Coefficients of e^{c u}."""
    n = np.arange(order + 1)
    fact = np.array([math.factorial(k) for k in n], dtype=float)
    return np.power(complex(c), n) / fact if isinstance(c, complex) else np.power(float(c), n) / fact


def inverse_one_minus_exp_series(a: Number = 1.0, order: int = _SERIES_ORDER) -> np.ndarray:
    """Coefficients of u / (1 - e^{-a u})."""
    bn = _bernoulli_over_factorial(order)
    n = np.arange(order + 1)
    return (1.0 / a) * bn * np.power(-a if isinstance(a, complex) else -float(a), n)


def _mul(*series: np.ndarray, order: int = _SERIES_ORDER) -> np.ndarray:
    out = np.array([1.0])
    for s in series:
        out = np.convolve(out, s)[: order + 1]
    return out


def _shift(series: np.ndarray, k: int, order: int = _SERIES_ORDER) -> np.ndarray:
    return np.concatenate([np.zeros(k), series])[: order + 1]


def _pad(series: np.ndarray, order: int = _SERIES_ORDER) -> np.ndarray:
    out = np.zeros(order + 1, dtype=series.dtype)
    out[: min(len(series), order + 1)] = series[: order + 1]
    return out


def _split(u: np.ndarray, small: Callable, large: Callable, cutoff: float) -> np.ndarray:
    u = np.asarray(u, dtype=float)
    lo = u < cutoff
    first = small(u[lo]) if np.any(lo) else np.zeros(0)
    second = large(u[~lo]) if np.any(~lo) else np.zeros(0)
    dtype = np.result_type(first, second, float)
    out = np.empty(u.shape, dtype=dtype)
    out[lo] = first
    out[~lo] = second
    return out


# ============================================================================
# Malmsten integral for ln Γ
# ============================================================================

def malmsten_integrand(z: Number) -> Integrand:
    """
    ln Γ(z) = ∫ [(z-1) e^{-u} - (e^{-u} - e^{-zu})/(1 - e^{-u})] du/u, Re z > 0.

    Rewritten as e^{-u}[(z-1) + expm1(-(z-1)u)/D]/u with D = 1 - e^{-u}.
    """
    c = z - 1
    # (z-1) + expm1(-cu)/D = c - c * [sum (-cu)^k/(k+1)!] * [u/D] / ... with the u cancelled
    k = np.arange(_SERIES_ORDER + 1)
    fact = np.array([math.factorial(j + 1) for j in k], dtype=float)
    expm1_over_u = -c * np.power(-c, k) / fact
    bracket = _mul(expm1_over_u, inverse_one_minus_exp_series(1.0))
    bracket[0] += c
    coeffs = bracket[1:]  # bracket = O(u); integrand = e^{-u} * bracket / u

    def small(u):
        return np.exp(-u) * P.polyval(u, coeffs)

    def large(u):
        d = -np.expm1(-u)
        if isinstance(c, complex):
            e1 = np.expm1(-c * u.astype(complex))
        else:
            e1 = np.expm1(-c * u)
        return np.exp(-u) * (c + e1 / d) / u

    return lambda u: _split(u, small, large, _SMALL_U)


# ============================================================================
# Two-period kernel for ln G(x; α) and its x-derivatives
# ============================================================================

def _two_period_series(x: Number, alpha: Number, derivative: int) -> np.ndarray:
    """Coefficients of u^2 * d^k/dx^k L(x, u), k = derivative."""
    ea = exp_series(-alpha)
    a1 = inverse_one_minus_exp_series(1.0)
    aa = inverse_one_minus_exp_series(alpha)
    if derivative == 0:
        k1 = (x - 1) * (x - 2 * alpha) / (2 * alpha)
        parts = [
            k1 * _shift(ea, 2),
            -(x - 1) * _shift(_mul(ea, aa), 1),
            _mul(exp_series(-1.0) - exp_series(-x), a1, aa),
        ]
    elif derivative == 1:
        parts = [
            (2 * x - 1 - 2 * alpha) / (2 * alpha) * _shift(ea, 2),
            -_shift(_mul(ea, aa), 1),
            _shift(_mul(exp_series(-x), a1, aa), 1),
        ]
    else:
        parts = [
            _shift(ea, 2) / alpha,
            -_shift(_mul(exp_series(-x), a1, aa), 2),
        ]
    total = sum(_pad(p) for p in parts)
    # u^2 L = O(u^3): orders 0..2 cancel analytically
    return total[3:]


def two_period_integrand(x: Number, alpha: Number, derivative: int = 0) -> Integrand:
    """
    Integrand of ln G(x; α) = ∫_0^∞ L(x, u) du/u, or of its first or second
    x-derivative, with

        L = e^{-αu} (x-1)(x-2α)/(2α) - (x-1) e^{-αu}/(1-e^{-αu})
            + (e^{-u} - e^{-xu}) / ((1-e^{-u})(1-e^{-αu}))
    """
    coeffs = _two_period_series(x, alpha, derivative)
    cplx = isinstance(x, complex) or isinstance(alpha, complex)

    def small(u):
        return P.polyval(u, coeffs)

    def large(u):
        uu = u.astype(complex) if cplx else u
        d1 = -np.expm1(-uu)
        da = -np.expm1(-alpha * uu)
        ea = np.exp(-alpha * uu)
        ex = np.exp(-x * uu)
        if derivative == 0:
            body = (
                ea * (x - 1) * (x - 2 * alpha) / (2 * alpha)
                - (x - 1) * ea / da
                + (np.exp(-uu) - ex) / (d1 * da)
            )
        elif derivative == 1:
            body = ea * (2 * x - 1 - 2 * alpha) / (2 * alpha) - ea / da + uu * ex / (d1 * da)
        else:
            body = ea / alpha - uu * uu * ex / (d1 * da)
        return body / uu

    return lambda u: _split(u, small, large, _SMALL_U)


def two_period_integrand_printed_measure(x: Number, alpha: Number) -> Integrand:
    """Same braces integrated against du/(1-e^{-u}) instead of du/u."""
    base = two_period_integrand(x, alpha)
    a1 = inverse_one_minus_exp_series(1.0)

    def weight(u):
        return _split(
            u,
            lambda s: P.polyval(s, a1),
            lambda s: s / -np.expm1(-s),
            _SMALL_U,
        )

    return lambda u: base(u) * weight(u)


# ============================================================================
# P_n kernels for the multiple gammas G_n
# ============================================================================

def _binomials(x: Number, kmax: int):
    out = [1.0 + 0j if isinstance(x, complex) else 1.0]
    for k in range(1, kmax + 1):
        out.append(out[-1] * (x - k + 1) / k)
    return out


def pn_kernel(n: int, y: Number) -> Integrand:
    """
    P_n(y) as a function of u, written for y = x + 1:

        P_n(x+1) = sum_{i=0}^n (-1)^i C(x, n-i) D^{-i} + (-1)^{n+1} e^{-xu} D^{-n}

    with D = 1 - e^{-u}. For small u the binomial series of e^{-xu} = (1-D)^x
    cancels the polynomial part exactly and leaves
    (-1)^{n+1} sum_{k>n} (-1)^k C(x, k) D^{k-n}.
    """
    x = y - 1
    binom = _binomials(x, n + _PN_BINOMIAL_TERMS)
    cplx = isinstance(x, complex)

    def small(u):
        d = -np.expm1(-u)
        acc = np.zeros(u.shape, dtype=complex if cplx else float)
        dpow = d.copy()
        for k in range(n + 1, n + _PN_BINOMIAL_TERMS + 1):
            acc = acc + (-1) ** k * binom[k] * dpow
            dpow = dpow * d
        return (-1) ** (n + 1) * acc

    def large(u):
        d = -np.expm1(-u)
        acc = np.zeros(u.shape, dtype=complex if cplx else float)
        for i in range(n + 1):
            acc = acc + (-1) ** i * binom[n - i] * d ** (-i)
        uu = u.astype(complex) if cplx else u
        return acc + (-1) ** (n + 1) * np.exp(-x * uu) * d ** (-n)

    return lambda u: _split(u, small, large, _PN_SMALL_U)


def pn_integrand(n: int, y: Number) -> Integrand:
    """
    Integrand of ln G_n(y) = ∫ (e^{-u}/u) P_n(y) du.

    The e^{-u} factor is folded into the last term of the large-u form so that
    e^{-(x+1)u} never overflows for Re x < 0.
    """
    x = y - 1
    small_kernel = pn_kernel(n, y)
    binom = _binomials(x, n)
    cplx = isinstance(x, complex)

    def small(u):
        return np.exp(-u) * small_kernel(u) / u

    def large(u):
        d = -np.expm1(-u)
        acc = np.zeros(u.shape, dtype=complex if cplx else float)
        for i in range(n + 1):
            acc = acc + (-1) ** i * binom[n - i] * d ** (-i)
        uu = u.astype(complex) if cplx else u
        body = np.exp(-uu) * acc + (-1) ** (n + 1) * np.exp(-y * uu) * d ** (-n)
        return body / uu

    return lambda u: _split(u, small, large, _PN_SMALL_U)


# ============================================================================
# Double sine
# ============================================================================

@lru_cache(maxsize=None)
def _sinh_series(terms: int):
    """Even-power coefficients (in w = t^2) of sinh z / z and z / sinh z."""
    s = np.array([1.0 / math.factorial(2 * k + 1) for k in range(terms)])
    inv = np.array(
        [float((2 - 2 ** (2 * k)) * bernoulli_number(2 * k)) / math.factorial(2 * k) for k in range(terms)]
    )
    return s, inv


def double_sine_integrand(x: float, omega1: float, omega2: float) -> Integrand:
    """
    Integrand of ln S_2(x; ω1, ω2) for real positive periods:

        [ sinh((x-c)t) / (2 sinh(ω1 t/2) sinh(ω2 t/2)) - (2x-ω1-ω2)/(ω1 ω2 t) ] / t

    with c = (ω1+ω2)/2. Large t uses exponentials with negative exponents only;
    small t uses the even series of sinh z/z and z/sinh z.
    """
    a, b = 0.5 * omega1, 0.5 * omega2
    d = x - (a + b)
    terms = 12
    s, inv = _sinh_series(terms)
    scale_w = np.arange(terms)
    sd = s * d ** (2 * scale_w)
    ia = inv * a ** (2 * scale_w)
    ib = inv * b ** (2 * scale_w)
    prod = _mul(sd, ia, ib, order=terms - 1)
    coeffs = prod[1:]  # drop the constant 1
    pref = d / (2 * a * b)
    cutoff = 0.5 / max(a, b, abs(d), 1e-300)

    def small(t):
        return pref * P.polyval(t * t, coeffs)

    def large(t):
        num = np.exp((d - a - b) * t) - np.exp((-d - a - b) * t)
        den = np.expm1(-2 * a * t) * np.expm1(-2 * b * t)
        return (num / den - pref / t) / t

    return lambda t: _split(t, small, large, cutoff)
