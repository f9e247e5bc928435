"""
Classical building blocks consumed by every higher module.

Functions
---------
log_gamma(z)          ln Γ(z), Stirling with a Bernoulli tail plus recursion
digamma(z)            ψ(z)
polygamma(k, z)       ψ^(k)(z) via the Hurwitz zeta function
hurwitz_zeta(s, a)    ζ(s, a) by Euler–Maclaurin summation
riemann_zeta(s)       ζ(s) = ζ(s, 1)
bernoulli_number(n)   exact B_n (B_1 = -1/2)
bernoulli_poly(p, x)  B_p(x), exact for rational x
euler_gamma()         Euler's constant γ

All values are binary64; results carry an absolute error estimate and the
route tag of the algorithm that produced them.
"""

from __future__ import annotations

import cmath
import logging
import math
import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import List, Union

import numpy as np

from .errors import DomainError, PoleError

logger = logging.getLogger(__name__)

Number = Union[float, complex]

LN_2PI = math.log(2.0 * math.pi)
LN_PI = math.log(math.pi)
EPS = np.finfo(float).eps

# Stirling / Euler–Maclaurin settings
_STIRLING_MIN_ABS = 15.0
_STIRLING_TERMS = 10
_DIGAMMA_MIN_ABS = 12.0
_EM_TERMS = 10
_EM_START = 10
_REFLECT_BELOW = -20.0


class RouteTag(str, Enum):
    """Algorithm that produced a value."""
    EXACT = "exact"
    CLOSED_FORM = "closed-form"
    STIRLING = "stirling+recursion"
    REFLECTION = "reflection"
    ASYMPTOTIC_SERIES = "asymptotic-series"
    EULER_MACLAURIN = "euler-maclaurin"
    SERIES = "series"
    SERIES_RECURSION = "series+recursion"
    WEIERSTRASS = "weierstrass"
    ASYMPTOTIC = "asymptotic"
    ASYMPTOTIC_RECURSION = "asymptotic+recursion"
    INTEGRAL = "integral"
    EULER_LIMIT = "euler-limit"
    QUADRATURE = "quadrature"
    FINITE_DIFFERENCE = "finite-difference"
    LATTICE_PRODUCT = "lattice-product"
    Q_PRODUCT = "q-product"
    ZETA_SERIES = "zeta-series"
    PRELIMIT = "prelimit"
    INTEGRAL_OF_LN_K = "integral-of-ln-k"
    CONVERSION = "conversion"
    G_RATIO = "g-ratio"
    SINH_INTEGRAL = "sinh-integral"


@dataclass(frozen=True)
class ValueWithError:
    """A computed value, an absolute error bound and the route that produced it."""
    value: Number
    abs_error: float
    route: RouteTag

    def __post_init__(self):
        if not (self.abs_error >= 0.0):
            raise ValueError(f"abs_error must be >= 0, got {self.abs_error}")
        if not cmath.isfinite(complex(self.value)):
            raise DomainError(f"non-finite value {self.value} from route {self.route.value}")

    @property
    def real(self) -> float:
        return complex(self.value).real

    @property
    def imag(self) -> float:
        return complex(self.value).imag

    def exp(self) -> Number:
        if isinstance(self.value, complex):
            return cmath.exp(self.value)
        return math.exp(self.value)

    def with_route(self, route: RouteTag) -> "ValueWithError":
        return ValueWithError(self.value, self.abs_error, route)


def combine(route: RouteTag, *parts: ValueWithError, scale: Number = 1.0) -> ValueWithError:
    """Sum of parts (times scale) with their error bounds added."""
    total = sum(p.value for p in parts) * scale
    err = sum(p.abs_error for p in parts) * abs(scale)
    return ValueWithError(_tidy(total), err, route)


# ============================================================================
# Argument helpers
# ============================================================================

def as_number(z) -> Number:
    """Coerce ints, floats, numpy scalars and complex values to float or complex."""
    if isinstance(z, (complex, np.complexfloating)):
        return complex(z)
    if isinstance(z, Fraction):
        return float(z)
    try:
        return float(z)
    except TypeError:
        return complex(z)


def is_real(z: Number) -> bool:
    return not isinstance(z, complex) or z.imag == 0.0


def is_nonpositive_integer(z: Number) -> bool:
    if not is_real(z):
        return False
    r = complex(z).real
    return r <= 0.0 and r == math.floor(r)


def _tidy(v: Number) -> Number:
    """Drop a zero imaginary part produced by complex intermediates."""
    if isinstance(v, complex) and v.imag == 0.0:
        return v.real
    return v


def _log(z: Number) -> Number:
    if isinstance(z, complex) or z <= 0:
        return cmath.log(z)
    return math.log(z)


def log_sin_pi(z: Number) -> Number:
    """ln sin(πz), stable for large |Im z| (branch modulo 2πi)."""
    z = as_number(z)
    if is_real(z):
        s = math.sin(math.pi * complex(z).real)
        return _log(s)
    if abs(z.imag) < 1.0:
        return cmath.log(cmath.sin(math.pi * z))
    if z.imag > 0:
        tail = complex(np.log1p(-cmath.exp(2j * math.pi * z)))
        return -1j * math.pi * z + tail - math.log(2.0) + 0.5j * math.pi
    tail = complex(np.log1p(-cmath.exp(-2j * math.pi * z)))
    return 1j * math.pi * z + tail - math.log(2.0) - 0.5j * math.pi


# ============================================================================
# Bernoulli numbers and polynomials
# ============================================================================

class BernoulliCache:
    """Growable table of exact Bernoulli numbers B_0, B_1, ... (B_1 = -1/2)."""

    def __init__(self):
        self._numbers: List[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def get(self, n: int) -> Fraction:
        if n < 0:
            raise DomainError(f"Bernoulli index must be >= 0, got {n}")
        if n >= len(self._numbers):
            self._grow(n)
        return self._numbers[n]

    def _grow(self, n: int):
        with self._lock:
            table = self._numbers
            for m in range(len(table), n + 1):
                if m > 1 and m % 2 == 1:
                    table.append(Fraction(0))
                    continue
                # sum_{k=0}^{m} C(m+1, k) B_k = 0
                acc = Fraction(0)
                for k in range(m):
                    if table[k]:
                        acc += math.comb(m + 1, k) * table[k]
                table.append(-acc / (m + 1))
            logger.debug("Bernoulli table grown to B_%d", n)

    def __len__(self):
        return len(self._numbers)


_BERNOULLI = BernoulliCache()


def bernoulli_number(n: int) -> Fraction:
    """Exact Bernoulli number B_n with B_1 = -1/2."""
    return _BERNOULLI.get(int(n))


@lru_cache(maxsize=None)
def _bernoulli_float(n: int) -> float:
    return float(bernoulli_number(n))


@lru_cache(maxsize=None)
def _stirling_coeff(k: int) -> float:
    """B_{2k} / (2k (2k-1))"""
    return float(bernoulli_number(2 * k) / (2 * k * (2 * k - 1)))


@lru_cache(maxsize=None)
def _em_coeff(j: int) -> float:
    """B_{2j} / (2j)!"""
    return float(bernoulli_number(2 * j) / math.factorial(2 * j))


def bernoulli_poly(p: int, x):
    """
    Bernoulli polynomial B_p(x) = sum_k C(p, k) B_k x^(p-k).

    Exact (Fraction) when x is an int or Fraction, binary64 otherwise.
    """
    if p < 0:
        raise DomainError(f"Bernoulli polynomial degree must be >= 0, got {p}")
    if isinstance(x, (int, Fraction)):
        x = Fraction(x)
        return sum(math.comb(p, k) * bernoulli_number(k) * x ** (p - k) for k in range(p + 1))
    x = as_number(x)
    # Horner in x: coefficients of x^(p-k) are C(p, k) B_k
    acc: Number = 0.0
    for k in range(p + 1):
        acc = acc * x + math.comb(p, k) * _bernoulli_float(k)
    return acc


# ============================================================================
# Euler's constant
# ============================================================================

def euler_gamma_limit(n: int) -> float:
    """Raw limit form H_n - ln n (error about 1/(2n))."""
    k = np.arange(1, n + 1, dtype=float)
    return math.fsum(1.0 / k) - math.log(n)


@lru_cache(maxsize=None)
def euler_gamma() -> float:
    """γ from H_n - ln n with the Euler–Maclaurin correction, computed once."""
    n = 50
    value = euler_gamma_limit(n) - 0.5 / n
    for k in range(1, 8):
        value += _bernoulli_float(2 * k) / (2 * k * n ** (2 * k))
    logger.debug("euler_gamma cached: %r", value)
    return value


# ============================================================================
# Zeta functions
# ============================================================================

def _rising(s: Number, m: int) -> Number:
    acc: Number = 1.0
    for i in range(m):
        acc *= s + i
    return acc


def _power_sum(s: Number, a: Number, n: int) -> Number:
    """sum_{k=0}^{n-1} (a+k)^(-s), vectorised."""
    if n == 0:
        return 0.0
    k = np.arange(n, dtype=float)
    if isinstance(s, complex) or isinstance(a, complex):
        terms = np.exp(-complex(s) * np.log(complex(a) + k.astype(complex)))
        return complex(np.sum(terms))
    terms = np.power(a + k, -s)
    return math.fsum(terms)


def _hurwitz_em(s: Number, a: Number):
    """Euler–Maclaurin evaluation; returns (value, abs_error)."""
    n = max(0, int(math.ceil(_EM_START + 0.5 * abs(s) - complex(a).real)))
    while True:
        w = a + n
        direct = _power_sum(s, a, n)
        tail = w ** (1 - s) / (s - 1) + 0.5 * w ** (-s)
        wpow = w ** (-s - 1)
        w2 = 1.0 / (w * w)
        corr: Number = 0.0
        for j in range(1, _EM_TERMS + 1):
            corr += _em_coeff(j) * _rising(s, 2 * j - 1) * wpow
            wpow *= w2
        drop = abs(_em_coeff(_EM_TERMS + 1) * _rising(s, 2 * _EM_TERMS + 1) * wpow)
        value = direct + tail + corr
        if drop <= 1e-16 * abs(value) or n > 100_000:
            err = drop + 4 * EPS * (abs(direct) + abs(tail) + abs(corr))
            return value, err
        n += max(8, n // 2)


def hurwitz_zeta(s, a) -> ValueWithError:
    """
    Hurwitz zeta ζ(s, a) = sum_{k>=0} (a+k)^(-s).

    Euler–Maclaurin with 10 correction terms; the summation cutoff grows
    until the first dropped correction is below 1e-16 of the result.

    Raises
    ------
    PoleError   at s = 1
    DomainError for Re a <= 0
    """
    s, a = as_number(s), as_number(a)
    if s == 1:
        raise PoleError("ζ(s, a) has a pole at s = 1")
    if complex(a).real <= 0:
        raise DomainError(f"hurwitz_zeta requires Re a > 0, got a = {a}")
    if isinstance(s, float) and isinstance(a, float) and s == math.floor(s) and a == math.floor(a) and s > 1:
        value, err = _zeta_integer_cached(int(s), int(a))
    else:
        value, err = _hurwitz_em(s, a)
    return ValueWithError(_tidy(value), err, RouteTag.EULER_MACLAURIN)


@lru_cache(maxsize=4096)
def _zeta_integer_cached(s: int, a: int):
    return _hurwitz_em(float(s), float(a))


def riemann_zeta(s) -> ValueWithError:
    """Riemann zeta ζ(s), through the Hurwitz code path with a = 1."""
    return hurwitz_zeta(s, 1.0)


def zeta_value(s, a=1.0) -> Number:
    """Bare ζ(s, a) value for inner loops."""
    return hurwitz_zeta(s, a).value


# ============================================================================
# Gamma and polygamma
# ============================================================================

def _stirling(w: Number):
    """ln Γ(w) for |w| >= 15, Re w > 0; returns (value, first dropped term)."""
    lw = _log(w)
    value = (w - 0.5) * lw - w + 0.5 * LN_2PI
    inv = 1.0 / w
    inv2 = inv * inv
    term_pow = inv
    for k in range(1, _STIRLING_TERMS + 1):
        value += _stirling_coeff(k) * term_pow
        term_pow *= inv2
    return value, abs(_stirling_coeff(_STIRLING_TERMS + 1) * term_pow)


def log_gamma(z) -> ValueWithError:
    """
    ln Γ(z) on the branch that is real on the positive real axis.

    Stirling's series with ten Bernoulli terms after an upward shift to
    |w| >= 15; the shift is subtracted as a sum of logarithms so the result
    stays continuous in z. Reflection handles Re z < -20.
    """
    z = as_number(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"Γ has a pole at z = {z}")

    if complex(z).real < _REFLECT_BELOW:
        # ln Γ(z) = ln π - ln sin πz - ln Γ(1-z)
        other = log_gamma(1 - z)
        value = LN_PI - log_sin_pi(z) - other.value
        err = other.abs_error + 4 * EPS * abs(value)
        return ValueWithError(_tidy(complex(value)), err, RouteTag.REFLECTION)

    w = z
    shift: Number = 0.0
    real_positive = is_real(z) and complex(z).real > 0
    if real_positive:
        z = complex(z).real
        w = z
        prod = 1.0
        while w < _STIRLING_MIN_ABS:
            prod *= w
            w += 1.0
        shift = math.log(prod)
    else:
        while abs(w) < _STIRLING_MIN_ABS or complex(w).real < 0.5:
            shift += _log(w)
            w += 1.0
    value, drop = _stirling(w)
    value = value - shift
    err = drop + 8 * EPS * (abs(value) + abs(shift) + 1.0)
    return ValueWithError(_tidy(value), err, RouteTag.STIRLING)


def _digamma_asymptotic(w: Number) -> Number:
    value = _log(w) - 0.5 / w
    inv2 = 1.0 / (w * w)
    term_pow = inv2
    for k in range(1, _STIRLING_TERMS + 1):
        value -= _bernoulli_float(2 * k) / (2 * k) * term_pow
        term_pow *= inv2
    return value


def digamma(z) -> ValueWithError:
    """ψ(z) = d/dz ln Γ(z)."""
    z = as_number(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"ψ has a pole at z = {z}")
    if complex(z).real < 0.5:
        # ψ(z) = ψ(1-z) - π cot πz
        other = digamma(1 - z)
        cot = 1.0 / cmath.tan(math.pi * z) if isinstance(z, complex) else 1.0 / math.tan(math.pi * z)
        value = other.value - math.pi * cot
        return ValueWithError(_tidy(value), other.abs_error + 8 * EPS * abs(value), RouteTag.REFLECTION)
    shift: Number = 0.0
    w = z
    while abs(w) < _DIGAMMA_MIN_ABS:
        shift += 1.0 / w
        w += 1.0
    value = _digamma_asymptotic(w) - shift
    err = 8 * EPS * (abs(value) + abs(shift) + 1.0)
    return ValueWithError(_tidy(value), err, RouteTag.ASYMPTOTIC_SERIES)


def polygamma(k: int, z) -> ValueWithError:
    """
    ψ^(k)(z), the (k+1)-th derivative of ln Γ; k = 0 is digamma.

    For k >= 1: (-1)^(k+1) k! ζ(k+1, z), shifted upward when Re z <= 0.
    """
    if k < 0:
        raise DomainError(f"polygamma order must be >= 0, got {k}")
    if k == 0:
        return digamma(z)
    z = as_number(z)
    if is_nonpositive_integer(z):
        raise PoleError(f"ψ^({k}) has a pole at z = {z}")
    sign = -1.0 if k % 2 == 0 else 1.0
    fact = math.factorial(k)
    shift: Number = 0.0
    w = z
    if complex(z).real <= 0.5:
        n = int(math.ceil(1.0 - complex(z).real))
        j = np.arange(n, dtype=float)
        if isinstance(z, complex):
            shift = complex(np.sum((z + j) ** (-(k + 1))))
        else:
            shift = math.fsum((z + j) ** (-(k + 1)))
        w = z + n
    zeta = hurwitz_zeta(k + 1, w)
    # ψ^(k)(z) = ψ^(k)(z+n) - (-1)^k k! sum (z+j)^(-k-1)
    value = sign * fact * (zeta.value + shift)
    err = fact * (zeta.abs_error + 4 * EPS * abs(shift))
    return ValueWithError(_tidy(value), err, RouteTag.EULER_MACLAURIN)


def log_gamma_multiplication_rhs(n: int, x, upper: int = None) -> Number:
    """
    Right side of the Gauss multiplication theorem in ln-space.

    sum_{j=0}^{upper} ln Γ(x + j/n) - (n-1)/2 ln 2π - (1/2 - n x) ln n, which
    equals ln Γ(n x) when upper = n - 1.
    """
    if upper is None:
        upper = n - 1
    total = sum(log_gamma(x + j / n).value for j in range(upper + 1))
    return total - 0.5 * (n - 1) * LN_2PI - (0.5 - n * x) * math.log(n)
