"""
Exact reference values at integer arguments and slow brute-force sums.

Every recursively defined function of the family is unrolled from its value
1 at argument 1 in exact rational arithmetic. Values grow super-exponentially,
so arguments are capped at config.ORACLE_MAX_ARGUMENT.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np

from . import config
from .errors import DomainError, OracleOverflow

ExactValue = Fraction


def _check(n: int, what: str):
    if n < 1:
        raise DomainError(f"{what} oracle needs an argument >= 1, got {n}")
    if n > config.ORACLE_MAX_ARGUMENT:
        raise OracleOverflow(
            f"{what}({n}) exceeds the oracle cap {config.ORACLE_MAX_ARGUMENT}"
        )


def g_integer(n: int) -> ExactValue:
    """G(n) = prod_{k=1}^{n-2} k!, from G(x+1) = Γ(x) G(x) and G(1) = 1."""
    _check(n, "G")
    return Fraction(math.prod(math.factorial(k) for k in range(1, n - 1)))


def k_integer(n: int) -> ExactValue:
    """K(n) = prod_{j=1}^{n-1} j^j, from K(x+1) = x^x K(x) and K(1) = 1."""
    _check(n, "K")
    return Fraction(math.prod(j ** j for j in range(1, n)))


def kn_integer(order: int, n: int) -> ExactValue:
    """K_order(n) = prod_{j=1}^{n-1} j^(j^order)."""
    _check(n, f"K_{order}")
    if order < 0:
        raise DomainError(f"K_n order must be >= 0, got {order}")
    return Fraction(math.prod(j ** (j ** order) for j in range(1, n)))


@lru_cache(maxsize=None)
def gn_integer(order: int, n: int) -> ExactValue:
    """
    G_order(n) from G_m(x+1) = G_{m-1}(x) G_m(x), G_m(1) = 1,
    with G_1 = Γ and G_0(x) = x.
    """
    _check(n, f"G_{order}")
    if order < 0:
        raise DomainError(f"G_n order must be >= 0, got {order}")
    if order == 0:
        return Fraction(n)
    if order == 1:
        return Fraction(math.factorial(n - 1))
    value = Fraction(1)
    for k in range(1, n):
        value *= gn_integer(order - 1, k)
    return value


def superfactorial_ratio(n: int) -> ExactValue:
    """(n!)^n / (1^1 2^2 ... n^n), the corrected closed form of G(n+1)."""
    _check(n + 1, "G")
    return Fraction(math.factorial(n) ** n, math.prod(j ** j for j in range(1, n + 1)))


def log_exact(value: ExactValue) -> float:
    """ln of a positive rational without overflowing binary64."""
    if value <= 0:
        raise DomainError(f"log_exact needs a positive value, got {value}")
    num, den = value.numerator, value.denominator
    return _log_int(num) - _log_int(den)


def _log_int(n: int) -> float:
    bits = n.bit_length()
    if bits < 1000:
        return math.log(n)
    shift = bits - 60
    return math.log(n >> shift) + shift * math.log(2.0)


def lattice_sum_brute(x: complex, alpha: complex, power: int, n_max: int) -> complex:
    """
    sum over 0 <= m, n <= n_max, (m, n) != (0, 0), of (x + m + n α)^(-power).

    Direct double sum (numpy, one row of m at a time); used to measure how
    fast the quarter-lattice tails decay.
    """
    if power < 2:
        raise DomainError(f"power must be >= 2, got {power}")
    if complex(alpha).real <= 0:
        raise DomainError(f"lattice sums need Re α > 0, got α = {alpha}")
    m = np.arange(n_max + 1, dtype=complex)
    total = 0j
    for n in range(n_max + 1):
        w = x + m + n * complex(alpha)
        if n == 0:
            w = w[1:]
        if np.any(w == 0):
            raise DomainError(f"x = {x} hits a lattice point")
        total += complex(np.sum(w ** (-power)))
    return total
