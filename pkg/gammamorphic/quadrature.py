"""
Double-exponential quadrature and Richardson-extrapolated differentiation.

Functions
---------
integrate_semi_infinite(f, tol)   exp-sinh rule on (0, ∞)
integrate_finite(f, a, b, tol)    tanh-sinh rule on (a, b)
derivative_at(f, x0, order, h)    central differences + Richardson

Integrands are called with a numpy array of nodes and must return an array
of the same shape (real or complex). Nodes never touch the endpoints, so a
removable singularity at an endpoint is harmless provided the integrand is
written in a form that stays finite there.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from . import config
from .errors import DomainError, NoisyFunction, NonConvergence, SingularIntegrand
from .special_base import EPS, Number, RouteTag, ValueWithError

logger = logging.getLogger(__name__)

_PI_OVER_2 = math.pi / 2.0

# Window in the transformed variable; beyond it the weights underflow.
_EXP_SINH_WINDOW = 6.0
_TANH_SINH_WINDOW = 4.0
_MIN_LEVEL = 3

Integrand = Callable[[np.ndarray], np.ndarray]


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with its error estimate and cost."""
    value: Number
    abs_error: float
    evaluations: int
    levels: int = 0

    def as_value(self, route: RouteTag = RouteTag.QUADRATURE) -> ValueWithError:
        return ValueWithError(self.value, self.abs_error, route)


def pointwise(fn: Callable, dtype=float) -> Integrand:
    """Wrap a scalar function so it accepts node arrays."""
    return np.vectorize(fn, otypes=[dtype])


def _exp_sinh_nodes(tau: np.ndarray):
    s = _PI_OVER_2 * np.sinh(tau)
    u = np.exp(s)
    w = _PI_OVER_2 * np.cosh(tau) * u
    return u, w


def _tanh_sinh_nodes(a: float, b: float):
    half = 0.5 * (b - a)

    def nodes(tau: np.ndarray):
        s = _PI_OVER_2 * np.sinh(tau)
        e = np.exp(-2.0 * np.abs(s))
        # distance from the nearest endpoint, computed without cancellation
        d = half * 2.0 * e / (1.0 + e)
        x = np.where(tau < 0, a + d, b - d)
        w = half * _PI_OVER_2 * np.cosh(tau) * 4.0 * e / (1.0 + e) ** 2
        inside = (d > 0) & (x > a) & (x < b)
        return x[inside], w[inside]

    return nodes


def _weighted_sum(f: Integrand, nodes, tau: np.ndarray):
    x, w = nodes(tau)
    keep = w > 0
    x, w = x[keep], w[keep]
    with np.errstate(over="ignore", under="ignore", invalid="ignore", divide="ignore"):
        values = np.asarray(f(x))
    finite = np.isfinite(values)
    if not np.all(finite):
        bad = x[~finite][0]
        raise SingularIntegrand(f"integrand is not finite at node {bad!r}")
    return np.sum(values * w), int(x.size)


def _refine(f: Integrand, nodes, window: float, tol: float, max_depth: int, what: str) -> QuadratureResult:
    """Dyadic refinement of the trapezoidal rule in the transformed variable."""
    h = 1.0
    tau = np.arange(-window, window + 0.5 * h, h)
    total, evaluations = _weighted_sum(f, nodes, tau)
    estimate = h * total
    diff = math.inf
    for level in range(1, max_depth + 1):
        h *= 0.5
        tau = np.arange(-window + h, window, 2.0 * h)
        part, n = _weighted_sum(f, nodes, tau)
        total = total + part
        evaluations += n
        new = h * total
        diff = abs(new - estimate)
        estimate = new
        logger.debug("%s level %d: estimate=%r diff=%.3e", what, level, estimate, diff)
        if level >= _MIN_LEVEL and diff <= tol * max(1.0, abs(estimate)):
            return QuadratureResult(_plain(estimate), float(diff), evaluations, level)
    raise NonConvergence(
        f"{what}: successive levels still differ by {diff:.3e} after depth {max_depth}",
        estimate=_plain(estimate),
        abs_error=float(diff),
    )


def _plain(v) -> Number:
    v = complex(v) if np.iscomplexobj(v) else float(v)
    if isinstance(v, complex) and v.imag == 0.0:
        return v.real
    return v


def integrate_semi_infinite(
    f: Integrand,
    tol: Optional[float] = None,
    max_depth: Optional[int] = None,
) -> QuadratureResult:
    """
    ∫_0^∞ f(u) du by the exp-sinh transformation u = exp(π/2 sinh τ).

    Parameters
    ----------
    f         : vectorised integrand, finite on (0, ∞), decaying exponentially
    tol       : agreement required between successive levels (default config.QUAD_TOL)
    max_depth : maximum number of halvings (default config.MAX_QUAD_DEPTH)

    Raises
    ------
    NonConvergence    refinement did not settle within max_depth levels
    SingularIntegrand f returned a non-finite value at some node
    """
    tol = config.QUAD_TOL if tol is None else tol
    max_depth = config.MAX_QUAD_DEPTH if max_depth is None else max_depth
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    return _refine(f, _exp_sinh_nodes, _EXP_SINH_WINDOW, tol, max_depth, "exp-sinh")


def integrate_finite(
    f: Integrand,
    a: float,
    b: float,
    tol: Optional[float] = None,
    max_depth: Optional[int] = None,
) -> QuadratureResult:
    """∫_a^b f(x) dx by the tanh-sinh transformation (endpoint singularities allowed)."""
    tol = config.QUAD_TOL if tol is None else tol
    max_depth = config.MAX_QUAD_DEPTH if max_depth is None else max_depth
    if tol <= 0:
        raise DomainError(f"tol must be positive, got {tol}")
    if a == b:
        return QuadratureResult(0.0, 0.0, 0, 0)
    if a > b:
        r = integrate_finite(f, b, a, tol, max_depth)
        return QuadratureResult(-r.value, r.abs_error, r.evaluations, r.levels)
    return _refine(f, _tanh_sinh_nodes(float(a), float(b)), _TANH_SINH_WINDOW, tol, max_depth, "tanh-sinh")


# ============================================================================
# Differentiation
# ============================================================================

def _central(f: Callable, x0: float, h: float, order: int):
    if order == 1:
        return (f(x0 + h) - f(x0 - h)) / (2.0 * h)
    return (f(x0 + h) - 2.0 * f(x0) + f(x0 - h)) / (h * h)


def derivative_with_error(f: Callable, x0: float, order: int = 1, h: float = 1e-2) -> ValueWithError:
    """
    order-th derivative of a scalar function by central differences at
    h, h/2, h/4 with a two-step Richardson tableau.

    Raises NoisyFunction when the tableau diverges above the rounding floor.
    """
    if order not in (1, 2):
        raise DomainError(f"order must be 1 or 2, got {order}")
    if not h > 0:
        raise DomainError(f"step h must be positive, got {h}")
    d = [_central(f, x0, h / 2 ** i, order) for i in range(3)]
    r1 = [d[1] + (d[1] - d[0]) / 3.0, d[2] + (d[2] - d[1]) / 3.0]
    r2 = r1[1] + (r1[1] - r1[0]) / 15.0

    scale = max(1.0, abs(f(x0 + h)), abs(f(x0 - h)))
    noise = 64.0 * EPS * scale / (h / 4.0) ** order
    first, second = abs(d[1] - d[0]), abs(d[2] - d[1])
    if second > first and second > noise:
        raise NoisyFunction(
            f"Richardson tableau diverges at x0={x0}, h={h}: corrections {first:.3e} -> {second:.3e}",
            estimate=r2,
            abs_error=second,
        )
    err = abs(r2 - r1[1]) + noise
    value = r2
    if isinstance(value, complex) and value.imag == 0.0:
        value = value.real
    return ValueWithError(value, float(err), RouteTag.FINITE_DIFFERENCE)


def derivative_at(f: Callable, x0: float, order: int = 1, h: float = 1e-2) -> float:
    """Richardson-extrapolated central-difference derivative (value only)."""
    return derivative_with_error(f, x0, order, h).value
