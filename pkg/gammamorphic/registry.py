"""
Function registry shared by the CLI and the HTTP service.

Each entry maps a public function name to an evaluator returning the value in
natural space (ln-space with log=True), its error bound and the route tag.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict

from . import barnes_g, double_sine, kinkelin, multi_gamma, two_period
from .errors import DomainError, RouteDomainError
from .special_base import (
    EPS,
    Number,
    RouteTag,
    ValueWithError,
    _tidy,
    as_number,
    euler_gamma,
    log_gamma,
    riemann_zeta,
)

logger = logging.getLogger(__name__)


class EvalParams(BaseModel):
    """Parameters of one evaluation besides the argument."""
    model_config = ConfigDict(extra="forbid")

    alpha: Optional[Union[float, complex]] = None
    omega1: Optional[Union[float, complex]] = None
    omega2: Optional[Union[float, complex]] = None
    n: Optional[int] = None
    route: Optional[str] = None


@dataclass(frozen=True)
class FunctionEntry:
    name: str
    description: str
    evaluate: Callable[[Optional[Number], EvalParams], ValueWithError]
    needs_x: bool = True
    # evaluate returns a logarithm; eval exponentiates unless asked for ln
    log_valued: bool = True
    routes: tuple = ()


def parse_number(text) -> Number:
    """'2.5', '1e-3', '1+2j' and '1+2i' are accepted."""
    if isinstance(text, (int, float, complex)):
        return as_number(text)
    s = str(text).strip().replace(" ", "")
    try:
        return float(s)
    except ValueError:
        pass
    try:
        return _tidy(complex(s.replace("i", "j")))
    except ValueError:
        raise DomainError(f"not a number: {text!r}") from None


def _param(params: EvalParams, name: str, default=None):
    value = getattr(params, name)
    if value is None:
        if default is None:
            raise DomainError(f"parameter --{name} is required")
        return default
    return _tidy(value) if isinstance(value, complex) else value


def _no_route(name: str, params: EvalParams):
    if params.route not in (None, "auto"):
        raise RouteDomainError(f"{name} has a single route, got --route {params.route}")


def _gamma(x, params):
    _no_route("gamma", params)
    return log_gamma(x)


def _route(enum, params: EvalParams, default):
    try:
        return enum(params.route or default)
    except ValueError:
        choices = ", ".join(r.value for r in enum)
        raise RouteDomainError(f"unknown route {params.route!r}; choose from {choices}") from None


def _barnes_g(x, params):
    return barnes_g.log_g(x, _route(barnes_g.GRoute, params, barnes_g.GRoute.AUTO))


def _phi(x, params):
    _no_route("phi", params)
    return barnes_g.phi(x)


def _kinkelin(x, params):
    _no_route("kinkelin", params)
    return kinkelin.log_k(x)


def _g2(x, params):
    alpha = _param(params, "alpha")
    route = params.route or "integral"
    if route in ("integral", "auto"):
        return two_period.log_g2(x, alpha)
    if route == RouteTag.LATTICE_PRODUCT.value:
        return two_period.lattice_product(x, alpha)
    raise RouteDomainError(f"g2 routes are integral and lattice-product, got {route}")


def _gn(x, params):
    _no_route("gn", params)
    return multi_gamma.log_gn(_param(params, "n"), x)


def _kn(x, params):
    _no_route("kn", params)
    return multi_gamma.log_kn(_param(params, "n"), x)


def _double_sine(x, params):
    omega1, omega2 = _param(params, "omega1", 1.0), _param(params, "omega2", 1.0)
    route = params.route or RouteTag.G_RATIO.value
    if route in (RouteTag.G_RATIO.value, "auto"):
        return double_sine.log_s2(x, omega1, omega2)
    if route == RouteTag.SINH_INTEGRAL.value:
        return double_sine.log_s2_integral(x, omega1, omega2)
    raise RouteDomainError(f"double-sine routes are g-ratio and sinh-integral, got {route}")


def _glaisher(x, params):
    _no_route("glaisher", params)
    return kinkelin.log_glaisher()


def _omega_tilde(x, params):
    route = _route(kinkelin.OmegaRoute, params, kinkelin.OmegaRoute.ZETA_SERIES)
    return kinkelin.omega_tilde(route, params.n or 2)


FUNCTIONS: Dict[str, FunctionEntry] = {
    e.name: e
    for e in (
        FunctionEntry("gamma", "Γ(x)", _gamma),
        FunctionEntry("barnes-g", "Barnes G(x)", _barnes_g, routes=tuple(r.value for r in barnes_g.GRoute)),
        FunctionEntry("phi", "φ(x) = d/dx ln G(x)", _phi, log_valued=False),
        FunctionEntry("kinkelin", "Kinkelin K(x), Re x > 0", _kinkelin),
        FunctionEntry("g2", "two-period G(x; α), needs --alpha", _g2, routes=("integral", RouteTag.LATTICE_PRODUCT.value)),
        FunctionEntry("gn", "multiple gamma G_n(x), needs --n", _gn),
        FunctionEntry("kn", "higher Kinkelin K_n(x), needs --n", _kn),
        FunctionEntry(
            "double-sine",
            "S_2(x; ω1, ω2), periods default to 1",
            _double_sine,
            routes=(RouteTag.G_RATIO.value, RouteTag.SINH_INTEGRAL.value),
        ),
        FunctionEntry("glaisher", "Glaisher–Kinkelin constant A", _glaisher, needs_x=False),
        FunctionEntry(
            "omega-tilde",
            "Kinkelin's constant ω̃",
            _omega_tilde,
            needs_x=False,
            routes=tuple(r.value for r in kinkelin.OmegaRoute),
        ),
    )
}


def function_names() -> List[str]:
    return list(FUNCTIONS)


def _exp(v: ValueWithError) -> ValueWithError:
    try:
        value = cmath.exp(v.value) if isinstance(v.value, complex) else math.exp(v.value)
    except OverflowError:
        raise DomainError(f"value exp({v.value}) overflows binary64; ask for the logarithm instead") from None
    value = _tidy(complex(value)) if isinstance(value, complex) else value
    return ValueWithError(value, abs(value) * v.abs_error, v.route)


def evaluate(name: str, x=None, params: Optional[EvalParams] = None, log: bool = False) -> ValueWithError:
    """
    Evaluate a registered function.

    Args:
        name: one of function_names()
        x: argument (ignored by the constants)
        params: alpha, periods, n and route
        log: return the logarithm for ln-valued functions

    Raises:
        DomainError for unknown names, missing parameters and domain violations
    """
    entry = FUNCTIONS.get(name)
    if entry is None:
        raise DomainError(f"unknown function '{name}'; choose from {', '.join(FUNCTIONS)}")
    params = params or EvalParams()
    if entry.needs_x:
        if x is None:
            raise DomainError(f"{name} needs an argument --x")
        x = parse_number(x)
    logger.debug("evaluate %s at %r with %s", name, x, params.model_dump(exclude_none=True))
    result = entry.evaluate(x, params)
    if entry.log_valued and not log:
        return _exp(result)
    return result


class ConstantRow(BaseModel):
    name: str
    value: float
    abs_error: float
    route: str


def constants() -> List[ConstantRow]:
    """γ, ζ(3), ln A, A, ln ω̃, ζ'(-1) and ln G(1/2) with error bounds and routes."""
    rows = [
        ("euler_gamma", ValueWithError(euler_gamma(), float(EPS), RouteTag.EULER_MACLAURIN)),
        ("zeta_3", riemann_zeta(3)),
        ("ln_glaisher", kinkelin.log_glaisher()),
        ("glaisher", kinkelin.glaisher_constant()),
        ("ln_omega_tilde", kinkelin.omega_tilde()),
        ("zeta_prime_minus_one", barnes_g.zeta_prime_minus_one()),
        ("ln_g_half", barnes_g.log_g_half()),
    ]
    return [
        ConstantRow(name=name, value=float(complex(v.value).real), abs_error=v.abs_error, route=v.route.value)
        for name, v in rows
    ]


class TableRow(BaseModel):
    """One evaluated grid point; keys match the CSV header."""
    arg_re: float
    arg_im: float
    value_re: float
    value_im: float
    abs_error: float
    route: str

    @classmethod
    def of(cls, x: Number, result: ValueWithError) -> "TableRow":
        x, v = complex(x), complex(result.value)
        return cls(
            arg_re=x.real,
            arg_im=x.imag,
            value_re=v.real,
            value_im=v.imag,
            abs_error=result.abs_error,
            route=result.route.value,
        )


TABLE_COLUMNS = tuple(TableRow.model_fields)
