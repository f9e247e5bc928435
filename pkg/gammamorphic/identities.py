"""
Identity catalog: every checked identity with its formula, parameter domain,
tolerance, status and parameter grid, and the erratum protocol that turns a
raw residual report into a catalog verdict.

Grids are stored at dense density; standard keeps every second point of dense
and small every second point of standard.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Callable, Dict, List, Optional, Tuple

from . import barnes_g, double_sine, kinkelin, multi_gamma, two_period
from .errors import DomainError, GammamorphicError
from .report import IdentityId, IdentityReport, Status, failed_report, make_report
from .special_base import bernoulli_poly, log_gamma_multiplication_rhs

logger = logging.getLogger(__name__)

# a printed variant counts as failing once its residual reaches this multiple of the tolerance
PRINTED_FAILURE_FACTOR = 10.0


# ============================================================================
# Checks with no owning numerical module
# ============================================================================

def _bernoulli(p: int, x):
    value = bernoulli_poly(p, x)
    return float(value) if isinstance(value, Fraction) else value


def bernoulli_difference_check(p: int, x, tolerance: float = 1e-12) -> IdentityReport:
    """B_p(x+1) - B_p(x) = p x^(p-1); exact over the rationals for integer x."""
    if p < 1:
        raise DomainError(f"difference identity needs p >= 1, got {p}")
    if isinstance(x, int):
        lhs = bernoulli_poly(p, x + 1) - bernoulli_poly(p, x)
        rhs = p * Fraction(x) ** (p - 1)
        return make_report(IdentityId.BERNOULLI_DIFFERENCE, {"p": p, "x": x}, float(lhs), float(rhs), tolerance, log_space=False)
    lhs = _bernoulli(p, x + 1) - _bernoulli(p, x)
    return make_report(IdentityId.BERNOULLI_DIFFERENCE, {"p": p, "x": x}, lhs, p * x ** (p - 1), tolerance, log_space=False)


def bernoulli_raabe_check(p: int, n: int, x: float, tolerance: float = 1e-10) -> IdentityReport:
    """
    sum_{j<n} B_p(x + j/n) = n^(1-p) B_p(nx). The printed factor j^(1-p) is
    read with j = n - 1 for the record.
    """
    if n < 2 or p < 0:
        raise DomainError(f"Raabe identity needs n >= 2 and p >= 0, got n = {n}, p = {p}")
    lhs = sum(_bernoulli(p, x + j / n) for j in range(n))
    scaled = _bernoulli(p, n * x)
    rhs = n ** (1 - p) * scaled
    gap = abs(lhs - (n - 1) ** (1 - p) * scaled)
    notes = f"factor n^(1-p); the printed j^(1-p) (j = n-1) is off by {gap:.3e}"
    return make_report(
        IdentityId.BERNOULLI_RAABE, {"p": p, "n": n, "x": x}, lhs, rhs, tolerance,
        notes=notes, log_space=False, printed_residual=gap,
    )


def gamma_multiplication_check(n: int, x: float, tolerance: float = 1e-9) -> IdentityReport:
    """
    ln Γ(nx) by the Malmsten integral against
    sum_{j<n} ln Γ(x + j/n) - ((n-1)/2) ln 2π - (1/2 - nx) ln n.
    The printed sum over j = 0..n is evaluated for the record.
    """
    if n < 1 or x <= 0:
        raise DomainError(f"Gauss multiplication check needs n >= 1 and x > 0, got n = {n}, x = {x}")
    lhs = barnes_g.malmsten_log_gamma(n * x).value
    rhs = log_gamma_multiplication_rhs(n, x)
    gap = abs(log_gamma_multiplication_rhs(n, x, upper=n) - lhs)
    notes = f"sum over j = 0..n-1, ln Γ(nx) by the Malmsten integral; the printed j = 0..n is off by {gap:.3e}"
    return make_report(IdentityId.GAMMA_MULT, {"n": n, "x": x}, lhs, rhs, tolerance, notes=notes, printed_residual=gap)


# ============================================================================
# Catalog
# ============================================================================

Grid = Tuple[Dict[str, Any], ...]


@dataclass(frozen=True)
class CatalogEntry:
    """One identity of the catalog."""
    id: IdentityId
    check: Callable[..., IdentityReport]
    tolerance: float
    formula: str
    domain: str
    grid: Grid
    status: Status = Status.VERIFIED
    resolution: str = ""

    def params_for(self, density: str) -> List[Dict[str, Any]]:
        dense = list(self.grid)
        if density == "dense":
            return dense
        standard = dense[::2]
        if density == "standard":
            return standard
        if density == "small":
            return standard[::2]
        raise DomainError(f"density must be small, standard or dense, got {density!r}")


def _rows(**columns) -> Grid:
    """Zip equal-length columns into grid rows."""
    names = list(columns)
    return tuple(dict(zip(names, values)) for values in zip(*columns.values()))


def _xs(*values) -> Grid:
    return tuple({"x": v} for v in values)


def _product(first: Dict[str, tuple], second: Dict[str, tuple]) -> Grid:
    (k1, v1), (k2, v2) = next(iter(first.items())), next(iter(second.items()))
    return tuple({k1: a, k2: b} for a in v1 for b in v2)


_G2_GRID = _product({"x": (0.5, 1.1, 1.75, 2.4, 3.0)}, {"alpha": (0.5, 1.1, 1.75, 2.4, 3.0)})

_S2_CROSS_GRID = tuple(
    {"x": f * (w1 + w2), "omega1": w1, "omega2": w2}
    for f in (0.2, 0.35, 0.6, 0.85)
    for (w1, w2) in ((1.0, 1.0), (1.0, 2.0), (0.5, 1.5))
)

_ENTRIES: Tuple[CatalogEntry, ...] = (
    CatalogEntry(
        IdentityId.FE_G, barnes_g.functional_equation_check, 1e-10,
        "G(x+1) = Γ(x) G(x)", "x not a non-positive integer",
        _xs(0.3, 0.7, 1.1, 1.5, 2.5, 3.3, 4.7, 6.1, 9.5, 12.0, -0.5, -1.5, -2.3, 0.5 + 0.3j, 1.5 - 0.4j, 2.0 + 0.2j),
    ),
    CatalogEntry(
        IdentityId.INTEGER_VALUES, barnes_g.integer_values_check, 1e-12,
        "G(n+1) = prod_{k=1}^{n-1} k!", "integer 1 <= n <= 49",
        tuple({"n": n} for n in range(1, 13)),
        Status.ERRATUM_CORRECTED,
        "G(n+1) = (n!)^n / (1^1 2^2 ... n^n); the printed fraction is inverted",
    ),
    CatalogEntry(
        IdentityId.DUPLICATION, barnes_g.duplication_check, 1e-9,
        "G(2x) through G(x), G(x+1/2) and Γ(x)", "Re x > 0",
        _xs(0.3, 0.55, 0.8, 1.05, 1.3, 1.7, 2.2, 2.75, 3.3, 4.1),
    ),
    CatalogEntry(
        IdentityId.MULTIPLICATION, barnes_g.multiplication_check, 1e-8,
        "G(nx) through prod_j G(x + j/n) and Γ factors", "n >= 2, Re x > 0",
        tuple({"n": n, "x": x} for x in (0.35, 0.8, 1.45, 2.2) for n in (2, 3, 5)),
    ),
    CatalogEntry(
        IdentityId.ASYMPTOTIC, barnes_g.asymptotic_check, 1e-10,
        "ln G(z+1) = z²/2 ln z - 3z²/4 + (z/2) ln 2π - (1/12) ln z + ζ'(-1) + sum B_{2n+2}/(4n(n+1)z^{2n})",
        "x >= 8",
        _xs(8.0, 9.5, 11.0, 14.0, 18.0, 25.0, 40.0, 60.0),
        Status.ERRATUM_CORRECTED,
        "the Bernoulli tail carries no alternating sign",
    ),
    CatalogEntry(
        IdentityId.INT_LOG_GAMMA, barnes_g.int_log_gamma_check, 1e-8,
        "∫_0^a ln Γ = -ln G(a) + (a-1) ln Γ(a) - a(a-1)/2 + (a/2) ln 2π", "a > 0",
        tuple({"a": a} for a in (0.1, 0.3, 0.5, 0.8, 1.0, 1.4, 1.9, 2.5, 3.2, 4.0)),
    ),
    CatalogEntry(
        IdentityId.INT_LOG_SIN, barnes_g.int_log_sin_check, 1e-8,
        "∫_0^x ln sin πt dt = x ln(sin πx / 2π) + ln G(1+x) - ln G(1-x)", "0 < x < 1",
        _xs(0.05, 0.15, 0.25, 0.35, 0.45, 0.5, 0.6, 0.7, 0.8, 0.95),
    ),
    CatalogEntry(
        IdentityId.INT_X_COT, barnes_g.int_x_cot_check, 1e-8,
        "∫_0^x πt cot πt dt = x ln 2π + ln G(1-x) - ln G(1+x)", "0 < x < 1",
        _xs(0.05, 0.15, 0.25, 0.35, 0.45, 0.5, 0.6, 0.7, 0.8, 0.95),
    ),
    CatalogEntry(
        IdentityId.ROOTS_OF_UNITY, barnes_g.roots_of_unity_product_check, 1e-8,
        "prod_k G(a - ε^k x)/G(a) = prod_m (1 - x^n/(a+m)^n)^{m+1}", "Re a > 0, |x| < |a|, n >= 1",
        _rows(a=(1.5, 1.2, 2.0, 1.8, 2.5, 1.0), x=(0.3, 0.4, 0.5, 0.6, 0.7, 0.2), n=(3, 1, 4, 2, 3, 2)),
        Status.ERRATUM_CORRECTED,
        "for n <= 2 the printed product diverges and is regularised with convergence factors",
    ),
    CatalogEntry(
        IdentityId.PHI_CLOSED, barnes_g.phi_closed_check, 1e-8,
        "φ(x) = (x-1) ψ(x) - x + 1/2 + (1/2) ln 2π", "x > 0",
        _xs(0.7, 1.3, 2.1, 2.8, 3.4, 4.5, 5.2, 6.5),
    ),
    CatalogEntry(
        IdentityId.PHI_SERIES_1, barnes_g.phi_series_check, 1e-10,
        "φ(1+x) = -1/2 + (1/2) ln 2π - x(1+γ) + sum_k x²/(k(x+k))", "x > -1",
        _xs(-0.5, -0.2, 0.1, 0.3, 0.6, 0.9, 1.5, 2.5),
    ),
    CatalogEntry(
        IdentityId.PHI_SERIES_2, barnes_g.phi_shift_series_check, 1e-10,
        "φ(a+x) = φ(a) + x ψ(a) + sum_j (-1)^{j-1} [x]_{j+1} / (j(j+1)(a)_j)", "a > 0, a + x > 1",
        _rows(a=(2.0, 1.5, 2.5, 3.0, 2.0, 3.5), x=(0.5, 1.0, 0.3, 1.2, 1.5, -0.5)),
        Status.ERRATUM_CORRECTED,
        "the numerator is the falling factorial [x]_(j+1), not [x]_j",
    ),
    CatalogEntry(
        IdentityId.LNG_POWER_SERIES, barnes_g.power_series_check, 1e-10,
        "ln G(x+a) = ln G(a) + x φ(a) + x²/2 φ'(a) + sum_j (-1)^{j+1} C_j x^j / j", "|x| < |a|",
        tuple({"x": x, "a": a} for x in (-0.5, -0.25, 0.25, 0.5) for a in (1.0, 2.0)),
    ),
    CatalogEntry(
        IdentityId.LNG_ROUTES, barnes_g.cross_route_check, 1e-8,
        "series, integral, asymptotic and Weierstrass values of ln G agree", "x > 0",
        _xs(0.3, 0.8, 1.4, 2.2, 3.1, 4.6, 6.3, 7.9, 8.5, 10.0),
    ),
    CatalogEntry(
        IdentityId.G_EULER_LIMIT, barnes_g.euler_limit_check, 1e-3,
        "G(x) as the limit of (n+1)^((x-1)(x-2)/2) (n!)^(x-1) prod_{k<n} Γ(k+1)/Γ(k+x)", "Re x > 0",
        _rows(x=(2.0, 2.5, 0.7, 1.5, 0.4, 2.2, 1.2, 0.9), n=(10_000, 2000, 5000, 10_000, 5000, 10_000, 2000, 5000)),
    ),
    CatalogEntry(
        IdentityId.KINKELIN_FE, kinkelin.kinkelin_fe_check, 1e-10,
        "K(x+1) = x^x K(x)", "Re x > 0",
        _xs(0.5, 1.0, 1.5, 2.5, 3.7, 5.0, 0.5 + 0.3j, 1.2 - 0.4j),
    ),
    CatalogEntry(
        IdentityId.KINKELIN_DEF, kinkelin.kinkelin_definition_check, 1e-7,
        "ln K(x) = ∫_0^x ln Γ(t) dt + x(x-1)/2 - (x/2) ln 2π", "x > 0",
        _xs(0.5, 1.0, 1.5, 2.0, 3.0, 4.5),
        Status.ERRATUM_CORRECTED,
        "the last term is -(x/2) ln 2π; printed with +",
    ),
    CatalogEntry(
        IdentityId.GK_RELATION, kinkelin.gk_relation_check, 1e-10,
        "G(x) K(x) = Γ(x)^{x-1}", "Re x > 0",
        _xs(0.3, 0.8, 1.5, 2.5, 4.0, 6.5),
    ),
    CatalogEntry(
        IdentityId.KINKELIN_MULT, kinkelin.kinkelin_multiplication_check, 1e-9,
        "K(nx) = n^{nx(nx-1)/2 + 1/12} ω̃^{-(n²-1)/2} prod_j K(x + j/n)^n", "n >= 2, x > 0",
        tuple({"n": n, "x": x} for x in (0.4, 0.8, 1.3, 2.1) for n in (2, 3)),
    ),
    CatalogEntry(
        IdentityId.OMEGA_ROUTES, kinkelin.omega_routes_check, 1e-8,
        "ln ω̃ by prelimit, zeta series and 2∫_0^1 ln K", "n >= 2",
        tuple({"n": n} for n in (2, 3, 4, 6, 8, 12)),
        Status.ERRATUM_CORRECTED,
        "the prelimit factor is 2n/(n²-1) with ln K(0) = 0",
    ),
    CatalogEntry(
        IdentityId.RAABE_ANALOG, kinkelin.raabe_analog_check, 1e-8,
        "∫_x^{x+1} ln K(t) dt = (1/2) ln ω̃ + (1/4) x² (2 ln x - 1)", "x >= 0",
        _xs(0.0, 0.5, 1.0, 1.5, 2.5, 4.0),
        Status.AMBIGUOUS_RESOLVED,
        "integrand read as ln K(t); the literal K(t) does not satisfy it",
    ),
    CatalogEntry(
        IdentityId.K_ASYMPTOTIC, kinkelin.k_asymptotic_check, 1e-5,
        "ln K(n+1) ~ (1/2) ln ω̃ - n²/4 + 1/12 + ((n²+n)/2 + 1/12) ln n", "n >= 1",
        tuple({"n": n} for n in (250, 500, 1000, 2000)),
    ),
    CatalogEntry(
        IdentityId.GLAISHER_DEF, kinkelin.glaisher_check, 1e-12,
        "A = ω̃^{1/2} e^{1/12} = e^{1/12 - ζ'(-1)}", "none",
        ({},),
    ),
    CatalogEntry(
        IdentityId.BERNOULLI_DIFFERENCE, bernoulli_difference_check, 1e-12,
        "B_p(x+1) - B_p(x) = p x^{p-1}", "p >= 1",
        _rows(p=(1, 2, 3, 4, 5, 6, 7, 8), x=(0, 2, 2, -1, 3, 0.3, 1.7, -0.6)),
    ),
    CatalogEntry(
        IdentityId.BERNOULLI_RAABE, bernoulli_raabe_check, 1e-10,
        "sum_{j<n} B_p(x + j/n) = n^{1-p} B_p(nx)", "n >= 2, p >= 0",
        _rows(p=(2, 3, 4, 2, 5, 6), n=(2, 3, 2, 5, 3, 4), x=(0.3, 0.7, 1.2, -0.4, 0.15, 0.9)),
        Status.ERRATUM_CORRECTED,
        "the factor is n^(1-p); printed as j^(1-p)",
    ),
    CatalogEntry(
        IdentityId.GAMMA_MULT, gamma_multiplication_check, 1e-9,
        "sum_{j<n} ln Γ(x + j/n) = ln Γ(nx) + ((n-1)/2) ln 2π + (1/2 - nx) ln n", "n >= 1, x > 0",
        tuple({"n": n, "x": x} for x in (0.3, 0.9, 1.7, 2.6) for n in (2, 3)),
        Status.ERRATUM_CORRECTED,
        "the sum runs over j = 0..n-1; printed to n",
    ),
    CatalogEntry(
        IdentityId.G2_FE1, two_period.fe1_check, 1e-7,
        "G(x+1; α) = Γ(x/α) G(x; α)", "real x > 0, real α > 0",
        _G2_GRID,
    ),
    CatalogEntry(
        IdentityId.G2_FE2, two_period.functional_eq2_check, 1e-7,
        "G(x+α; α) = (2π)^{(α-1)/2} α^{-(2x-1)/2} Γ(x) G(x; α)", "real x > 0, real α > 0",
        _G2_GRID,
    ),
    CatalogEntry(
        IdentityId.G2_REPRESENTATION, two_period.representation_check, 1e-7,
        "ln G(x; α) = ∫_0^∞ (e^{-u}/u) {...} du", "x > 0, α = m/n",
        tuple({"x": x, "m": m, "n": n} for x in (0.7, 1.3, 2.2) for (m, n) in ((1, 2), (2, 1), (3, 2), (2, 3))),
        Status.ERRATUM_CORRECTED,
        "the measure is du/u; printed du/(1-e^(-u))",
    ),
    CatalogEntry(
        IdentityId.G2_INVERSION, two_period.inversion_check, 1e-6,
        "G(x; 1/α) = G(αx; α) G(α, α)^{-x} α^{(x-1)(αx-2)/2}", "real x > 0, real α > 0",
        _rows(x=(2.0, 1.5, 0.8, 1.2, 2.5, 1.0), alpha=(3.0, 2.0, 0.5, 1.5, 2.5, 0.7)),
    ),
    CatalogEntry(
        IdentityId.G2_ALPHA_ALPHA, two_period.alpha_alpha_check, 1e-7,
        "G(α; α) = α^{-1/2} (2π)^{(α-1)/2}", "real α > 0",
        tuple({"alpha": a} for a in (0.5, 1.0, 1.5, 2.0, 3.0, 0.75, 2.5, 4.0, 1.25, 5.0)),
    ),
    CatalogEntry(
        IdentityId.G2_THREE_TERM, two_period.three_term_check, 1e-6,
        "G(x; α) / (G(x/(α+1); 1/(α+1)) G(x/(α+1); α/(α+1))) in closed form", "real x > 0, real α > 0",
        _rows(x=(1.2, 0.8, 2.0, 1.5, 2.5, 1.0), alpha=(1.5, 1.0, 2.0, 0.5, 3.0, 2.5)),
    ),
    CatalogEntry(
        IdentityId.G2_RATIONAL, two_period.rational_period_check, 1e-6,
        "G(x; (m/n)α) as a double product of G(·; α)", "real x > 0, real α > 0, m, n >= 1",
        _rows(
            x=(1.3, 1.1, 1.5, 0.9, 2.0, 1.2, 1.3, 1.7),
            alpha=(2.0, 1.0, 1.5, 2.0, 1.0, 0.8, 2.0, 1.0),
            m=(1, 2, 2, 1, 2, 2, 1, 2),
            n=(2, 3, 1, 2, 3, 1, 1, 1),
        ),
    ),
    CatalogEntry(
        IdentityId.G2_EULER_LIM1, two_period.euler_limit_check, 1e-3,
        "G(x; α) as a limit of Γ((1+k)/α)/Γ((x+k)/α) products", "real x > 0, real α > 0",
        _rows(variant=(1, 1, 1, 1), x=(1.5, 2.5, 0.7, 1.2), alpha=(2.0, 1.0, 1.5, 0.5), n=(2000, 2000, 2000, 2000)),
    ),
    CatalogEntry(
        IdentityId.G2_EULER_LIM2, two_period.euler_limit_check, 2e-3,
        "G(x; α) as a limit of Γ(1+kα)/Γ(x+kα) products", "real x > 0, real α > 0",
        _rows(variant=(2, 2, 2, 2), x=(1.5, 0.7, 1.2, 2.5), alpha=(2.0, 1.5, 0.5, 3.0), n=(2000, 2000, 2000, 2000)),
        Status.ERRATUM_CORRECTED,
        "the power of (1/α + n) is (x-1)(x-2)/(2α)",
    ),
    CatalogEntry(
        IdentityId.G2_LATTICE, two_period.lattice_check, 1e-6,
        "G(x; α) = e^{ax + bx²} (x/α) prod (1 + x/w) e^{-x/w + x²/(2w²)}", "x not a lattice zero, Re α > 0",
        tuple({"x": x, "alpha": a} for x in (0.3, 0.5, 0.9, 1.5, 2.2) for a in (1.0, 2.0)),
        Status.ERRATUM_CORRECTED,
        "factor exp(-x/w + x²/(2w²)) and constants a = ∂lnG + γ/α, b = ∂²lnG/2 - π²/(12α²)",
    ),
    CatalogEntry(
        IdentityId.G2_ALPHA1_DEGENERATION, two_period.alpha1_degeneration_check, 1e-8,
        "G(x; 1) = G(x)", "0 < x <= 5",
        _xs(0.25, 0.6, 1.3, 2.1, 2.9, 3.6, 4.4, 5.0),
    ),
    CatalogEntry(
        IdentityId.REFLECTION, two_period.reflection_check, 1e-6,
        "G(1+x; α) G(-x; -α) = C e^{c1 x + c2 x²} prod_{k>=0} (1 - q^{2k} e^{2πix})", "Im α > 0",
        tuple({"alpha": a} for a in (1 + 2j, 2 + 1j, 0.5 + 1.5j, 1 + 1j)),
        Status.AMBIGUOUS_RESOLVED,
        "q = e^{πiα} with the k = 0 factor; q = πiα diverges",
    ),
    CatalogEntry(
        IdentityId.GN_FE, multi_gamma.gn_fe_check, 1e-6,
        "G_n(x+1) = G_{n-1}(x) G_n(x)", "n >= 1, Re x > 0",
        tuple({"n": n, "x": x} for x in (0.7, 1.5, 2.6) for n in (3, 4)),
    ),
    CatalogEntry(
        IdentityId.PN_TELESCOPE, multi_gamma.pn_telescope_check, 1e-12,
        "P_{n+1}(x+1) - P_{n+1}(x) = P_n(x)", "n >= 1, u > 0",
        tuple({"n": n, "x": x, "u": u} for u in (0.3, 2.0) for x in (0.5, 1.7) for n in (1, 2, 3)),
    ),
    CatalogEntry(
        IdentityId.KN_FE, multi_gamma.kn_fe_check, 1e-6,
        "K_n(x+1) = x^{x^n} K_n(x)", "n >= 1, x > 0",
        tuple({"n": n, "x": x} for x in (0.8, 1.6, 2.5) for n in (1, 2, 3)),
    ),
    CatalogEntry(
        IdentityId.KN_CONVERSION, multi_gamma.kn_conversion_check, 1e-10,
        "ln K_n(x) = sum_j (-1)^j (Δ^j t^n)(x) ln G_{j+1}(x+j)", "n >= 1, integer 1 <= x <= 50",
        tuple({"n": n, "x": x} for x in (2, 3, 5, 8) for n in (1, 2, 3)),
        Status.ERRATUM_CORRECTED,
        "the factors are G_(j+1)(x+j); printed G_j(x+j)",
    ),
    CatalogEntry(
        IdentityId.S2_CROSSROUTE, double_sine.s2_crossroute_check, 1e-6,
        "G-ratio and sinh integral give the same ln S_2", "real periods, 0 < x < ω1 + ω2",
        _S2_CROSS_GRID,
        Status.ERRATUM_CORRECTED,
        "integrand sinh((x-c)t) / (2 sinh(ω1 t/2) sinh(ω2 t/2)) with the counterterm divided by t",
    ),
    CatalogEntry(
        IdentityId.S2_SYMMETRY, double_sine.s2_symmetry_check, 1e-10,
        "S_2(x; ω1, ω2) = S_2(x; ω2, ω1)", "real periods, 0 < x < ω1 + ω2",
        _rows(x=(0.7, 1.1, 0.4, 1.9, 0.9, 2.3), omega1=(1.0, 1.0, 0.5, 2.0, 1.5, 1.2), omega2=(2.0, 0.5, 1.5, 1.0, 0.7, 1.8)),
        Status.DERIVED_OBSERVATION,
        "observed property, not a printed formula",
    ),
    CatalogEntry(
        IdentityId.S2_INVERSION, double_sine.s2_inversion_check, 1e-6,
        "S_2(x) S_2(ω1 + ω2 - x) = 1", "x away from zeros and poles",
        _rows(
            x=(0.3, 0.7, 1.1, 1.6, 0.45, 2.2, 0.9, 1.3, 0.25, 1.75),
            omega1=(1.0, 1.0, 1.0, 2.0, 0.5, 2.0, 1.5, 1.0, 1.0, 1.2),
            omega2=(1.0, 2.0, 0.5, 1.0, 1.5, 1.5, 0.8, 1.7, 2.5, 1.6),
        ),
        Status.DERIVED_OBSERVATION,
        "observed through the G-ratio, not a printed formula",
    ),
    CatalogEntry(
        IdentityId.S2_SHIFT, double_sine.s2_shift_check, 1e-5,
        "S_2(x + ω1) / S_2(x) = 1 / (2 sin(πx/ω2))", "0 < x < ω2",
        _rows(
            x=(0.3, 0.7, 0.5, 1.2, 0.2, 0.9, 1.7, 0.4, 0.65, 1.1),
            omega1=(1.0, 1.0, 2.0, 1.0, 0.5, 1.5, 1.0, 1.0, 0.8, 2.0),
            omega2=(1.0, 2.0, 1.0, 1.5, 0.8, 1.3, 2.5, 0.6, 1.0, 1.4),
        ),
        Status.DERIVED_OBSERVATION,
        "observed through the G-ratio, not a printed formula",
    ),
    CatalogEntry(
        IdentityId.S2_HOMOGENEITY, double_sine.s2_homogeneity_check, 1e-7,
        "S_2(λx; λω1, λω2) = S_2(x; ω1, ω2)", "λ > 0",
        _rows(
            x=(0.7, 0.7, 1.1, 1.1, 0.4, 0.4, 1.9, 1.9),
            omega1=(1.0, 1.0, 1.0, 1.0, 0.5, 0.5, 2.0, 2.0),
            omega2=(1.0, 1.0, 2.0, 2.0, 1.5, 1.5, 1.0, 1.0),
            lam=(0.5, 2.0, 2.0, 0.5, 0.5, 2.0, 2.0, 0.5),
        ),
        Status.DERIVED_OBSERVATION,
        "follows from the G-ratio construction",
    ),
    CatalogEntry(
        IdentityId.S2_PREFACTOR, double_sine.s2_prefactor_check, 1e-6,
        "ln S_2 = ln G(y; α) - ln G(1+α-y; α) + ((1+α-2y)/2) ln 2π", "real periods, 0 < x < ω1 + ω2",
        _rows(x=(0.9, 1.4, 0.6, 1.8, 1.0, 2.1), omega1=(1.5, 1.5, 2.0, 2.0, 0.8, 0.8), omega2=(2.0, 2.0, 0.5, 0.5, 1.7, 1.7)),
        Status.ERRATUM_CORRECTED,
        "the factor ω2^(x(ω1+ω2)/(ω1ω2)) is dropped",
    ),
)

CATALOG: Dict[IdentityId, CatalogEntry] = {e.id: e for e in _ENTRIES}

# Every in-scope printed formula, by description, and the identity that checks it
IN_SCOPE_FORMULAS: Dict[str, IdentityId] = {
    "difference equation G(x+1) = Γ(x) G(x)": IdentityId.FE_G,
    "values of G at the positive integers": IdentityId.INTEGER_VALUES,
    "integral representation of ln G": IdentityId.LNG_ROUTES,
    "Weierstrass product of G": IdentityId.LNG_ROUTES,
    "Euler-type limit for G": IdentityId.G_EULER_LIMIT,
    "Malmsten integral for ln Γ": IdentityId.GAMMA_MULT,
    "duplication formula for G": IdentityId.DUPLICATION,
    "multiplication formula for G": IdentityId.MULTIPLICATION,
    "Stirling-type expansion of ln G": IdentityId.ASYMPTOTIC,
    "integral of ln Γ": IdentityId.INT_LOG_GAMMA,
    "integral of ln sin πt": IdentityId.INT_LOG_SIN,
    "integral of πt cot πt": IdentityId.INT_X_COT,
    "product of G over roots of unity": IdentityId.ROOTS_OF_UNITY,
    "recursion of the multiple gammas G_n": IdentityId.GN_FE,
    "integral kernels of ln G_n": IdentityId.PN_TELESCOPE,
    "first functional equation of G(x; α)": IdentityId.G2_FE1,
    "second functional equation of G(x; α)": IdentityId.G2_FE2,
    "integral representation of ln G(x; α)": IdentityId.G2_REPRESENTATION,
    "inversion α -> 1/α": IdentityId.G2_INVERSION,
    "closed form of G(α; α)": IdentityId.G2_ALPHA_ALPHA,
    "three-term relation": IdentityId.G2_THREE_TERM,
    "rational-period formula": IdentityId.G2_RATIONAL,
    "first limit expression for G(x; α)": IdentityId.G2_EULER_LIM1,
    "second limit expression for G(x; α)": IdentityId.G2_EULER_LIM2,
    "Weierstrass product of G(x; α) with constants a, b": IdentityId.G2_LATTICE,
    "reflection formula with the q-product": IdentityId.REFLECTION,
    "closed form of φ": IdentityId.PHI_CLOSED,
    "series of φ(1+x)": IdentityId.PHI_SERIES_1,
    "series of φ(a+x)": IdentityId.PHI_SERIES_2,
    "power series of ln G(x+a)": IdentityId.LNG_POWER_SERIES,
    "difference equation of K": IdentityId.KINKELIN_FE,
    "integral definition of ln K": IdentityId.KINKELIN_DEF,
    "G K = Γ^{x-1}": IdentityId.GK_RELATION,
    "multiplication formula for K": IdentityId.KINKELIN_MULT,
    "prelimit for ω̃": IdentityId.OMEGA_ROUTES,
    "zeta series for ω̃": IdentityId.OMEGA_ROUTES,
    "Raabe-type integral of ln K": IdentityId.RAABE_ANALOG,
    "asymptotics of K(n+1)": IdentityId.K_ASYMPTOTIC,
    "Glaisher–Kinkelin constant": IdentityId.GLAISHER_DEF,
    "difference equation of B_p": IdentityId.BERNOULLI_DIFFERENCE,
    "Raabe addition theorem for B_p": IdentityId.BERNOULLI_RAABE,
    "addition theorem of ln Γ": IdentityId.GAMMA_MULT,
    "recursion of K_n": IdentityId.KN_FE,
    "Δ-conversion of K_n": IdentityId.KN_CONVERSION,
    "double sine as a G-ratio": IdentityId.S2_PREFACTOR,
    "double sine as a sinh integral": IdentityId.S2_CROSSROUTE,
}


def catalog_ids() -> List[IdentityId]:
    """Catalog ids in canonical order."""
    return [i for i in IdentityId if i in CATALOG]


def parse_ids(names: str) -> List[IdentityId]:
    """Comma-separated identity names; DomainError names the first unknown one."""
    out = []
    for name in (n.strip() for n in names.split(",")):
        if not name:
            continue
        try:
            out.append(IdentityId(name.upper()))
        except ValueError:
            raise DomainError(f"unknown identity '{name}'") from None
    return out


# ============================================================================
# Erratum protocol and single runs
# ============================================================================

_CORRECTIONS = (Status.ERRATUM_CORRECTED, Status.AMBIGUOUS_RESOLVED)


def printed_effective_residual(report: IdentityReport) -> Optional[float]:
    """
    Residual of the printed variant under the rule the check itself uses
    (absolute or relative, whichever is smaller); None when none was evaluated.
    """
    printed = report.printed_residual
    if printed is None:
        return None
    scale = max((abs(side.to_complex()) for side in (report.lhs, report.rhs) if side is not None), default=0.0)
    if scale > 0 and math.isfinite(printed):
        return min(printed, printed / scale)
    return printed


def erratum_verdict(entry: CatalogEntry, report: IdentityReport) -> Tuple[Status, str]:
    """
    Status of one grid point from its evidence, with the reason.

    A correction stands only where the corrected form passes and the printed
    form misses by at least PRINTED_FAILURE_FACTOR times the tolerance. A
    printed form that passes makes the point verified; a smaller miss, a
    missing printed variant or a failing corrected form leave it unresolved.
    """
    claimed = entry.status
    if claimed is Status.VERIFIED:
        return claimed, ""
    if not report.passed:
        return Status.UNRESOLVED, "the corrected form fails here; left unresolved"
    if claimed not in _CORRECTIONS:
        return claimed, ""
    effective = printed_effective_residual(report)
    tol = report.tolerance
    if effective is None:
        return Status.UNRESOLVED, "no printed variant evaluated; left unresolved"
    if effective <= tol:
        return Status.VERIFIED, f"the printed form also holds here (residual {effective:.3e})"
    if effective < PRINTED_FAILURE_FACTOR * tol:
        return Status.UNRESOLVED, (
            f"the printed form misses by {effective:.3e}, under {PRINTED_FAILURE_FACTOR:g}x tolerance; left unresolved"
        )
    return claimed, ""


def apply_erratum_protocol(entry: CatalogEntry, report: IdentityReport) -> IdentityReport:
    """
    Give a raw report its status from the evidence it carries.

    Non-verified outcomes carry the entry's resolution first in notes.
    """
    status, reason = erratum_verdict(entry, report)
    notes: List[str] = []
    if status is not Status.VERIFIED and entry.resolution:
        notes.append(entry.resolution)
    if report.notes:
        notes.append(report.notes)
    if reason:
        notes.append(reason)
    return report.model_copy(update={"status": status, "notes": "; ".join(notes)})


def _run_check(entry: CatalogEntry, params: Dict[str, Any], tolerance: float) -> IdentityReport:
    try:
        return entry.check(**params, tolerance=tolerance)
    except TypeError as e:
        raise DomainError(f"{entry.id.value}: bad parameters {sorted(params)} ({e})") from e
    except DomainError as e:
        raise DomainError(f"{entry.id.value} needs {entry.domain}: {e}") from e


def run_identity(
    identity,
    params: Optional[Dict[str, Any]] = None,
    tolerance: Optional[float] = None,
    **kwargs,
) -> IdentityReport:
    """
    Check one identity at one parameter set, with the erratum protocol applied.

    Args:
        identity: IdentityId or its name
        params: parameters of the owning check (keywords work too)
        tolerance: overrides the catalog tolerance

    Returns:
        IdentityReport with the catalog status

    Raises:
        DomainError with the identity's domain when params fall outside it
    """
    identity = IdentityId(identity)
    entry = CATALOG[identity]
    merged = {**(params or {}), **kwargs}
    tol = entry.tolerance if tolerance is None else tolerance
    try:
        report = _run_check(entry, merged, tol)
    except DomainError:
        raise
    except GammamorphicError as e:
        logger.warning("%s at %s: %s", identity.value, merged, e)
        report = failed_report(identity, merged, tol, e)
    return apply_erratum_protocol(entry, report)


def raw_grid_point(entry: CatalogEntry, params: Dict[str, Any], tolerance: Optional[float] = None) -> IdentityReport:
    """The owning check at one grid point, before the erratum protocol; errors become failing reports."""
    tol = entry.tolerance if tolerance is None else tolerance
    try:
        return _run_check(entry, params, tol)
    except GammamorphicError as e:
        logger.warning("%s at %s: %s", entry.id.value, params, e)
        return failed_report(entry.id, params, tol, e)


def run_grid_point(entry: CatalogEntry, params: Dict[str, Any], tolerance: Optional[float] = None) -> IdentityReport:
    """Suite variant of run_identity: every error becomes a failing report."""
    return apply_erratum_protocol(entry, raw_grid_point(entry, params, tolerance))
