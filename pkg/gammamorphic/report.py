"""Identity ids, statuses and the residual report shared by all check functions."""

from __future__ import annotations

import math
from enum import Enum
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field

from .special_base import Number


class IdentityId(str, Enum):
    """Every identity the verification suite checks, in canonical order."""
    FE_G = "FE_G"
    INTEGER_VALUES = "INTEGER_VALUES"
    DUPLICATION = "DUPLICATION"
    MULTIPLICATION = "MULTIPLICATION"
    ASYMPTOTIC = "ASYMPTOTIC"
    INT_LOG_GAMMA = "INT_LOG_GAMMA"
    INT_LOG_SIN = "INT_LOG_SIN"
    INT_X_COT = "INT_X_COT"
    ROOTS_OF_UNITY = "ROOTS_OF_UNITY"
    PHI_CLOSED = "PHI_CLOSED"
    PHI_SERIES_1 = "PHI_SERIES_1"
    PHI_SERIES_2 = "PHI_SERIES_2"
    LNG_POWER_SERIES = "LNG_POWER_SERIES"
    LNG_ROUTES = "LNG_ROUTES"
    G_EULER_LIMIT = "G_EULER_LIMIT"
    KINKELIN_FE = "KINKELIN_FE"
    KINKELIN_DEF = "KINKELIN_DEF"
    GK_RELATION = "GK_RELATION"
    KINKELIN_MULT = "KINKELIN_MULT"
    OMEGA_ROUTES = "OMEGA_ROUTES"
    RAABE_ANALOG = "RAABE_ANALOG"
    K_ASYMPTOTIC = "K_ASYMPTOTIC"
    GLAISHER_DEF = "GLAISHER_DEF"
    BERNOULLI_DIFFERENCE = "BERNOULLI_DIFFERENCE"
    BERNOULLI_RAABE = "BERNOULLI_RAABE"
    GAMMA_MULT = "GAMMA_MULT"
    G2_FE1 = "G2_FE1"
    G2_FE2 = "G2_FE2"
    G2_REPRESENTATION = "G2_REPRESENTATION"
    G2_INVERSION = "G2_INVERSION"
    G2_ALPHA_ALPHA = "G2_ALPHA_ALPHA"
    G2_THREE_TERM = "G2_THREE_TERM"
    G2_RATIONAL = "G2_RATIONAL"
    G2_EULER_LIM1 = "G2_EULER_LIM1"
    G2_EULER_LIM2 = "G2_EULER_LIM2"
    G2_LATTICE = "G2_LATTICE"
    G2_ALPHA1_DEGENERATION = "G2_ALPHA1_DEGENERATION"
    REFLECTION = "REFLECTION"
    GN_FE = "GN_FE"
    PN_TELESCOPE = "PN_TELESCOPE"
    KN_FE = "KN_FE"
    KN_CONVERSION = "KN_CONVERSION"
    S2_CROSSROUTE = "S2_CROSSROUTE"
    S2_SYMMETRY = "S2_SYMMETRY"
    S2_INVERSION = "S2_INVERSION"
    S2_SHIFT = "S2_SHIFT"
    S2_HOMOGENEITY = "S2_HOMOGENEITY"
    S2_PREFACTOR = "S2_PREFACTOR"


class Status(str, Enum):
    VERIFIED = "verified"
    ERRATUM_CORRECTED = "erratum-corrected"
    AMBIGUOUS_RESOLVED = "ambiguous-resolved"
    DERIVED_OBSERVATION = "derived-observation"
    UNRESOLVED = "unresolved"


class ComplexPair(BaseModel):
    """A binary64 complex number as {"re", "im"}."""
    re: float
    im: float = 0.0

    @classmethod
    def of(cls, z: Optional[Number]) -> Optional["ComplexPair"]:
        if z is None:
            return None
        z = complex(z)
        return cls(re=z.real, im=z.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


class IdentityReport(BaseModel):
    """Residual record produced when one identity is checked at one parameter set."""
    model_config = ConfigDict(populate_by_name=True)

    id: IdentityId
    params: Dict[str, Any] = Field(default_factory=dict)
    lhs: Optional[ComplexPair] = None
    rhs: Optional[ComplexPair] = None
    abs_residual: Optional[float] = None
    rel_residual: Optional[float] = None
    tolerance: float
    passed: bool = Field(alias="pass")
    status: Status = Status.VERIFIED
    notes: str = ""
    # residual of the printed variant, read by the erratum protocol; not serialized
    printed_residual: Optional[float] = Field(default=None, exclude=True)

    def to_json_dict(self) -> Dict[str, Any]:
        """Serialization with exactly the public keys (``pass`` rather than ``passed``)."""
        return self.model_dump(mode="json", by_alias=True)


def wrap_log_difference(diff: complex) -> complex:
    """Reduce the imaginary part of a ln-space difference to (-π, π]."""
    im = math.remainder(diff.imag, 2.0 * math.pi)
    if im == -math.pi:
        im = math.pi
    return complex(diff.real, im)


def residuals(lhs: Number, rhs: Number, log_space: bool = True):
    """
    Absolute and relative residual of lhs = rhs.

    In ln-space the difference is taken modulo 2πi, which makes the
    comparison equivalent to comparing the exponentials.
    """
    diff = complex(lhs) - complex(rhs)
    if log_space:
        diff = wrap_log_difference(diff)
    abs_res = abs(diff)
    scale = max(abs(complex(lhs)), abs(complex(rhs)))
    rel_res = abs_res / scale if scale > 0 else 0.0
    return abs_res, rel_res


def make_report(
    identity: IdentityId,
    params: Dict[str, Any],
    lhs: Number,
    rhs: Number,
    tolerance: float,
    notes: str = "",
    log_space: bool = True,
    status: Status = Status.VERIFIED,
    printed_residual: Optional[float] = None,
) -> IdentityReport:
    abs_res, rel_res = residuals(lhs, rhs, log_space)
    ok = abs_res <= tolerance or rel_res <= tolerance
    return IdentityReport(
        id=identity,
        params={k: _jsonable(v) for k, v in params.items()},
        lhs=ComplexPair.of(lhs),
        rhs=ComplexPair.of(rhs),
        abs_residual=abs_res,
        rel_residual=rel_res,
        tolerance=tolerance,
        passed=ok,
        status=status,
        notes=notes,
        printed_residual=printed_residual,
    )


def failed_report(identity: IdentityId, params: Dict[str, Any], tolerance: float, error: Exception) -> IdentityReport:
    """Report for a check that raised; residuals stay null."""
    return IdentityReport(
        id=identity,
        params={k: _jsonable(v) for k, v in params.items()},
        tolerance=tolerance,
        passed=False,
        notes=f"{type(error).__name__}: {error}",
    )


def _jsonable(v):
    if isinstance(v, complex):
        return {"re": v.real, "im": v.imag}
    if isinstance(v, Enum):
        return v.value
    if isinstance(v, float) and not math.isfinite(v):
        return str(v)
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if hasattr(v, "numerator") and hasattr(v, "denominator") and not isinstance(v, int):
        return str(v)
    return v

