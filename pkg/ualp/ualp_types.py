# ualp/ualp_types.py
import math
from enum import Enum
from typing import Dict, List, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, model_validator

"""------------Labels------------"""

class IdentityName(str, Enum):
    NORM = "norm"
    WEIGHTED_NORM = "weighted-norm"
    ORTHOGONALITY = "orthogonality"
    MAIN_INTEGRAL = "main-integral"
    BESSEL_INTEGRAL = "bessel-integral"
    POWER_EXP = "power-exp"
    GAUSSIAN_GENERATING = "gaussian-generating"

class QuadratureMethod(str, Enum):
    TANH_SINH = "tanh-sinh"              # integrate [-1, 1] integrands in x
    POLAR_TANH_SINH = "polar-tanh-sinh"  # integrate in theta with x = cos(theta)

"""------------Polynomial parameters------------"""

class PolyParams(BaseModel):
    """Order m' and degree offset n of a universal associated Legendre polynomial."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    m_prime: float = Field(ge=0, allow_inf_nan=False)
    n: int = Field(ge=0)

    @property
    def l_prime(self) -> float:
        """Degree l' = m' + n; never stored separately."""
        return self.m_prime + self.n

class RingPotentialParams(BaseModel):
    """Ring-shape strength b and azimuthal quantum number m."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    b: float = Field(allow_inf_nan=False)
    m: int = Field(ge=0)

    @model_validator(mode="after")
    def check_barrier(self) -> "RingPotentialParams":
        if self.b < -self.m * self.m:
            raise ValueError(f"b={self.b} must satisfy b >= -m^2 = {-self.m * self.m}")
        return self

"""------------Quadrature------------"""

class QuadratureSpec(BaseModel):
    """Tolerances and refinement limits shared by every integration engine."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    abs_tol: float = Field(default=1e-9, gt=0, allow_inf_nan=False)
    rel_tol: float = Field(default=1e-9, gt=0, allow_inf_nan=False)
    max_levels: int = Field(default=12, ge=3)
    max_segments: int = Field(default=200, ge=10)
    method: QuadratureMethod = QuadratureMethod.TANH_SINH

    def tolerance_for(self, value: float) -> float:
        return max(self.abs_tol, self.rel_tol * abs(value))

class IntegralResult(BaseModel):
    """Result of a quadrature"""
    value: float
    error_estimate: float = Field(ge=0)
    converged: bool
    evaluations: int = Field(ge=0)

"""------------Identity parameters------------"""

class MainIntegralParams(BaseModel):
    """Common order m', degree offsets of both polynomials and the shift t."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    m_prime: float = Field(ge=0, allow_inf_nan=False)
    n_l: int = Field(ge=0)
    n_k: int = Field(ge=0)
    t: float = Field(gt=0, lt=1)

    @property
    def l_params(self) -> PolyParams:
        return PolyParams(m_prime=self.m_prime, n=self.n_l)

    @property
    def k_params(self) -> PolyParams:
        return PolyParams(m_prime=self.m_prime, n=self.n_k)

class OrthogonalityParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    m_prime: float = Field(ge=0, allow_inf_nan=False)
    n_l: int = Field(ge=0)
    n_k: int = Field(ge=0)

class BesselIntegralParams(BaseModel):
    """Bessel order n, moment exponent m, scale alpha and offset z.

    The convergence condition on (n, m) is checked by the numeric driver,
    not here, so a sweep can record a divergent point as a failure.
    """
    model_config = ConfigDict(frozen=True, extra="forbid")

    n: int = Field(ge=0)
    m: float = Field(gt=-1, allow_inf_nan=False)
    alpha: float = Field(gt=0, allow_inf_nan=False)
    z: float = Field(gt=0, allow_inf_nan=False)

    @property
    def is_convergent(self) -> bool:
        return self.n > 2 * self.m + 0.5

class PowerExpParams(BaseModel):
    """Parameters of the moment integral of x^m exp(-beta x^n)."""
    model_config = ConfigDict(frozen=True, extra="forbid")

    m: float = Field(allow_inf_nan=False)
    n: float = Field(allow_inf_nan=False)
    beta: float = Field(allow_inf_nan=False)

class GaussianGeneratingParams(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    m: float = Field(gt=-1, allow_inf_nan=False)
    alpha: float = Field(gt=0, allow_inf_nan=False)
    z: float = Field(gt=0, allow_inf_nan=False)
    t: float = Field(gt=0, allow_inf_nan=False)

IdentityParams = Union[
    PolyParams,
    OrthogonalityParams,
    MainIntegralParams,
    BesselIntegralParams,
    PowerExpParams,
    GaussianGeneratingParams,
]

"""------------Verification records and reports------------"""

ParameterValue = Union[int, float]

class VerificationRecord(BaseModel):
    """One closed form compared against its numeric evaluation."""
    identity_name: IdentityName
    parameters: Dict[str, ParameterValue]
    closed_form: Optional[float] = None
    numeric: Optional[float] = None
    abs_diff: Optional[float] = None
    rel_diff: Optional[float] = None
    passed: bool = False
    numeric_error_estimate: Optional[float] = None
    annotation: Optional[str] = None

    @classmethod
    def compare(
        cls,
        identity_name: IdentityName,
        parameters: Dict[str, ParameterValue],
        closed_form: float,
        numeric: IntegralResult,
        abs_tol: float,
        rel_tol: float,
        scale: Optional[float] = None,
    ) -> "VerificationRecord":
        """Build a record; rel_diff is measured against `scale` (default |closed_form|)."""
        abs_diff = abs(numeric.value - closed_form)
        reference = abs(closed_form) if scale is None else abs(scale)
        rel_diff = abs_diff / reference if reference > 0 else abs_diff
        if not math.isfinite(rel_diff):
            rel_diff = None
        passed = abs_diff <= abs_tol or (rel_diff is not None and rel_diff <= rel_tol)
        return cls(
            identity_name=identity_name,
            parameters=parameters,
            closed_form=closed_form,
            numeric=numeric.value,
            abs_diff=abs_diff,
            rel_diff=rel_diff,
            passed=passed,
            numeric_error_estimate=numeric.error_estimate if math.isfinite(numeric.error_estimate) else None,
            annotation=None if numeric.converged else "quadrature did not converge",
        )

    @classmethod
    def failure(
        cls,
        identity_name: IdentityName,
        parameters: Dict[str, ParameterValue],
        error: Exception,
        closed_form: Optional[float] = None,
    ) -> "VerificationRecord":
        return cls(
            identity_name=identity_name,
            parameters=parameters,
            closed_form=closed_form,
            passed=False,
            annotation=f"{type(error).__name__}: {error}",
        )

class ReportSummary(BaseModel):
    total: int
    passed: int
    failed: int

class ReportDocument(BaseModel):
    """Serializable outcome of one verification sweep."""
    tool_version: str
    timestamp: Optional[str] = None  # None when written with --no-timestamp
    identity_name: IdentityName
    tolerance_config: Dict[str, ParameterValue]
    records: List[VerificationRecord] = Field(default_factory=list)
    summary: ReportSummary

    @model_validator(mode="after")
    def check_summary(self) -> "ReportDocument":
        passed = sum(1 for record in self.records if record.passed)
        expected = ReportSummary(total=len(self.records), passed=passed, failed=len(self.records) - passed)
        if self.summary != expected:
            raise ValueError(f"summary {self.summary} does not match records {expected}")
        return self

    @classmethod
    def from_records(
        cls,
        tool_version: str,
        timestamp: Optional[str],
        identity_name: IdentityName,
        tolerance_config: Dict[str, ParameterValue],
        records: List[VerificationRecord],
    ) -> "ReportDocument":
        passed = sum(1 for record in records if record.passed)
        return cls(
            tool_version=tool_version,
            timestamp=timestamp,
            identity_name=identity_name,
            tolerance_config=tolerance_config,
            records=records,
            summary=ReportSummary(total=len(records), passed=passed, failed=len(records) - passed),
        )

    @property
    def all_passed(self) -> bool:
        return self.summary.failed == 0
