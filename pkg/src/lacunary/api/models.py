"""
Pydantic models for the HTTP service.

Requests mirror the command-line verbs: a degree n and one parameterization of
the argument (x, z, or |x| with theta/pi). Complex numbers travel as
ComplexValue objects {"re": ..., "im": ...} so the JSON stays plain.

Models are organized into two categories:
1. Request models: parameters sent TO the service
2. Response models: results returned FROM the service
"""

from pydantic import BaseModel, Field

# ============================================================================
# SHARED
# ============================================================================


class ComplexValue(BaseModel):
    re: float
    im: float = 0.0

    @classmethod
    def of(cls, value: complex) -> "ComplexValue":
        return cls(re=value.real, im=value.imag)

    def to_complex(self) -> complex:
        return complex(self.re, self.im)


# ============================================================================
# REQUEST MODELS
# ============================================================================


class ProblemRequest(BaseModel):
    """
    Degree and argument.

    Attributes:
        n: Degree
        x: Complex x with |x| > 1 and |arg x| <= pi/2
        z: Argument z = x^-2
        abs_x: |x|, optionally with theta_pi = arg(x)/pi
    """

    n: int
    x: ComplexValue | None = None
    z: ComplexValue | None = None
    abs_x: float | None = None
    theta_pi: float | None = None


class EvalRequest(ProblemRequest):
    method: str = Field(default="direct", pattern="^(direct|quadrature)$")
    accumulator: str = Field(default="neumaier", pattern="^(neumaier|double-double)$")


class SaddlesRequest(ProblemRequest):
    k_min: int = 0
    k_max: int = 5


class ExpandRequest(ProblemRequest):
    j_max: int = 3
    k_max: int | None = None


class ApproximationRequest(BaseModel):
    """gn and conjecture take y = x^2 > 1 directly."""

    n: int
    y: float


class StokesRequest(BaseModel):
    n: int
    abs_x: float
    pairs: int = 5


class ProfileRequest(ProblemRequest):
    k_min: int = -20
    k_max: int = 1
    j_max: int = 3


# ============================================================================
# RESPONSE MODELS
# ============================================================================


class EvalResponse(BaseModel):
    value: ComplexValue
    term_count: int | None = None
    condition: float | None = None
    method: str


class SaddleModel(BaseModel):
    k: int
    s: ComplexValue
    guess: ComplexValue
    residual: float
    iterations: int


class SaddlesResponse(BaseModel):
    saddles: list[SaddleModel]


class ContributionModel(BaseModel):
    k: int
    value: ComplexValue
    log10_magnitude: float


class ExpandResponse(BaseModel):
    total: ComplexValue
    contributions: list[ContributionModel]
    k_min_used: int
    k_max_used: int
    truncation_note: str = ""
    warnings: list[str] = Field(default_factory=list)


class ApproximationResponse(BaseModel):
    value: float


class StokesEventModel(BaseModel):
    pair: tuple[int, int]
    theta_pi: float
    residual: float


class StokesResponse(BaseModel):
    n: int
    abs_x: float
    events: list[StokesEventModel]
    missing: list[tuple[int, int]]


class ProfilePoint(BaseModel):
    k: int
    log10_magnitude: float


class ProfileResponse(BaseModel):
    profile: list[ProfilePoint]
