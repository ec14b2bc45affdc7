"""
Saddle contributions J_k and the assembled expansions.

    J_k ~ e^{-n psi(s_k)} / sqrt(1 + omega_k) * sum_j (1/2)_j c_jk / (log n)^j

For real x > 1 the saddles come in pairs s_{-k} = -conj(s_k), so

    wp_n(x^-2) ~ J_0 + 2 Re sum_{k>=1} J_k

The closed-form approximations (gn_approx with r(n), conjecture_approx with
Lambert W) are the leading behaviour of the same sum.
"""

import cmath
import logging
import math
from dataclasses import dataclass, field

import numpy as np
from scipy.special import poch

from lacunary.core.coeffs import MAX_J, CoefficientSet, c_coefficients
from lacunary.core.context import ProblemContext
from lacunary.core.errors import ContextError, DegenerateSaddleError
from lacunary.core.saddles import Saddle, saddle_catalog
from lacunary.core.special import lambert_w, r_of_n

__all__ = [
    "SaddleContribution",
    "ExpansionResult",
    "lambert_w",
    "r_of_n",
    "contribution",
    "theorem_form_value",
    "expand_real",
    "gn_approx",
    "theta_series",
    "conjecture_approx",
]

logger = logging.getLogger(__name__)

# Contributions below this fraction of |J_0| are negligible at binary64.
NEGLIGIBLE = 1e-16
# Upper bound on the automatic k_max search.
K_SEARCH_LIMIT = 64
# Theta-series truncation on the exponential factor.
THETA_CUTOFF = 1e-30
# Relative disagreement of the s_k and sigma_k forms of J_k that is logged.
FORMS_RTOL = 1e-10


# ============================================================================
# DATA STRUCTURES
# ============================================================================


@dataclass(frozen=True)
class SaddleContribution:
    """
    J_k for one saddle.

    Attributes:
        k: Saddle index
        value: J_k
        prefactor: e^{-n psi(s_k)} / sqrt(1 + omega_k)
        log_prefactor: Its logarithm, -n psi(s_k) - log(1 + omega_k)/2
        series_terms: (1/2)_j c_jk / (log n)^j for j = 0..j_max
        j_max: Truncation order
    """

    k: int
    value: complex
    prefactor: complex
    log_prefactor: complex
    series_terms: np.ndarray
    j_max: int

    @property
    def magnitude(self) -> float:
        return abs(self.value)

    @property
    def log10_magnitude(self) -> float:
        """log10 |J_k| computed from the log prefactor, so it stays finite when |J_k| underflows."""
        series = abs(complex(np.sum(self.series_terms)))
        if series == 0:
            return -math.inf
        return (self.log_prefactor.real + math.log(series)) / math.log(10.0)


@dataclass
class ExpansionResult:
    """
    An assembled expansion.

    Attributes:
        total: The approximation to wp_n(x^-2)
        contributions: The J_k used, ordered by k
        k_min_used: Smallest index included
        k_max_used: Largest index included
        truncation_note: Human-readable note on truncation decisions
    """

    total: complex
    contributions: list[SaddleContribution]
    k_min_used: int
    k_max_used: int
    truncation_note: str = ""
    warnings: list[str] = field(default_factory=list)

    def relative_error(self, reference: complex) -> float:
        return abs(self.total - reference) / abs(reference)


# ============================================================================
# SADDLE CONTRIBUTIONS
# ============================================================================


def _series_terms(coeffs: CoefficientSet, j_max: int, ctx: ProblemContext) -> np.ndarray:
    log_n = ctx.log_n
    return np.array(
        [poch(0.5, j) * coeffs.c[j] / log_n**j for j in range(j_max + 1)], dtype=complex
    )


def _forms_mismatch(saddle: Saddle, ctx: ProblemContext) -> float:
    """|theorem_form_value / contribution - 1|; the series factors cancel."""
    k = saddle.k
    shift = (math.pi**2 * k * k + math.pi * k * saddle.sigma) / ctx.logx
    delta = ctx.n * (saddle.psi_at_s - saddle.psi_at_sigma) - shift
    if abs(delta.real) > 1.0:
        return math.inf
    return abs(cmath.exp(delta) - 1.0)


def contribution(
    saddle: Saddle, coeffs: CoefficientSet, j_max: int, ctx: ProblemContext
) -> SaddleContribution:
    """
    J_k truncated after the term j = j_max.

    Raises:
        DegenerateSaddleError: If 1 + omega_k vanishes
        ValueError: If j_max is outside 0..3
    """
    if not 0 <= j_max <= MAX_J:
        raise ValueError(f"j_max must be in 0..{MAX_J}, got {j_max}")
    one_plus_omega = 1.0 + saddle.quantities.omega
    if one_plus_omega == 0:
        raise DegenerateSaddleError("1+omega")

    log_prefactor = -ctx.n * saddle.psi_at_s - 0.5 * cmath.log(one_plus_omega)
    prefactor = cmath.exp(log_prefactor)
    terms = _series_terms(coeffs, j_max, ctx)

    magnitudes = np.abs(terms)
    if j_max > 0 and np.any(magnitudes[1:] >= magnitudes[:-1]):
        logger.warning(f"J_{saddle.k} n={ctx.n}: series terms not decreasing {magnitudes}")
    mismatch = _forms_mismatch(saddle, ctx)
    if mismatch > FORMS_RTOL:
        logger.warning(f"J_{saddle.k} n={ctx.n}: s_k and sigma_k forms differ by {mismatch:.2e}")

    return SaddleContribution(
        k=saddle.k,
        value=prefactor * complex(np.sum(terms)),
        prefactor=prefactor,
        log_prefactor=log_prefactor,
        series_terms=terms,
        j_max=j_max,
    )


def theorem_form_value(
    saddle: Saddle, coeffs: CoefficientSet, j_max: int, ctx: ProblemContext
) -> complex:
    """
    J_k written through sigma_k = s_k - 2 pi k:

        exp(-(pi^2 k^2 + pi k sigma_k)/log x) e^{-n psi(sigma_k)} / sqrt(1 + omega_k) * series
    """
    k, sigma = saddle.k, saddle.sigma
    shift = (math.pi**2 * k * k + math.pi * k * sigma) / ctx.logx
    log_value = -shift - ctx.n * saddle.psi_at_sigma - 0.5 * cmath.log(1.0 + saddle.quantities.omega)
    return cmath.exp(log_value) * complex(np.sum(_series_terms(coeffs, j_max, ctx)))


def saddle_contribution(saddle: Saddle, j_max: int, ctx: ProblemContext) -> SaddleContribution:
    """contribution() with the closed-form coefficients of the saddle."""
    return contribution(saddle, c_coefficients(saddle.quantities, ctx), j_max, ctx)


# ============================================================================
# REAL x
# ============================================================================


def _auto_k_max(ctx: ProblemContext, leading: float) -> tuple[int, list[Saddle]]:
    limit = 4
    while True:
        saddles = saddle_catalog(0, limit, ctx)
        for saddle in saddles[1:]:
            log_pref = (
                -ctx.n * saddle.psi_at_s - 0.5 * cmath.log(1.0 + saddle.quantities.omega)
            ).real
            if log_pref < math.log(NEGLIGIBLE * leading):
                return saddle.k, saddles[: saddle.k + 1]
        if limit >= K_SEARCH_LIMIT:
            return limit, saddles
        limit = min(2 * limit, K_SEARCH_LIMIT)


def expand_real(
    ctx: ProblemContext,
    j_max: int = 3,
    k_max: int | None = None,
    j_max_side: int | None = None,
) -> ExpansionResult:
    """
    J_0 + 2 Re sum_{k=1}^{k_max} J_k for real x > 1.

    Args:
        ctx: Problem parameters; x must be real
        j_max: Truncation order of the dominant series (k = 0)
        k_max: Largest k; by default the first k whose prefactor is below
            1e-16 |J_0|
        j_max_side: Truncation order for k >= 1; default min(j_max, 2)

    Returns:
        ExpansionResult with a real total

    Example:
        expand_real(ProblemContext(200, 1.2), j_max=3, k_max=1, j_max_side=0).total.real
        is 8.562122013e9 to ten digits.
    """
    if not ctx.is_real:
        raise ContextError("x", f"expand_real needs real x, got {ctx.x}")
    if j_max_side is None:
        j_max_side = min(j_max, 2)

    j0 = saddle_contribution(saddle_catalog(0, 0, ctx)[0], j_max, ctx)
    note = ""
    if k_max is None:
        k_max, saddles = _auto_k_max(ctx, abs(j0.value))
        note = f"k_max={k_max} chosen where the prefactor falls below {NEGLIGIBLE:g}|J_0|"
    else:
        saddles = saddle_catalog(0, k_max, ctx) if k_max > 0 else []

    contributions = [j0]
    side = 0.0
    for saddle in saddles[1 : k_max + 1]:
        jk = saddle_contribution(saddle, j_max_side, ctx)
        contributions.append(jk)
        side += jk.value.real

    total = complex(j0.value.real + 2.0 * side, j0.value.imag)
    logger.debug(f"expand_real n={ctx.n} x={ctx.x.real}: total={total.real:.10e} k_max={k_max}")
    return ExpansionResult(
        total=total,
        contributions=contributions,
        k_min_used=0,
        k_max_used=k_max,
        truncation_note=note,
    )


# ============================================================================
# CLOSED-FORM APPROXIMATIONS
# ============================================================================


def theta_series(r: float, y: float) -> float:
    """Theta(y) = 1 + 2 sum_{k>=1} e^{-2 pi^2 k^2/log y} cos(2 pi k r/log y)."""
    log_y = math.log(y)
    total = 1.0
    k = 1
    while True:
        factor = math.exp(-2.0 * math.pi**2 * k * k / log_y)
        if factor < THETA_CUTOFF:
            return total
        total += 2.0 * factor * math.cos(2.0 * math.pi * k * r / log_y)
        k += 1


def gn_approx(n: int, y: float) -> float:
    """(1/sqrt r) exp((r^2 + 2r)/(2 log y)) Theta(y) with r = r(n)."""
    r = r_of_n(n, y)
    log_y = math.log(y)
    return math.exp((r * r + 2.0 * r) / (2.0 * log_y)) / math.sqrt(r) * theta_series(r, y)


def conjecture_approx(n: int, y: float) -> float:
    """(1/sqrt w) exp((w^2 + 2w)/(2 log y)) with w = W(n sqrt(y) log y)."""
    if not y > 1.0:
        raise ValueError(f"conjecture_approx needs y > 1, got {y!r}")
    log_y = math.log(y)
    w = lambert_w(n * math.sqrt(y) * log_y)
    return math.exp((w * w + 2.0 * w) / (2.0 * log_y)) / math.sqrt(w)
