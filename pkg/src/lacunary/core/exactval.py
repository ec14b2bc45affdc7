"""
Reference values of wp_n(z) = sum_{k=0}^{n} C(n,k) z^{k(k-1)/2}.

Two independent routes serve as the oracle for every asymptotic result:

- eval_direct: the finite sum itself, with compensated accumulation
- eval_quadrature: the Gaussian integral representation, integrated along a
  horizontal line through the central saddle height
"""

import cmath
import logging
import math
from dataclasses import dataclass

from scipy.integrate import quad

from lacunary.core.context import ProblemContext
from lacunary.core.errors import QuadratureError, TermOverflowError
from lacunary.core.special import r_of_n
from lacunary.core.summation import ACCUMULATORS

logger = logging.getLogger(__name__)

# ============================================================================
# CONFIGURATION
# ============================================================================

# Largest n for which the binomials are exact Python integers.
EXACT_BINOMIAL_MAX_N = 60

# The integration window covers the Gaussian factor down to this fraction of its peak.
GAUSSIAN_CUTOFF = 1e-30
QUAD_EPSREL = 1e-12
QUAD_EPSABS = 1e-14
QUAD_LIMIT = 2000
# Accepted error when quad reports a warning but still returns an estimate.
QUAD_ACCEPT_RTOL = 1e-8


# ============================================================================
# DATA STRUCTURES
# ============================================================================


@dataclass(frozen=True)
class EvalResult:
    """
    Direct-sum value of wp_n(z).

    Attributes:
        value: The sum
        term_count: Number of summands, n + 1
        condition: sum |term| / |sum|, >= 1 (inf when the sum vanishes)
    """

    value: complex
    term_count: int
    condition: float


# ============================================================================
# DIRECT SUMMATION
# ============================================================================


def _exact_terms(n: int, z: complex):
    for k in range(n + 1):
        yield k, math.comb(n, k) * z ** (k * (k - 1) // 2)


def _recurrence_terms(n: int, z: complex):
    # t_{k+1} = t_k (n-k)/(k+1) z^k
    term = complex(1.0, 0.0)
    z_k = complex(1.0, 0.0)
    yield 0, term
    for k in range(n):
        term = term * ((n - k) / (k + 1)) * z_k
        z_k = z_k * z
        yield k + 1, term


def eval_direct(n: int, z: complex, accumulator: str = "neumaier") -> EvalResult:
    """
    Sum the n + 1 terms of wp_n(z).

    For n <= 60 the binomial coefficients are exact integers. Above that the
    binomial recurrence is folded into the term recurrence so that only the
    terms themselves, never a bare C(n,k), can leave the binary64 range.

    Args:
        n: Degree, n >= 0
        z: Any complex number
        accumulator: "neumaier" (default) or "double-double"

    Returns:
        EvalResult with the value, term count and condition number

    Raises:
        TermOverflowError: If a term is not finite in binary64
        ValueError: If n < 0 or the accumulator is unknown

    Example:
        >>> eval_direct(2, 0.5).value
        (3.5+0j)
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    try:
        total = ACCUMULATORS[accumulator]()
    except KeyError:
        raise ValueError(
            f"unknown accumulator {accumulator!r}; choose from {sorted(ACCUMULATORS)}"
        ) from None

    z = complex(z)
    terms = _exact_terms(n, z) if n <= EXACT_BINOMIAL_MAX_N else _recurrence_terms(n, z)
    magnitudes = []
    k = 0
    try:
        for k, term in terms:
            if not cmath.isfinite(term):
                raise TermOverflowError(k, n)
            total.add(term)
            magnitudes.append(abs(term))
    except OverflowError as e:
        if isinstance(e, TermOverflowError):
            raise
        raise TermOverflowError(k, n) from e

    value = total.value
    abs_total = math.fsum(magnitudes)
    if value == 0:
        condition = math.inf
    else:
        condition = max(1.0, abs_total / abs(value))
    if condition > 1e8:
        logger.debug(f"eval_direct n={n} z={z}: condition {condition:.3e}")
    return EvalResult(value=value, term_count=n + 1, condition=condition)


# ============================================================================
# INTEGRAL REPRESENTATION
# ============================================================================


def _log_integrand(ctx: ProblemContext, s: complex) -> complex:
    """-s^2/(4 log x) + n log(1 + x e^{is}); only its exponential is used."""
    return -s * s / (4.0 * ctx.logx) + ctx.n * cmath.log(1.0 + ctx.x * cmath.exp(1j * s))


def eval_quadrature(ctx: ProblemContext) -> complex:
    """
    Evaluate wp_n(x^-2) from its Gaussian integral representation.

    The integrand is entire, so the real line may be shifted to Im s = h with
    h = r(n) computed from |x|^2. For real x this line passes through the
    central saddle i r(n), where the integrand has no cancellation; on the real
    line it has size (1+|x|)^n and cancels down to the result.

    The window is the interval where the Gaussian factor stays within 1e-30 of
    its maximum on the line. The integrand is scaled by its value at the window
    centre and integrated by adaptive Gauss-Kronrod, real and imaginary parts
    separately, with breakpoints at the peaks of (1 + x e^{is})^n.

    Args:
        ctx: Problem parameters

    Returns:
        wp_n(x^-2)

    Raises:
        QuadratureError: If the adaptive rule does not reach its tolerance
    """
    n, L = ctx.n, ctx.logx
    h = r_of_n(n, ctx.abs_x**2)

    # real Gaussian exponent on the line: -p t^2/4 + (h q / 2) t + const, 1/L = p + i q
    inv_L = 1.0 / L
    p, q = inv_L.real, inv_L.imag
    a_coef = p / 4.0
    centre = (h * q / 2.0) / (2.0 * a_coef)
    half_width = math.sqrt(math.log(1.0 / GAUSSIAN_CUTOFF) / a_coef)
    lo, hi = centre - half_width, centre + half_width

    ref = _log_integrand(ctx, complex(centre, h))

    def integrand(t: float) -> complex:
        return cmath.exp(_log_integrand(ctx, complex(t, h)) - ref)

    # peaks of |1 + x e^{is}| sit at Re s = 2 pi k - arg x
    shift = ctx.theta
    k_lo = math.ceil((lo + shift) / (2 * math.pi))
    k_hi = math.floor((hi + shift) / (2 * math.pi))
    points = [2 * math.pi * k - shift for k in range(k_lo, k_hi + 1)]

    parts = []
    for component in (lambda t: integrand(t).real, lambda t: integrand(t).imag):
        out = quad(
            component,
            lo,
            hi,
            points=points or None,
            epsabs=QUAD_EPSABS,
            epsrel=QUAD_EPSREL,
            limit=QUAD_LIMIT,
            full_output=1,
        )
        parts.append(out)

    value = complex(parts[0][0], parts[1][0])
    error = math.hypot(parts[0][1], parts[1][1])
    warned = [out[3] for out in parts if len(out) > 3]
    if warned:
        if error > QUAD_ACCEPT_RTOL * abs(value):
            raise QuadratureError(f"eval_quadrature n={n} x={ctx.x}: {warned[0]}", error, value)
        logger.debug(f"eval_quadrature n={n} x={ctx.x}: accepted after warning ({warned[0]})")

    prefactor = 1.0 / (2.0 * cmath.sqrt(math.pi * L))
    return prefactor * cmath.exp(ref) * value
