"""
Saddle points s_k of psi, the roots of psi'(s) = 0.

Equivalently s e^{-is}(1 + x e^{is}) = 2inx log x. Writing s_k = 2 pi k + sigma_k,
the saddle of index k lies between the singularities T_{k-1} and T_k.

Pipeline: saddle_guess (large-n asymptotics) -> saddle_refine (damped Newton)
-> saddle_catalog (outward from k = 0, with continuation from the neighbour
nearer to k = 0 wherever the asymptotic guess is outside the Newton basin).
"""

import cmath
import logging
import math
from dataclasses import dataclass

from lacunary.core.context import ProblemContext
from lacunary.core.errors import (
    BasinEscapeError,
    DegenerateSaddleError,
    LacunaryError,
    PhaseSingularityError,
    SaddleCatalogError,
    SaddleConvergenceError,
)
from lacunary.core.phase import SaddleQuantities, phase_value, psi, saddle_quantities
from lacunary.core.special import r_of_n

logger = logging.getLogger(__name__)

MAX_ITERATIONS = 60
RESIDUAL_RTOL = 1e-13
STEP_RTOL = 1e-13
MIN_DAMPING = 2.0**-20

TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class Saddle:
    """
    A refined saddle point.

    Attributes:
        k: Index
        s: Location
        sigma: s - 2 pi k
        quantities: lambda, a, omega at s
        psi_at_s: psi(s)
        psi_at_sigma: psi(sigma)
        ddpsi: psi''(s)
        residual: |psi'(s)|
        product_residual: |s e^{-is}(1+x e^{is}) - 2inx log x| / |2nx log x|
        guess: Starting point of the refinement
        iterations: Newton iterations used
    """

    k: int
    s: complex
    sigma: complex
    quantities: SaddleQuantities
    psi_at_s: complex
    psi_at_sigma: complex
    ddpsi: complex
    residual: float
    product_residual: float
    guess: complex
    iterations: int

    def shift_defect(self, ctx: ProblemContext) -> float:
        """|psi(s) - psi(sigma) - (pi^2 k^2 + pi k sigma)/(n log x)|."""
        k = self.k
        expected = (math.pi**2 * k * k + math.pi * k * self.sigma) / (ctx.n * ctx.logx)
        return abs(self.psi_at_s - self.psi_at_sigma - expected)


# ============================================================================
# INITIAL GUESSES
# ============================================================================


def saddle_guess(k: int, ctx: ProblemContext) -> complex:
    """
    Large-n approximation to s_k for bounded k.

    sigma_k ~ i log(n alpha/log n) - i log(1 - i(2 pi k - i log log n)/log n),
    which for k = 0 reduces to i log(n alpha/log n) - i log(1 - log log n/log n).

    Example:
        saddle_guess(1, ProblemContext(1000, 2.0)) is about 5.382118+5.846300j
    """
    log_n = ctx.log_n
    loglog_n = math.log(log_n)
    sigma = 1j * cmath.log(ctx.n * ctx.alpha / log_n) - 1j * cmath.log(
        1.0 - 1j * (TWO_PI * k - 1j * loglog_n) / log_n
    )
    return TWO_PI * k + sigma


def saddle_guess_leading(k: int, ctx: ProblemContext) -> complex:
    """
    Leading-order form sigma_k ~ -2 pi k/log n + i{r(n) - (1/2)((2 pi k - log log n)/log n)^2}.

    r(n) is taken with y = |x|^2, so this is meaningful for real x only.
    """
    log_n = ctx.log_n
    r = r_of_n(ctx.n, ctx.abs_x**2)
    ratio = (TWO_PI * k - math.log(log_n)) / log_n
    sigma = complex(-TWO_PI * k / log_n, r - 0.5 * ratio * ratio)
    return TWO_PI * k + sigma


# ============================================================================
# NEWTON REFINEMENT
# ============================================================================


def _dpsi(s: complex, ctx: ProblemContext) -> float:
    try:
        return abs(phase_value(s, ctx, 1).dpsi[1])
    except PhaseSingularityError:
        return math.inf


def index_of(s: complex, ctx: ProblemContext) -> int:
    """Index k of the strip (T_{k-1}, T_k) containing s."""
    return round((s.real + ctx.logx.imag) / TWO_PI)


def product_residual(s: complex, ctx: ProblemContext) -> float:
    target = 2j * ctx.n * ctx.x * ctx.logx
    lhs = s * cmath.exp(-1j * s) * (1.0 + ctx.x * cmath.exp(1j * s))
    return abs(lhs - target) / abs(target)


def saddle_refine(guess: complex, ctx: ProblemContext, k: int | None = None) -> Saddle:
    """
    Damped Newton iteration for psi'(s) = 0.

    The step is halved while |psi'| fails to decrease. Convergence requires
    |psi'(s)| < 1e-13 max(1, |s|/(2n|log x|)) and a last step below
    1e-13 max(1, |s|). An iterate stuck at rounding level is accepted when its
    residual already meets the first criterion.

    Args:
        guess: Starting point
        ctx: Problem parameters
        k: Expected index; enables the basin check. Inferred from Re s if None

    Returns:
        The refined Saddle

    Raises:
        SaddleConvergenceError: No convergence within 60 iterations
        BasinEscapeError: Converged outside the strip of index k
        DegenerateSaddleError: psi'' vanished
    """
    guess = complex(guess)
    s = guess
    two_n_abs_l = 2.0 * ctx.n * abs(ctx.logx)
    last_step = math.inf
    residual = math.inf

    for iteration in range(1, MAX_ITERATIONS + 1):
        pv = phase_value(s, ctx, 2)
        d1, d2 = complex(pv.dpsi[1]), complex(pv.dpsi[2])
        residual = abs(d1)
        res_tol = RESIDUAL_RTOL * max(1.0, abs(s) / two_n_abs_l)
        step_tol = STEP_RTOL * max(1.0, abs(s))
        if residual < res_tol and last_step <= step_tol:
            break
        if d2 == 0:
            raise DegenerateSaddleError("psi''")
        step = d1 / d2
        if residual < res_tol and abs(step) <= step_tol:
            break

        damping = 1.0
        while True:
            candidate = s - damping * step
            new_residual = _dpsi(candidate, ctx)
            if new_residual < residual or damping < MIN_DAMPING:
                break
            damping *= 0.5

        if not new_residual < residual:
            if residual < res_tol:
                break
            raise SaddleConvergenceError(s, residual, iteration)
        last_step = abs(damping * step)
        s = candidate
    else:
        raise SaddleConvergenceError(s, residual, MAX_ITERATIONS)

    if k is None:
        k = index_of(s, ctx)
    elif abs(s.real - (TWO_PI * k - ctx.logx.imag)) > math.pi:
        raise BasinEscapeError(k, s)

    pv = phase_value(s, ctx, 2)
    sigma = s - TWO_PI * k
    saddle = Saddle(
        k=k,
        s=s,
        sigma=sigma,
        quantities=saddle_quantities(s, ctx),
        psi_at_s=complex(pv.dpsi[0]),
        psi_at_sigma=psi(sigma, ctx),
        ddpsi=complex(pv.dpsi[2]),
        residual=abs(complex(pv.dpsi[1])),
        product_residual=product_residual(s, ctx),
        guess=guess,
        iterations=iteration,
    )
    logger.debug(f"saddle k={k} n={ctx.n} x={ctx.x}: s={s} in {iteration} iterations")
    return saddle


# ============================================================================
# CATALOG
# ============================================================================

_REFINE_ERRORS = (
    SaddleConvergenceError,
    BasinEscapeError,
    DegenerateSaddleError,
    PhaseSingularityError,
)


def _continuation_seed(k: int, known: dict[int, Saddle]) -> complex:
    step = 1 if k > 0 else -1
    near = known[k - step].s
    far = known.get(k - 2 * step)
    if far is not None:
        return 2.0 * near - far.s
    return near + step * TWO_PI


def locate_saddle(k: int, ctx: ProblemContext, known: dict[int, Saddle]) -> Saddle:
    """
    Locate s_k, seeding from and adding to the saddles already in known.

    Neighbours nearer to k = 0 are located first when continuation needs them.
    """
    try:
        saddle = saddle_refine(saddle_guess(k, ctx), ctx, k)
        if saddle.s.imag > 0:
            return saddle
        cause: LacunaryError = BasinEscapeError(k, saddle.s)
    except _REFINE_ERRORS as e:
        cause = e

    if k == 0:
        seeds = [saddle_guess_leading(0, ctx), 1j * r_of_n(ctx.n, ctx.abs_x**2)]
    else:
        step = 1 if k > 0 else -1
        if k - step not in known:
            known[k - step] = locate_saddle(k - step, ctx, known)
        seeds = [_continuation_seed(k, known), known[k - step].s + step * TWO_PI]

    for seed in seeds:
        try:
            saddle = saddle_refine(seed, ctx, k)
        except _REFINE_ERRORS as e:
            cause = e
            continue
        if saddle.s.imag <= 0:
            logger.warning(f"saddle k={k} n={ctx.n} x={ctx.x} has Im s <= 0: s={saddle.s}")
        return saddle
    raise SaddleCatalogError(k, cause)


def saddle_catalog(k_min: int, k_max: int, ctx: ProblemContext) -> list[Saddle]:
    """
    Saddles s_{k_min} .. s_{k_max}, ordered by k.

    Each index is first refined from its asymptotic guess; on failure, on basin
    escape or when the result has Im s <= 0 it is refined again from its
    neighbour nearer to k = 0, linearly extrapolated. Indices are processed
    outward from k = 0 so that neighbours are available.

    Raises:
        SaddleCatalogError: If neither strategy locates some s_k
        ValueError: If k_min > k_max
    """
    if k_min > k_max:
        raise ValueError(f"empty saddle range {k_min}..{k_max}")
    known: dict[int, Saddle] = {}
    for k in sorted(range(k_min, k_max + 1), key=lambda j: (abs(j), j)):
        if k not in known:
            known[k] = locate_saddle(k, ctx, known)
    return [known[k] for k in range(k_min, k_max + 1)]
