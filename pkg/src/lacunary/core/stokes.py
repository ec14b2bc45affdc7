"""
Complex x = |x| e^{i theta}: Stokes angles and the complex-argument expansion.

For theta > 0 the saddles s_k in Re s > 0 stop contributing one by one as theta
decreases: s_k and s_{k+1} connect (the steepest descent path from s_k runs
into s_{k+1}) when Im psi(s_k) = Im psi(s_{k+1}). The angles theta*(k, k+1) at
which this happens decrease with k, and

    K(theta) = 1 + #{theta*(k, k+1) > theta}

is the index of the last contributing saddle on the right. The expansion is

    wp_n(x^-2) ~ sum_{k = k_min}^{K(theta)} J_k

with k_min found by sweeping left until the contributions are negligible.
"""

import logging
import math
from dataclasses import dataclass, field
from functools import lru_cache

from scipy.optimize import brentq

from lacunary.core.context import ProblemContext
from lacunary.core.errors import (
    ContextError,
    InsufficientChartError,
    LacunaryError,
    SaddleCatalogError,
    StokesNotFoundError,
)
from lacunary.core.expansion import (
    ExpansionResult,
    SaddleContribution,
    expand_real,
    saddle_contribution,
)
from lacunary.core.saddles import Saddle, locate_saddle, saddle_catalog, saddle_refine

logger = logging.getLogger(__name__)

# ============================================================================
# CONFIGURATION
# ============================================================================

# theta grid, in units of pi, walked from 1/2 downward
THETA_STEP_PI = 0.00125
THETA_FLOOR_PI = 0.001
THETA_XTOL = 1e-12
# |Im psi(s_k) - Im psi(s_{k+1})| allowed at a located Stokes angle
RESIDUAL_TOL = 1e-10

DEFAULT_PAIRS = 5
MAX_PAIRS = 20

NEGLIGIBLE = 1e-16
# A failed refinement ends the left sweep once |J_k| is this far below the peak.
DECAYED = 1e-12
LEFT_SWEEP_LIMIT = 400


# ============================================================================
# DATA STRUCTURES
# ============================================================================


@dataclass(frozen=True)
class StokesEvent:
    """Connection of the pair (k, k+1) at theta."""

    pair: tuple[int, int]
    theta: float
    residual: float

    @property
    def theta_pi(self) -> float:
        return self.theta / math.pi


@dataclass(frozen=True)
class StokesChart:
    """
    Stokes angles for the pairs (1,2) .. (k_pairs_max, k_pairs_max+1) at fixed n, |x|.

    Attributes:
        events: Connections found, ordered by k (so by decreasing theta)
        missing: Pairs with no connection above the theta floor
    """

    n: int
    abs_x: float
    k_pairs_max: int
    events: tuple[StokesEvent, ...]
    missing: tuple[tuple[int, int], ...] = field(default=())

    @property
    def smallest_angle(self) -> float | None:
        return min((e.theta for e in self.events), default=None)

    @property
    def max_residual(self) -> float:
        return max((e.residual for e in self.events), default=0.0)

    def angle(self, k: int) -> float:
        for event in self.events:
            if event.pair[0] == k:
                return event.theta
        raise StokesNotFoundError(k, self.n, self.abs_x)


# ============================================================================
# STOKES ANGLES
# ============================================================================


def _connection_defect(a: Saddle, b: Saddle) -> float:
    return (a.psi_at_s - b.psi_at_s).imag


def _track(
    positions: dict[int, complex],
    previous: dict[int, complex] | None,
    ctx: ProblemContext,
) -> dict[int, Saddle]:
    """Refine every tracked saddle at a new theta from its last positions."""
    out = {}
    for k, s in positions.items():
        seeds = [s]
        if previous is not None:
            seeds.insert(0, 2.0 * s - previous[k])
        cause: LacunaryError | None = None
        for seed in seeds:
            try:
                out[k] = saddle_refine(seed, ctx, k)
                break
            except LacunaryError as e:
                cause = e
        else:
            raise SaddleCatalogError(k, cause)
    return out


def _bisect_pair(
    k: int,
    n: int,
    abs_x: float,
    lo: tuple[float, dict[int, complex]],
    hi: tuple[float, dict[int, complex]],
) -> StokesEvent:
    theta_lo, at_lo = lo
    theta_hi, at_hi = hi

    def refined(theta: float) -> tuple[Saddle, Saddle]:
        ctx = ProblemContext.from_polar(n, abs_x, theta / math.pi)
        t = (theta - theta_lo) / (theta_hi - theta_lo)
        pair = []
        for j in (k, k + 1):
            seed = at_lo[j] + t * (at_hi[j] - at_lo[j])
            pair.append(saddle_refine(seed, ctx, j))
        return pair[0], pair[1]

    def defect(theta: float) -> float:
        return _connection_defect(*refined(theta))

    theta = brentq(defect, theta_lo, theta_hi, xtol=THETA_XTOL, rtol=4 * 2.0**-52)
    residual = abs(defect(theta))
    if residual > RESIDUAL_TOL:
        logger.warning(
            f"Stokes angle n={n} |x|={abs_x} pair=({k},{k + 1}): residual {residual:.2e}"
            f" exceeds {RESIDUAL_TOL:g}"
        )
    logger.debug(f"Stokes angle n={n} |x|={abs_x} pair=({k},{k + 1}): {theta / math.pi:.8f} pi")
    return StokesEvent(pair=(k, k + 1), theta=theta, residual=residual)


@lru_cache(maxsize=64)
def stokes_chart(n: int, abs_x: float, k_pairs_max: int = DEFAULT_PAIRS) -> StokesChart:
    """
    Stokes angles of the pairs (k, k+1), k = 1..k_pairs_max.

    The saddles s_1 .. s_{k_pairs_max+1} are tracked by continuation from
    theta = pi/2 downward on a grid of step 0.00125 pi. The first sign change
    of Im[psi(s_k) - psi(s_{k+1})] brackets theta*(k, k+1), which Brent's
    method then locates, refining both saddles at every trial angle.

    Args:
        n: Degree
        abs_x: |x| > 1
        k_pairs_max: Number of pairs to resolve

    Returns:
        StokesChart; pairs with no sign change above 0.001 pi are listed as missing
    """
    ks = list(range(1, k_pairs_max + 2))
    ctx = ProblemContext.from_polar(n, abs_x, 0.5)
    current = {s.k: s for s in saddle_catalog(1, k_pairs_max + 1, ctx)}
    theta = math.pi / 2
    previous_positions: dict[int, complex] | None = None
    defects = {k: _connection_defect(current[k], current[k + 1]) for k in ks[:-1]}
    found: dict[int, StokesEvent] = {}

    step = THETA_STEP_PI * math.pi
    floor = THETA_FLOOR_PI * math.pi
    while len(found) < k_pairs_max and theta - step >= floor:
        positions = {k: current[k].s for k in ks}
        new_theta = theta - step
        new_ctx = ProblemContext.from_polar(n, abs_x, new_theta / math.pi)
        updated = _track(positions, previous_positions, new_ctx)
        new_positions = {k: updated[k].s for k in ks}

        for k in ks[:-1]:
            if k in found:
                continue
            d_new = _connection_defect(updated[k], updated[k + 1])
            if d_new == 0.0 or (d_new > 0) != (defects[k] > 0):
                found[k] = _bisect_pair(
                    k, n, abs_x, (new_theta, new_positions), (theta, positions)
                )
            defects[k] = d_new

        previous_positions = positions
        current = updated
        theta = new_theta

    events = tuple(found[k] for k in sorted(found))
    missing = tuple((k, k + 1) for k in ks[:-1] if k not in found)
    if missing:
        logger.info(f"Stokes chart n={n} |x|={abs_x}: no connection for pairs {missing}")
    return StokesChart(n=n, abs_x=abs_x, k_pairs_max=k_pairs_max, events=events, missing=missing)


def stokes_angle(k: int, n: int, abs_x: float) -> float:
    """
    theta*(k, k+1) in radians.

    Raises:
        StokesNotFoundError: If the pair does not connect in (0, pi/2)
    """
    if k < 1:
        raise ValueError(f"Stokes pairs start at k=1, got {k}")
    return stokes_chart(n, float(abs_x), max(DEFAULT_PAIRS, k)).angle(k)


def contributing_count(theta: float, chart: StokesChart) -> int:
    """
    K(theta) = 1 + #{theta* > theta}.

    A theta equal to a Stokes angle gets the smaller count.

    Raises:
        InsufficientChartError: If theta is at or below the smallest computed
            angle and the chart may have further connections below it
    """
    if not 0.0 < theta <= math.pi / 2 + 1e-12:
        raise ValueError(f"theta must lie in (0, pi/2], got {theta}")
    smallest = chart.smallest_angle
    open_below = not chart.missing
    if open_below and (smallest is None or theta <= smallest):
        last = chart.k_pairs_max
        raise InsufficientChartError(theta, (last + 1, last + 2))
    if theta <= THETA_FLOOR_PI * math.pi:
        raise InsufficientChartError(theta, (chart.k_pairs_max + 1, chart.k_pairs_max + 2))
    return 1 + sum(1 for e in chart.events if e.theta > theta)


def _count_for(ctx: ProblemContext, chart: StokesChart | None) -> tuple[int, StokesChart]:
    pairs = DEFAULT_PAIRS if chart is None else chart.k_pairs_max
    if chart is None:
        chart = stokes_chart(ctx.n, ctx.abs_x, pairs)
    while True:
        try:
            return contributing_count(ctx.theta, chart), chart
        except InsufficientChartError:
            if pairs >= MAX_PAIRS:
                raise
            pairs = min(2 * pairs, MAX_PAIRS)
            chart = stokes_chart(ctx.n, ctx.abs_x, pairs)


# ============================================================================
# COMPLEX EXPANSION
# ============================================================================


def _log_magnitude(jk: SaddleContribution) -> float:
    return jk.log10_magnitude * math.log(10.0)


def expand_complex(
    ctx: ProblemContext, j_max: int = 3, chart: StokesChart | None = None
) -> ExpansionResult:
    """
    sum_{k=k_min}^{K(theta)} J_k for 0 <= arg x <= pi/2.

    Every J_k is truncated at j_max. The left end k_min is the first k < 0,
    past the largest contribution, with |J_k| < 1e-16 max |J|. At theta = 0 the
    real-x expansion is returned unchanged.

    Raises:
        ContextError: If arg x < 0 (use conjugate symmetry)
        InsufficientChartError: If no chart of up to 20 pairs covers theta
    """
    if ctx.is_real:
        return expand_real(ctx, j_max=j_max)
    theta = ctx.theta
    if theta < 0:
        raise ContextError("x", "expand_complex needs 0 <= arg x <= pi/2; conjugate first")

    K, chart = _count_for(ctx, chart)
    known: dict[int, Saddle] = {}
    contributions: dict[int, SaddleContribution] = {}
    for k in range(0, K + 1):
        if k not in known:
            known[k] = locate_saddle(k, ctx, known)
        contributions[k] = saddle_contribution(known[k], j_max, ctx)

    peak = max(_log_magnitude(c) for c in contributions.values())
    peak_k = max(contributions, key=lambda j: _log_magnitude(contributions[j]))
    cutoff = math.log(NEGLIGIBLE)
    note = ""
    warnings: list[str] = []

    k = -1
    while True:
        if -k > LEFT_SWEEP_LIMIT:
            warnings.append(f"left sweep stopped at the limit k={k + 1}")
            break
        try:
            saddle = known[k] if k in known else locate_saddle(k, ctx, known)
        except LacunaryError as e:
            last = _log_magnitude(contributions[k + 1])
            if last - peak < math.log(DECAYED):
                note = f"left sweep ended at k={k + 1}: {e}"
                break
            raise
        known[k] = saddle
        jk = saddle_contribution(saddle, j_max, ctx)
        contributions[k] = jk
        level = _log_magnitude(jk)
        if level > peak:
            peak, peak_k = level, k
        elif level - peak < cutoff:
            break
        k -= 1

    k_min = min(contributions)
    if peak_k == k_min:
        warnings.append(f"largest contribution sits at the left boundary k={k_min}")
    for w in warnings:
        logger.warning(f"expand_complex n={ctx.n} x={ctx.x}: {w}")

    ordered = [contributions[j] for j in sorted(contributions)]
    total = sum((c.value for c in ordered), 0j)
    return ExpansionResult(
        total=total,
        contributions=ordered,
        k_min_used=k_min,
        k_max_used=K,
        truncation_note=note,
        warnings=warnings,
    )


def contribution_profile(
    ctx: ProblemContext, k_min: int, k_max: int, j_max: int = 3
) -> list[tuple[int, float]]:
    """(k, log10 |J_k|) for k_min..k_max."""
    return [
        (s.k, saddle_contribution(s, j_max, ctx).log10_magnitude)
        for s in saddle_catalog(k_min, k_max, ctx)
    ]
