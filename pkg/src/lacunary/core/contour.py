"""
Steepest descent and ascent paths through the saddles, and integration along them.

A descent path C_k leaves s_k along the two directions in which Re psi grows
fastest and keeps Im psi = Im psi(s_k). It ends at a singularity T_j, where
e^{-n psi} has a zero of order n, or runs off to infinity. Ascent paths are
traced for figures only.

Tracing is predictor-corrector: a midpoint step along the unit flow
conj(psi')/|psi'| followed by Newton projection back onto the level set. The
logarithm in psi is unwound along each path so that Im psi stays continuous.

Joining C_k over a range of k gives the serpentine contour; integrating
e^{-n psi} along it with composite Gauss-Legendre rules gives J_k independently
of the series.
"""

import cmath
import logging
import math
from dataclasses import dataclass
from typing import Literal

import numpy as np
from numpy.polynomial.legendre import leggauss

from lacunary.core.context import ProblemContext
from lacunary.core.errors import DegenerateSaddleError, QuadratureError
from lacunary.core.phase import nearest_singularity_index, psi_derivative, singularity
from lacunary.core.saddles import Saddle

logger = logging.getLogger(__name__)

# ============================================================================
# CONFIGURATION
# ============================================================================

DEFAULT_ARC_STEP = 0.02
# n * |Re psi - Re psi(s_k)| beyond which the integrand along a path is negligible
DEFAULT_BUDGET = 75.0
DEFAULT_MAX_STEPS = 20000
LAUNCH_SCALE = 1e-4
SINGULARITY_STOP = 1e-6
# distance from every singularity required before a descent path counts as escaped
ESCAPE_CLEARANCE = 1.0
CORRECTOR_ITERATIONS = 2
QUADRATURE_RTOL = 1e-10

Kind = Literal["descent", "ascent"]
Terminus = Literal["singularity", "infinity", "step-limit"]

_GL8 = leggauss(8)
_GL4 = leggauss(4)


# ============================================================================
# DATA STRUCTURES
# ============================================================================


@dataclass(frozen=True)
class PathPolyline:
    """
    One branch of a steepest path, starting at its saddle.

    Attributes:
        k: Saddle index
        kind: "descent" or "ascent"
        points: Traced points, points[0] is the saddle
        psi_values: psi at each point on a continuous branch of the logarithm
        terminus: How tracing stopped
        terminus_index: j of the singularity T_j reached, if any
        direction: Angle of the final chord when the path runs to infinity
    """

    k: int
    kind: Kind
    points: tuple[complex, ...]
    psi_values: tuple[complex, ...]
    terminus: Terminus
    terminus_index: int | None = None
    direction: float | None = None

    def phase_defect(self) -> float:
        """Largest |Im(psi(p) - psi(s_k))| normalized by max(1, |Re psi(p)|)."""
        c = self.psi_values[0].imag
        return max(abs(v.imag - c) / max(1.0, abs(v.real)) for v in self.psi_values)


@dataclass(frozen=True)
class SerpentinePath:
    """C_k as its two descent branches; forward heads right (towards T_k)."""

    saddle: Saddle
    forward: PathPolyline
    backward: PathPolyline


# ============================================================================
# TRACING
# ============================================================================


class _BranchTracker:
    """psi with log(1 + x e^{is}) continued along a path."""

    def __init__(self, s0: complex, ctx: ProblemContext):
        self.ctx = ctx
        self.winding = 0
        self.arg = cmath.phase(1.0 + ctx.x * cmath.exp(1j * s0))

    def _log(self, s: complex, commit: bool) -> complex:
        w = 1.0 + self.ctx.x * cmath.exp(1j * s)
        arg = cmath.phase(w)
        winding = self.winding
        jump = arg - self.arg
        if jump > math.pi:
            winding -= 1
        elif jump < -math.pi:
            winding += 1
        if commit:
            self.winding, self.arg = winding, arg
        return complex(math.log(abs(w)), arg + 2.0 * math.pi * winding)

    def psi(self, s: complex, commit: bool = False) -> complex:
        return s * s / (4.0 * self.ctx.n * self.ctx.logx) - self._log(s, commit)


def _distance_to_singularity(s: complex, ctx: ProblemContext) -> tuple[float, int]:
    j0 = nearest_singularity_index(s, ctx)
    best = min((abs(s - singularity(j, ctx)), j) for j in (j0 - 1, j0, j0 + 1))
    return best


def _flow(s: complex, sign: float, ctx: ProblemContext) -> complex:
    d1 = psi_derivative(s, 1, ctx)
    size = abs(d1)
    if size == 0:
        return 0j
    return sign * d1.conjugate() / size


def _escaped(s: complex, kind: Kind, dist: float, j: int, ctx: ProblemContext) -> bool:
    """
    Whether a path past its budget is running off to infinity.

    Ascent paths never reach a singularity. A descent path escapes only inside
    the sectors |arg(+-s)| < pi/4, clear of the singularities and not heading
    into the nearest one.
    """
    if kind == "ascent":
        return True
    if abs(s.imag) >= abs(s.real) or dist <= ESCAPE_CLEARANCE:
        return False
    heading = (singularity(j, ctx) - s) * _flow(s, 1.0, ctx).conjugate()
    return heading.real <= 0.0


def _trace(
    saddle: Saddle,
    launch: complex,
    kind: Kind,
    ctx: ProblemContext,
    arc_step: float,
    budget: float,
    max_steps: int,
) -> PathPolyline:
    sign = 1.0 if kind == "descent" else -1.0
    tracker = _BranchTracker(saddle.s, ctx)
    psi_k = tracker.psi(saddle.s, commit=True)
    level = psi_k.imag

    points = [saddle.s]
    values = [psi_k]
    delta = LAUNCH_SCALE / math.sqrt(abs(saddle.ddpsi))
    s = saddle.s + delta * launch

    terminus: Terminus = "step-limit"
    terminus_index = None
    direction = None
    for _ in range(max_steps):
        # project onto Im psi = level
        for _ in range(CORRECTOR_ITERATIONS):
            f = tracker.psi(s)
            d1 = psi_derivative(s, 1, ctx)
            s = s + 1j * d1.conjugate() * (level - f.imag) / (abs(d1) ** 2)
        value = tracker.psi(s, commit=True)
        points.append(s)
        values.append(value)

        dist, j = _distance_to_singularity(s, ctx)
        if dist < SINGULARITY_STOP:
            terminus, terminus_index = "singularity", j
            break
        rise = sign * ctx.n * (value.real - psi_k.real)
        if rise > budget and _escaped(s, kind, dist, j, ctx):
            terminus = "infinity"
            direction = cmath.phase(points[-1] - points[-2])
            break

        h = min(arc_step, 0.5 * dist)
        k1 = _flow(s, sign, ctx)
        k2 = _flow(s + 0.5 * h * k1, sign, ctx)
        s = s + h * k2
    else:
        logger.warning(f"{kind} path from s_{saddle.k} hit the step limit at s={s}")

    return PathPolyline(
        k=saddle.k,
        kind=kind,
        points=tuple(points),
        psi_values=tuple(values),
        terminus=terminus,
        terminus_index=terminus_index,
        direction=direction,
    )


def _descent_direction(saddle: Saddle) -> complex:
    if saddle.ddpsi == 0:
        raise DegenerateSaddleError("psi''")
    d = cmath.exp(-0.5j * cmath.phase(saddle.ddpsi))
    return d if d.real >= 0 else -d


def trace_descent(
    saddle: Saddle,
    ctx: ProblemContext,
    arc_step: float = DEFAULT_ARC_STEP,
    budget: float = DEFAULT_BUDGET,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> tuple[PathPolyline, PathPolyline]:
    """
    Both branches of the steepest descent path through a saddle.

    The branches leave s_k at s_k +- delta e^{i phi}, phi = -arg(psi''(s_k))/2,
    delta = 1e-4 |psi''|^{-1/2}. Steps are min(arc_step, half the distance to
    the nearest singularity). A branch ends within 1e-6 of a singularity, or
    at infinity once n Re psi has risen by budget inside |arg(+-s)| < pi/4 and
    the path is no longer closing on a singularity.

    Returns:
        (forward, backward), forward being the branch launched with Re > 0
    """
    d = _descent_direction(saddle)
    forward = _trace(saddle, d, "descent", ctx, arc_step, budget, max_steps)
    backward = _trace(saddle, -d, "descent", ctx, arc_step, budget, max_steps)
    return forward, backward


def trace_ascent(
    saddle: Saddle,
    ctx: ProblemContext,
    arc_step: float = DEFAULT_ARC_STEP,
    budget: float = DEFAULT_BUDGET,
    max_steps: int = DEFAULT_MAX_STEPS,
) -> tuple[PathPolyline, PathPolyline]:
    """Both branches of the steepest ascent path, upper branch first."""
    d = 1j * _descent_direction(saddle)
    if d.imag < 0:
        d = -d
    upper = _trace(saddle, d, "ascent", ctx, arc_step, budget, max_steps)
    lower = _trace(saddle, -d, "ascent", ctx, arc_step, budget, max_steps)
    return upper, lower


def serpentine(
    saddles: list[Saddle], ctx: ProblemContext, arc_step: float = DEFAULT_ARC_STEP
) -> list[SerpentinePath]:
    """Descent paths C_k for a list of saddles."""
    out = []
    for saddle in saddles:
        forward, backward = trace_descent(saddle, ctx, arc_step)
        out.append(SerpentinePath(saddle=saddle, forward=forward, backward=backward))
    return out


# ============================================================================
# QUADRATURE
# ============================================================================


def _branch_integral(points: tuple[complex, ...], psi_k: complex, ctx: ProblemContext):
    """Integral of e^{-n(psi - psi_k)} along a polyline by GL8, with |GL8 - GL4|."""
    pts = np.asarray(points, dtype=complex)
    a, b = pts[:-1], pts[1:]
    half = 0.5 * (b - a)
    mid = 0.5 * (b + a)

    def rule(nodes, weights):
        s = mid[:, None] + half[:, None] * nodes[None, :]
        log_f = -s * s / (4.0 * ctx.logx) + ctx.n * np.log(1.0 + ctx.x * np.exp(1j * s))
        f = np.exp(log_f + ctx.n * psi_k)
        return complex(np.sum(half * (f @ weights)))

    fine = rule(*_GL8)
    coarse = rule(*_GL4)
    return fine, abs(fine - coarse)


def path_integral(path: SerpentinePath, ctx: ProblemContext) -> tuple[complex, float]:
    """
    J_k = (2 sqrt(pi log x))^{-1} integral over C_k of e^{-n psi}, with an error estimate.

    C_k runs from the end of the backward branch through s_k to the end of the
    forward branch.
    """
    psi_k = path.forward.psi_values[0]
    fwd, fwd_err = _branch_integral(path.forward.points, psi_k, ctx)
    bwd, bwd_err = _branch_integral(path.backward.points, psi_k, ctx)
    scale = cmath.exp(-ctx.n * psi_k) / (2.0 * cmath.sqrt(math.pi * ctx.logx))
    value = scale * (fwd - bwd)
    error = abs(scale) * (fwd_err + bwd_err)
    return value, error


def contour_quadrature(paths: list[SerpentinePath], ctx: ProblemContext) -> complex:
    """
    Sum of J_k over the serpentine contour.

    A branch that stopped on the step limit is accepted, with a warning, only
    once its integrand has fallen by e^{-DEFAULT_BUDGET}.

    Raises:
        QuadratureError: If the 8- and 4-point rules disagree beyond 1e-10
            relative on any path, or a step-limited branch was cut off while
            its integrand was still significant
    """
    total = 0j
    for path in paths:
        for branch in (path.forward, path.backward):
            if branch.terminus != "step-limit":
                continue
            tail = ctx.n * (branch.psi_values[-1].real - branch.psi_values[0].real)
            if tail < DEFAULT_BUDGET:
                raise QuadratureError(
                    f"path C_{path.saddle.k} stopped on the step limit at s={branch.points[-1]:.6g}",
                    math.exp(-tail),
                )
            logger.warning(f"path C_{path.saddle.k} stopped on the step limit past its budget")
        value, error = path_integral(path, ctx)
        if error > QUADRATURE_RTOL * max(abs(value), 1e-300):
            raise QuadratureError(f"path C_{path.saddle.k} under-resolved", error, value)
        total += value
    return total
