"""
Computation engine behind the command line and the HTTP service.

This module contains the LacunaryEngine class, the single entry point through
which the front ends reach the numerical modules. It turns user-facing
parameters into a ProblemContext, dispatches to the right algorithm and keeps
the per-(n, |x|) Stokes charts that repeated complex expansions share.

The engine handles:
- Parameter resolution (z, x, or |x| with theta/pi)
- Reference values by direct summation or quadrature
- Saddle catalogs and steepest paths, with figure output
- Real and complex expansions, and the closed-form approximations
- Stokes charts and contribution profiles

Design Pattern:
    Facade over the core modules. Front ends validate syntax, the engine
    validates semantics (through ProblemContext) and raises LacunaryError
    subclasses for every computational failure.

Architecture:
    CLI / API routes -> LacunaryEngine -> exactval, saddles, expansion, stokes, contour
"""

import logging
from pathlib import Path

from lacunary.core import contour, exactval, expansion, stokes
from lacunary.core.context import ProblemContext
from lacunary.core.errors import ContextError
from lacunary.core.figure import FigureFormat, emit_figure
from lacunary.core.phase import singularity
from lacunary.core.saddles import Saddle, saddle_catalog
from lacunary.data.references import ReferenceBook

logger = logging.getLogger(__name__)


class LacunaryEngine:
    """
    Facade over the numerical core.

    Attributes:
        references: Published tables, loaded once

    Design Notes:
        - Methods return core result objects and raise LacunaryError on failure
        - Stokes charts are cached per (n, |x|, pairs); everything else is
          recomputed per call
    """

    def __init__(self):
        self.references = ReferenceBook()
        self._charts: dict[tuple[int, float, int], stokes.StokesChart] = {}

    # ------------------------------------------------------------------
    # Parameters
    # ------------------------------------------------------------------

    @staticmethod
    def context(
        n: int,
        x: complex | None = None,
        z: complex | None = None,
        abs_x: float | None = None,
        theta_pi: float | None = None,
    ) -> ProblemContext:
        """
        Build a ProblemContext from exactly one parameterization.

        Args:
            n: Degree
            x: Complex x
            z: The argument z = x^-2 (x taken as the principal root)
            abs_x: |x|, optionally with theta_pi = arg(x)/pi

        Raises:
            ContextError: If none or more than one parameterization is given
        """
        given = [name for name, v in (("x", x), ("z", z), ("abs_x", abs_x)) if v is not None]
        if len(given) != 1:
            raise ContextError("x", f"give exactly one of x, z, abs_x (got {given or 'none'})")
        if theta_pi is not None and abs_x is None:
            raise ContextError("x", "theta_pi requires abs_x")
        if x is not None:
            return ProblemContext(n, complex(x))
        if z is not None:
            return ProblemContext.from_z(n, complex(z))
        return ProblemContext.from_polar(n, float(abs_x), float(theta_pi or 0.0))

    # ------------------------------------------------------------------
    # Reference values
    # ------------------------------------------------------------------

    def evaluate(self, n: int, z: complex, accumulator: str = "neumaier") -> exactval.EvalResult:
        """wp_n(z) by direct summation."""
        return exactval.eval_direct(n, z, accumulator)

    def evaluate_quadrature(self, ctx: ProblemContext) -> complex:
        """wp_n(x^-2) from the integral representation."""
        return exactval.eval_quadrature(ctx)

    # ------------------------------------------------------------------
    # Saddles and expansions
    # ------------------------------------------------------------------

    def saddles(self, ctx: ProblemContext, k_min: int, k_max: int) -> list[Saddle]:
        return saddle_catalog(k_min, k_max, ctx)

    def expand(
        self,
        ctx: ProblemContext,
        j_max: int = 3,
        k_max: int | None = None,
        j_max_side: int | None = None,
    ) -> expansion.ExpansionResult:
        """
        Asymptotic expansion of wp_n(x^-2).

        Real x uses the paired real expansion (k_max and j_max_side apply there). For
        0 < arg x <= pi/2 the Stokes-aware complex expansion is used; for
        arg x < 0 the expansion at conj(x) is conjugated.
        """
        if ctx.is_real:
            return expansion.expand_real(ctx, j_max=j_max, k_max=k_max, j_max_side=j_max_side)
        if ctx.theta < 0:
            mirrored = self.expand(ctx.conjugate(), j_max=j_max)
            mirrored.total = mirrored.total.conjugate()
            mirrored.truncation_note = "; ".join(
                part for part in (mirrored.truncation_note, "computed at conj(x)") if part
            )
            return mirrored
        chart = self.stokes_chart(ctx.n, ctx.abs_x)
        return stokes.expand_complex(ctx, j_max=j_max, chart=chart)

    def gn(self, n: int, y: float) -> float:
        return expansion.gn_approx(n, y)

    def conjecture(self, n: int, y: float) -> float:
        return expansion.conjecture_approx(n, y)

    # ------------------------------------------------------------------
    # Stokes phenomenon
    # ------------------------------------------------------------------

    def stokes_chart(
        self, n: int, abs_x: float, pairs: int = stokes.DEFAULT_PAIRS
    ) -> stokes.StokesChart:
        key = (n, float(abs_x), pairs)
        if key not in self._charts:
            logger.info(f"building Stokes chart n={n} |x|={abs_x} pairs={pairs}")
            self._charts[key] = stokes.stokes_chart(n, float(abs_x), pairs)
        return self._charts[key]

    def profile(
        self, ctx: ProblemContext, k_min: int, k_max: int, j_max: int = 3
    ) -> list[tuple[int, float]]:
        return stokes.contribution_profile(ctx, k_min, k_max, j_max)

    # ------------------------------------------------------------------
    # Paths and figures
    # ------------------------------------------------------------------

    def paths(
        self,
        ctx: ProblemContext,
        k_min: int,
        k_max: int,
        ascent: bool = False,
        arc_step: float = contour.DEFAULT_ARC_STEP,
    ) -> tuple[list[Saddle], list[contour.PathPolyline]]:
        """Saddles k_min..k_max with their descent (and optionally ascent) branches."""
        saddles = saddle_catalog(k_min, k_max, ctx)
        polylines: list[contour.PathPolyline] = []
        for saddle in saddles:
            polylines.extend(contour.trace_descent(saddle, ctx, arc_step))
            if ascent:
                polylines.extend(contour.trace_ascent(saddle, ctx, arc_step))
        return saddles, polylines

    def contour_value(self, ctx: ProblemContext, k_min: int, k_max: int) -> complex:
        """Sum of J_k over the serpentine contour through s_{k_min}..s_{k_max}."""
        return contour.contour_quadrature(
            contour.serpentine(saddle_catalog(k_min, k_max, ctx), ctx), ctx
        )

    def figure(
        self,
        ctx: ProblemContext,
        k_min: int,
        k_max: int,
        fmt: FigureFormat = "svg",
        target: str | Path | None = None,
        ascent: bool = False,
        title: str | None = None,
        traced: tuple[list[Saddle], list[contour.PathPolyline]] | None = None,
    ) -> str:
        """
        Render the steepest paths for k_min..k_max with T_{k_min-1}..T_{k_max}.

        traced reuses the output of paths() for the same arguments.
        """
        saddles, polylines = traced or self.paths(ctx, k_min, k_max, ascent=ascent)
        marks = [(j, singularity(j, ctx)) for j in range(k_min - 1, k_max + 1)]
        return emit_figure(polylines, saddles, marks, fmt=fmt, target=target, title=title)
