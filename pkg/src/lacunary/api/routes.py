"""
API route definitions for the lacunary service.

Endpoints mirror the command-line verbs:

    - GET /health - Service health status
    - POST /eval - wp_n(z) by direct summation or quadrature
    - POST /saddles - Refined saddles with their large-n guesses
    - POST /expand - Saddle-point expansion (real or complex x)
    - POST /gn - r(n) approximation
    - POST /conjecture - Lambert-W conjecture form
    - POST /stokes - Stokes angles for adjacent saddle pairs
    - POST /profile - log10 |J_k| over a range of k

Design Notes:
    - Requests are checked with the same validators as the CLI; failures
      are HTTP 400
    - Computational failures (LacunaryError) are HTTP 422 with the message
      as detail
    - Numerical work is delegated to LacunaryEngine
"""

import logging

from fastapi import FastAPI, HTTPException

from lacunary import __version__
from lacunary.api.models import (
    ApproximationRequest,
    ApproximationResponse,
    ComplexValue,
    ContributionModel,
    EvalRequest,
    EvalResponse,
    ExpandRequest,
    ExpandResponse,
    ProblemRequest,
    ProfilePoint,
    ProfileRequest,
    ProfileResponse,
    SaddleModel,
    SaddlesRequest,
    SaddlesResponse,
    StokesEventModel,
    StokesRequest,
    StokesResponse,
)
from lacunary.cli import validators
from lacunary.core.context import ProblemContext
from lacunary.core.engine import LacunaryEngine
from lacunary.core.errors import LacunaryError
from lacunary.core.saddles import saddle_guess

logger = logging.getLogger(__name__)


def _require(result: tuple[bool, str]) -> None:
    ok, message = result
    if not ok:
        raise HTTPException(status_code=400, detail=message)


def _unprocessable(exc: LacunaryError) -> HTTPException:
    logger.info(f"request failed: {exc}")
    return HTTPException(status_code=422, detail=str(exc))


def _context(request: ProblemRequest) -> ProblemContext:
    x = request.x.to_complex() if request.x else None
    z = request.z.to_complex() if request.z else None
    _require(validators.validate_degree(request.n))
    _require(validators.validate_parameterization(x, z, request.abs_x, request.theta_pi))
    return LacunaryEngine.context(
        request.n, x=x, z=z, abs_x=request.abs_x, theta_pi=request.theta_pi
    )


def register_routes(app: FastAPI, engine: LacunaryEngine):
    """
    Register all API routes with the FastAPI app.

    Creates closures over the engine so that Stokes charts cached by one
    request are reused by later ones.

    Args:
        app: FastAPI application instance
        engine: LacunaryEngine instance for the numerical work
    """

    @app.get("/health")
    async def health():
        return {"status": "ok", "version": __version__}

    @app.post("/eval", response_model=EvalResponse)
    async def evaluate(request: EvalRequest):
        """wp_n(z); direct summation accepts any z, quadrature needs |z| < 1."""
        try:
            if request.method == "direct" and request.z is not None:
                z = request.z.to_complex()
                x = request.x.to_complex() if request.x else None
                _require(validators.validate_degree(request.n))
                _require(
                    validators.validate_parameterization(
                        x, z, request.abs_x, request.theta_pi, any_z=True
                    )
                )
            else:
                ctx = _context(request)
                z = ctx.z
            if request.method == "quadrature":
                value = engine.evaluate_quadrature(ctx)
                return EvalResponse(value=ComplexValue.of(value), method="quadrature")
            result = engine.evaluate(request.n, z, request.accumulator)
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc
        return EvalResponse(
            value=ComplexValue.of(result.value),
            term_count=result.term_count,
            condition=result.condition,
            method="direct",
        )

    @app.post("/saddles", response_model=SaddlesResponse)
    async def saddles(request: SaddlesRequest):
        ctx = _context(request)
        _require(validators.validate_k_range(request.k_min, request.k_max))
        try:
            catalog = engine.saddles(ctx, request.k_min, request.k_max)
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc
        return SaddlesResponse(
            saddles=[
                SaddleModel(
                    k=s.k,
                    s=ComplexValue.of(s.s),
                    guess=ComplexValue.of(saddle_guess(s.k, ctx)),
                    residual=s.residual,
                    iterations=s.iterations,
                )
                for s in catalog
            ]
        )

    @app.post("/expand", response_model=ExpandResponse)
    async def expand(request: ExpandRequest):
        ctx = _context(request)
        _require(validators.validate_jmax(request.j_max))
        try:
            result = engine.expand(ctx, j_max=request.j_max, k_max=request.k_max)
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc
        return ExpandResponse(
            total=ComplexValue.of(result.total),
            contributions=[
                ContributionModel(
                    k=jk.k, value=ComplexValue.of(jk.value), log10_magnitude=jk.log10_magnitude
                )
                for jk in result.contributions
            ],
            k_min_used=result.k_min_used,
            k_max_used=result.k_max_used,
            truncation_note=result.truncation_note,
            warnings=result.warnings,
        )

    @app.post("/gn", response_model=ApproximationResponse)
    async def gn(request: ApproximationRequest):
        _require(validators.validate_degree(request.n))
        _require(validators.validate_y(request.y))
        try:
            return ApproximationResponse(value=engine.gn(request.n, request.y))
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc

    @app.post("/conjecture", response_model=ApproximationResponse)
    async def conjecture(request: ApproximationRequest):
        _require(validators.validate_degree(request.n))
        _require(validators.validate_y(request.y))
        try:
            return ApproximationResponse(value=engine.conjecture(request.n, request.y))
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc

    @app.post("/stokes", response_model=StokesResponse)
    async def stokes(request: StokesRequest):
        _require(validators.validate_degree(request.n))
        _require(validators.validate_pairs(request.pairs))
        _require(validators.validate_parameterization(None, None, request.abs_x, None))
        try:
            chart = engine.stokes_chart(request.n, request.abs_x, request.pairs)
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc
        return StokesResponse(
            n=chart.n,
            abs_x=chart.abs_x,
            events=[
                StokesEventModel(pair=e.pair, theta_pi=e.theta_pi, residual=e.residual)
                for e in chart.events
            ],
            missing=list(chart.missing),
        )

    @app.post("/profile", response_model=ProfileResponse)
    async def profile(request: ProfileRequest):
        ctx = _context(request)
        _require(validators.validate_k_range(request.k_min, request.k_max))
        _require(validators.validate_jmax(request.j_max))
        try:
            points = engine.profile(ctx, request.k_min, request.k_max, j_max=request.j_max)
        except LacunaryError as exc:
            raise _unprocessable(exc) from exc
        return ProfileResponse(
            profile=[ProfilePoint(k=k, log10_magnitude=v) for k, v in points]
        )
