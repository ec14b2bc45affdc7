"""
Unit tests for LacunaryEngine (lacunary/core/engine.py).

Tests cover:
- Parameter resolution
- Dispatch of expansions (real, complex, conjugated)
- Stokes chart caching
- Figures and contour values

Expensive core calls are patched where only the dispatch is under test.
"""

import pytest

from lacunary.core import engine as engine_module
from lacunary.core.context import ProblemContext
from lacunary.core.errors import ContextError
from lacunary.core.expansion import ExpansionResult
from lacunary.core.stokes import StokesChart

# ============================================================================
# PARAMETERS
# ============================================================================


@pytest.mark.unit
def test_context_from_each_parameterization(engine):
    assert engine.context(100, x=2.0).x == 2.0
    assert engine.context(100, z=0.25).x == pytest.approx(2.0)
    polar = engine.context(100, abs_x=2.0, theta_pi=0.25)
    assert polar.abs_x == pytest.approx(2.0)
    assert not polar.is_real


@pytest.mark.unit
@pytest.mark.parametrize(
    "kwargs",
    [{}, {"x": 2.0, "z": 0.25}, {"x": 2.0, "abs_x": 2.0}, {"z": 0.25, "theta_pi": 0.1}],
)
def test_context_needs_exactly_one_parameterization(engine, kwargs):
    with pytest.raises(ContextError):
        engine.context(100, **kwargs)


# ============================================================================
# EXPANSIONS
# ============================================================================


@pytest.mark.unit
def test_real_expansion_dispatch(engine, mocker):
    result = ExpansionResult(total=1.0 + 0j, contributions=[], k_min_used=0, k_max_used=1)
    expand_real = mocker.patch.object(engine_module.expansion, "expand_real", return_value=result)
    ctx = ProblemContext(200, 2.0)

    assert engine.expand(ctx, j_max=2, k_max=1) is result
    expand_real.assert_called_once_with(ctx, j_max=2, k_max=1, j_max_side=None)


@pytest.mark.unit
def test_negative_angle_is_conjugated(engine, mocker):
    """Test that arg x < 0 is expanded at conj(x) and conjugated back."""
    result = ExpansionResult(total=3.0 + 4.0j, contributions=[], k_min_used=-5, k_max_used=2)
    expand_complex = mocker.patch.object(
        engine_module.stokes, "expand_complex", return_value=result
    )
    mocker.patch.object(engine, "stokes_chart", return_value=mocker.sentinel.chart)
    ctx = ProblemContext.from_polar(100, 3.0, -0.3)

    out = engine.expand(ctx)

    assert out.total == 3.0 - 4.0j
    assert "conj(x)" in out.truncation_note
    called_ctx = expand_complex.call_args.args[0]
    assert called_ctx.x == pytest.approx(ctx.x.conjugate())
    assert expand_complex.call_args.kwargs["chart"] is mocker.sentinel.chart


@pytest.mark.unit
def test_stokes_charts_are_cached(engine, mocker):
    chart = StokesChart(n=100, abs_x=3.0, k_pairs_max=5, events=())
    build = mocker.patch.object(engine_module.stokes, "stokes_chart", return_value=chart)

    first = engine.stokes_chart(100, 3.0)
    second = engine.stokes_chart(100, 3)

    assert first is second is chart
    build.assert_called_once_with(100, 3.0, 5)


@pytest.mark.integration
def test_expand_real_value(engine, references):
    column = references.values[1]
    ctx = engine.context(column.n, x=column.x)

    result = engine.expand(ctx, j_max=3, k_max=1, j_max_side=0)

    assert result.total.real == pytest.approx(column.asymptotic, rel=1e-8)


@pytest.mark.unit
def test_closed_forms(engine):
    assert engine.gn(200, 4.0) == pytest.approx(4.712945605e4, rel=1e-8)
    assert engine.conjecture(200, 4.0) > 0


@pytest.mark.unit
def test_evaluate(engine):
    result = engine.evaluate(10, 1.0)

    assert result.value == pytest.approx(1024.0)
    assert result.term_count == 11


# ============================================================================
# PATHS AND FIGURES
# ============================================================================


@pytest.mark.integration
def test_figure_marks_singularities(engine, ctx_200_2, tmp_path):
    target = tmp_path / "fig.csv"
    document = engine.figure(ctx_200_2, -1, 1, fmt="csv", target=target)
    singular = [line for line in document.splitlines() if ",singularity," in line]

    assert [line.split(",")[0] for line in singular] == ["-2", "-1", "0", "1"]
    assert target.exists()


@pytest.mark.integration
def test_paths_with_ascent(engine, ctx_200_2):
    saddles, polylines = engine.paths(ctx_200_2, 0, 0, ascent=True)

    assert [s.k for s in saddles] == [0]
    assert [p.kind for p in polylines] == ["descent", "descent", "ascent", "ascent"]


@pytest.mark.integration
def test_contour_value(engine, ctx_200_2):
    exact = engine.evaluate(200, 0.25).value

    assert abs(engine.contour_value(ctx_200_2, -3, 3) - exact) < 1e-8 * abs(exact)
