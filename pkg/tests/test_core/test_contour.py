"""
Tests for steepest paths and contour quadrature (lacunary/core/contour.py).

Tests cover:
- Termini of the descent branches for real x
- Constant phase and monotone modulus along the paths
- Path integrals against the series and against direct summation
"""

import pytest

from lacunary.core.contour import (
    SerpentinePath,
    contour_quadrature,
    path_integral,
    serpentine,
    trace_ascent,
    trace_descent,
)
from lacunary.core.errors import QuadratureError
from lacunary.core.exactval import eval_direct
from lacunary.core.expansion import saddle_contribution
from lacunary.core.saddles import saddle_catalog

# ============================================================================
# TRACING
# ============================================================================


@pytest.mark.integration
def test_descent_branches_end_at_neighbouring_singularities(symmetric_saddles_200_2, ctx_200_2):
    """Test that C_k runs from T_{k-1} to T_k for real x."""
    for saddle in symmetric_saddles_200_2:
        forward, backward = trace_descent(saddle, ctx_200_2)

        assert forward.terminus == "singularity"
        assert forward.terminus_index == saddle.k
        assert backward.terminus == "singularity"
        assert backward.terminus_index == saddle.k - 1
        assert forward.points[0] == saddle.s
        assert forward.points[1].real > saddle.s.real


@pytest.mark.integration
def test_neighbouring_paths_share_their_singularity(symmetric_saddles_200_2, ctx_200_2):
    """C_k and C_{k+1} meet at T_k, so the contour runs unbroken from T_{-3} to T_2."""
    paths = serpentine(symmetric_saddles_200_2, ctx_200_2)

    assert paths[0].backward.terminus_index == -3
    assert paths[-1].forward.terminus_index == 2
    for left, right in zip(paths, paths[1:]):
        assert left.forward.terminus == right.backward.terminus == "singularity"
        assert left.forward.terminus_index == right.backward.terminus_index == left.saddle.k


@pytest.mark.integration
def test_phase_is_constant_along_descent(symmetric_saddles_200_2, ctx_200_2):
    for saddle in symmetric_saddles_200_2:
        for branch in trace_descent(saddle, ctx_200_2):
            assert branch.phase_defect() < 1e-8


@pytest.mark.integration
def test_modulus_decreases_along_descent(symmetric_saddles_200_2, ctx_200_2):
    """Re psi is nondecreasing along a descent branch."""
    for saddle in symmetric_saddles_200_2:
        for branch in trace_descent(saddle, ctx_200_2):
            values = [v.real for v in branch.psi_values]
            for a, b in zip(values, values[1:]):
                assert b >= a - 1e-12


@pytest.mark.integration
def test_ascent_paths_are_traced(symmetric_saddles_200_2, ctx_200_2):
    saddle = symmetric_saddles_200_2[2]
    upper, lower = trace_ascent(saddle, ctx_200_2)

    assert upper.kind == lower.kind == "ascent"
    assert upper.points[1].imag > saddle.s.imag
    assert upper.phase_defect() < 1e-8


@pytest.mark.integration
def test_step_limit_is_reported(symmetric_saddles_200_2, ctx_200_2):
    forward, _ = trace_descent(symmetric_saddles_200_2[2], ctx_200_2, max_steps=3)

    assert forward.terminus == "step-limit"
    assert len(forward.points) == 4


# ============================================================================
# QUADRATURE
# ============================================================================


@pytest.mark.integration
def test_path_integral_matches_series(symmetric_saddles_200_2, ctx_200_2):
    """Test J_k by quadrature against the truncated series."""
    for saddle in symmetric_saddles_200_2:
        path = serpentine([saddle], ctx_200_2)[0]
        value, error = path_integral(path, ctx_200_2)
        series = saddle_contribution(saddle, 3, ctx_200_2).value

        assert error <= 1e-10 * abs(value)
        assert abs(value - series) < 1e-4 * abs(value)


@pytest.mark.integration
def test_contour_sum_matches_direct_sum(ctx_200_2):
    paths = serpentine(saddle_catalog(-3, 3, ctx_200_2), ctx_200_2)
    total = contour_quadrature(paths, ctx_200_2)
    exact = eval_direct(200, 0.25).value

    assert abs(total - exact) < 1e-8 * abs(exact)


@pytest.mark.integration
def test_mirrored_paths_give_conjugate_integrals(symmetric_saddles_200_2, ctx_200_2):
    """For real x, J_{-1} is the conjugate of J_1."""
    left, right = serpentine([symmetric_saddles_200_2[1], symmetric_saddles_200_2[3]], ctx_200_2)
    j_left, _ = path_integral(left, ctx_200_2)
    j_right, _ = path_integral(right, ctx_200_2)

    assert abs(j_left - j_right.conjugate()) < 1e-9 * abs(j_right)


@pytest.mark.integration
def test_truncated_branch_is_refused(symmetric_saddles_200_2, ctx_200_2):
    saddle = symmetric_saddles_200_2[2]
    _, backward = trace_descent(saddle, ctx_200_2)
    cut, _ = trace_descent(saddle, ctx_200_2, max_steps=3)
    path = SerpentinePath(saddle=saddle, forward=cut, backward=backward)

    with pytest.raises(QuadratureError):
        contour_quadrature([path], ctx_200_2)
