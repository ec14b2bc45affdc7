"""
Unit and integration tests for saddle location (lacunary/core/saddles.py).

Tests cover:
- Refined saddles against the published saddle table
- Large-n guesses against the approximate column
- Invariants of refined saddles (shift identity, product form, symmetry)
- Basin checks and catalog ordering
"""

import math

import pytest

from lacunary.core.context import ProblemContext
from lacunary.core.errors import BasinEscapeError, LacunaryError
from lacunary.core.phase import psi_derivative, singularity
from lacunary.core.saddles import (
    index_of,
    saddle_catalog,
    saddle_guess,
    saddle_guess_leading,
    saddle_refine,
)

# ============================================================================
# REFERENCE TABLE
# ============================================================================


@pytest.mark.integration
def test_catalog_matches_saddle_table(saddles_1000_2, references):
    """Test refined s_0..s_5 at n=1000, x=2 to the published six decimals."""
    for saddle, row in zip(saddles_1000_2, references.saddles.rows, strict=True):
        assert saddle.k == row.k
        assert abs(saddle.s - row.saddle) < 2e-6, row.source


@pytest.mark.unit
def test_guess_matches_approximate_column(ctx_1000_2, references):
    for row in references.saddles.rows:
        assert abs(saddle_guess(row.k, ctx_1000_2) - row.approximate) < 1e-5, row.source


@pytest.mark.unit
def test_leading_guess_is_close_to_central_saddle(saddles_1000_2, ctx_1000_2):
    assert abs(saddle_guess_leading(0, ctx_1000_2) - saddles_1000_2[0].s) < 0.2


# ============================================================================
# INVARIANTS
# ============================================================================


@pytest.mark.integration
def test_refined_saddles_are_roots(saddles_1000_2, ctx_1000_2):
    for saddle in saddles_1000_2:
        assert abs(psi_derivative(saddle.s, 1, ctx_1000_2)) < 1e-12
        assert saddle.product_residual < 1e-9
        assert saddle.s.imag > 0


@pytest.mark.integration
def test_shift_identity(saddles_1000_2, ctx_1000_2):
    """Test psi(s_k) - psi(sigma_k) = (pi^2 k^2 + pi k sigma_k)/(n log x)."""
    for saddle in saddles_1000_2:
        scale = max(1.0, abs(saddle.psi_at_s))
        assert saddle.shift_defect(ctx_1000_2) < 1e-12 * scale


@pytest.mark.integration
def test_saddles_lie_between_singularities(saddles_1000_2, ctx_1000_2):
    for saddle in saddles_1000_2:
        left = singularity(saddle.k - 1, ctx_1000_2).real
        right = singularity(saddle.k, ctx_1000_2).real
        assert left < saddle.s.real < right
        assert index_of(saddle.s, ctx_1000_2) == saddle.k


@pytest.mark.integration
def test_real_argument_symmetry(symmetric_saddles_200_2):
    """Test s_{-k} = -conj(s_k) for real x."""
    by_k = {s.k: s.s for s in symmetric_saddles_200_2}

    assert abs(by_k[0].real) < 1e-12
    for k in (1, 2):
        assert abs(by_k[-k] + by_k[k].conjugate()) < 1e-10


@pytest.mark.integration
def test_imaginary_parts_decrease_with_index(saddles_1000_2):
    heights = [s.s.imag for s in saddles_1000_2]

    assert heights == sorted(heights, reverse=True)


# ============================================================================
# REFINEMENT
# ============================================================================


@pytest.mark.unit
def test_refine_infers_index(ctx_200_2):
    saddle = saddle_refine(saddle_guess(1, ctx_200_2), ctx_200_2)

    assert saddle.k == 1
    assert saddle.sigma == pytest.approx(saddle.s - 2 * math.pi)
    assert saddle.iterations >= 1


@pytest.mark.unit
def test_basin_escape(ctx_1000_2):
    """Test refining the k=0 guess while asking for k=3."""
    with pytest.raises(BasinEscapeError) as exc_info:
        saddle_refine(saddle_guess(0, ctx_1000_2), ctx_1000_2, k=3)

    assert exc_info.value.k == 3
    assert isinstance(exc_info.value, LacunaryError)


@pytest.mark.unit
def test_empty_catalog_range(ctx_200_2):
    with pytest.raises(ValueError):
        saddle_catalog(3, 2, ctx_200_2)


@pytest.mark.integration
def test_catalog_is_ordered_by_index(ctx_200_2):
    catalog = saddle_catalog(-3, 1, ctx_200_2)

    assert [s.k for s in catalog] == [-3, -2, -1, 0, 1]


@pytest.mark.integration
def test_complex_argument_catalog(ctx_complex):
    """Test that every saddle of a complex-x catalog is a root in its own strip."""
    for saddle in saddle_catalog(-2, 3, ctx_complex):
        assert saddle.product_residual < 1e-9
        assert index_of(saddle.s, ctx_complex) == saddle.k


@pytest.mark.integration
def test_catalog_far_left_on_complex_argument():
    """Test continuation into the far-left strips used by the profile plots."""
    ctx = ProblemContext.from_polar(200, 2.0, 0.15)
    catalog = saddle_catalog(-6, 0, ctx)

    assert [s.k for s in catalog] == list(range(-6, 1))
    for saddle in catalog:
        assert saddle.product_residual < 1e-9
