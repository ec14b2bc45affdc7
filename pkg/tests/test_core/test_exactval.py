"""
Unit tests for the reference evaluations (lacunary/core/exactval.py).

Tests cover:
- Trivial values and the binomial theorem at z = 1
- Agreement with an mpmath oracle for complex z
- Exact-binomial and recurrence routes
- Overflow detection
- The quadrature route against direct summation
"""

import cmath

import mpmath
import pytest

from lacunary.core import exactval
from lacunary.core.context import ProblemContext
from lacunary.core.errors import TermOverflowError
from lacunary.core.exactval import eval_direct, eval_quadrature


def _oracle(n: int, z: complex) -> complex:
    with mpmath.workdps(50):
        zz = mpmath.mpc(z)
        total = mpmath.fsum(mpmath.binomial(n, k) * zz ** (k * (k - 1) // 2) for k in range(n + 1))
        return complex(total)


# ============================================================================
# DIRECT SUMMATION
# ============================================================================


@pytest.mark.unit
def test_small_value():
    """Test wp_2(1/2) = 1 + 2 + 1/2."""
    result = eval_direct(2, 0.5)

    assert result.value == pytest.approx(3.5)
    assert result.term_count == 3
    assert result.condition == pytest.approx(1.0)


@pytest.mark.unit
@pytest.mark.parametrize("n", [1, 10, 60, 61, 500])
def test_binomial_theorem_at_one(n):
    """Test wp_n(1) = 2^n on both sides of the exact-binomial cutoff."""
    assert eval_direct(n, 1.0).value == pytest.approx(2.0**n, rel=1e-14)


@pytest.mark.unit
@pytest.mark.parametrize("n", [5, 60, 200])
def test_zero_argument(n):
    """Only k = 0 and k = 1 survive at z = 0."""
    assert eval_direct(n, 0.0).value == pytest.approx(n + 1)


@pytest.mark.unit
@pytest.mark.property
@pytest.mark.parametrize("n", [3, 17, 30])
@pytest.mark.parametrize("z", [0.3 + 0.4j, -0.9, 0.99j, -0.5 - 0.5j, 0.999])
def test_matches_high_precision_oracle(n, z):
    result = eval_direct(n, z)
    expected = _oracle(n, z)

    assert abs(result.value - expected) <= 1e-13 * result.condition * abs(expected)


@pytest.mark.unit
@pytest.mark.property
@pytest.mark.parametrize("n", [25, 150])
@pytest.mark.parametrize("z", [0.3 + 0.4j, 0.9 * cmath.exp(2j), -0.2 - 0.95j])
def test_conjugate_argument_gives_conjugate_value(n, z):
    result = eval_direct(n, z)
    mirrored = eval_direct(n, z.conjugate())

    assert abs(mirrored.value - result.value.conjugate()) <= 1e-14 * result.condition * abs(result.value)


@pytest.mark.unit
@pytest.mark.parametrize("z", [0.7, 0.2 + 0.9j, -0.95])
def test_accumulators_agree(z):
    neumaier = eval_direct(150, z, "neumaier").value
    dd = eval_direct(150, z, "double-double").value

    assert abs(neumaier - dd) <= 1e-13 * abs(dd)


@pytest.mark.unit
def test_exact_and_recurrence_terms_agree():
    """Test the two term generators against each other below the cutoff."""
    z = 0.8 - 0.3j
    exact = [t for _, t in exactval._exact_terms(40, z)]
    recurrence = [t for _, t in exactval._recurrence_terms(40, z)]

    for a, b in zip(exact, recurrence, strict=True):
        assert abs(a - b) <= 1e-12 * abs(a) + 1e-300


@pytest.mark.unit
def test_condition_reports_cancellation():
    result = eval_direct(30, -0.9)

    assert result.condition > 1.0


@pytest.mark.unit
@pytest.mark.parametrize("n", [50, 100])
def test_overflow_is_detected(n):
    """Test overflow on the exact (n <= 60) and recurrence routes."""
    with pytest.raises(TermOverflowError) as exc_info:
        eval_direct(n, 1e10)

    assert 0 < exc_info.value.k <= n
    assert isinstance(exc_info.value, OverflowError)


@pytest.mark.unit
def test_unknown_accumulator():
    with pytest.raises(ValueError):
        eval_direct(5, 0.5, "kahan")


@pytest.mark.unit
def test_negative_degree():
    with pytest.raises(ValueError):
        eval_direct(-1, 0.5)


# ============================================================================
# QUADRATURE
# ============================================================================


@pytest.mark.integration
@pytest.mark.parametrize(
    "ctx",
    [
        ProblemContext(200, 2.0),
        ProblemContext(200, 1.2),
        ProblemContext(50, 1.5),
        ProblemContext.from_polar(100, 3.0, 0.3),
        ProblemContext.from_polar(80, 1.5, -0.2),
    ],
    ids=["n200-x2", "n200-x1.2", "n50-x1.5", "n100-x3-t0.3", "n80-x1.5-t-0.2"],
)
def test_quadrature_matches_direct_sum(ctx):
    direct = eval_direct(ctx.n, ctx.z).value
    quadrature = eval_quadrature(ctx)

    assert abs(quadrature - direct) <= 1e-8 * abs(direct)


@pytest.mark.integration
@pytest.mark.property
@pytest.mark.parametrize("n", [20, 150, 400])
@pytest.mark.parametrize("x", [1.05, 1.6, 3.0])
def test_quadrature_over_real_arguments(n, x):
    ctx = ProblemContext(n, x)
    direct = eval_direct(n, ctx.z).value

    assert abs(eval_quadrature(ctx) - direct) <= 1e-8 * abs(direct)
