"""
Unit tests for the compensated accumulators (lacunary/core/summation.py).
"""

from fractions import Fraction

import numpy as np
import pytest

from lacunary.core.summation import ACCUMULATORS, DoubleDoubleSum, NeumaierSum, two_sum


@pytest.mark.unit
@pytest.mark.parametrize("a, b", [(1.0, 1e-17), (1e16, 1.0), (-3.5, 2.0**-60), (0.1, 0.2)])
def test_two_sum_is_error_free(a, b):
    """Test that s + err equals a + b exactly."""
    s, err = two_sum(a, b)

    assert Fraction(s) + Fraction(err) == Fraction(a) + Fraction(b)
    assert s == a + b


@pytest.mark.unit
@pytest.mark.parametrize("accumulator", [NeumaierSum, DoubleDoubleSum])
def test_cancellation_is_recovered(accumulator):
    """Test the classic 1e16 + 1 - 1e16 case in both components."""
    total = accumulator()
    for term in (1e16 + 1e16j, 1.0 + 1.0j, -1e16 - 1e16j):
        total.add(term)

    assert total.value == 1.0 + 1.0j


@pytest.mark.unit
@pytest.mark.property
def test_accumulators_agree_on_random_sums():
    """Test both accumulators against exact rational sums of random terms."""
    rng = np.random.default_rng(20240611)
    for _ in range(20):
        terms = rng.normal(size=200) * 10.0 ** rng.integers(-8, 8, size=200)
        exact = float(sum(Fraction(float(t)) for t in terms))
        for name, accumulator in ACCUMULATORS.items():
            total = accumulator()
            for t in terms:
                total.add(complex(t, -t))
            assert total.value.real == pytest.approx(exact, rel=1e-15, abs=1e-300), name
            assert total.value.imag == pytest.approx(-exact, rel=1e-15, abs=1e-300), name


@pytest.mark.unit
def test_empty_sum_is_zero():
    for accumulator in ACCUMULATORS.values():
        assert accumulator().value == 0j
