"""
Unit tests for lambert_w and r_of_n (lacunary/core/special.py).
"""

import math

import pytest
from scipy.special import lambertw

from lacunary.core.errors import LambertDomainError
from lacunary.core.special import lambert_w, r_of_n


@pytest.mark.unit
@pytest.mark.parametrize("a", [1e-12, 0.1, 1.0, math.e, 10.0, 554.5, 1e6, 1e300])
def test_lambert_w_matches_scipy(a):
    """Test the principal branch against scipy.special.lambertw."""
    assert lambert_w(a) == pytest.approx(lambertw(a).real, rel=1e-14)


@pytest.mark.unit
@pytest.mark.parametrize("a", [0.5, 3.0, 1e4])
def test_lambert_w_defining_equation(a):
    w = lambert_w(a)

    assert w * math.exp(w) == pytest.approx(a, rel=1e-14)


@pytest.mark.unit
def test_lambert_w_at_zero():
    assert lambert_w(0.0) == 0.0


@pytest.mark.unit
def test_lambert_w_rejects_negative_argument():
    with pytest.raises(LambertDomainError) as exc_info:
        lambert_w(-0.1)

    assert exc_info.value.argument == -0.1


@pytest.mark.unit
@pytest.mark.parametrize("n, y", [(200, 4.0), (200, 1.44), (400, 1.21), (1000, 4.0), (10**6, 1.01)])
def test_r_of_n_defining_equation(n, y):
    """Test r (e^r + sqrt(y)) = n sqrt(y) log y."""
    r = r_of_n(n, y)
    root_y = math.sqrt(y)

    assert r > 0
    assert r * (math.exp(r) + root_y) == pytest.approx(n * root_y * math.log(y), rel=1e-14)


@pytest.mark.unit
def test_r_of_n_increases_with_n():
    values = [r_of_n(n, 4.0) for n in (10, 100, 1000, 10000)]

    assert values == sorted(values)


@pytest.mark.unit
def test_r_of_n_rejects_y_at_most_one():
    with pytest.raises(ValueError):
        r_of_n(100, 1.0)
