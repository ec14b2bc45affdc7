"""
Coefficients of the steepest-descent series at a saddle.

Two routes to the same numbers:

- generic: d_1..d_3 from the ratios p_r = psi^(r)/psi'' (orders 3..8)
- closed form: d_j = (+-) Q_j(a, lambda) / (K_j (1+2a)^{3j} lambda^j), where the
  Q_j combine the palindromic polynomials P_{jk} below

The normalized coefficients entering the expansion are
c_j = d_j (log n / n)^j = Q-form * chi^j with chi = log n / (n lambda).
cross_check compares the two routes; it is the test oracle for the tables.
"""

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from lacunary.core.context import ProblemContext
from lacunary.core.errors import DegenerateSaddleError, PolynomialIndexError
from lacunary.core.phase import SaddleQuantities, phase_value

# ============================================================================
# POLYNOMIAL TABLE
# ============================================================================

# Ascending coefficients of P_{j,index}, each of degree 2j and palindromic.
P_COEFFICIENTS: dict[tuple[int, int], tuple[int, ...]] = {
    (1, 1): (1, 1, 1),
    (1, 2): (1, -4, 1),
    (2, 1): (1, 2, 3, 2, 1),
    (2, 2): (13, 5, -10, 5, 13),
    (2, 3): (67, -328, 278, -328, 67),
    (2, 4): (1, -26, 66, -26, 1),
    (3, 1): (139, 417, 402, 109, 402, 417, 139),
    (3, 2): (151, 378, 308, 56, 308, 378, 151),
    (3, 3): (9271, -3497, -10867, 766, -10867, -3497, 9271),
    (3, 4): (7349, -48668, 45007, -24056, 45007, -48668, 7349),
    (3, 5): (203, -5016, 18729, -24392, 18729, -5016, 203),
    (3, 6): (1, -120, 1191, -2416, 1191, -120, 1),
}

_P = {key: Polynomial(coef) for key, coef in P_COEFFICIENTS.items()}

# Q_j = sum_m weight_m a^m P_{j,m+1}
Q_WEIGHTS: dict[int, tuple[int, ...]] = {
    1: (1, -3),
    2: (1, -6, 3, -48),
    3: (1, 27, -9, 27, -432, 4320),
}

# c_j = sign_j Q_j chi^j / (denominator_j (1+2a)^{3j})
C_SIGNS = (1, -1, 1, 1)
C_DENOMINATORS = (1, 6, 216, 97200)

MAX_J = 3


def poly_P(j: int, index: int, xi: complex) -> complex:
    """
    Evaluate P_{j,index}(xi) by Horner's rule.

    Raises:
        PolynomialIndexError: For a pair outside 1 <= j <= 3, 1 <= index <= 2j
    """
    try:
        poly = _P[(j, index)]
    except KeyError:
        raise PolynomialIndexError(j, index) from None
    return complex(poly(xi))


def q_values(a: complex, lam: complex) -> tuple[complex, complex, complex]:
    """(Q_1, Q_2, Q_3) at (a, lambda)."""
    out = []
    for j in (1, 2, 3):
        total = 0j
        a_power = 1.0 + 0j
        for m, weight in enumerate(Q_WEIGHTS[j]):
            total += weight * a_power * poly_P(j, m + 1, lam)
            a_power *= a
        out.append(total)
    return out[0], out[1], out[2]


# ============================================================================
# COEFFICIENT SETS
# ============================================================================


@dataclass(frozen=True)
class CoefficientSet:
    """
    d_0..d_3 and c_0..c_3 at one saddle.

    d_j multiplies Gamma(j+1/2)/n^{j+1/2} in the generic series; c_j multiplies
    (1/2)_j/(log n)^j in the normalized one. d_0 = c_0 = 1.
    """

    d: np.ndarray
    c: np.ndarray
    chi: complex
    a: complex
    lam: complex


def c_coefficients(sq: SaddleQuantities, ctx: ProblemContext) -> CoefficientSet:
    """
    Closed-form coefficients from (a, lambda).

    Raises:
        DegenerateSaddleError: If 1 + 2a vanishes
    """
    a, lam = sq.a, sq.lam
    one_plus_2a = 1.0 + 2.0 * a
    if abs(one_plus_2a) < 1e-14:
        raise DegenerateSaddleError("1+2a")
    log_n = ctx.log_n
    chi = log_n / (ctx.n * lam)

    q = (1.0 + 0j,) + q_values(a, lam)
    c = np.empty(MAX_J + 1, dtype=complex)
    d = np.empty(MAX_J + 1, dtype=complex)
    for j in range(MAX_J + 1):
        base = C_SIGNS[j] * q[j] / (C_DENOMINATORS[j] * one_plus_2a ** (3 * j))
        c[j] = base * chi**j
        d[j] = base / lam**j
    c[0] = d[0] = 1.0
    return CoefficientSet(d=d, c=c, chi=chi, a=a, lam=lam)


def d_coefficients_generic(dpsi) -> tuple[complex, complex, complex, complex]:
    """
    d_0..d_3 from derivatives of the phase.

    Args:
        dpsi: Sequence indexed by derivative order; entries 2..8 are used
            (PhaseValue.dpsi has this layout)

    Raises:
        DegenerateSaddleError: If psi'' vanishes
    """
    h = complex(dpsi[2])
    if h == 0:
        raise DegenerateSaddleError("psi''")
    p3, p4, p5, p6, p7, p8 = (complex(dpsi[r]) / h for r in range(3, 9))

    d1 = (5 * p3**2 - 3 * p4) / (12 * h)
    d2 = (385 * p3**4 - 630 * p3**2 * p4 + 168 * p3 * p5 + 105 * p4**2 - 24 * p6) / (864 * h**2)
    d3 = (
        425425 * p3**6
        - 1126125 * p3**4 * p4
        + 675675 * p3**2 * p4**2
        - 51975 * p4**3
        + 360360 * p3**3 * p5
        - 249480 * p3 * p4 * p5
        + 13608 * p5**2
        - 83160 * p3**2 * p6
        + 22680 * p4 * p6
        + 12960 * p3 * p7
        - 1080 * p8
    ) / (777600 * h**3)
    return 1.0 + 0j, d1, d2, d3


def cross_check(saddle, ctx: ProblemContext) -> float:
    """
    Largest relative discrepancy between the two routes for d_1..d_3.

    Args:
        saddle: A refined Saddle
        ctx: Problem parameters
    """
    generic = d_coefficients_generic(phase_value(saddle.s, ctx).dpsi)
    closed = c_coefficients(saddle.quantities, ctx).d
    worst = 0.0
    for j in range(1, MAX_J + 1):
        scale = max(abs(closed[j]), math.ulp(1.0))
        worst = max(worst, abs(generic[j] - closed[j]) / scale)
    return worst
