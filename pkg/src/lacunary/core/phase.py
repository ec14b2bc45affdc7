"""
The phase function psi(s) = s^2/(4n log x) - log(1 + x e^{is}).

Derivatives come from the logistic-polynomial recurrence: with u = x e^{is}
and g = u/(1+u), d^m g/ds^m = i^m B_m(g) where

    B_0(g) = g,    B_{m+1}(g) = B_m'(g) (g - g^2)

so that

    psi'(s)     = s/(2n log x) - i g
    psi^(r)(s)  = [r == 2]/(2n log x) - i^r B_{r-1}(g),   r >= 2

The B_m have small integer coefficients and are built once at import.
"""

import cmath
import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial

from lacunary.core.context import ProblemContext
from lacunary.core.errors import DegenerateSaddleError, DerivativeOrderError, PhaseSingularityError

MAX_ORDER = 8

# |1 + x e^{is}| below this is treated as a singularity
SINGULAR_TOL = 1e-14


def _logistic_polynomials(count: int) -> tuple[Polynomial, ...]:
    logistic = Polynomial([0, 1, -1])
    polys = [Polynomial([0, 1])]
    for _ in range(count - 1):
        polys.append(polys[-1].deriv() * logistic)
    return tuple(polys)


# B_0 .. B_7, enough for psi^(8)
B = _logistic_polynomials(MAX_ORDER)
I_POWERS = (1, 1j, -1, -1j)


@dataclass(frozen=True)
class PhaseValue:
    """
    psi and its derivatives at one point.

    dpsi is indexed by order: dpsi[0] is psi itself, dpsi[r] is psi^(r) for
    r = 1..8.
    """

    s: complex
    psi: complex
    dpsi: np.ndarray


@dataclass(frozen=True)
class SaddleQuantities:
    """lambda = x e^{is}, a = (1+lambda)^2/(4n lambda log x), omega = 1/(2a)."""

    lam: complex
    a: complex
    omega: complex


def singularity(k: int, ctx: ProblemContext) -> complex:
    """T_k = i log x + (2k+1) pi."""
    return 1j * ctx.logx + (2 * k + 1) * math.pi


def nearest_singularity_index(s: complex, ctx: ProblemContext) -> int:
    return round((s.real + ctx.logx.imag - math.pi) / (2 * math.pi))


def _one_plus_u(s: complex, ctx: ProblemContext) -> tuple[complex, complex]:
    u = ctx.x * cmath.exp(1j * s)
    w = 1.0 + u
    if abs(w) < SINGULAR_TOL:
        raise PhaseSingularityError(nearest_singularity_index(s, ctx), s)
    return u, w


def psi(s: complex, ctx: ProblemContext) -> complex:
    """
    Phase function with the principal logarithm.

    Raises:
        PhaseSingularityError: If s is within rounding of a singularity T_k
    """
    s = complex(s)
    _, w = _one_plus_u(s, ctx)
    return s * s / (4.0 * ctx.n * ctx.logx) - cmath.log(w)


def _derivative_from_g(s: complex, g: complex, r: int, ctx: ProblemContext) -> complex:
    two_nl = 2.0 * ctx.n * ctx.logx
    if r == 1:
        return s / two_nl - 1j * g
    value = -I_POWERS[r % 4] * complex(B[r - 1](g))
    if r == 2:
        value += 1.0 / two_nl
    return value


def psi_derivative(s: complex, r: int, ctx: ProblemContext) -> complex:
    """
    psi^(r)(s) for r in 1..8.

    Raises:
        DerivativeOrderError: If r is outside 1..8
        PhaseSingularityError: If s is a singularity
    """
    if not 1 <= r <= MAX_ORDER:
        raise DerivativeOrderError(r)
    s = complex(s)
    u, w = _one_plus_u(s, ctx)
    return _derivative_from_g(s, u / w, r, ctx)


def phase_value(s: complex, ctx: ProblemContext, max_order: int = MAX_ORDER) -> PhaseValue:
    """psi and psi^(1..max_order) at s, sharing one evaluation of g."""
    if not 1 <= max_order <= MAX_ORDER:
        raise DerivativeOrderError(max_order)
    s = complex(s)
    u, w = _one_plus_u(s, ctx)
    g = u / w
    dpsi = np.empty(max_order + 1, dtype=complex)
    dpsi[0] = s * s / (4.0 * ctx.n * ctx.logx) - cmath.log(w)
    for r in range(1, max_order + 1):
        dpsi[r] = _derivative_from_g(s, g, r, ctx)
    return PhaseValue(s=s, psi=complex(dpsi[0]), dpsi=dpsi)


def saddle_quantities(s_k: complex, ctx: ProblemContext) -> SaddleQuantities:
    """
    lambda, a and omega at a saddle.

    Raises:
        DegenerateSaddleError: If 1 + lambda vanishes
    """
    lam = ctx.x * cmath.exp(1j * complex(s_k))
    one_plus = 1.0 + lam
    if abs(one_plus) < SINGULAR_TOL:
        raise DegenerateSaddleError("1+lambda")
    four_nl_lam = 4.0 * ctx.n * lam * ctx.logx
    a = one_plus * one_plus / four_nl_lam
    omega = 2.0 * ctx.n * lam * ctx.logx / (one_plus * one_plus)
    return SaddleQuantities(lam=lam, a=a, omega=omega)
