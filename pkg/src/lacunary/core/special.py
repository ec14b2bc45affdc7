"""
Scalar root solvers behind the closed-form approximations.

lambert_w(a)   the t >= 0 with t e^t = a (principal branch, a >= 0)
r_of_n(n, y)   the t > 0 with t (e^t + sqrt(y)) = n sqrt(y) log y

Both feed the closed-form approximations of the expansion module; r_of_n also
gives the height of the central saddle for real x, used by eval_quadrature to
place its integration line.
"""

import math

from scipy.optimize import brentq, newton

from lacunary.core.errors import LambertDomainError

LAMBERT_RTOL = 1e-15
ROOT_RTOL = 1e-15


def lambert_w(a: float) -> float:
    """
    Principal branch of the Lambert W function for a >= 0.

    Newton iteration from a log-based initial guess. Above a = e the iteration
    runs on w + log w - log a, which has the same root as w e^w - a but no
    exponential to overflow.

    Args:
        a: Non-negative argument

    Returns:
        The unique t >= 0 with t e^t = a

    Raises:
        LambertDomainError: If a < 0

    lambert_w(e) is 1 to rounding.
    """
    a = float(a)
    if a < 0.0 or math.isnan(a):
        raise LambertDomainError(a)
    if a == 0.0:
        return 0.0

    if a <= math.e:
        guess = math.log1p(a) * (1.0 - 0.3 * math.log1p(a) / (1.0 + math.log1p(a)))
        return float(
            newton(
                lambda w: w * math.exp(w) - a,
                guess,
                fprime=lambda w: math.exp(w) * (w + 1.0),
                tol=LAMBERT_RTOL * max(guess, 1e-300),
                maxiter=100,
            )
        )

    log_a = math.log(a)
    guess = log_a - math.log(log_a) if log_a > 1.0 else 1.0
    return float(
        newton(
            lambda w: w + math.log(w) - log_a,
            guess,
            fprime=lambda w: 1.0 + 1.0 / w,
            tol=LAMBERT_RTOL * guess,
            maxiter=100,
        )
    )


def r_of_n(n: int, y: float) -> float:
    """
    Positive root of t (e^t + sqrt(y)) = n sqrt(y) log y.

    The left side is strictly increasing for t > 0 and vanishes at t = 0, so the
    root is unique. It is bracketed by doubling, located with Brent's method and
    polished with one Newton step.

    Args:
        n: Positive integer
        y: Real number > 1

    Returns:
        r(n) to about 1e-15 relative
    """
    y = float(y)
    if not y > 1.0:
        raise ValueError(f"r_of_n needs y > 1, got {y!r}")
    root_y = math.sqrt(y)
    rhs = n * root_y * math.log(y)

    def f(t: float) -> float:
        return t * (math.exp(t) + root_y) - rhs

    hi = 1.0
    while f(hi) <= 0.0:
        hi *= 2.0
    t = brentq(f, 0.0, hi, xtol=1e-300, rtol=ROOT_RTOL, maxiter=200)

    # one Newton polish; f' = e^t (1 + t) + sqrt(y)
    t -= f(t) / (math.exp(t) * (1.0 + t) + root_y)
    return float(t)
