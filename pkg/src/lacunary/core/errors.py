"""
Exception hierarchy for the numerical core.

Every failure raised by the core derives from LacunaryError so callers (the
CLI and the HTTP service) can separate computational failures from programming
errors with a single except clause. Exceptions carry the structured payload a
caller needs to report the failure (the offending index, the last iterate, the
achieved error estimate) as attributes in addition to the message.

Mapping at the edges:
    - CLI: LacunaryError -> exit status 1, message on stderr
    - HTTP service: LacunaryError -> HTTP 422 with the message as detail
"""


class LacunaryError(Exception):
    """Base class for all errors raised by the lacunary core."""


# ============================================================================
# INPUT / DOMAIN ERRORS
# ============================================================================


class ContextError(LacunaryError, ValueError):
    """
    Invalid problem parameters (n, x).

    Attributes:
        field: Name of the offending parameter ("n" or "x")
    """

    def __init__(self, field: str, message: str):
        super().__init__(message)
        self.field = field


class DerivativeOrderError(LacunaryError, ValueError):
    """Derivative order outside the supported range 1..8."""

    def __init__(self, order: int):
        super().__init__(f"derivative order {order} outside 1..8")
        self.order = order


class PolynomialIndexError(LacunaryError, ValueError):
    """Unknown (j, index) pair for the P_{jk} polynomial table."""

    def __init__(self, j: int, index: int):
        super().__init__(f"no polynomial P_{j}{index}: need 1 <= j <= 3 and 1 <= index <= 2j")
        self.j = j
        self.index = index


class LambertDomainError(LacunaryError, ValueError):
    """Lambert W requested for a negative argument."""

    def __init__(self, argument: float):
        super().__init__(f"lambert_w needs a >= 0, got {argument!r}")
        self.argument = argument


# ============================================================================
# EVALUATION ERRORS
# ============================================================================


class TermOverflowError(LacunaryError, OverflowError):
    """
    A summand of the direct sum left the binary64 range.

    Attributes:
        k: Index of the first overflowing term
    """

    def __init__(self, k: int, n: int):
        super().__init__(f"term k={k} of wp_{n} overflows binary64")
        self.k = k
        self.n = n


class QuadratureError(LacunaryError):
    """
    A quadrature rule did not reach its tolerance.

    Attributes:
        error_estimate: Achieved absolute error estimate
        value: Best value obtained (may be None)
    """

    def __init__(self, message: str, error_estimate: float, value: complex | None = None):
        super().__init__(f"{message} (error estimate {error_estimate:.3e})")
        self.error_estimate = error_estimate
        self.value = value


class PhaseSingularityError(LacunaryError):
    """
    Phase evaluated on a logarithmic singularity T_k = i log x + (2k+1)pi.

    Attributes:
        k: Index of the nearest singularity
        s: Evaluation point
    """

    def __init__(self, k: int, s: complex):
        super().__init__(f"psi is singular at s={s:.6g} (nearest T_{k})")
        self.k = k
        self.s = s


class DegenerateSaddleError(LacunaryError):
    """
    A quantity that must be non-zero at a saddle vanished.

    Attributes:
        quantity: Name of the vanishing quantity ("1+lambda", "1+2a", "psi''", "1+omega")
    """

    def __init__(self, quantity: str, message: str | None = None):
        super().__init__(message or f"degenerate saddle: {quantity} vanishes")
        self.quantity = quantity


# ============================================================================
# SADDLE LOCATION ERRORS
# ============================================================================


class SaddleConvergenceError(LacunaryError):
    """
    Damped Newton iteration did not converge.

    Attributes:
        last_iterate: Final location reached
        residual: |psi'(last_iterate)|
        iterations: Iterations performed
    """

    def __init__(self, last_iterate: complex, residual: float, iterations: int):
        super().__init__(
            f"saddle refinement stalled after {iterations} iterations at "
            f"s={last_iterate:.9g} with |psi'|={residual:.3e}"
        )
        self.last_iterate = last_iterate
        self.residual = residual
        self.iterations = iterations


class BasinEscapeError(LacunaryError):
    """
    Newton iteration converged outside the strip of the requested saddle index.

    Attributes:
        k: Requested index
        location: Root that was reached
    """

    def __init__(self, k: int, location: complex):
        super().__init__(f"refinement for k={k} escaped to s={location:.9g}")
        self.k = k
        self.location = location


class SaddleCatalogError(LacunaryError):
    """
    No refinement strategy produced the saddle of index k.

    Attributes:
        k: Offending index
    """

    def __init__(self, k: int, cause: Exception):
        super().__init__(f"cannot locate saddle k={k}: {cause}")
        self.k = k
        self.cause = cause


# ============================================================================
# STOKES / CONTOUR / OUTPUT ERRORS
# ============================================================================


class StokesNotFoundError(LacunaryError):
    """The pair (k, k+1) does not connect for theta in (0, pi/2)."""

    def __init__(self, k: int, n: int, abs_x: float):
        super().__init__(f"saddles s_{k}, s_{k + 1} do not connect in (0, pi/2) for n={n}, |x|={abs_x}")
        self.k = k


class InsufficientChartError(LacunaryError):
    """
    Theta lies below the smallest Stokes angle of a chart.

    Attributes:
        needed_pair: The pair (k, k+1) whose angle must be computed next
    """

    def __init__(self, theta: float, needed_pair: tuple[int, int]):
        super().__init__(
            f"theta={theta:.6g} is below every computed Stokes angle; "
            f"extend the chart to the pair s_{needed_pair[0]}, s_{needed_pair[1]}"
        )
        self.theta = theta
        self.needed_pair = needed_pair


class FigureOutputError(LacunaryError):
    """A figure document could not be written to its target."""

    def __init__(self, target: str, cause: Exception):
        super().__init__(f"cannot write figure to {target}: {cause}")
        self.target = target
