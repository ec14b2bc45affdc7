"""
Problem parameters shared by every numerical module.

Throughout the package the argument of wp_n is written z = 1/x^2 with
|x| > 1 and |arg x| <= pi/2, so a problem is the pair (n, x). ProblemContext
stores that pair together with the constants every module derives from it.

Constructors:
    ProblemContext(n, x)                  - direct
    ProblemContext.from_z(n, z)           - x = z^{-1/2} (principal root)
    ProblemContext.from_polar(n, |x|, t)  - x = |x| e^{i pi t}, t = theta/pi
"""

import cmath
import math
from dataclasses import dataclass, field

from lacunary.core.errors import ContextError

# Slack on |arg x| <= pi/2 so that x = |x| e^{i pi/2} built in floating point passes.
ARG_SLACK = 1e-12


@dataclass(frozen=True)
class ProblemContext:
    """
    The pair (n, x) with its derived constants.

    Attributes:
        n: Polynomial degree, n >= 1
        x: Complex parameter with |x| > 1 and |arg x| <= pi/2
        logx: Principal logarithm of x
        alpha: 2 x log x
        z: x^{-2}, the argument of wp_n
        y: x^2

    Raises:
        ContextError: If n < 1, |x| <= 1 or |arg x| > pi/2
    """

    n: int
    x: complex
    logx: complex = field(init=False)
    alpha: complex = field(init=False)
    z: complex = field(init=False)
    y: complex = field(init=False)

    def __post_init__(self):
        if isinstance(self.n, bool) or int(self.n) != self.n or self.n < 1:
            raise ContextError("n", f"n must be a positive integer, got {self.n!r}")
        x = complex(self.x)
        if not (cmath.isfinite(x) and abs(x) > 1.0):
            raise ContextError("x", f"|x| must exceed 1, got |x|={abs(x):.17g}")
        if abs(cmath.phase(x)) > math.pi / 2 + ARG_SLACK:
            raise ContextError("x", f"|arg x| must not exceed pi/2, got {cmath.phase(x):.17g}")

        # frozen dataclass: derived fields are set through object.__setattr__
        logx = cmath.log(x)
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "x", x)
        object.__setattr__(self, "logx", logx)
        object.__setattr__(self, "alpha", 2.0 * x * logx)
        object.__setattr__(self, "y", x * x)
        object.__setattr__(self, "z", 1.0 / (x * x))

    @classmethod
    def from_z(cls, n: int, z: complex) -> "ProblemContext":
        """Build the context for wp_n(z), taking x as the principal root z^{-1/2}."""
        z = complex(z)
        if z == 0:
            raise ContextError("x", "z = 0 has no finite x")
        return cls(n, 1.0 / cmath.sqrt(z))

    @classmethod
    def from_polar(cls, n: int, abs_x: float, theta_pi: float = 0.0) -> "ProblemContext":
        """
        Build the context for x = |x| e^{i pi theta_pi}.

        theta_pi = 0 gives an exactly real x so that real-argument code paths apply.
        """
        if theta_pi == 0.0:
            return cls(n, complex(abs_x, 0.0))
        return cls(n, cmath.rect(abs_x, math.pi * theta_pi))

    @property
    def theta(self) -> float:
        """Phase of x."""
        return cmath.phase(self.x)

    @property
    def abs_x(self) -> float:
        return abs(self.x)

    @property
    def is_real(self) -> bool:
        """True when x is real (imaginary part exactly zero)."""
        return self.x.imag == 0.0

    @property
    def log_n(self) -> float:
        return math.log(self.n)

    def conjugate(self) -> "ProblemContext":
        """Context for conj(x); used for arg x < 0 through conjugate symmetry."""
        return ProblemContext(self.n, self.x.conjugate())
