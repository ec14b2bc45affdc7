"""
Input validation for the command line and the HTTP service.

All validators return a tuple of (is_valid: bool, error_message: str) so that
each front end can report failures in its own way: the CLI as a usage error
(exit status 2), the service as HTTP 400.

Common Patterns:
    - (True, "") for valid input
    - (False, "Error message") for invalid input
"""

import cmath
import math

MAX_DEGREE = 10**8


def validate_degree(n: int | None) -> tuple[bool, str]:
    """
    Validate the degree n.

    Examples:
        >>> validate_degree(200)
        (True, '')
        >>> validate_degree(0)
        (False, 'n must be a positive integer.')
    """
    if n is None or isinstance(n, bool) or not isinstance(n, int) or n < 1:
        return False, "n must be a positive integer."
    if n > MAX_DEGREE:
        return False, f"n must not exceed {MAX_DEGREE}."
    return True, ""


def parse_complex(text: str) -> complex:
    """
    Parse '0.5', '1+2j' or '1.5,0.3' (real,imag) as a complex number.

    Raises:
        ValueError: If the text is not a finite complex number
    """
    text = text.strip()
    if "," in text:
        re_part, im_part = text.split(",", 1)
        value = complex(float(re_part), float(im_part))
    else:
        value = complex(text.replace(" ", ""))
    if not cmath.isfinite(value):
        raise ValueError(f"not a finite number: {text!r}")
    return value


def validate_parameterization(
    x: complex | None,
    z: complex | None,
    abs_x: float | None,
    theta_pi: float | None,
    any_z: bool = False,
) -> tuple[bool, str]:
    """
    Exactly one of x, z, abs_x; theta_pi only together with abs_x.

    any_z accepts every z (direct summation needs no |z| < 1).

    Examples:
        >>> validate_parameterization(None, None, 2.0, 0.1)
        (True, '')
        >>> validate_parameterization(2.0, 0.25, None, None)
        (False, 'Give exactly one of --x, --z, --abs-x.')
    """
    given = sum(v is not None for v in (x, z, abs_x))
    if given != 1:
        return False, "Give exactly one of --x, --z, --abs-x."
    if theta_pi is not None and abs_x is None:
        return False, "--theta-pi requires --abs-x."
    if abs_x is not None and not (math.isfinite(abs_x) and abs_x > 1.0):
        return False, "|x| must exceed 1."
    if theta_pi is not None and not abs(theta_pi) <= 0.5:
        return False, "theta/pi must lie in [-0.5, 0.5]."
    if x is not None and not abs(x) > 1.0:
        return False, "|x| must exceed 1."
    if x is not None and abs(cmath.phase(x)) > math.pi / 2:
        return False, "arg x must lie in [-pi/2, pi/2]."
    if z is not None and not any_z and not (0 < abs(z) < 1.0):
        return False, "z must satisfy 0 < |z| < 1."
    return True, ""


def validate_jmax(j_max: int) -> tuple[bool, str]:
    if not 0 <= j_max <= 3:
        return False, "jmax must be in 0..3."
    return True, ""


def validate_k_range(k_min: int, k_max: int) -> tuple[bool, str]:
    """
    Examples:
        >>> validate_k_range(-2, 2)
        (True, '')
        >>> validate_k_range(3, 1)
        (False, 'kmin must not exceed kmax.')
    """
    if k_min > k_max:
        return False, "kmin must not exceed kmax."
    if k_max - k_min > 400:
        return False, "At most 401 saddles per request."
    return True, ""


def validate_y(y: float) -> tuple[bool, str]:
    if not (math.isfinite(y) and y > 1.0):
        return False, "y must be a finite number greater than 1."
    return True, ""


def validate_pairs(pairs: int) -> tuple[bool, str]:
    if not 1 <= pairs <= 20:
        return False, "pairs must be in 1..20."
    return True, ""
