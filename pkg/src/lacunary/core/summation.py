"""
Compensated accumulation of complex sums.

Two accumulators with the same interface (add, value):

- NeumaierSum: Kahan-Babuska-Neumaier compensation per component. Default
  for eval_direct; the rounding error is independent of the number of terms
  to first order.
- DoubleDoubleSum: each component held as an unevaluated pair (hi, lo) updated
  with the error-free TwoSum transformation. Used where cancellation makes the
  condition number large (|z| near 1, arg z near pi).

Both are plain Python over floats; the terms are produced one at a time by a
recurrence, so there is no array to hand to a vectorized routine.
"""


def two_sum(a: float, b: float) -> tuple[float, float]:
    """Error-free transformation: s + err == a + b exactly."""
    s = a + b
    bb = s - a
    err = (a - (s - bb)) + (b - bb)
    return s, err


def _quick_two_sum(a: float, b: float) -> tuple[float, float]:
    """Assumes |a| >= |b|."""
    s = a + b
    return s, b - (s - a)


class NeumaierSum:
    """Neumaier-compensated running sum of complex terms."""

    __slots__ = ("_re", "_im", "_cre", "_cim")

    def __init__(self):
        self._re = 0.0
        self._im = 0.0
        self._cre = 0.0
        self._cim = 0.0

    @staticmethod
    def _step(total: float, comp: float, term: float) -> tuple[float, float]:
        t = total + term
        if abs(total) >= abs(term):
            comp += (total - t) + term
        else:
            comp += (term - t) + total
        return t, comp

    def add(self, term: complex) -> None:
        self._re, self._cre = self._step(self._re, self._cre, term.real)
        self._im, self._cim = self._step(self._im, self._cim, term.imag)

    @property
    def value(self) -> complex:
        return complex(self._re + self._cre, self._im + self._cim)


class _DoubleDouble:
    """A real number hi + lo with |lo| <= ulp(hi)/2."""

    __slots__ = ("hi", "lo")

    def __init__(self):
        self.hi = 0.0
        self.lo = 0.0

    def add(self, b: float) -> None:
        s, e = two_sum(self.hi, b)
        e += self.lo
        self.hi, self.lo = _quick_two_sum(s, e)

    def __float__(self) -> float:
        return self.hi + self.lo


class DoubleDoubleSum:
    """Double-double running sum of complex terms."""

    __slots__ = ("_re", "_im")

    def __init__(self):
        self._re = _DoubleDouble()
        self._im = _DoubleDouble()

    def add(self, term: complex) -> None:
        self._re.add(term.real)
        self._im.add(term.imag)

    @property
    def value(self) -> complex:
        return complex(float(self._re), float(self._im))


ACCUMULATORS = {"neumaier": NeumaierSum, "double-double": DoubleDoubleSum}
