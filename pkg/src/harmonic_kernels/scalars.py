"""Gaussian rationals: the exact coefficient field a + b*i with a, b in Q."""

from __future__ import annotations

from fractions import Fraction

_ZERO_FRAC = Fraction(0)
_ONE_FRAC = Fraction(1)


class ExactScalar:
    """An exact complex number with rational real and imaginary parts.

    Both components are `fractions.Fraction`, hence always in lowest terms
    with positive denominator.  Instances are immutable and hashable; all
    arithmetic is exact.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", re if type(re) is Fraction else Fraction(re))
        object.__setattr__(self, "im", im if type(im) is Fraction else Fraction(im))

    @classmethod
    def _make(cls, re: Fraction, im: Fraction) -> "ExactScalar":
        obj = object.__new__(cls)
        object.__setattr__(obj, "re", re)
        object.__setattr__(obj, "im", im)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("ExactScalar is immutable")

    # -- predicates ---------------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    @property
    def is_real(self) -> bool:
        return not self.im

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(x) -> "ExactScalar":
        if isinstance(x, ExactScalar):
            return x
        if isinstance(x, (int, Fraction)):
            return ExactScalar._make(Fraction(x), _ZERO_FRAC)
        return NotImplemented

    def __add__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar._make(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar._make(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return ExactScalar._make(other.re - self.re, other.im - self.im)

    def __neg__(self):
        return ExactScalar._make(-self.re, -self.im)

    def __mul__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return ExactScalar._make(a * c, _ZERO_FRAC)
        return ExactScalar._make(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not other:
            raise ZeroDivisionError("division by zero ExactScalar")
        c, d = other.re, other.im
        if not d:
            return ExactScalar._make(self.re / c, self.im / c)
        denom = c * c + d * d
        a, b = self.re, self.im
        return ExactScalar._make((a * c + b * d) / denom, (b * c - a * d) / denom)

    def conjugate(self) -> "ExactScalar":
        return ExactScalar._make(self.re, -self.im)

    # -- comparisons / hashing ----------------------------------------------

    def __eq__(self, other):
        other = ExactScalar._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __repr__(self):
        return f"ExactScalar({self.re!r}, {self.im!r})"

    def __str__(self):
        return format_scalar(self)


ZERO = ExactScalar(0)
ONE = ExactScalar(1)
I = ExactScalar(0, 1)


def format_scalar(c: ExactScalar) -> str:
    """Grammar form: a real scalar prints as a rational, otherwise `(re,im)`."""
    if not c.im:
        return str(c.re)
    return f"({c.re},{c.im})"
