"""Scalar arithmetic for the two evaluation paths.

Float path: ordinary ``complex`` (one fixed precision per run).
Exact path: :class:`GaussianRational`, a complex number with
``fractions.Fraction`` real and imaginary parts.  Exact arithmetic is closed
under +, -, *, / (nonzero divisor) with no rounding.

Mixing the two paths is a bug, so ``GaussianRational`` refuses arithmetic
with floats: converting to the float path is always explicit via
``complex(x)`` or :func:`to_complex`.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Complex


class GaussianRational:
    """Element of Q(i): exact complex number with rational re/im parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    # -- construction helpers -------------------------------------------

    @classmethod
    def parse(cls, value) -> "GaussianRational":
        """Build from int, Fraction, 'p/q' string, (re, im) pair, or self."""
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction, str)):
            return cls(Fraction(value))
        if isinstance(value, (tuple, list)) and len(value) == 2:
            return cls(Fraction(value[0]), Fraction(value[1]))
        raise TypeError(f"cannot parse {value!r} as an exact scalar")

    # -- arithmetic ------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)):
            return GaussianRational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(o.re - self.re, o.im - self.im)

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        den = o.re * o.re + o.im * o.im
        if den == 0:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / den,
            (self.im * o.re - self.re * o.im) / den,
        )

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return GaussianRational(1) / self ** (-n)
        result = GaussianRational(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons / conversions ----------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, Complex):
                return complex(self) == complex(other)
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return self.re != 0 or self.im != 0

    def __complex__(self):
        return complex(float(self.re), float(self.im))

    def abs_squared(self) -> Fraction:
        """Exact |z|^2; the modulus itself is generally irrational."""
        return self.re * self.re + self.im * self.im

    def __abs__(self) -> float:
        return abs(complex(self))

    def is_real(self) -> bool:
        return self.im == 0

    def __repr__(self):
        return f"GaussianRational({self.re!r}, {self.im!r})"

    def __str__(self):
        if self.im == 0:
            return str(self.re)
        return f"({self.re}{'+' if self.im >= 0 else ''}{self.im}i)"


ExactScalar = (int, Fraction, GaussianRational)


def is_exact(value) -> bool:
    return isinstance(value, ExactScalar)


def to_complex(value) -> complex:
    """Scalar of either path -> complex (the only exact->float bridge)."""
    if isinstance(value, GaussianRational):
        return complex(value)
    if isinstance(value, Fraction):
        return complex(float(value), 0.0)
    return complex(value)


def to_exact(value) -> GaussianRational:
    return GaussianRational.parse(value)
