"""Exact scalar arithmetic: Gaussian rationals and rising-factorial helpers.

Every coefficient in this package is a rational or Gaussian-rational number.
`fractions.Fraction` keeps rationals in lowest terms with a positive
denominator, so structural equality is mathematical equality.  Floating
point never enters except through explicit `approx()` conversions used by
the Monte Carlo cross-checks.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb as binomial  # noqa: F401  (re-exported)
from math import factorial  # noqa: F401  (re-exported)
from typing import Union

RationalLike = Union[int, Fraction]


def pochhammer(nu: RationalLike, k: int) -> Fraction:
    """Rising factorial nu*(nu+1)*...*(nu+k-1); the empty product for k = 0."""
    if k < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {k}")
    acc = Fraction(1)
    base = Fraction(nu)
    for t in range(k):
        acc *= base + t
    return acc


def format_rational(value: RationalLike) -> str:
    """Canonical "num/den" form; the denominator is always written out."""
    q = Fraction(value)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p/q" or the integer shorthand "p"."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"malformed rational {text!r}") from exc


class GaussianRational:
    """Element of Q(i): an exact complex number with rational parts.

    Instances are immutable by convention; all operations return fresh
    values, so they are safe to share freely.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: RationalLike = 0, im: RationalLike = 0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    @staticmethod
    def _coerce(value) -> "GaussianRational | None":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Fraction)):
            return GaussianRational(value)
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
        a, b, c, d = self.re, self.im, o.re, o.im
        if not b and not d:
            return GaussianRational(a * c)
        return GaussianRational(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "GaussianRational":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def __bool__(self) -> bool:
        return bool(self.re) or bool(self.im)

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        return hash((self.re, self.im))

    def approx(self) -> complex:
        return complex(self.re) + 1j * complex(self.im)

    def __str__(self) -> str:
        if not self.im:
            return str(self.re)
        if not self.re:
            return f"{self.im}*i" if self.im != 1 else "i"
        sign = "+" if self.im > 0 else "-"
        mag = abs(self.im)
        itxt = "i" if mag == 1 else f"{mag}*i"
        return f"{self.re}{sign}{itxt}"

    def __repr__(self) -> str:
        return f"GaussianRational({self})"


GR_ZERO = GaussianRational(0)
GR_ONE = GaussianRational(1)
GR_I = GaussianRational(0, 1)
