"""Exact rationals and the formal quadratic ring Q[t]/(t^2 - D).

Rationals are :class:`fractions.Fraction`, which already keeps a canonical
(reduced, positive-denominator) form after every operation.  The quadratic
ring is deliberately not assumed to be a field: when ``D`` is a perfect
square it has zero divisors, so inversion goes through the conjugate norm and
fails loudly when that norm vanishes.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*([+-]?\d+))?\s*$")


class QuadraticError(ArithmeticError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"``; decimals and floats are rejected."""
    if isinstance(text, (int, Fraction)):
        return Fraction(text)
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"malformed rational {text!r}: expected 'p' or 'p/q'")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"malformed rational {text!r}: zero denominator")
    return Fraction(num, den)


def format_rational(x: Scalar) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class QuadraticContext:
    """The radicand ``D`` shared by every element of one ring."""

    D: Fraction

    def __post_init__(self):
        object.__setattr__(self, "D", Fraction(self.D))
        if self.D == 0:
            raise QuadraticError("quadratic context requires D != 0")

    def element(self, x: Scalar = 0, y: Scalar = 0) -> "QuadraticElement":
        return QuadraticElement(Fraction(x), Fraction(y), self)

    @property
    def zero(self) -> "QuadraticElement":
        return self.element(0, 0)

    @property
    def one(self) -> "QuadraticElement":
        return self.element(1, 0)

    @property
    def sqrt_d(self) -> "QuadraticElement":
        return self.element(0, 1)


@dataclass(frozen=True)
class QuadraticElement:
    """``x + y*sqrt(D)`` with exact rational ``x`` and ``y``."""

    x: Fraction
    y: Fraction
    context: QuadraticContext

    def __post_init__(self):
        if type(self.x) is not Fraction:
            object.__setattr__(self, "x", Fraction(self.x))
        if type(self.y) is not Fraction:
            object.__setattr__(self, "y", Fraction(self.y))

    def _coerce(self, other) -> "QuadraticElement":
        if isinstance(other, QuadraticElement):
            if other.context != self.context:
                raise QuadraticError("mixed quadratic contexts")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticElement(Fraction(other), Fraction(0), self.context)
        return NotImplemented

    def is_rational(self) -> bool:
        return self.y == 0

    def rational(self) -> Fraction:
        """The rational value; raises if a sqrt(D) part survives."""
        if self.y != 0:
            raise QuadraticError(f"element {self} is not rational")
        return self.x

    def norm(self) -> Fraction:
        return self.x * self.x - self.context.D * self.y * self.y

    def conj(self) -> "QuadraticElement":
        return QuadraticElement(self.x, -self.y, self.context)

    def inverse(self) -> "QuadraticElement":
        n = self.norm()
        if n == 0:
            raise QuadraticError("non-invertible element")
        return QuadraticElement(self.x / n, -self.y / n, self.context)

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticElement(self.x + other.x, self.y + other.y, self.context)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticElement(-self.x, -self.y, self.context)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return QuadraticElement(self.x - other.x, self.y - other.y, self.context)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        D = self.context.D
        return QuadraticElement(
            self.x * other.x + D * self.y * other.y,
            self.x * other.y + self.y * other.x,
            self.context,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        result = self.context.one
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticElement):
            return (self.x, self.y, self.context) == (other.x, other.y, other.context)
        if isinstance(other, (int, Fraction)):
            return self.y == 0 and self.x == other
        return NotImplemented

    def __hash__(self):
        if self.y == 0:
            return hash(self.x)
        return hash((self.x, self.y, self.context))

    def __str__(self):
        if self.y == 0:
            return format_rational(self.x)
        sign = "-" if self.y < 0 else "+"
        root = f"{format_rational(abs(self.y))}*sqrt({format_rational(self.context.D)})"
        if self.x == 0:
            return root if sign == "+" else "-" + root
        return f"{format_rational(self.x)}{sign}{root}"

    def __repr__(self):
        return f"QuadraticElement({self.x!r}, {self.y!r}, D={self.context.D!r})"


def quad_mul(u: QuadraticElement, v: QuadraticElement) -> QuadraticElement:
    return u * v


def quad_inv(u: QuadraticElement) -> QuadraticElement:
    return u.inverse()


def quad_conj(u: QuadraticElement) -> QuadraticElement:
    return u.conj()
