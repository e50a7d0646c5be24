"""Polynomials, truncated power series and the two generating functions.

Everything here is scalar: the quaternion/octonion generating functions are
assembled one basis component at a time, each component being a rational
function plus ``(a - b)`` times a shifted power series.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Type

from .hypercomplex import Hypercomplex, Octonion, Quaternion
from .scalar import Params, SequenceEngine

DEFAULT_ORDER = 40


class SeriesError(ArithmeticError):
    pass


def _trim(coeffs: Iterable) -> tuple[Fraction, ...]:
    c = [Fraction(x) for x in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class Polynomial:
    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "coefficients", _trim(self.coefficients))

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k] if 0 <= k < len(self.coefficients) else Fraction(0)

    def __call__(self, t):
        acc = Fraction(0)
        for c in reversed(self.coefficients):
            acc = acc * t + c
        return acc

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial([self[k] + other[k] for k in range(n)])

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(len(self.coefficients), len(other.coefficients))
        return Polynomial([self[k] - other[k] for k in range(n)])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            if not self.coefficients or not other.coefficients:
                return Polynomial()
            out = [Fraction(0)] * (len(self.coefficients) + len(other.coefficients) - 1)
            for i, x in enumerate(self.coefficients):
                for j, y in enumerate(other.coefficients):
                    out[i + j] += x * y
            return Polynomial(out)
        return Polynomial([x * other for x in self.coefficients])

    __rmul__ = __mul__


@dataclass(frozen=True)
class PowerSeries:
    """Coefficients of ``t^0 .. t^order``; arithmetic stays at the truncation."""

    coefficients: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coefficients", tuple(Fraction(x) for x in self.coefficients))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @classmethod
    def zero(cls, order: int) -> "PowerSeries":
        return cls([0] * (order + 1))

    @classmethod
    def from_polynomial(cls, p: Polynomial, order: int) -> "PowerSeries":
        return cls([p[k] for k in range(order + 1)])

    def __getitem__(self, k: int) -> Fraction:
        return self.coefficients[k]

    def truncate(self, order: int) -> "PowerSeries":
        if order > self.order:
            raise SeriesError(f"cannot extend a series of order {self.order} to {order}")
        return PowerSeries(self.coefficients[: order + 1])

    def valuation(self):
        """Lowest exponent with a nonzero coefficient, or None for the zero series."""
        for k, c in enumerate(self.coefficients):
            if c != 0:
                return k
        return None

    def _common(self, other: "PowerSeries") -> int:
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._common(other)
        return PowerSeries([self[k] + other[k] for k in range(n + 1)])

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        n = self._common(other)
        return PowerSeries([self[k] - other[k] for k in range(n + 1)])

    def __mul__(self, other):
        if isinstance(other, PowerSeries):
            n = self._common(other)
            return PowerSeries(
                [sum((self[i] * other[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
            )
        return PowerSeries([x * other for x in self.coefficients])

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, PowerSeries):
            return NotImplemented
        n = self._common(other)
        return self.coefficients[: n + 1] == other.coefficients[: n + 1]

    def __hash__(self):
        return hash(self.coefficients)

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by ``t**k``; negative ``k`` requires valuation >= ``-k``."""
        if k >= 0:
            return PowerSeries(([Fraction(0)] * k + list(self.coefficients))[: self.order + 1])
        v = self.valuation()
        if v is not None and v < -k:
            raise SeriesError("negative exponent after shift")
        # dividing by t^|k| loses |k| coefficients off the top
        return PowerSeries(self.coefficients[-k:])


@dataclass(frozen=True)
class RationalFunction:
    num: Polynomial
    den: Polynomial

    def __mul__(self, other: "RationalFunction") -> "RationalFunction":
        return RationalFunction(self.num * other.num, self.den * other.den)


def series_expand(rf: RationalFunction, order: int) -> PowerSeries:
    """Solve ``num = den * s`` coefficient by coefficient up to ``t^order``."""
    d0 = rf.den[0]
    if d0 == 0:
        raise SeriesError("pole at origin")
    s: list[Fraction] = []
    for k in range(order + 1):
        acc = rf.num[k]
        for i in range(1, min(k, rf.den.degree) + 1):
            acc -= rf.den[i] * s[k - i]
        s.append(acc / d0)
    return PowerSeries(s)


def divide_series(s: PowerSeries, den: Polynomial) -> PowerSeries:
    """``s / den`` for a series ``s`` and a polynomial with ``den(0) != 0``."""
    d0 = den[0]
    if d0 == 0:
        raise SeriesError("pole at origin")
    out: list[Fraction] = []
    for k in range(s.order + 1):
        acc = s[k]
        for i in range(1, min(k, den.degree) + 1):
            acc -= den[i] * out[k - i]
        out.append(acc / d0)
    return PowerSeries(out)


def f_rational(params: Params) -> RationalFunction:
    """Odd-index generating function as a ratio of polynomials."""
    w0, w1, b = params.w0, params.w1, params.b
    num = Polynomial([0, w1, 0, b * w0 - w1])
    den = Polynomial([1, 0, -(params.ab + 2), 0, 1])
    return RationalFunction(num, den)


def f_series(params: Params, order: int) -> PowerSeries:
    """``sum_{n>=1} w_{2n-1} t^{2n-1}`` expanded to ``t^order``."""
    if order < 1:
        raise ValueError("f_series needs order >= 1")
    return series_expand(f_rational(params), order)


def correction_term(params: Params, s: int, order: int, engine: SequenceEngine = None) -> PowerSeries:
    """``(f(t) - sum_{k <= (s+1)//2} w_{2k-1} t^{2k-1}) * t^(1-s)`` to ``t^order``."""
    if s < 0:
        raise ValueError("correction_term needs s >= 0")
    if order < s:
        raise ValueError("correction_term needs order >= s")
    engine = engine if engine is not None else SequenceEngine(params)
    # the t^(1-s) shift consumes s-1 coefficients when s > 1
    f = series_expand(f_rational(params), max(order + max(s - 1, 0), 1))
    head = [Fraction(0)] * (f.order + 1)
    for k in range(1, (s + 1) // 2 + 1):
        head[2 * k - 1] = engine.w(2 * k - 1)
    body = f - PowerSeries(head)
    return body.shift(1 - s).truncate(order)


def _genfunc(cls: Type[Hypercomplex], params: Params, order: int) -> list[Hypercomplex]:
    if order < 0:
        raise ValueError("generating function needs order >= 0")
    engine = SequenceEngine(params)
    den = Polynomial([1, -params.b, -1])
    a_minus_b = params.a - params.b
    W0 = [engine.w(l) for l in range(cls.dim)]
    W1 = [engine.w(1 + l) for l in range(cls.dim)]
    columns = []
    for s in range(cls.dim):
        head = Polynomial([W0[s], W1[s] - params.b * W0[s]])
        col = series_expand(RationalFunction(head, den), order)
        if a_minus_b != 0:
            corr = correction_term(params, s, max(order, s), engine).truncate(order)
            col = col + divide_series(corr, den) * a_minus_b
        columns.append(col)
    return [cls([col[k] for col in columns]) for k in range(order + 1)]


def genfunc_quat(params: Params, order: int = DEFAULT_ORDER) -> list[Quaternion]:
    """Coefficients of ``t^0..t^order`` of the quaternion generating function."""
    return _genfunc(Quaternion, params, order)


def genfunc_oct(params: Params, order: int = DEFAULT_ORDER) -> list[Octonion]:
    return _genfunc(Octonion, params, order)
