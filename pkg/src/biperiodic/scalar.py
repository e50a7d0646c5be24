"""The generalized bi-periodic Fibonacci sequence and its Binet form.

``w_n = a*w_{n-1} + w_{n-2}`` for even ``n`` and ``b*w_{n-1} + w_{n-2}`` for
odd ``n``, seeded with arbitrary ``w_0, w_1``.  The recurrence is run in both
directions, so negative indices are defined as well.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from fractions import Fraction

from .exact import QuadraticContext, QuadraticElement, QuadraticError, Scalar, format_rational


class ParamError(ValueError):
    pass


@dataclass(frozen=True)
class Params:
    a: Fraction
    b: Fraction
    w0: Fraction
    w1: Fraction

    def __post_init__(self):
        for name in ("a", "b", "w0", "w1"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))
        if self.a == 0:
            raise ParamError("a = 0: recurrence coefficient a must be nonzero")
        if self.b == 0:
            raise ParamError("b = 0: recurrence coefficient b must be nonzero")
        if self.D == 0:
            raise ParamError("a²b²+4ab = 0: the characteristic roots coincide")
        if self.w0 == 0 and self.w1 == 0:
            raise ParamError("w0 = w1 = 0: the sequence is identically zero")

    @property
    def ab(self) -> Fraction:
        return self.a * self.b

    @property
    def D(self) -> Fraction:
        return self.ab * self.ab + 4 * self.ab

    @property
    def context(self) -> QuadraticContext:
        return QuadraticContext(self.D)

    @property
    def positive(self) -> bool:
        """Whether the parameters sit in the usual a, b > 0 setting."""
        return self.a > 0 and self.b > 0

    def fibonacci(self) -> "Params":
        """Same (a, b) with w0 = 0, w1 = 1."""
        return Params(self.a, self.b, 0, 1)

    def to_json(self) -> dict:
        return {k: format_rational(getattr(self, k)) for k in ("a", "b", "w0", "w1")}

    def __str__(self):
        return "(a={a}, b={b}, w0={w0}, w1={w1})".format(**self.to_json())


def zeta(n: int) -> int:
    """Parity of ``n`` with floor semantics, so ``zeta(-1) == 1``."""
    return n - 2 * (n // 2)


def lucas_params(a: Scalar, b: Scalar) -> Params:
    """Parameters whose ``w_n`` is the bi-periodic Lucas number ``p_n``.

    ``p_n`` uses ``b`` at even and ``a`` at odd steps with ``p_0 = 2, p_1 = a``,
    which is the w-recurrence with the coefficients swapped.
    """
    return Params(b, a, 2, a)


@dataclass
class SequenceEngine:
    """Memoized ``w_n`` for one parameter set; not shared between threads."""

    params: Params
    _cache: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._cache.setdefault(0, self.params.w0)
        self._cache.setdefault(1, self.params.w1)
        self._lo = 0
        self._hi = 1

    def coefficient(self, n: int) -> Fraction:
        return self.params.a if zeta(n) == 0 else self.params.b

    def w(self, n: int) -> Fraction:
        cache = self._cache
        while self._hi < n:
            m = self._hi + 1
            cache[m] = self.coefficient(m) * cache[m - 1] + cache[m - 2]
            self._hi = m
        while self._lo > n:
            m = self._lo - 1
            # w_{m+2} = c(m+2) w_{m+1} + w_m, and c(m+2) = c(m)
            cache[m] = cache[m + 2] - self.coefficient(m) * cache[m + 1]
            self._lo = m
        return cache[n]

    def values(self, start: int, stop: int) -> list[Fraction]:
        return [self.w(n) for n in range(start, stop)]


def w(n: int, engine: SequenceEngine) -> Fraction:
    return engine.w(n)


def roots(params: Params) -> tuple[QuadraticElement, QuadraticElement]:
    """``alpha, beta = (ab ± sqrt(D)) / 2`` as elements of Q[sqrt(D)]."""
    ctx = params.context
    half_ab = params.ab / 2
    return ctx.element(half_ab, Fraction(1, 2)), ctx.element(half_ab, Fraction(-1, 2))


@lru_cache(maxsize=8192)
def root_powers(params: Params, k: int) -> tuple[QuadraticElement, QuadraticElement]:
    """``alpha**k, beta**k`` for any integer ``k``.

    Negative powers use ``alpha^-1 = -beta/(ab)`` and ``beta^-1 = -alpha/(ab)``,
    valid even when ``D`` is a perfect square.
    """
    alpha, beta = roots(params)
    if k < 0:
        alpha, beta = -beta / params.ab, -alpha / params.ab
        k = -k
    return alpha**k, beta**k


@lru_cache(maxsize=256)
def binet_constants(params: Params) -> tuple[QuadraticElement, QuadraticElement]:
    alpha, beta = roots(params)
    inv_diff = (alpha - beta).inverse()
    bw0 = params.b * params.w0
    A = (alpha * params.w1 + bw0) * inv_diff
    B = (beta * params.w1 + bw0) * inv_diff
    return A, B


def w_binet(n: int, params: Params) -> Fraction:
    """Closed-form ``w_n`` evaluated in Q[sqrt(D)]; must land in Q."""
    if n < 0:
        raise ValueError("w_binet is defined for n >= 0")
    A, B = binet_constants(params)
    ap, bp = root_powers(params, n - 1)
    scale = params.a ** zeta(n + 1) / params.ab ** (n // 2)
    value = (A * ap - B * bp) * scale
    if not value.is_rational():
        raise QuadraticError(f"nonrational Binet value at n={n}: {value}")
    return value.x
