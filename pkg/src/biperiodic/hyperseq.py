"""Quaternion and octonion lifts of the bi-periodic sequence.

``W_n = sum_l w_{n+l} e_l`` over four basis units and ``OW_n`` over eight.
The Binet side works with quaternions/octonions whose coefficients live in
Q[sqrt(D)]; every closed-form value is checked to be rational before it is
handed back.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Literal, Type

from .exact import QuadraticElement, QuadraticError
from .hypercomplex import Hypercomplex, Octonion, Quaternion
from .scalar import (
    Params,
    SequenceEngine,
    binet_constants,
    lucas_params,
    root_powers,
    roots,
    zeta,
)


def W(n: int, engine: SequenceEngine) -> Quaternion:
    return Quaternion([engine.w(n + l) for l in range(4)])


def OW(n: int, engine: SequenceEngine) -> Octonion:
    return Octonion([engine.w(n + l) for l in range(8)])


def lift(cls: Type[Hypercomplex], n: int, engine: SequenceEngine) -> Hypercomplex:
    return cls([engine.w(n + l) for l in range(cls.dim)])


def rational_part(u: Hypercomplex, what: str = "value") -> Hypercomplex:
    """Strip the Q[sqrt(D)] wrapper, refusing anything with a sqrt(D) residue."""
    bad = [l for l, x in enumerate(u.c) if not x.is_rational()]
    if bad:
        raise QuadraticError(f"nonrational {what}: sqrt(D) part in components {bad}")
    return type(u)([x.x for x in u.c])


def _star(cls: Type[Hypercomplex], params: Params, root: QuadraticElement, double: bool):
    a, ab = params.a, params.ab
    coeffs = []
    power = params.context.one
    for l in range(cls.dim):
        if double:
            weight = a ** zeta(l) / ab ** ((l + 1) // 2)
        else:
            weight = a ** zeta(l + 1) / ab ** (l // 2)
        coeffs.append(power * weight)
        power = power * root
    return cls(coeffs)


@dataclass(frozen=True)
class StarConstants:
    """``alpha*``, ``beta*``, ``alpha**``, ``beta**`` for one algebra.

    The octonion versions (usually written gamma/delta) share this type;
    :func:`oct_star_constants` exposes them under those names too.
    """

    alpha_star: Hypercomplex
    beta_star: Hypercomplex
    alpha_dstar: Hypercomplex
    beta_dstar: Hypercomplex

    @property
    def gamma_star(self):
        return self.alpha_star

    @property
    def delta_star(self):
        return self.beta_star

    @property
    def gamma_dstar(self):
        return self.alpha_dstar

    @property
    def delta_dstar(self):
        return self.beta_dstar

    def for_parity(self, n: int) -> tuple[Hypercomplex, Hypercomplex]:
        """The (alpha-side, beta-side) pair used at index parity ``n``."""
        if zeta(n) == 0:
            return self.alpha_star, self.beta_star
        return self.alpha_dstar, self.beta_dstar


@lru_cache(maxsize=256)
def make_star_constants(cls: Type[Hypercomplex], params: Params) -> StarConstants:
    alpha, beta = roots(params)
    return StarConstants(
        _star(cls, params, alpha, False),
        _star(cls, params, beta, False),
        _star(cls, params, alpha, True),
        _star(cls, params, beta, True),
    )


def star_constants(params: Params) -> StarConstants:
    return make_star_constants(Quaternion, params)


def oct_star_constants(params: Params) -> StarConstants:
    return make_star_constants(Octonion, params)


def hyper_binet(cls: Type[Hypercomplex], n: int, params: Params) -> Hypercomplex:
    if n < 0:
        raise ValueError("hypercomplex Binet formula is stated for n >= 0")
    A, B = binet_constants(params)
    sa, sb = make_star_constants(cls, params).for_parity(n)
    ap, bp = root_powers(params, n - 1)
    inv = Fraction(1) / params.ab ** (n // 2)
    value = (A * ap * inv) * sa - (B * bp * inv) * sb
    return rational_part(value, f"Binet value at n={n}")


def W_binet(n: int, params: Params) -> Quaternion:
    return hyper_binet(Quaternion, n, params)


def OW_binet(n: int, params: Params) -> Octonion:
    return hyper_binet(Octonion, n, params)


ClassicalKind = Literal["fib-quat", "lucas-quat", "fib-oct", "lucas-oct"]


@dataclass(frozen=True)
class ClassicalBinetRow:
    n: int
    closed_form: Hypercomplex
    recurrence: Hypercomplex

    @property
    def equal(self) -> bool:
        return self.closed_form == self.recurrence


def classical_binet(kind: ClassicalKind, n: int, a, b) -> Hypercomplex:
    """The older bi-periodic Fibonacci/Lucas Binet forms, evaluated as printed.

    Fibonacci: ``(x* alpha^n - y* beta^n) / ((alpha - beta)(ab)^floor(n/2))``.
    Lucas: ``(x** alpha^n + y** beta^n) / (ab)^floor((n+1)/2)`` for even ``n``,
    starred constants for odd ``n``.  Star constants always use the original
    ``a``, ``b`` (never the swapped Lucas pair).
    """
    family, algebra = kind.split("-")
    cls = Quaternion if algebra == "quat" else Octonion
    params = Params(a, b, 0, 1)
    stars = make_star_constants(cls, params)
    alpha, beta = roots(params)
    ap, bp = root_powers(params, n)
    if family == "fib":
        sa, sb = stars.for_parity(n)
        scale = (alpha - beta).inverse() / params.ab ** (n // 2)
        value = (ap * scale) * sa - (bp * scale) * sb
    elif family == "lucas":
        # Lucas pairs the double-starred constants with even n
        sa, sb = stars.for_parity(n + 1)
        scale = Fraction(1) / params.ab ** ((n + 1) // 2)
        value = (ap * scale) * sa + (bp * scale) * sb
    else:
        raise ValueError(f"unknown classical kind {kind!r}")
    return rational_part(value, f"{kind} Binet value at n={n}")


def classical_binet_check(kind: ClassicalKind, a, b, ns) -> list[ClassicalBinetRow]:
    """Compare a classical closed form against the recurrence for each ``n``."""
    family, algebra = kind.split("-")
    cls = Quaternion if algebra == "quat" else Octonion
    params = Params(a, b, 0, 1) if family == "fib" else lucas_params(a, b)
    engine = SequenceEngine(params)
    return [ClassicalBinetRow(n, classical_binet(kind, n, a, b), lift(cls, n, engine)) for n in ns]
