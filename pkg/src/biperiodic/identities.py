"""Differential checks of the quaternion/octonion identities.

Each check computes its left side from recurrence values only and its right
side from the Binet-side constants (``A``, ``B``, roots, star constants), then
compares the two exact values.  Hypercomplex factors keep the printed order;
scalar factors are central and may be moved freely.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Any, Optional, Type

from .exact import QuadraticElement, QuadraticError, format_rational
from .hypercomplex import Hypercomplex, Octonion, Quaternion, hc_conj, hc_mul
from .hyperseq import lift, make_star_constants, rational_part
from .scalar import Params, SequenceEngine, binet_constants, root_powers, roots, zeta

POSITIVE_NOTE = "outside positive-parameter setting"


def serialize(value: Any) -> Any:
    if isinstance(value, Hypercomplex):
        return value.to_json()
    if isinstance(value, QuatMatrix2):
        return [[serialize(x) for x in row] for row in value.rows]
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    if isinstance(value, QuadraticElement):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [serialize(x) for x in value]
    return value


@dataclass
class IdentityReport:
    name: str
    params: Optional[Params]
    indices: dict
    lhs: Any
    rhs: Any
    equal: bool
    hypothesis: bool = True
    note: Optional[str] = None

    def add_note(self, text: str) -> None:
        self.note = text if not self.note else f"{self.note}; {text}"

    def to_json(self) -> dict:
        return {
            "identity": self.name,
            "params": self.params.to_json() if self.params is not None else None,
            "indices": dict(sorted(self.indices.items())),
            "lhs": serialize(self.lhs),
            "rhs": serialize(self.rhs),
            "equal": self.equal,
            "hypothesis": self.hypothesis,
            "note": self.note,
        }


def _report(name, params, indices, lhs, rhs, hypothesis=True, note=None) -> IdentityReport:
    rep = IdentityReport(name, params, indices, lhs, rhs, lhs == rhs, hypothesis, note)
    if params is not None and not params.positive:
        rep.add_note(POSITIVE_NOTE)
    return rep


@dataclass(frozen=True)
class QuatMatrix2:
    """2x2 matrix with hypercomplex entries; products keep left/right order."""

    rows: tuple

    def __matmul__(self, other: "QuatMatrix2") -> "QuatMatrix2":
        (a, b), (c, d) = self.rows
        (e, f), (g, h) = other.rows
        return QuatMatrix2(
            (
                (hc_mul(a, e) + hc_mul(b, g), hc_mul(a, f) + hc_mul(b, h)),
                (hc_mul(c, e) + hc_mul(d, g), hc_mul(c, f) + hc_mul(d, h)),
            )
        )

    def __eq__(self, other):
        if not isinstance(other, QuatMatrix2):
            return NotImplemented
        return all(x == y for r1, r2 in zip(self.rows, other.rows) for x, y in zip(r1, r2))

    @classmethod
    def scalar_matrix(cls, entries, algebra: Type[Hypercomplex] = Quaternion) -> "QuatMatrix2":
        return cls(tuple(tuple(algebra.scalar(Fraction(x)) for x in row) for row in entries))

    def power(self, k: int) -> "QuatMatrix2":
        one, zero = Fraction(1), Fraction(0)
        algebra = type(self.rows[0][0])
        result = QuatMatrix2.scalar_matrix(((one, zero), (zero, one)), algebra)
        for _ in range(k):
            result = result @ self
        return result


class _Side:
    """Binet-side constants for one parameter set and algebra."""

    def __init__(self, cls: Type[Hypercomplex], params: Params):
        self.cls = cls
        self.params = params
        self.A, self.B = binet_constants(params)
        self.alpha, self.beta = roots(params)
        self.stars = make_star_constants(cls, params)
        self._products = None

    def pw(self, k):
        return root_powers(self.params, k)

    @property
    def products(self):
        """``(x y, y x)`` star products for even and odd parity, in that order."""
        # keyed on the live table so a swapped-in table is never served stale products
        if self._products is None or self._products[0] is not self.cls.table:
            st = self.stars
            self._products = self.cls.table, {
                0: (hc_mul(st.alpha_star, st.beta_star), hc_mul(st.beta_star, st.alpha_star)),
                1: (hc_mul(st.alpha_dstar, st.beta_dstar), hc_mul(st.beta_dstar, st.alpha_dstar)),
            }
        return self._products[1]


@lru_cache(maxsize=256)
def _side(cls: Type[Hypercomplex], params: Params) -> _Side:
    return _Side(cls, params)


def _engine(params, engine):
    return engine if engine is not None and engine.params == params else SequenceEngine(params)


def _catalan_rhs(side: _Side, n: int, r: int, *, swap_order: bool = False):
    ar, br = side.pw(r)
    ab_pow = side.alpha * side.beta
    divisor = ab_pow ** (r + 1) if zeta(n) == 0 else ab_pow**r
    coeff = side.A * side.B * (ar - br) / divisor
    first, second = side.products[zeta(n)]
    if swap_order:
        first, second = second, first
    return rational_part(coeff * (first * br - second * ar), "RHS")


def _catalan(cls, name, n, r, params, engine, hypothesis, note):
    eng = _engine(params, engine)
    X = lambda k: lift(cls, k, eng)
    lhs = hc_mul(X(n - r), X(n + r)) - hc_mul(X(n), X(n))
    rhs = _catalan_rhs(_side(cls, params), n, r)
    return _report(name, params, {"n": n, "r": r}, lhs, rhs, hypothesis, note)


def catalan_quat(n: int, r: int, params: Params, engine=None) -> IdentityReport:
    """``W_{n-r} W_{n+r} - W_n^2`` against the Catalan-like closed form (even ``r``)."""
    if n < 0:
        raise ValueError("catalan_quat needs n >= 0")
    if r % 2 != 0 or r < 0 or r > n:
        raise ValueError(f"catalan_quat needs even r with 0 <= r <= n (got n={n}, r={r})")
    return _catalan(Quaternion, "catalan_quat", n, r, params, engine, True, None)


def catalan_oct(n: int, r: int, params: Params, engine=None) -> IdentityReport:
    """Octonion Catalan check for either parity of ``r``.

    The octonion statement asks for odd ``r`` while the quaternion one asks
    for even ``r``; the report records which reading the instance matches and
    is never treated as gating.
    """
    if n < 0 or r < 0 or r > n:
        raise ValueError(f"catalan_oct needs 0 <= r <= n (got n={n}, r={r})")
    parity = "even r (quaternion pattern)" if r % 2 == 0 else "odd r (octonion statement)"
    return _catalan(Octonion, "catalan_oct", n, r, params, engine, False, parity)


def cassini_quat(n: int, params: Params, engine=None) -> IdentityReport:
    """The ``r = 2`` Catalan case; odd ``n`` is evaluated but flagged."""
    if n < 0:
        raise ValueError("cassini_quat needs n >= 0")
    eng = _engine(params, engine)
    X = lambda k: lift(Quaternion, k, eng)
    lhs = hc_mul(X(n - 2), X(n + 2)) - hc_mul(X(n), X(n))
    side = _side(Quaternion, params)
    # the corollary always uses the even-index constants
    ab_ba = side.products[0]
    a2, b2 = side.pw(2)
    coeff = side.A * side.B * (a2 - b2) / (side.alpha * side.beta) ** 3
    rhs = rational_part(coeff * (ab_ba[0] * b2 - ab_ba[1] * a2), "RHS")
    even = n % 2 == 0
    return _report(
        "cassini_quat", params, {"n": n}, lhs, rhs, even,
        None if even else "outside corollary hypothesis",
    )


def matrix_rep(n: int, params: Params, engine=None) -> IdentityReport:
    if n < 1:
        raise ValueError("matrix_rep needs n >= 1")
    eng = _engine(params, engine)
    X = lambda k: lift(Quaternion, k, eng)
    lhs = QuatMatrix2(((X(2 * n), X(2 * (n - 1))), (X(2 * (n + 1)), X(2 * n))))
    base = QuatMatrix2(((X(2), X(0)), (X(4), X(2))))
    M = QuatMatrix2.scalar_matrix(((params.ab + 2, 1), (-1, 0)))
    rhs = base @ M.power(n - 1)
    return _report("matrix_rep", params, {"n": n}, lhs, rhs)


def cassini_even(n: int, params: Params, engine=None) -> IdentityReport:
    if n < 1:
        raise ValueError("cassini_even needs n >= 1")
    eng = _engine(params, engine)
    X = lambda k: lift(Quaternion, k, eng)
    lhs = hc_mul(X(2 * (n - 1)), X(2 * (n + 1))) - hc_mul(X(2 * n), X(2 * n))
    rhs = hc_mul(X(0), X(4)) - hc_mul(X(2), X(2))
    return _report("cassini_even", params, {"n": n}, lhs, rhs)


def _mixed(cls, name, n, params, engine):
    if n < 0:
        raise ValueError(f"{name} needs n >= 0")
    eng = _engine(params, engine)
    qeng = SequenceEngine(params.fibonacci())
    X = lambda k: lift(cls, k, eng)
    Q = lambda k: lift(cls, k, qeng)
    lhs = hc_mul(X(2 * (n + 1)), Q(2 * n)) - hc_mul(X(2 * n), Q(2 * (n + 1)))
    side = _side(cls, params)
    ab_ba = side.products[0]
    value = (side.A * side.beta) * ab_ba[0] - (side.B * side.alpha) * ab_ba[1]
    rhs = rational_part(value / params.ab, "RHS")
    return _report(name, params, {"n": n}, lhs, rhs)


def mixed_relation_quat(n: int, params: Params, engine=None) -> IdentityReport:
    """``W_{2n+2} Q_{2n} - W_{2n} Q_{2n+2}`` with ``Q`` the (0, 1)-seeded quaternions."""
    return _mixed(Quaternion, "mixed_relation_quat", n, params, engine)


def mixed_relation_oct(n: int, params: Params, engine=None) -> IdentityReport:
    return _mixed(Octonion, "mixed_relation_oct", n, params, engine)


def norm_T(n: int, params: Params) -> QuadraticElement:
    """One half of the closed-form norm: ``T(n)`` equals ``w_n^2 + w_{n+2}^2``."""
    alpha, beta = roots(params)
    ab = params.ab
    ab_r = alpha * beta
    a2n, b2n = root_powers(params, 2 * n)
    a2n1, b2n1 = root_powers(params, 2 * n - 1)
    a2n2, b2n2 = root_powers(params, 2 * n - 2)
    ka = alpha**4 + ab_r**2
    kb = beta**4 + ab_r**2
    X = a2n * ka + b2n * kb - 4 * ab_r ** (n + 2)
    Y = a2n1 * ka + b2n1 * kb + 2 * ab_r ** (n + 2)
    Z = a2n2 * ka + b2n2 * kb - 4 * ab_r ** (n + 1)
    w0, w1, b = params.w0, params.w1, params.b
    bracket = X * (w1 * w1) + Y * (2 * w0 * w1 * b) + Z * (w0 * w0 * b * b)
    denom = ab ** (n - zeta(n)) * ab_r**2 * (alpha - beta) ** 2
    return bracket * params.a ** (2 * zeta(n + 1)) / denom


def norm_formula(n: int, params: Params, engine=None) -> IdentityReport:
    if n < 0:
        raise ValueError("norm_formula needs n >= 0")
    eng = _engine(params, engine)
    Wn = lift(Quaternion, n, eng)
    # the norm as defined: e0 part of W times its conjugate
    lhs = hc_mul(Wn, hc_conj(Wn))[0]
    rhs = norm_T(n, params) + norm_T(n + 1, params)
    if not rhs.is_rational():
        raise QuadraticError(f"nonrational RHS in norm formula at n={n}")
    return _report("norm_formula", params, {"n": n}, lhs, rhs.x)


def _sums(cls, prefix, n, params, engine):
    if n < 1:
        raise ValueError(f"{prefix} needs n >= 1")
    eng = _engine(params, engine)
    X = lambda k: lift(cls, k, eng)
    side = _side(cls, params)
    st = side.stars
    A, B, alpha, beta = side.A, side.B, side.alpha, side.beta
    ab = params.ab

    c_even = (A * beta * beta) * st.alpha_star - (B * alpha * alpha) * st.beta_star
    c_odd = (A * beta) * st.alpha_dstar - (B * alpha) * st.beta_dstar

    def total(indices):
        acc = X(indices[0])
        for k in indices[1:]:
            acc = acc + X(k)
        return acc

    lhs_all = total(list(range(n)))
    rhs_all = (X(n) - X(n - 2) + X(n + 1) - X(n - 1)) / ab - rational_part(
        (c_even - ab * c_odd) / (ab * ab), "RHS"
    )
    lhs_even = total([2 * r for r in range(n)])
    rhs_even = (X(2 * n) - X(2 * n - 2)) / ab - rational_part(c_even / (ab * ab), "RHS")
    lhs_odd = total([2 * r + 1 for r in range(n)])
    rhs_odd = (X(2 * n + 1) - X(2 * n - 1)) / ab + rational_part(c_odd / ab, "RHS")
    idx = {"n": n}
    return (
        _report(f"{prefix}_all", params, idx, lhs_all, rhs_all),
        _report(f"{prefix}_even", params, idx, lhs_even, rhs_even),
        _report(f"{prefix}_odd", params, idx, lhs_odd, rhs_odd),
    )


def sums_quat(n: int, params: Params, engine=None):
    """Partial sums of all, even-indexed and odd-indexed ``W_r`` for ``r < n``."""
    return _sums(Quaternion, "sums_quat", n, params, engine)


def sums_oct(n: int, params: Params, engine=None):
    return _sums(Octonion, "sums_oct", n, params, engine)
