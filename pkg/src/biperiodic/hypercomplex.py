"""Quaternions and octonions over any commutative coefficient ring.

Multiplication is driven by a :class:`MultiplicationTable` stored as data:
``e_i * e_j = sign[i][j] * e_{index[i][j]}``.  Coefficients only need
``+``, ``-``, ``*`` and exact ``==``, so the same classes work over
:class:`~fractions.Fraction` and over
:class:`~biperiodic.exact.QuadraticElement`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from operator import add
from typing import Any, ClassVar, Sequence

from .exact import format_rational

# Octonion multiplication table, row e_i times column e_j; "1" is e0.
OCTONION_TABLE_LITERAL = """
 1   e1  e2  e3  e4  e5  e6  e7
 e1 -1   e3 -e2  e5 -e4 -e7  e6
 e2 -e3 -1   e1  e6  e7 -e4 -e5
 e3  e2 -e1 -1   e7 -e6  e5 -e4
 e4 -e5 -e6 -e7 -1   e1  e2  e3
 e5  e4 -e7  e6 -e1 -1  -e3  e2
 e6  e7  e4 -e5 -e2  e3 -1  -e1
 e7 -e6  e5  e4 -e3 -e2  e1 -1
"""

# Quaternion basis rules: e_l^2 = -1 and the cyclic products.
QUATERNION_RULES = (
    ("e1", "e2", "e3"),
    ("e2", "e3", "e1"),
    ("e3", "e1", "e2"),
)


class DimensionError(ValueError):
    pass


def _parse_unit(token: str) -> tuple[int, int]:
    sign = -1 if token.startswith("-") else 1
    token = token.lstrip("+-")
    return sign, 0 if token == "1" else int(token[1:])


@dataclass(frozen=True)
class MultiplicationTable:
    sign: tuple[tuple[int, ...], ...]
    index: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.sign)

    def product(self, i: int, j: int) -> tuple[int, int]:
        return self.sign[i][j], self.index[i][j]

    def replace(self, i: int, j: int, sign: int, index: int) -> "MultiplicationTable":
        """Copy with one entry overwritten (used to build deliberately broken tables)."""
        s = [list(row) for row in self.sign]
        x = [list(row) for row in self.index]
        s[i][j], x[i][j] = sign, index
        return MultiplicationTable(tuple(map(tuple, s)), tuple(map(tuple, x)))

    @classmethod
    def from_literal(cls, text: str) -> "MultiplicationTable":
        rows = [line.split() for line in text.strip().splitlines()]
        pairs = [[_parse_unit(tok) for tok in row] for row in rows]
        n = len(pairs)
        if any(len(row) != n for row in pairs):
            raise ValueError("multiplication table literal is not square")
        return cls(
            tuple(tuple(p[0] for p in row) for row in pairs),
            tuple(tuple(p[1] for p in row) for row in pairs),
        )

    @classmethod
    def from_rules(cls, rules) -> "MultiplicationTable":
        """Quaternion-style table from identity, ``e_l^2 = -1`` and ``e_i e_j = e_k`` rules."""
        n = 1 + len(rules)
        sign = [[0] * n for _ in range(n)]
        index = [[0] * n for _ in range(n)]
        for i in range(n):
            sign[0][i], index[0][i] = 1, i
            sign[i][0], index[i][0] = 1, i
        for i in range(1, n):
            sign[i][i], index[i][i] = -1, 0
        for left, right, out in rules:
            i, j, k = (_parse_unit(t)[1] for t in (left, right, out))
            sign[i][j], index[i][j] = 1, k
            sign[j][i], index[j][i] = -1, k
        return cls(tuple(map(tuple, sign)), tuple(map(tuple, index)))

    def check_structure(self) -> list[str]:
        """Problems with identity row/column, ``e_l^2 = -1`` and antisymmetry."""
        n = self.dim
        problems = []
        for i in range(n):
            if self.product(0, i) != (1, i) or self.product(i, 0) != (1, i):
                problems.append(f"e0 is not the identity at e{i}")
        for i in range(1, n):
            if self.product(i, i) != (-1, 0):
                problems.append(f"e{i}^2 != -1")
            for j in range(1, n):
                if i != j:
                    si, ki = self.product(i, j)
                    sj, kj = self.product(j, i)
                    if ki != kj or si != -sj or si == 0:
                        problems.append(f"e{i}e{j} != -e{j}e{i}")
        return problems


QUATERNION_TABLE = MultiplicationTable.from_rules(QUATERNION_RULES)
OCTONION_TABLE = MultiplicationTable.from_literal(OCTONION_TABLE_LITERAL)

for _table in (QUATERNION_TABLE, OCTONION_TABLE):
    _problems = _table.check_structure()
    if _problems:
        raise RuntimeError(f"invalid built-in multiplication table: {_problems}")
# the quaternion rules must be the e0..e3 corner of the octonion table
if any(
    QUATERNION_TABLE.product(i, j) != OCTONION_TABLE.product(i, j)
    for i in range(4)
    for j in range(4)
):
    raise RuntimeError("quaternion table disagrees with the octonion table corner")


class Hypercomplex:
    """Base for fixed-table algebras; subclasses set ``dim`` and ``table``."""

    dim: ClassVar[int]
    table: ClassVar[MultiplicationTable]

    __slots__ = ("c",)

    def __init__(self, coefficients: Sequence[Any]):
        c = tuple(coefficients)
        if len(c) != self.dim:
            raise DimensionError(
                f"{type(self).__name__} needs {self.dim} coefficients, got {len(c)}"
            )
        self.c = c

    @classmethod
    def basis(cls, i: int, one: Any = 1, zero: Any = 0):
        return cls([one if k == i else zero for k in range(cls.dim)])

    @classmethod
    def scalar(cls, s: Any, zero: Any = 0):
        return cls([s] + [zero] * (cls.dim - 1))

    def _check(self, other: "Hypercomplex") -> None:
        if type(other) is not type(self):
            raise DimensionError(
                f"dimension mismatch: {type(self).__name__} and {type(other).__name__}"
            )

    def __getitem__(self, i: int):
        return self.c[i]

    def __iter__(self):
        return iter(self.c)

    def __len__(self):
        return self.dim

    def __add__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        self._check(other)
        return type(self)([x + y for x, y in zip(self.c, other.c)])

    def __sub__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        self._check(other)
        return type(self)([x - y for x, y in zip(self.c, other.c)])

    def __neg__(self):
        return type(self)([-x for x in self.c])

    def __mul__(self, other):
        if isinstance(other, Hypercomplex):
            return hc_mul(self, other)
        return type(self)([x * other for x in self.c])

    def __rmul__(self, other):
        # scalars are central: coefficient ring is commutative
        return type(self)([other * x for x in self.c])

    def __truediv__(self, s):
        if isinstance(s, Hypercomplex):
            return NotImplemented
        return type(self)([x / s for x in self.c])

    def __eq__(self, other):
        if not isinstance(other, Hypercomplex):
            return NotImplemented
        return type(self) is type(other) and all(x == y for x, y in zip(self.c, other.c))

    def __hash__(self):
        return hash((type(self).__name__, self.c))

    def conj(self):
        return hc_conj(self)

    def norm(self):
        return hc_norm(self)

    def map(self, fn):
        return type(self)([fn(x) for x in self.c])

    def to_json(self) -> list[str]:
        return [format_rational(x) if isinstance(x, (int, Fraction)) else str(x) for x in self.c]

    def __repr__(self):
        return f"{type(self).__name__}({', '.join(map(str, self.c))})"


class Quaternion(Hypercomplex):
    __slots__ = ()
    dim = 4
    table = QUATERNION_TABLE


class Octonion(Hypercomplex):
    __slots__ = ()
    dim = 8
    table = OCTONION_TABLE


def hc_mul(u: Hypercomplex, v: Hypercomplex) -> Hypercomplex:
    """Bilinear product read off ``type(u).table``."""
    u._check(v)
    table = type(u).table
    n = u.dim
    terms: list[list[Any]] = [[] for _ in range(n)]
    for i, ui in enumerate(u.c):
        srow, krow = table.sign[i], table.index[i]
        for j, vj in enumerate(v.c):
            s = srow[j]
            if s == 0:
                continue
            p = ui * vj
            terms[krow[j]].append(p if s > 0 else -p)
    zero = u.c[0] - u.c[0]
    return type(u)([reduce(add, t) if t else zero for t in terms])


def hc_add(u: Hypercomplex, v: Hypercomplex) -> Hypercomplex:
    return u + v


def hc_scale(s: Any, u: Hypercomplex) -> Hypercomplex:
    return s * u


def hc_conj(u: Hypercomplex) -> Hypercomplex:
    return type(u)([u.c[0]] + [-x for x in u.c[1:]])


def hc_norm(u: Hypercomplex):
    """``u * conj(u)`` e0-part, cross-checked against the sum of squares."""
    product = hc_mul(u, hc_conj(u))
    squares = reduce(add, (x * x for x in u.c))
    if product.c[0] != squares:
        raise ArithmeticError(
            f"norm mismatch: u*conj(u) gives {product.c[0]}, sum of squares {squares}"
        )
    return squares
