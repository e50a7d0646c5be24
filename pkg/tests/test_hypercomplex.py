from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from biperiodic.exact import QuadraticContext
from biperiodic.hypercomplex import (
    OCTONION_TABLE,
    QUATERNION_TABLE,
    DimensionError,
    MultiplicationTable,
    Octonion,
    Quaternion,
    hc_add,
    hc_conj,
    hc_mul,
    hc_norm,
    hc_scale,
)
from oracles import TABLE1, hamilton, table1_product

small = st.fractions(min_value=-20, max_value=20, max_denominator=6)
quats = st.lists(small, min_size=4, max_size=4).map(Quaternion)
octs = st.lists(small, min_size=8, max_size=8).map(Octonion)


def e(cls, i, sign=1):
    return cls.basis(i, Fraction(sign), Fraction(0))


def test_quaternion_basis_products():
    assert hc_mul(e(Quaternion, 1), e(Quaternion, 2)) == e(Quaternion, 3)
    assert hc_mul(e(Quaternion, 2), e(Quaternion, 1)) == e(Quaternion, 3, -1)
    assert hc_mul(e(Quaternion, 2), e(Quaternion, 3)) == e(Quaternion, 1)
    assert hc_mul(e(Quaternion, 3), e(Quaternion, 1)) == e(Quaternion, 2)
    for l in (1, 2, 3):
        assert hc_mul(e(Quaternion, l), e(Quaternion, l)) == e(Quaternion, 0, -1)


def test_octonion_e1_e4():
    assert hc_mul(e(Octonion, 1), e(Octonion, 4)) == e(Octonion, 5)


def test_octonion_non_associative_witness():
    e1, e2, e4 = e(Octonion, 1), e(Octonion, 2), e(Octonion, 4)
    assert hc_mul(hc_mul(e1, e2), e4) == e(Octonion, 7)
    assert hc_mul(e1, hc_mul(e2, e4)) == e(Octonion, 7, -1)


def test_octonion_table_matches_table1_entrywise():
    for (i, j), (s, k) in TABLE1.items():
        assert OCTONION_TABLE.product(i, j) == (s, k), (i, j)
        assert hc_mul(e(Octonion, i), e(Octonion, j)) == e(Octonion, k, s)


def test_table_structure():
    for table in (QUATERNION_TABLE, OCTONION_TABLE):
        assert table.check_structure() == []
        n = table.dim
        for i in range(1, n):
            for j in range(1, n):
                if i != j:
                    si, ki = table.product(i, j)
                    sj, kj = table.product(j, i)
                    assert ki == kj and si == -sj


def test_check_structure_catches_corruption():
    broken = QUATERNION_TABLE.replace(1, 2, -1, 3)
    assert broken.check_structure()


def test_literal_must_be_square():
    with pytest.raises(ValueError):
        MultiplicationTable.from_literal("1 e1\ne1")


def test_add_and_scale():
    assert hc_add(Quaternion([1, 0, 0, 0]), Quaternion([0, 1, 0, 0])) == Quaternion([1, 1, 0, 0])
    assert hc_scale(0, Quaternion([1, 2, 3, 4])) == Quaternion([0, 0, 0, 0])
    assert hc_scale(2, Quaternion([1, 2, 3, 4])) == Quaternion([2, 4, 6, 8])


def test_dimension_mismatch():
    with pytest.raises(DimensionError):
        hc_mul(Quaternion([1, 0, 0, 0]), Octonion([1] + [0] * 7))
    with pytest.raises(DimensionError):
        hc_add(Quaternion([1, 0, 0, 0]), Octonion([1] + [0] * 7))
    with pytest.raises(DimensionError):
        Quaternion([1, 2, 3])


def test_conj_examples():
    assert hc_conj(Quaternion([1, 2, 3, 4])) == Quaternion([1, -2, -3, -4])
    assert hc_conj(Quaternion([5, 0, 0, 0])) == Quaternion([5, 0, 0, 0])


def test_norm_examples():
    assert hc_norm(Quaternion([0, 1, 1, 2])) == 6
    assert hc_norm(Quaternion([0, 0, 0, 0])) == 0
    assert hc_norm(Octonion([0, 0, 0, 0, 0, 3, 0, 0])) == 9


def test_norm_detects_broken_table(monkeypatch):
    monkeypatch.setattr(Quaternion, "table", QUATERNION_TABLE.replace(1, 1, 1, 0))
    with pytest.raises(ArithmeticError, match="norm mismatch"):
        hc_norm(Quaternion([0, 1, 0, 0]))


@given(quats, quats)
def test_quaternion_matches_hamilton(p, q):
    assert list(hc_mul(p, q)) == hamilton(list(p), list(q))


@given(octs, octs)
def test_octonion_matches_table1_oracle(p, q):
    assert list(hc_mul(p, q)) == table1_product(list(p), list(q))


@given(quats, quats, quats)
def test_quaternion_associative(p, q, r):
    assert hc_mul(hc_mul(p, q), r) == hc_mul(p, hc_mul(q, r))


@given(octs, octs)
def test_octonion_alternative(u, v):
    assert hc_mul(u, hc_mul(u, v)) == hc_mul(hc_mul(u, u), v)
    assert hc_mul(hc_mul(v, u), u) == hc_mul(v, hc_mul(u, u))


@given(quats)
def test_times_conjugate_is_scalar(u):
    p = hc_mul(u, hc_conj(u))
    assert all(x == 0 for x in p.c[1:])
    assert p.c[0] == sum(x * x for x in u.c)


@given(octs)
def test_octonion_times_conjugate_is_scalar(u):
    p = hc_mul(u, hc_conj(u))
    assert all(x == 0 for x in p.c[1:])


@settings(max_examples=100)
@given(quats, quats)
def test_quaternion_norm_multiplicative(u, v):
    assert hc_norm(hc_mul(u, v)) == hc_norm(u) * hc_norm(v)


@settings(max_examples=100)
@given(octs, octs)
def test_octonion_norm_multiplicative(u, v):
    assert hc_norm(hc_mul(u, v)) == hc_norm(u) * hc_norm(v)


def test_quadratic_coefficients():
    ctx = QuadraticContext(5)
    s = ctx.sqrt_d
    u = Quaternion([ctx.one, s, ctx.zero, ctx.zero])
    v = Quaternion([ctx.zero, ctx.zero, s, ctx.one])
    p = hc_mul(u, v)
    # (1 + r e1)(r e2 + e3) with r^2 = 5
    assert p == Quaternion([ctx.zero, ctx.zero, s - s, ctx.element(1, 0) + ctx.element(5, 0)])
    assert hc_norm(u) == ctx.element(6, 0)


def test_json():
    assert Quaternion([Fraction(1, 2), 0, -3, 4]).to_json() == ["1/2", "0", "-3", "4"]
    assert len(Octonion([0] * 8).to_json()) == 8
