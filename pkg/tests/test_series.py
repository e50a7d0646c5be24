from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biperiodic.hyperseq import OW, W
from biperiodic.scalar import Params, SequenceEngine, lucas_params
from biperiodic.series import (
    Polynomial,
    PowerSeries,
    RationalFunction,
    SeriesError,
    correction_term,
    f_series,
    genfunc_oct,
    genfunc_quat,
    series_expand,
)
from biperiodic.suite import default_grid
from oracles import bi_periodic, fib_q

FIB = Params(1, 1, 0, 1)


def coeffs(s, upto):
    return [s[k] for k in range(upto + 1)]


def test_geometric():
    s = series_expand(RationalFunction(Polynomial([1]), Polynomial([1, -1])), 4)
    assert coeffs(s, 4) == [1, 1, 1, 1, 1]


def test_fibonacci_expansion():
    s = series_expand(RationalFunction(Polynomial([0, 1]), Polynomial([1, -1, -1])), 6)
    assert coeffs(s, 6) == [0, 1, 1, 2, 3, 5, 8]
    assert coeffs(s, 6) == fib_q(Fraction(1), Fraction(1), 7)


def test_polynomial_passthrough():
    s = series_expand(RationalFunction(Polynomial([1, 1]), Polynomial([1])), 5)
    assert coeffs(s, 5) == [1, 1, 0, 0, 0, 0]


def test_pole_at_origin():
    with pytest.raises(SeriesError, match="pole at origin"):
        series_expand(RationalFunction(Polynomial([1]), Polynomial([0, 1])), 3)


def test_polynomial_trimmed():
    assert Polynomial([1, 2, 0, 0]).coefficients == (1, 2)
    assert Polynomial([0, 0]).coefficients == ()


polys = st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=3), min_size=1, max_size=4)
nonzero = st.fractions(min_value=-4, max_value=4, max_denominator=3).filter(lambda x: x != 0)


@given(polys, nonzero, polys, polys, nonzero, polys)
def test_expand_product_consistency(n1, d10, d1, n2, d20, d2):
    r1 = RationalFunction(Polynomial(n1), Polynomial([d10] + d1))
    r2 = RationalFunction(Polynomial(n2), Polynomial([d20] + d2))
    order = 10
    assert series_expand(r1, order) * series_expand(r2, order) == series_expand(r1 * r2, order)


@given(polys, polys, nonzero, polys)
def test_expand_linear(n1, n2, d0, d):
    den = Polynomial([d0] + d)
    lhs = series_expand(RationalFunction(Polynomial(n1) + Polynomial(n2), den), 8)
    rhs = series_expand(RationalFunction(Polynomial(n1), den), 8) + series_expand(
        RationalFunction(Polynomial(n2), den), 8
    )
    assert lhs == rhs


def test_series_equality_uses_lower_order():
    assert PowerSeries([1, 2, 3]) == PowerSeries([1, 2, 3, 4, 5])
    assert PowerSeries([1, 2, 3]) != PowerSeries([1, 2, 4, 4])


def test_shift_guard():
    with pytest.raises(SeriesError, match="negative exponent after shift"):
        PowerSeries([0, 1, 1]).shift(-2)
    assert coeffs(PowerSeries([0, 0, 3, 4]).shift(-2), 1) == [3, 4]


def test_f_series_fibonacci_odd_terms():
    f = f_series(FIB, 9)
    assert [f[k] for k in (1, 3, 5, 7, 9)] == [1, 2, 5, 13, 34]
    assert all(f[2 * k] == 0 for k in range(5))


@pytest.mark.parametrize("p", default_grid(), ids=str)
def test_f_series_odd_support(p):
    vals = bi_periodic(p.a, p.b, p.w0, p.w1, 30)
    f = f_series(p, 29)
    assert f[0] == 0
    for k in range(30):
        assert f[k] == (vals[k] if k % 2 else 0)


def test_f_series_examples():
    p = Params(2, 3, 1, 1)
    f = f_series(p, 7)
    vals = bi_periodic(2, 3, 1, 1, 8)
    assert [f[k] for k in (1, 3, 5, 7)] == [vals[1], vals[3], vals[5], vals[7]]
    with pytest.raises(ValueError):
        f_series(p, 0)


def test_correction_s0_is_f_times_t():
    p = Params(2, 3, 1, 4)
    r = correction_term(p, 0, 12)
    f = f_series(p, 12)
    assert r.valuation() == 2
    assert coeffs(r, 12) == [0] + coeffs(f, 11)


def test_correction_s1_subtracts_w1():
    p = Params(2, 3, 1, 4)
    r = correction_term(p, 1, 12)
    f = f_series(p, 12)
    assert r[1] == 0
    assert coeffs(r, 12) == [f[0], 0] + coeffs(f, 12)[2:]


def test_correction_s3_fibonacci():
    r = correction_term(FIB, 3, 10)
    # f - (t + 2t^3) starts at 5 t^5; t^-2 moves it to degree 3
    assert r.valuation() == 3
    assert r[3] == 5 and r[5] == 13


def test_correction_preconditions():
    with pytest.raises(ValueError):
        correction_term(FIB, 4, 3)
    for s in range(8):
        correction_term(Params(2, 1, 0, 1), s, 20)


@pytest.mark.parametrize("p", [FIB, Params(2, 1, 0, 1)], ids=str)
def test_genfunc_quat_examples(p):
    eng = SequenceEngine(p)
    coef = genfunc_quat(p, 20)
    assert len(coef) == 21
    assert coef == [W(n, eng) for n in range(21)]


@pytest.mark.parametrize("p", [FIB, Params(1, 2, 2, 1)], ids=str)
def test_genfunc_oct_examples(p):
    eng = SequenceEngine(p)
    coef = genfunc_oct(p, 20)
    assert coef == [OW(n, eng) for n in range(21)]
    quat = genfunc_quat(p, 20)
    assert all(list(o)[:4] == list(q) for o, q in zip(coef, quat))


def test_genfunc_order_zero():
    p = Params(2, 3, 1, 4)
    assert genfunc_quat(p, 0) == [W(0, SequenceEngine(p))]


@pytest.mark.parametrize("p", default_grid(), ids=str)
def test_genfunc_full_grid(p):
    vals = bi_periodic(p.a, p.b, p.w0, p.w1, 50)
    for n, q in enumerate(genfunc_oct(p, 40)):
        assert list(q) == vals[n : n + 8]


def test_genfunc_lucas():
    p = lucas_params(2, 3)
    eng = SequenceEngine(p)
    assert genfunc_quat(p, 15) == [W(n, eng) for n in range(16)]
