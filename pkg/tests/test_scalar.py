from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from biperiodic.scalar import (
    ParamError,
    Params,
    SequenceEngine,
    binet_constants,
    lucas_params,
    roots,
    w,
    w_binet,
    zeta,
)
from oracles import bi_periodic, fib_q, lucas_p

GRID_AB = [(1, 1), (2, 1), (1, 2), (2, 3), (1, -3), (Fraction(1, 2), 3), (3, 2)]
SEEDS = [(0, 1), (1, 1), (1, 4), (2, Fraction(-1, 3))]


@pytest.mark.parametrize("n, expected", [(4, 0), (7, 1), (-3, 1), (-1, 1), (0, 0), (-2, 0)])
def test_zeta(n, expected):
    assert zeta(n) == expected


def test_fibonacci_ten():
    assert w(10, SequenceEngine(Params(1, 1, 0, 1))) == 55


def test_small_table():
    eng = SequenceEngine(Params(2, 1, 0, 1))
    assert eng.values(0, 6) == [0, 1, 2, 3, 8, 11]


def test_backward_step():
    assert SequenceEngine(Params(1, 1, 0, 1)).w(-1) == 1


@pytest.mark.parametrize("a, b", GRID_AB)
@pytest.mark.parametrize("seed", SEEDS)
def test_recurrence_holds_both_directions(a, b, seed):
    p = Params(a, b, *seed)
    eng = SequenceEngine(p)
    for n in range(-20, 21):
        c = p.a if n % 2 == 0 else p.b
        assert eng.w(n) == c * eng.w(n - 1) + eng.w(n - 2)


def test_forward_after_negative_excursion():
    p = Params(2, 3, 1, 4)
    fresh = SequenceEngine(p).values(0, 30)
    eng = SequenceEngine(p)
    eng.w(-25)
    assert eng.values(0, 30) == fresh
    assert eng.values(0, 30) == bi_periodic(2, 3, 1, 4, 30)


@pytest.mark.parametrize("a, b", GRID_AB)
def test_fibonacci_specialization(a, b):
    assert SequenceEngine(Params(a, b, 0, 1)).values(0, 30) == fib_q(Fraction(a), Fraction(b), 30)


@pytest.mark.parametrize("a, b", GRID_AB)
def test_lucas_specialization(a, b):
    assert SequenceEngine(lucas_params(a, b)).values(0, 30) == lucas_p(Fraction(a), Fraction(b), 30)


def test_lucas_examples():
    assert SequenceEngine(lucas_params(1, 1)).values(0, 6) == [2, 1, 3, 4, 7, 11]
    assert SequenceEngine(lucas_params(2, 3)).values(0, 3) == [2, 2, 8]
    assert lucas_params(2, 3).D == Params(2, 3, 0, 1).D


def test_equal_coefficients_degenerate():
    p = Params(3, 3, 1, 2)
    eng = SequenceEngine(p)
    for n in range(2, 20):
        assert eng.w(n) == 3 * eng.w(n - 1) + eng.w(n - 2)


@pytest.mark.parametrize(
    "args, message",
    [
        ((0, 1, 0, 1), "a = 0"),
        ((1, 0, 0, 1), "b = 0"),
        ((1, -4, 0, 1), "a²b²\\+4ab = 0"),
        ((1, 1, 0, 0), "w0 = w1 = 0"),
    ],
)
def test_params_invariants(args, message):
    with pytest.raises(ParamError, match=message):
        Params(*args)


def test_roots_unit_params():
    alpha, beta = roots(Params(1, 1, 0, 1))
    assert (alpha.x, alpha.y, alpha.context.D) == (Fraction(1, 2), Fraction(1, 2), 5)
    assert beta == alpha.conj()


def test_binet_constants_fibonacci_seed():
    for a, b in GRID_AB:
        p = Params(a, b, 0, 1)
        A, B = binet_constants(p)
        alpha, beta = roots(p)
        assert A - B == p.context.one
        assert A * (alpha - beta) == alpha
        assert B * (alpha - beta) == beta


def test_binet_constants_sum_unit_params():
    p = Params(1, 1, 0, 1)
    A, B = binet_constants(p)
    # A + B = (alpha + beta)/(alpha - beta) = ab / sqrt(5)
    assert A + B == p.context.element(p.ab, 0) * p.context.sqrt_d.inverse()
    assert A + B == p.context.element(0, Fraction(1, 5))


@pytest.mark.parametrize("a, b", GRID_AB)
@pytest.mark.parametrize("seed", SEEDS)
def test_binet_equals_recurrence(a, b, seed):
    p = Params(a, b, *seed)
    expected = bi_periodic(a, b, *seed, 41)
    assert [w_binet(n, p) for n in range(41)] == expected


def test_binet_n1_is_w1():
    p = Params(2, 3, 5, 7)
    assert w_binet(1, p) == 7


def test_binet_perfect_square_discriminant():
    # ab = 1/12 makes D = (7/12)^2, so Q[sqrt D] has zero divisors
    p =Params(Fraction(1, 4), Fraction(1, 3), 1, 2)
    assert p.D == Fraction(49, 144)
    assert [w_binet(n, p) for n in range(25)] == bi_periodic(p.a, p.b, 1, 2, 25)


def test_binet_rejects_negative_index():
    with pytest.raises(ValueError):
        w_binet(-1, Params(1, 1, 0, 1))


@given(
    st.fractions(min_value=-5, max_value=5, max_denominator=5),
    st.fractions(min_value=-5, max_value=5, max_denominator=5),
    st.fractions(min_value=-5, max_value=5, max_denominator=5),
    st.fractions(min_value=-5, max_value=5, max_denominator=5),
)
def test_binet_random_params(a, b, w0, w1):
    try:
        p = Params(a, b, w0, w1)
    except ParamError:
        return
    expected = bi_periodic(a, b, w0, w1, 16)
    assert [w_binet(n, p) for n in range(16)] == expected
