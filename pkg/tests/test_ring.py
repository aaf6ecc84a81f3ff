import random
from fractions import Fraction

import pytest

from common.exceptions import DivisionByZero, NotDivisible, ParseError
from ring import (
    BETA,
    Exponent,
    GroundElem,
    LaurentQ,
    Q,
    Q_INV,
    RationalQ,
    bar,
    divide_by_qint_beta,
    evaluate_at,
    parse_ground,
    qint,
    quantum_factorial,
    quantum_int,
    render_ground,
    render_laurent,
    specialize_beta,
)


def laurent(**kwargs) -> LaurentQ:
    return LaurentQ(kwargs)


def random_rational(rng: random.Random) -> RationalQ:
    num = LaurentQ({rng.randint(-3, 3): rng.randint(-4, 4) for _ in range(rng.randint(1, 3))})
    if rng.random() < 0.3:
        den = LaurentQ({0: 1, rng.randint(1, 2): rng.choice((-1, 1, 2))})
        return RationalQ(num, den)
    return RationalQ(num)


def random_ground(rng: random.Random) -> GroundElem:
    return GroundElem({rng.randint(-2, 2): random_rational(rng) for _ in range(rng.randint(0, 3))})


# ============================================================================
# QUANTUM INTEGERS
# ============================================================================

def test_quantum_int_two():
    assert quantum_int(2) == GroundElem.coerce(Q + Q_INV)


def test_quantum_int_zero():
    assert quantum_int(0).is_zero()


def test_quantum_int_beta_terms():
    qb = quantum_int(BETA)
    qdiff = RationalQ(Q - Q_INV)
    assert set(k for k, _ in qb.items()) == {1, -1}
    assert qb.coefficient(1) * qdiff == 1
    assert qb.coefficient(-1) * qdiff == -1


@pytest.mark.parametrize("x", [Exponent(3), Exponent(-2), Exponent(1, 1), Exponent(-4, 2), BETA])
def test_quantum_int_is_odd(x):
    assert quantum_int(x) == -quantum_int(-x)


@pytest.mark.parametrize(
    "n, expected",
    [
        (0, GroundElem.one()),
        (2, GroundElem.coerce(Q + Q_INV)),
        (3, GroundElem.coerce((Q + Q_INV) * LaurentQ({2: 1, 0: 1, -2: 1}))),
    ],
)
def test_quantum_factorial(n, expected):
    assert quantum_factorial(n) == expected


def test_quantum_int_identity():
    two = quantum_int(2)
    assert (two * two - quantum_int(1) - quantum_int(3)).is_zero()


# ============================================================================
# SPECIALIZATION AND DIVISION
# ============================================================================

def test_specialize_beta_examples():
    assert specialize_beta(quantum_int(BETA), 2) == qint(2)
    assert specialize_beta(quantum_int(BETA), 0).is_zero()
    e = GroundElem.u_power(2, RationalQ.q_power(2))
    assert specialize_beta(e, 3) == RationalQ.q_power(8)


def test_specialize_beta_is_multiplicative():
    rng = random.Random(5)
    for _ in range(100):
        x, y = random_ground(rng), random_ground(rng)
        n = rng.randint(-3, 4)
        assert specialize_beta(x * y, n) == specialize_beta(x, n) * specialize_beta(y, n)


def test_divide_by_qint_beta_examples():
    qb = quantum_int(BETA)
    assert divide_by_qint_beta(qb) == GroundElem.one()
    assert divide_by_qint_beta(qb * qb) == qb
    reduced = GroundElem.coerce(LaurentQ({-4: 1, 0: 1, 2: -1}))
    assert divide_by_qint_beta(qb * reduced) == reduced


def test_divide_by_qint_beta_round_trip():
    rng = random.Random(9)
    qb = quantum_int(BETA)
    for _ in range(50):
        e = random_ground(rng)
        assert divide_by_qint_beta(e * qb) == e


def test_divide_by_qint_beta_remainder():
    with pytest.raises(NotDivisible):
        divide_by_qint_beta(GroundElem.one())
    with pytest.raises(NotDivisible):
        divide_by_qint_beta(GroundElem({2: 1, 0: 1}))


# ============================================================================
# FIELD OPERATIONS
# ============================================================================

def test_inverse():
    qdiff = RationalQ(Q - Q_INV)
    assert qdiff * qdiff.inv() == RationalQ.one()
    with pytest.raises(DivisionByZero):
        RationalQ.zero().inv()
    with pytest.raises(ZeroDivisionError):
        RationalQ(1, 0)


def test_canonical_form():
    r = RationalQ(LaurentQ({2: 2, 0: -2}), LaurentQ({1: 2, -1: -2}))
    # (2q^2 - 2) / (2q - 2q^-1) = q
    assert r == RationalQ(Q)
    assert r.den.is_one()
    s = RationalQ(LaurentQ({0: 1}), LaurentQ({2: 3, 0: -3}))
    assert s.den.leading_coefficient() == 1
    assert s.den.valuation() == 0


def test_ring_laws():
    rng = random.Random(2024)
    for _ in range(1000):
        x, y, z = random_ground(rng), random_ground(rng), random_ground(rng)
        assert (x + y) + z == x + (y + z)
        assert x + y == y + x
        assert (x * y) * z == x * (y * z)
        assert x * y == y * x
        assert x * (y + z) == x * y + x * z
        assert (x + (-x)).is_zero()
        assert (x == y) == (x - y).is_zero()


def test_bar_is_an_involution():
    rng = random.Random(1)
    for _ in range(50):
        x = random_ground(rng)
        assert bar(bar(x)) == x
    assert bar(GroundElem.u_power(1)) == GroundElem.u_power(-1)


def test_evaluate_at():
    assert evaluate_at(Q + Q_INV, Fraction(2)) == Fraction(5, 2)
    pole = RationalQ(LaurentQ.one(), LaurentQ({1: 1, 0: -1}))
    with pytest.raises(DivisionByZero):
        evaluate_at(pole, 1)


# ============================================================================
# TEXT CODEC
# ============================================================================

def test_render_trefoil():
    p = LaurentQ({3: -1, -1: 1, -3: 1, -5: 1})
    assert render_laurent(p) == "-q^3 + q^-1 + q^-3 + q^-5"


def test_render_quantum_int_beta():
    assert render_ground(quantum_int(BETA)) == "(q)/(q^2 - 1)*u - (q)/(q^2 - 1)*u^-1"


@pytest.mark.parametrize(
    "text",
    [
        "-q^3 + q^-1 + q^-3 + q^-5",
        "(q)/(q^2 - 1)*u - (q)/(q^2 - 1)*u^-1",
        "2*q^2*u^3 - 1/2",
        "0",
    ],
)
def test_render_parse_round_trip(text):
    assert render_ground(parse_ground(text)) == text


def test_parse_arithmetic():
    assert parse_ground("(q + q^-1)*(q - q^-1)") == GroundElem.coerce(LaurentQ({2: 1, -2: -1}))
    assert parse_ground("u^2 / u") == GroundElem.u_power(1)


@pytest.mark.parametrize("text", ["", "q^", "q +", "2 * x", "(q", "q / (u + 1)"])
def test_parse_errors(text):
    with pytest.raises(ParseError):
        parse_ground(text)
