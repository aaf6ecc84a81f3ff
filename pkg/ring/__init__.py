"""
Exact arithmetic for the ground ring Q(q)[q^(+-beta)] and its specializations.
"""

from ring.laurent import LaurentQ, Q, Q_INV, Z, laurent_sum
from ring.rational import RationalQ, ZERO, ONE
from ring.ground import (
    GroundElem,
    Exponent,
    BETA,
    quantum_int,
    quantum_factorial,
    qint,
    qfactorial,
    specialize_beta,
    divide_by_qint_beta,
)
from ring.codec import (
    render_laurent,
    render_rational,
    render_ground,
    parse_ground,
    parse_rational,
)


def bar(x):
    """q -> q^-1 on any ring element"""
    return x.bar()


def evaluate_at(x, q):
    """Exact value of a RationalQ (or LaurentQ) at a rational q; DivisionByZero at a pole"""
    return RationalQ.coerce(x).evaluate(q)


__all__ = [
    "LaurentQ",
    "RationalQ",
    "GroundElem",
    "Exponent",
    "BETA",
    "Q",
    "Q_INV",
    "Z",
    "ZERO",
    "ONE",
    "laurent_sum",
    "quantum_int",
    "quantum_factorial",
    "qint",
    "qfactorial",
    "specialize_beta",
    "divide_by_qint_beta",
    "render_laurent",
    "render_rational",
    "render_ground",
    "parse_ground",
    "parse_rational",
    "bar",
    "evaluate_at",
]
