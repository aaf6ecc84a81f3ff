"""
The ground ring Q(q)[u, u^-1] with u = q^beta.

Quantum integers, factorials, beta specialization and exact division by [beta].
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from common.exceptions import DivisionByZero, NotDivisible
from ring.laurent import LaurentQ
from ring.rational import RationalQ

# q - q^-1
_QDIFF = RationalQ(LaurentQ({1: 1, -1: -1}))


class GroundElem:
    """Laurent polynomial in u with RationalQ coefficients"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[int, Union[RationalQ, LaurentQ, int, Fraction]] = None):
        self._terms = {}
        if terms:
            for k, v in terms.items():
                v = RationalQ.coerce(v)
                if not v.is_zero():
                    self._terms[int(k)] = v
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, RationalQ]) -> "GroundElem":
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "GroundElem":
        return cls._raw({})

    @classmethod
    def one(cls) -> "GroundElem":
        return cls._raw({0: RationalQ.one()})

    @classmethod
    def u_power(cls, exponent: int, coefficient=1) -> "GroundElem":
        return cls({exponent: coefficient})

    @classmethod
    def coerce(cls, value) -> "GroundElem":
        if isinstance(value, GroundElem):
            return value
        return cls({0: RationalQ.coerce(value)})

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[int, RationalQ]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, RationalQ]]:
        return iter(self._terms.items())

    def coefficient(self, exponent: int) -> RationalQ:
        return self._terms.get(exponent, RationalQ.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def is_u_free(self) -> bool:
        return not self._terms or set(self._terms) == {0}

    def is_u_monomial(self) -> bool:
        return len(self._terms) == 1

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other) -> "GroundElem":
        try:
            other = GroundElem.coerce(other)
        except TypeError:
            return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out[k] + v if k in out else v
            if s.is_zero():
                out.pop(k, None)
            else:
                out[k] = s
        return GroundElem._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "GroundElem":
        return GroundElem._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "GroundElem":
        try:
            other = GroundElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "GroundElem":
        return (-self) + other

    def __mul__(self, other) -> "GroundElem":
        if isinstance(other, (int, Fraction, LaurentQ, RationalQ)):
            c = RationalQ.coerce(other)
            if c.is_zero():
                return GroundElem.zero()
            return GroundElem._raw({k: v * c for k, v in self._terms.items()})
        if not isinstance(other, GroundElem):
            return NotImplemented
        out: Dict[int, RationalQ] = {}
        for k, v in self._terms.items():
            for j, w in other._terms.items():
                out[k + j] = out[k + j] + v * w if k + j in out else v * w
        return GroundElem._raw({k: v for k, v in out.items() if not v.is_zero()})

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "GroundElem":
        if power < 0:
            return self.inv() ** (-power)
        result = GroundElem.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def inv(self) -> "GroundElem":
        """Inverse; only units (u-monomials) are invertible"""
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        if not self.is_u_monomial():
            raise NotDivisible(f"{self} is not a unit of the ground ring")
        (k, c), = self._terms.items()
        return GroundElem._raw({-k: c.inv()})

    def shift_u(self, exponent: int) -> "GroundElem":
        """Multiply by u^exponent"""
        return GroundElem._raw({k + exponent: v for k, v in self._terms.items()})

    def bar(self) -> "GroundElem":
        """Apply q -> q^-1 (hence u -> u^-1)"""
        return GroundElem._raw({-k: v.bar() for k, v in self._terms.items()})

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = GroundElem.coerce(other)
        except TypeError:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        from ring.codec import render_ground
        return f"GroundElem({render_ground(self)})"

    def __str__(self) -> str:
        from ring.codec import render_ground
        return render_ground(self)


# ============================================================================
# QUANTUM INTEGERS
# ============================================================================

@dataclass(frozen=True)
class Exponent:
    """x = a + b*beta"""
    a: int
    b: int = 0

    def __neg__(self) -> "Exponent":
        return Exponent(-self.a, -self.b)


BETA = Exponent(0, 1)


def quantum_int(x: Union[Exponent, int]) -> GroundElem:
    """[x] = (q^x - q^-x) / (q - q^-1)"""
    if isinstance(x, int):
        x = Exponent(x)
    if x.b == 0:
        return GroundElem.coerce(qint(x.a))
    plus = RationalQ.q_power(x.a) / _QDIFF
    minus = -RationalQ.q_power(-x.a) / _QDIFF
    return GroundElem({x.b: plus, -x.b: minus})


def qint(n: int) -> RationalQ:
    """[n] for an integer n, as a Laurent polynomial in q"""
    if n == 0:
        return RationalQ.zero()
    sign = 1 if n > 0 else -1
    n = abs(n)
    terms = {n - 1 - 2 * k: sign for k in range(n)}
    return RationalQ(LaurentQ(terms))


def quantum_factorial(n: int) -> GroundElem:
    if n < 0:
        raise ValueError("quantum factorial needs n >= 0")
    return GroundElem.coerce(qfactorial(n))


def qfactorial(n: int) -> RationalQ:
    result = RationalQ.one()
    for k in range(2, n + 1):
        result = result * qint(k)
    return result


def specialize_beta(e: GroundElem, n: int) -> RationalQ:
    """Substitute u = q^n"""
    total = RationalQ.zero()
    for k, c in e.items():
        total = total + c * RationalQ.q_power(k * n)
    return total


def divide_by_qint_beta(e: GroundElem) -> GroundElem:
    """
    Exact quotient e / [beta].

    e/[beta] = e * (q - q^-1) * u / (u^2 - 1); the division by u^2 - 1 is
    synthetic division of the u-polynomial part of e.
    """
    if e.is_zero():
        return GroundElem.zero()
    low = min(k for k, _ in e.items())
    high = max(k for k, _ in e.items())
    # P(u) = sum c_k u^(k - low), coefficients from the top
    coeffs = [e.coefficient(k) for k in range(high, low - 1, -1)]
    if len(coeffs) < 3:
        raise NotDivisible(f"{e} is not divisible by [beta]")
    quotient = []
    rem = list(coeffs)
    for i in range(len(rem) - 2):
        c = rem[i]
        quotient.append(c)
        rem[i + 2] = rem[i + 2] + c
    if not rem[-1].is_zero() or not rem[-2].is_zero():
        raise NotDivisible(f"{e} is not divisible by [beta]")
    # quotient has degree (high - low - 2), lowest exponent 0
    deg = high - low - 2
    out = {}
    for i, c in enumerate(quotient):
        if not c.is_zero():
            out[low + deg - i + 1] = c * _QDIFF
    return GroundElem(out)
