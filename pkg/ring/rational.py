"""
Rational functions in q over the rationals, kept in canonical form.

Canonical form: gcd(num, den) is a unit, den is monic with lowest
q-exponent 0. Any power of q sits in the numerator.
"""

from fractions import Fraction
from typing import Tuple, Union

from sympy.polys.domains import QQ
from sympy.polys.rings import ring

from common.exceptions import DivisionByZero
from ring.laurent import LaurentQ

_POLY_RING, _ = ring("q", QQ)


def _to_poly(p: LaurentQ):
    """Laurent polynomial with valuation 0 -> sympy PolyElement"""
    return _POLY_RING.from_dict({(k,): QQ(c.numerator, c.denominator) for k, c in p.items()})


def _from_poly(poly) -> LaurentQ:
    terms = {}
    for (k,), c in poly.items():
        terms[k] = Fraction(int(c.numerator), int(c.denominator))
    return LaurentQ(terms)


def _normalize(num: LaurentQ, den: LaurentQ) -> Tuple[LaurentQ, LaurentQ]:
    if den.is_zero():
        raise DivisionByZero("denominator is zero")
    if num.is_zero():
        return LaurentQ.zero(), LaurentQ.one()
    if den.is_monomial():
        (k, c), = den.items()
        return num.shift(-k) * (1 / c), LaurentQ.one()

    shift = num.valuation() - den.valuation()
    n_poly = _to_poly(num.shift(-num.valuation()))
    d_poly = _to_poly(den.shift(-den.valuation()))
    g = n_poly.gcd(d_poly)
    if g != 1:
        n_poly = n_poly.exquo(g)
        d_poly = d_poly.exquo(g)
    lc = d_poly.LC
    n_poly = n_poly.quo_ground(lc)
    d_poly = d_poly.quo_ground(lc)
    return _from_poly(n_poly).shift(shift), _from_poly(d_poly)


class RationalQ:
    """Immutable element of Q(q) in canonical form"""

    __slots__ = ("_num", "_den", "_hash")

    def __init__(self, num: Union[LaurentQ, int, Fraction] = 0, den: Union[LaurentQ, int, Fraction] = 1):
        num = LaurentQ.coerce(num)
        den = LaurentQ.coerce(den)
        if den.is_one():
            self._num, self._den = num, den
        else:
            self._num, self._den = _normalize(num, den)
        self._hash = None

    @classmethod
    def _raw(cls, num: LaurentQ, den: LaurentQ) -> "RationalQ":
        obj = cls.__new__(cls)
        obj._num = num
        obj._den = den
        obj._hash = None
        return obj

    @classmethod
    def zero(cls) -> "RationalQ":
        return cls._raw(LaurentQ.zero(), LaurentQ.one())

    @classmethod
    def one(cls) -> "RationalQ":
        return cls._raw(LaurentQ.one(), LaurentQ.one())

    @classmethod
    def q_power(cls, exponent: int, coefficient: Union[int, Fraction] = 1) -> "RationalQ":
        return cls._raw(LaurentQ.monomial(exponent, coefficient), LaurentQ.one())

    @classmethod
    def coerce(cls, value) -> "RationalQ":
        if isinstance(value, RationalQ):
            return value
        if isinstance(value, LaurentQ):
            return cls._raw(value, LaurentQ.one())
        if isinstance(value, (int, Fraction)):
            return cls._raw(LaurentQ.constant(value), LaurentQ.one())
        raise TypeError(f"cannot coerce {type(value).__name__} to RationalQ")

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def num(self) -> LaurentQ:
        return self._num

    @property
    def den(self) -> LaurentQ:
        return self._den

    def is_zero(self) -> bool:
        return self._num.is_zero()

    def is_one(self) -> bool:
        return self._den.is_one() and self._num.is_one()

    def is_laurent(self) -> bool:
        return self._den.is_one()

    def to_laurent(self) -> LaurentQ:
        if not self._den.is_one():
            raise ValueError(f"{self} is not a Laurent polynomial")
        return self._num

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other) -> "RationalQ":
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if other._num.is_zero():
            return self
        if self._num.is_zero():
            return other
        if self._den.is_one() and other._den.is_one():
            return RationalQ._raw(self._num + other._num, self._den)
        if self._den == other._den:
            return RationalQ(self._num + other._num, self._den)
        return RationalQ(self._num * other._den + other._num * self._den, self._den * other._den)

    __radd__ = __add__

    def __neg__(self) -> "RationalQ":
        return RationalQ._raw(-self._num, self._den)

    def __sub__(self, other) -> "RationalQ":
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "RationalQ":
        return (-self) + other

    def __mul__(self, other) -> "RationalQ":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return RationalQ.zero()
            return RationalQ._raw(self._num * other, self._den)
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        if self._num.is_zero() or other._num.is_zero():
            return RationalQ.zero()
        if self._den.is_one() and other._den.is_one():
            return RationalQ._raw(self._num * other._num, self._den)
        return RationalQ(self._num * other._num, self._den * other._den)

    __rmul__ = __mul__

    def inv(self) -> "RationalQ":
        if self._num.is_zero():
            raise DivisionByZero("inverse of zero")
        return RationalQ(self._den, self._num)

    def __truediv__(self, other) -> "RationalQ":
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self * other.inv()

    def __rtruediv__(self, other) -> "RationalQ":
        return RationalQ.coerce(other) * self.inv()

    def __pow__(self, power: int) -> "RationalQ":
        if power < 0:
            return self.inv() ** (-power)
        if self._den.is_one():
            return RationalQ._raw(self._num ** power, self._den)
        return RationalQ._raw(self._num ** power, self._den ** power)

    def bar(self) -> "RationalQ":
        """Apply q -> q^-1"""
        return RationalQ(self._num.bar(), self._den.bar())

    def evaluate(self, value: Fraction) -> Fraction:
        """Exact value at a rational point; raises DivisionByZero at a pole"""
        d = self._den.evaluate(value)
        if d == 0:
            raise DivisionByZero(f"pole at q = {value}")
        return self._num.evaluate(value) / d

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        try:
            other = RationalQ.coerce(other)
        except TypeError:
            return NotImplemented
        return self._num == other._num and self._den == other._den

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._num, self._den))
        return self._hash

    def __bool__(self) -> bool:
        return not self._num.is_zero()

    def __repr__(self) -> str:
        from ring.codec import render_rational
        return f"RationalQ({render_rational(self)})"

    def __str__(self) -> str:
        from ring.codec import render_rational
        return render_rational(self)


ZERO = RationalQ.zero()
ONE = RationalQ.one()
