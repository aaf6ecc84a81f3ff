"""
Laurent polynomials in q with exact rational coefficients.

Stored as a dictionary {exponent: Fraction} with no zero entries.
"""

from fractions import Fraction
from typing import Dict, Iterable, Iterator, Tuple, Union

Scalar = Union[int, Fraction]


def _trim(terms: Dict[int, Fraction]) -> Dict[int, Fraction]:
    return {k: v for k, v in terms.items() if v != 0}


class LaurentQ:
    """Immutable Laurent polynomial in q over the rationals"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[int, Scalar] = None):
        if terms:
            self._terms = {int(k): Fraction(v) for k, v in terms.items() if v != 0}
        else:
            self._terms = {}
        self._hash = None

    @classmethod
    def _raw(cls, terms: Dict[int, Fraction]) -> "LaurentQ":
        # terms must already be trimmed
        obj = cls.__new__(cls)
        obj._terms = terms
        obj._hash = None
        return obj

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls) -> "LaurentQ":
        return cls._raw({})

    @classmethod
    def one(cls) -> "LaurentQ":
        return cls._raw({0: Fraction(1)})

    @classmethod
    def monomial(cls, exponent: int, coefficient: Scalar = 1) -> "LaurentQ":
        if coefficient == 0:
            return cls._raw({})
        return cls._raw({exponent: Fraction(coefficient)})

    @classmethod
    def constant(cls, value: Scalar) -> "LaurentQ":
        return cls.monomial(0, value)

    @classmethod
    def coerce(cls, value) -> "LaurentQ":
        if isinstance(value, LaurentQ):
            return value
        if isinstance(value, (int, Fraction)):
            return cls.constant(value)
        raise TypeError(f"cannot coerce {type(value).__name__} to LaurentQ")

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[int, Fraction]:
        return dict(self._terms)

    def items(self) -> Iterator[Tuple[int, Fraction]]:
        return iter(self._terms.items())

    def coefficient(self, exponent: int) -> Fraction:
        return self._terms.get(exponent, Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def is_one(self) -> bool:
        return len(self._terms) == 1 and self._terms.get(0) == 1

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and 0 in self._terms)

    def degree(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no degree")
        return max(self._terms)

    def valuation(self) -> int:
        if not self._terms:
            raise ValueError("zero polynomial has no valuation")
        return min(self._terms)

    def leading_coefficient(self) -> Fraction:
        return self._terms[self.degree()]

    def constant_value(self) -> Fraction:
        return self._terms.get(0, Fraction(0))

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def __add__(self, other) -> "LaurentQ":
        if not isinstance(other, LaurentQ):
            if isinstance(other, (int, Fraction)):
                other = LaurentQ.constant(other)
            else:
                return NotImplemented
        if not other._terms:
            return self
        if not self._terms:
            return other
        out = dict(self._terms)
        for k, v in other._terms.items():
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return LaurentQ._raw(out)

    __radd__ = __add__

    def __neg__(self) -> "LaurentQ":
        return LaurentQ._raw({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> "LaurentQ":
        if isinstance(other, (int, Fraction)):
            other = LaurentQ.constant(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentQ":
        return (-self) + other

    def __mul__(self, other) -> "LaurentQ":
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return LaurentQ._raw({})
            return LaurentQ._raw({k: v * other for k, v in self._terms.items()})
        if not isinstance(other, LaurentQ):
            return NotImplemented
        if not self._terms or not other._terms:
            return LaurentQ._raw({})
        if len(other._terms) == 1:
            (j, c), = other._terms.items()
            return LaurentQ._raw({k + j: v * c for k, v in self._terms.items()})
        out: Dict[int, Fraction] = {}
        for k, v in self._terms.items():
            for j, w in other._terms.items():
                out[k + j] = out.get(k + j, 0) + v * w
        return LaurentQ._raw(_trim(out))

    __rmul__ = __mul__

    def __pow__(self, power: int) -> "LaurentQ":
        if power < 0:
            if not self.is_monomial():
                raise ValueError("negative powers need a monomial")
            (k, c), = self._terms.items()
            return LaurentQ._raw({k * power: Fraction(1) / c ** (-power)})
        result = LaurentQ.one()
        base = self
        while power:
            if power & 1:
                result = result * base
            base = base * base
            power >>= 1
        return result

    def shift(self, exponent: int) -> "LaurentQ":
        """Multiply by q^exponent"""
        if exponent == 0:
            return self
        return LaurentQ._raw({k + exponent: v for k, v in self._terms.items()})

    def bar(self) -> "LaurentQ":
        """Apply q -> q^-1"""
        return LaurentQ._raw({-k: v for k, v in self._terms.items()})

    def evaluate(self, value: Fraction) -> Fraction:
        """Exact value at a nonzero rational point"""
        value = Fraction(value)
        return sum((c * value ** k for k, c in self._terms.items()), Fraction(0))

    # ------------------------------------------------------------------
    # comparison
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = LaurentQ.constant(other)
        if not isinstance(other, LaurentQ):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __repr__(self) -> str:
        from ring.codec import render_laurent
        return f"LaurentQ({render_laurent(self)})"

    def __str__(self) -> str:
        from ring.codec import render_laurent
        return render_laurent(self)


def laurent_sum(items: Iterable[LaurentQ]) -> LaurentQ:
    out: Dict[int, Fraction] = {}
    for item in items:
        for k, v in item.items():
            out[k] = out.get(k, 0) + v
    return LaurentQ._raw(_trim(out))


Q = LaurentQ.monomial(1)
Q_INV = LaurentQ.monomial(-1)
# z = q^-1 - q, the skein coefficient
Z = LaurentQ({-1: 1, 1: -1})
