"""
The Hecke algebra H_N in the permutation basis {T_w}.

Relations: (T_i - q^-1)(T_i + q) = 0 and the braid relations. Products are
reduced by left multiplication:

    T_i T_w = T_{s_i w}                          if l(s_i w) > l(w)
    T_i T_w = T_{s_i w} + (q^-1 - q) T_w         otherwise
"""

import logging
from fractions import Fraction
from typing import Dict, Iterator, Tuple, Union

from common.exceptions import DivisionByZero, PoleAtOne, StrandMismatch
from diagram.braid import BraidWord
from hecke.perm import Perm, all_perms
from ring import RationalQ, qfactorial, render_rational

logger = logging.getLogger(__name__)

# q^-1 - q
_Z = RationalQ.q_power(-1) - RationalQ.q_power(1)


class HeckeElem:
    """Finite combination of T_w with RationalQ coefficients"""

    __slots__ = ("n", "_terms")

    def __init__(self, n: int, terms: Dict[Perm, Union[RationalQ, int]] = None):
        self.n = n
        self._terms: Dict[Perm, RationalQ] = {}
        for w, c in (terms or {}).items():
            if w.size != n:
                raise StrandMismatch(f"T_{w.one_line} does not live in H_{n}")
            c = RationalQ.coerce(c)
            if not c.is_zero():
                self._terms[w] = c

    @classmethod
    def zero(cls, n: int) -> "HeckeElem":
        return cls(n)

    @classmethod
    def one(cls, n: int) -> "HeckeElem":
        return cls(n, {Perm.identity(n): 1})

    @classmethod
    def basis(cls, w: Perm) -> "HeckeElem":
        return cls(w.size, {w: 1})

    @classmethod
    def generator(cls, i: int, n: int) -> "HeckeElem":
        if not 1 <= i < n:
            raise ValueError(f"T_{i} needs 1 <= i < {n}")
        return cls.basis(Perm.simple(i, n))

    def items(self) -> Iterator[Tuple[Perm, RationalQ]]:
        return iter(sorted(self._terms.items(), key=lambda kv: (kv[0].length, kv[0].one_line)))

    def coefficient(self, w: Perm) -> RationalQ:
        return self._terms.get(w, RationalQ.zero())

    def is_zero(self) -> bool:
        return not self._terms

    def _check(self, other: "HeckeElem"):
        if self.n != other.n:
            raise StrandMismatch(f"H_{self.n} and H_{other.n} elements cannot be combined")

    def __add__(self, other: "HeckeElem") -> "HeckeElem":
        self._check(other)
        out = dict(self._terms)
        for w, c in other._terms.items():
            out[w] = out[w] + c if w in out else c
        return HeckeElem(self.n, out)

    def __neg__(self) -> "HeckeElem":
        return HeckeElem(self.n, {w: -c for w, c in self._terms.items()})

    def __sub__(self, other: "HeckeElem") -> "HeckeElem":
        return self + (-other)

    def scaled(self, c) -> "HeckeElem":
        c = RationalQ.coerce(c)
        return HeckeElem(self.n, {w: v * c for w, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, HeckeElem):
            return hecke_mul(self, other)
        if isinstance(other, (int, RationalQ)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RationalQ)):
            return self.scaled(other)
        return NotImplemented

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElem):
            return NotImplemented
        return self.n == other.n and self._terms == other._terms

    __hash__ = None

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({render_rational(c)})*T[{w}]" for w, c in self.items())

    def __repr__(self) -> str:
        return f"HeckeElem(H_{self.n}: {self})"


# ============================================================================
# MULTIPLICATION
# ============================================================================

def _left_generator(i: int, terms: Dict[Perm, RationalQ]) -> Dict[Perm, RationalQ]:
    out: Dict[Perm, RationalQ] = {}

    def add(w: Perm, c: RationalQ):
        total = out[w] + c if w in out else c
        if total.is_zero():
            out.pop(w, None)
        else:
            out[w] = total

    for w, c in terms.items():
        sw = w.left_mul_simple(i)
        add(sw, c)
        if w.has_left_descent(i):
            add(w, c * _Z)
    return out


def hecke_mul(a: HeckeElem, b: HeckeElem) -> HeckeElem:
    """a * b, expanding each T_w of a along a reduced word"""
    a._check(b)
    total: Dict[Perm, RationalQ] = {}
    for w, c in a._terms.items():
        terms = dict(b._terms)
        for i in reversed(w.reduced_word()):
            terms = _left_generator(i, terms)
        for v, d in terms.items():
            s = total[v] + c * d if v in total else c * d
            if s.is_zero():
                total.pop(v, None)
            else:
                total[v] = s
    return HeckeElem(a.n, total)


def hecke_pow(h: HeckeElem, k: int) -> HeckeElem:
    result = HeckeElem.one(h.n)
    for _ in range(k):
        result = hecke_mul(result, h)
    return result


def hecke_inverse_generator(i: int, n: int) -> HeckeElem:
    """T_i^-1 = T_i + (q - q^-1)"""
    return HeckeElem.generator(i, n) - HeckeElem.one(n).scaled(_Z)


def braid_to_hecke(b: BraidWord) -> HeckeElem:
    """sigma_i -> T_i, sigma_i^-1 -> T_i^-1, multiplied in word order"""
    n = max(b.strands, 1)
    result = HeckeElem.one(n)
    for letter in b.letters:
        i = abs(letter)
        factor = HeckeElem.generator(i, n) if letter > 0 else hecke_inverse_generator(i, n)
        result = hecke_mul(result, factor)
    return result


# ============================================================================
# ANTISYMMETRIZER / SPECIALIZATION
# ============================================================================

def antisymmetrizer(l: int) -> HeckeElem:
    """
    p = 1/[l]! * sum over w in S_l of (-q)^{l(w)} q^{-l(l-1)/2} T_w

    An idempotent with T_i p = -q p for every i < l.
    """
    if l < 1:
        raise ValueError("antisymmetrizer needs l >= 1")
    norm = qfactorial(l).inv() * RationalQ.q_power(-l * (l - 1) // 2)
    terms = {w: RationalQ.q_power(w.length, (-1) ** w.length) * norm for w in all_perms(l)}
    return HeckeElem(l, terms)


def symmetric_group_specialize(h: HeckeElem) -> Dict[Perm, Fraction]:
    """Set q = 1; T_w becomes the permutation w"""
    out: Dict[Perm, Fraction] = {}
    for w, c in h.items():
        try:
            value = c.evaluate(Fraction(1))
        except DivisionByZero:
            raise PoleAtOne(f"coefficient {render_rational(c)} of T[{w}] has a pole at q = 1") from None
        if value:
            out[w] = value
    return out
