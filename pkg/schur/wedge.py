"""
Quantum exterior powers of V = C(q)^m and sparse maps between their tensor
products.

The wedge space of degree a is the image of the antisymmetrizer p_a on
V^{(x)a}. Its basis vector e_S, S strictly increasing, is included as
iota(e_S) = p_a(x_S); the projection pi sends a word x_T with distinct
letters to (-q)^{inv(T)} e_{sort(T)} and words with a repeated letter to 0.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from common.decorators import cache_result
from diagram.model import Arrow
from hecke import antisymmetrizer
from quantumrep import RepMatrix, build_qgroup, rt_generators
from quantumrep.matrix import Column, Word, add_scaled
from ring import RationalQ, render_rational

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]
State = Tuple[Subset, ...]
Vector = Dict[State, RationalQ]
Degrees = Tuple[int, ...]


def inversions(word: Sequence[int]) -> int:
    return sum(1 for a, b in itertools.combinations(word, 2) if a > b)


def minus_q_power(k: int) -> RationalQ:
    """(-q)^k"""
    return RationalQ.q_power(k, (-1) ** k)


def add_state(acc: Vector, state: State, value: RationalQ):
    total = acc[state] + value if state in acc else value
    if total.is_zero():
        acc.pop(state, None)
    else:
        acc[state] = total


def add_vector(acc: Vector, vector: Vector, coeff):
    if not coeff:
        return
    for state, value in vector.items():
        add_state(acc, state, value * coeff)


@dataclass(frozen=True, eq=False)
class WedgeSpace:
    m: int
    a: int
    basis: Tuple[Subset, ...]
    _iota: Dict[Subset, Column] = field(repr=False)

    @property
    def dimension(self) -> int:
        return len(self.basis)

    @property
    def is_zero(self) -> bool:
        return not self.basis

    def iota(self, subset: Subset) -> Column:
        return dict(self._iota[subset])

    def pi(self, word: Word) -> Optional[Tuple[Subset, RationalQ]]:
        if len(set(word)) < len(word):
            return None
        return tuple(sorted(word)), minus_q_power(inversions(word))

    def pi_vector(self, column: Column) -> Dict[Subset, RationalQ]:
        out: Dict[Subset, RationalQ] = {}
        for word, value in column.items():
            image = self.pi(word)
            if image is None:
                continue
            subset, coeff = image
            total = out[subset] + value * coeff if subset in out else value * coeff
            if total.is_zero():
                out.pop(subset, None)
            else:
                out[subset] = total
        return out

    def idempotent(self) -> RepMatrix:
        """iota o pi on V^{(x)a}"""
        g = build_qgroup(self.m, 0)
        obj = (Arrow.UP,) * self.a
        cols: Dict[Word, Column] = {}
        for word in g.space.words(obj):
            image = self.pi(word)
            if image is not None:
                subset, coeff = image
                out: Column = {}
                add_scaled(out, self._iota[subset], coeff)
                cols[word] = out
        return RepMatrix(g.space, obj, obj, cols)


def _antisymmetrize(m: int, subset: Subset) -> Column:
    """p_a(x_S), applying each T_w along a reduced word"""
    r = rt_generators(build_qgroup(m, 0)).r
    out: Column = {}
    for w, c in antisymmetrizer(len(subset)).items():
        vector: Column = {subset: RationalQ.one()}
        for i in reversed(w.reduced_word()):
            vector = r.apply_at(vector, i)
        add_scaled(out, vector, c)
    return out


@cache_result("wedge_space")
def build_wedge(m: int, a: int) -> WedgeSpace:
    """The degree-a wedge space of C(q)^m; the zero space unless 0 <= a <= m"""
    if m < 1:
        raise ValueError(f"wedge spaces need m >= 1, got {m}")
    if not 0 <= a <= m:
        return WedgeSpace(m, a, (), {})
    basis = tuple(itertools.combinations(range(1, m + 1), a))
    if a <= 1:
        iota = {s: {s: RationalQ.one()} for s in basis}
    else:
        iota = {s: _antisymmetrize(m, s) for s in basis}
    logger.debug(f"wedge space m={m} a={a}: dimension {len(basis)}")
    return WedgeSpace(m, a, basis, iota)


def states(m: int, degrees: Sequence[int]) -> List[State]:
    """Basis of the tensor product of wedge spaces, empty if any factor is zero"""
    return list(itertools.product(*(build_wedge(m, a).basis for a in degrees)))


# ============================================================================
# SPARSE MAPS
# ============================================================================

class WedgeMap:
    """Linear map between tensor products of wedge spaces, stored by columns"""

    __slots__ = ("m", "source", "target", "_cols")

    def __init__(self, m: int, source: Sequence[int], target: Sequence[int], columns: Dict[State, Vector] = None):
        self.m = m
        self.source: Degrees = tuple(source)
        self.target: Degrees = tuple(target)
        self._cols: Dict[State, Vector] = {}
        for col, vector in (columns or {}).items():
            clean: Vector = {}
            for row, value in vector.items():
                add_state(clean, tuple(row), RationalQ.coerce(value))
            if clean:
                self._cols[tuple(col)] = clean

    @classmethod
    def zero(cls, m: int, source: Sequence[int], target: Sequence[int]) -> "WedgeMap":
        return cls(m, source, target)

    @classmethod
    def identity(cls, m: int, degrees: Sequence[int]) -> "WedgeMap":
        return cls(m, degrees, degrees, {s: {s: RationalQ.one()} for s in states(m, degrees)})

    def entry(self, row: State, col: State) -> RationalQ:
        return self._cols.get(tuple(col), {}).get(tuple(row), RationalQ.zero())

    def column(self, col: State) -> Vector:
        return dict(self._cols.get(tuple(col), {}))

    def items(self) -> Iterator[Tuple[State, State, RationalQ]]:
        for col in sorted(self._cols):
            vector = self._cols[col]
            for row in sorted(vector):
                yield row, col, vector[row]

    def is_zero(self) -> bool:
        return not self._cols

    def scalar_value(self) -> Optional[RationalQ]:
        """c if the map is c times the identity, otherwise None"""
        if self.source != self.target:
            return None
        values = set()
        for s in states(self.m, self.source):
            vector = self._cols.get(s, {})
            if any(row != s for row in vector):
                return None
            values.add(vector.get(s, RationalQ.zero()))
            if len(values) > 1:
                return None
        return values.pop() if values else RationalQ.zero()

    def _check_shape(self, other: "WedgeMap"):
        if (self.m, self.source, self.target) != (other.m, other.source, other.target):
            raise ValueError("maps live on different weight spaces")

    def __add__(self, other: "WedgeMap") -> "WedgeMap":
        self._check_shape(other)
        cols = {c: dict(v) for c, v in self._cols.items()}
        for c, vector in other._cols.items():
            add_vector(cols.setdefault(c, {}), vector, 1)
        return WedgeMap(self.m, self.source, self.target, cols)

    def __neg__(self) -> "WedgeMap":
        return self.scaled(-1)

    def __sub__(self, other: "WedgeMap") -> "WedgeMap":
        return self + (-other)

    def scaled(self, c) -> "WedgeMap":
        if not c:
            return WedgeMap.zero(self.m, self.source, self.target)
        cols = {col: {row: v * c for row, v in vector.items()} for col, vector in self._cols.items()}
        return WedgeMap(self.m, self.source, self.target, cols)

    def apply(self, vector: Vector) -> Vector:
        out: Vector = {}
        for state, coeff in vector.items():
            image = self._cols.get(state)
            if image:
                add_vector(out, image, coeff)
        return out

    def __mul__(self, other):
        """self * other is composition (other first); a scalar scales"""
        if isinstance(other, WedgeMap):
            if other.target != self.source or other.m != self.m:
                raise ValueError(f"cannot compose {list(other.target)} into {list(self.source)}")
            cols = {c: self.apply(v) for c, v in other._cols.items()}
            return WedgeMap(self.m, other.source, self.target, cols)
        if isinstance(other, (int, RationalQ)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RationalQ)):
            return self.scaled(other)
        return NotImplemented

    def apply_at(self, vector: Vector, position: int) -> Vector:
        """Apply self to the columns position.. of every state, identity elsewhere"""
        start = position - 1
        width = len(self.source)
        out: Vector = {}
        for state, coeff in vector.items():
            image = self._cols.get(state[start:start + width])
            if not image:
                continue
            left, right = state[:start], state[start + width:]
            for row, value in image.items():
                add_state(out, left + row + right, value * coeff)
        return out

    def lift(self, degrees: Sequence[int], position: int) -> "WedgeMap":
        """id (x) self (x) id on the weight `degrees`, self at column `position`"""
        degrees = tuple(degrees)
        start = position - 1
        width = len(self.source)
        if degrees[start:start + width] != self.source:
            raise ValueError(f"{list(self.source)} does not sit at column {position} of {list(degrees)}")
        target = degrees[:start] + self.target + degrees[start + width:]
        cols = {s: self.apply_at({s: RationalQ.one()}, position) for s in states(self.m, degrees)}
        return WedgeMap(self.m, degrees, target, cols)

    def tensor(self, other: "WedgeMap") -> "WedgeMap":
        cols: Dict[State, Vector] = {}
        for a_col, a_vec in self._cols.items():
            for b_col, b_vec in other._cols.items():
                out = cols.setdefault(a_col + b_col, {})
                for a_row, a_val in a_vec.items():
                    for b_row, b_val in b_vec.items():
                        add_state(out, a_row + b_row, a_val * b_val)
        return WedgeMap(self.m, self.source + other.source, self.target + other.target, cols)

    def __eq__(self, other) -> bool:
        if not isinstance(other, WedgeMap):
            return NotImplemented
        return (
            self.m == other.m
            and self.source == other.source
            and self.target == other.target
            and self._cols == other._cols
        )

    __hash__ = None

    def render(self) -> List[str]:
        def state_text(s: State) -> str:
            return "|".join("".join(str(k) for k in subset) or "0" for subset in s) or "()"

        return [f"{state_text(row)} <- {state_text(col)}: {render_rational(v)}" for row, col, v in self.items()]

    def __repr__(self) -> str:
        return f"WedgeMap(m={self.m}, {list(self.source)} -> {list(self.target)})"


# ============================================================================
# SPLIT / MERGE
# ============================================================================

@cache_result("wedge_split")
def split(m: int, a: int, b: int) -> WedgeMap:
    """(pi_a (x) pi_b) o iota_{a+b}"""
    whole, left, right = build_wedge(m, a + b), build_wedge(m, a), build_wedge(m, b)
    cols: Dict[State, Vector] = {}
    if not (left.is_zero or right.is_zero):
        for subset in whole.basis:
            out: Vector = {}
            for word, value in whole.iota(subset).items():
                head, tail = left.pi(word[:a]), right.pi(word[a:])
                if head is None or tail is None:
                    continue
                add_state(out, (head[0], tail[0]), value * head[1] * tail[1])
            cols[(subset,)] = out
    return WedgeMap(m, (a + b,), (a, b), cols)


@cache_result("wedge_merge")
def merge(m: int, a: int, b: int) -> WedgeMap:
    """pi_{a+b} o (iota_a (x) iota_b)"""
    whole, left, right = build_wedge(m, a + b), build_wedge(m, a), build_wedge(m, b)
    cols: Dict[State, Vector] = {}
    if not whole.is_zero:
        for s in left.basis:
            for t in right.basis:
                out: Vector = {}
                for u, x in left.iota(s).items():
                    for v, y in right.iota(t).items():
                        image = whole.pi(u + v)
                        if image is not None:
                            add_state(out, (image[0],), x * y * image[1])
                cols[(s, t)] = out
    return WedgeMap(m, (a, b), (a + b,), cols)
