"""
Sparse exact matrices between tensor words of V and V*.

Columns are stored as dicts word -> RationalQ that never hold zeros; a word
is a tuple of basis indices in 1..m+n, one per boundary point. Whether a
point carries V or V* is read from the boundary object, the parity of x_k
and x_k* is |k| either way.
"""

import itertools
from dataclasses import dataclass
from typing import Dict, Iterable, Iterator, List, Optional, Tuple, Union

from common.exceptions import DivisionByZero
from diagram.model import Boundary, boundary_text
from ring import RationalQ, render_rational

Word = Tuple[int, ...]
Column = Dict[Word, RationalQ]
Scalar = Union[int, RationalQ]


@dataclass(frozen=True)
class SuperBasisIndex:
    i: int
    parity: int


@dataclass(frozen=True)
class SuperSpace:
    """The super vector space C(q)^{m|n}"""
    m: int
    n: int

    def __post_init__(self):
        if self.m < 0 or self.n < 0 or self.m + self.n < 1:
            raise ValueError(f"need m, n >= 0 and m + n >= 1, got ({self.m}, {self.n})")

    @property
    def dim(self) -> int:
        return self.m + self.n

    def parity(self, i: int) -> int:
        return 0 if i <= self.m else 1

    def index(self, i: int) -> SuperBasisIndex:
        if not 1 <= i <= self.dim:
            raise ValueError(f"basis index {i} outside 1..{self.dim}")
        return SuperBasisIndex(i, self.parity(i))

    def word_parity(self, word: Iterable[int]) -> int:
        return sum(self.parity(k) for k in word) % 2

    def words(self, obj: Boundary) -> List[Word]:
        return list(itertools.product(range(1, self.dim + 1), repeat=len(obj)))


def add_into(acc: Column, word: Word, value: RationalQ):
    total = acc[word] + value if word in acc else value
    if total.is_zero():
        acc.pop(word, None)
    else:
        acc[word] = total


def add_scaled(acc: Column, vector: Column, coeff: Scalar):
    """acc += coeff * vector"""
    if not coeff:
        return
    for word, value in vector.items():
        add_into(acc, word, value * coeff)


class RepMatrix:
    """Even (or odd, via parity) linear map between tensor words of V and V*"""

    __slots__ = ("space", "source", "target", "_cols")

    def __init__(self, space: SuperSpace, source: Boundary, target: Boundary, columns: Dict[Word, Column] = None):
        self.space = space
        self.source = tuple(source)
        self.target = tuple(target)
        self._cols: Dict[Word, Column] = {}
        for col, vector in (columns or {}).items():
            if len(col) != len(self.source):
                raise ValueError(f"column word {col} does not fit source {boundary_text(self.source)}")
            clean: Column = {}
            for row, value in vector.items():
                if len(row) != len(self.target):
                    raise ValueError(f"row word {row} does not fit target {boundary_text(self.target)}")
                add_into(clean, tuple(row), RationalQ.coerce(value))
            if clean:
                self._cols[tuple(col)] = clean

    # ------------------------------------------------------------------
    # constructors
    # ------------------------------------------------------------------

    @classmethod
    def zero(cls, space: SuperSpace, source: Boundary, target: Boundary) -> "RepMatrix":
        return cls(space, source, target)

    @classmethod
    def identity(cls, space: SuperSpace, obj: Boundary) -> "RepMatrix":
        return cls(space, obj, obj, {w: {w: RationalQ.one()} for w in space.words(obj)})

    @classmethod
    def from_entries(cls, space: SuperSpace, source: Boundary, target: Boundary,
                     entries: Iterable[Tuple[Word, Word, Scalar]]) -> "RepMatrix":
        """Build from (row, col, value) triples; repeated positions add up"""
        cols: Dict[Word, Column] = {}
        for row, col, value in entries:
            add_into(cols.setdefault(tuple(col), {}), tuple(row), RationalQ.coerce(value))
        return cls(space, source, target, cols)

    # ------------------------------------------------------------------
    # inspection
    # ------------------------------------------------------------------

    def entry(self, row: Word, col: Word) -> RationalQ:
        return self._cols.get(tuple(col), {}).get(tuple(row), RationalQ.zero())

    def column(self, col: Word) -> Column:
        return dict(self._cols.get(tuple(col), {}))

    def items(self) -> Iterator[Tuple[Word, Word, RationalQ]]:
        for col in sorted(self._cols):
            vector = self._cols[col]
            for row in sorted(vector):
                yield row, col, vector[row]

    def is_zero(self) -> bool:
        return not self._cols

    def scalar_value(self) -> Optional[RationalQ]:
        """c if the matrix is c times the identity, otherwise None"""
        if self.source != self.target:
            return None
        values = set()
        for w in self.space.words(self.source):
            vector = self._cols.get(w, {})
            if any(row != w for row in vector):
                return None
            values.add(vector.get(w, RationalQ.zero()))
            if len(values) > 1:
                return None
        return values.pop()

    # ------------------------------------------------------------------
    # arithmetic
    # ------------------------------------------------------------------

    def _check_shape(self, other: "RepMatrix"):
        if (self.space, self.source, self.target) != (other.space, other.source, other.target):
            raise ValueError("matrices live on different spaces")

    def __add__(self, other: "RepMatrix") -> "RepMatrix":
        self._check_shape(other)
        cols = {c: dict(v) for c, v in self._cols.items()}
        for c, vector in other._cols.items():
            add_scaled(cols.setdefault(c, {}), vector, 1)
        return RepMatrix(self.space, self.source, self.target, cols)

    def __neg__(self) -> "RepMatrix":
        return self.scaled(-1)

    def __sub__(self, other: "RepMatrix") -> "RepMatrix":
        return self + (-other)

    def scaled(self, c: Scalar) -> "RepMatrix":
        if not c:
            return RepMatrix.zero(self.space, self.source, self.target)
        cols = {col: {row: v * c for row, v in vector.items()} for col, vector in self._cols.items()}
        return RepMatrix(self.space, self.source, self.target, cols)

    def apply(self, vector: Column) -> Column:
        out: Column = {}
        for word, coeff in vector.items():
            image = self._cols.get(word)
            if image:
                add_scaled(out, image, coeff)
        return out

    def __mul__(self, other):
        """self * other is composition (other first); a scalar scales"""
        if isinstance(other, RepMatrix):
            if other.target != self.source or other.space != self.space:
                raise ValueError(
                    f"cannot compose {boundary_text(other.target)} into {boundary_text(self.source)}"
                )
            cols = {c: self.apply(v) for c, v in other._cols.items()}
            return RepMatrix(self.space, other.source, self.target, cols)
        if isinstance(other, (int, RationalQ)):
            return self.scaled(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, RationalQ)):
            return self.scaled(other)
        return NotImplemented

    def __pow__(self, power: int) -> "RepMatrix":
        result = RepMatrix.identity(self.space, self.source)
        for _ in range(power):
            result = self * result
        return result

    def tensor(self, other: "RepMatrix", other_parity: int = 0) -> "RepMatrix":
        """(self (x) other)(v (x) w) = (-1)^{|other||v|} self(v) (x) other(w)"""
        cols: Dict[Word, Column] = {}
        for a_col, a_vec in self._cols.items():
            sign = -1 if other_parity and self.space.word_parity(a_col) else 1
            for b_col, b_vec in other._cols.items():
                out = cols.setdefault(a_col + b_col, {})
                for a_row, a_val in a_vec.items():
                    for b_row, b_val in b_vec.items():
                        add_into(out, a_row + b_row, a_val * b_val * sign)
        return RepMatrix(self.space, self.source + other.source, self.target + other.target, cols)

    # ------------------------------------------------------------------
    # local application
    # ------------------------------------------------------------------

    def apply_at(self, vector: Column, position: int, parity: int = 0) -> Column:
        """Apply self to the points position.. of every word, identity elsewhere"""
        start = position - 1
        width = len(self.source)
        out: Column = {}
        for word, coeff in vector.items():
            image = self._cols.get(word[start:start + width])
            if not image:
                continue
            if parity and self.space.word_parity(word[:start]):
                coeff = -coeff
            left, right = word[:start], word[start + width:]
            for row, value in image.items():
                add_into(out, left + row + right, value * coeff)
        return out

    def lift(self, obj: Boundary, position: int, parity: int = 0) -> "RepMatrix":
        """id (x) self (x) id on obj, self sitting at position"""
        start = position - 1
        width = len(self.source)
        if tuple(obj[start:start + width]) != self.source:
            raise ValueError(f"{boundary_text(self.source)} does not sit at {position} of {boundary_text(obj)}")
        target = tuple(obj[:start]) + self.target + tuple(obj[start + width:])
        cols = {w: self.apply_at({w: RationalQ.one()}, position, parity) for w in self.space.words(obj)}
        return RepMatrix(self.space, obj, target, cols)

    # ------------------------------------------------------------------
    # inversion
    # ------------------------------------------------------------------

    def inverse(self) -> "RepMatrix":
        """Gauss-Jordan elimination over Q(q)"""
        rows = self.space.words(self.target)
        cols = self.space.words(self.source)
        if len(rows) != len(cols):
            raise ValueError("only square matrices can be inverted")
        size = len(rows)
        row_at = {w: r for r, w in enumerate(rows)}
        aug: List[List[RationalQ]] = [
            [RationalQ.zero()] * size + [RationalQ.one() if r == c else RationalQ.zero() for c in range(size)]
            for r in range(size)
        ]
        for c, col in enumerate(cols):
            for row, value in self._cols.get(col, {}).items():
                aug[row_at[row]][c] = value

        for c in range(size):
            pivot = next((r for r in range(c, size) if not aug[r][c].is_zero()), None)
            if pivot is None:
                raise DivisionByZero("matrix is singular")
            aug[c], aug[pivot] = aug[pivot], aug[c]
            inv = aug[c][c].inv()
            aug[c] = [v * inv for v in aug[c]]
            for r in range(size):
                if r != c and not aug[r][c].is_zero():
                    factor = aug[r][c]
                    aug[r] = [a - factor * b for a, b in zip(aug[r], aug[c])]

        # the inverse maps target words back to source words
        entries = []
        for r in range(size):
            for k in range(size):
                value = aug[r][size + k]
                if not value.is_zero():
                    entries.append((cols[r], rows[k], value))
        return RepMatrix.from_entries(self.space, self.target, self.source, entries)

    # ------------------------------------------------------------------
    # comparison / output
    # ------------------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMatrix):
            return NotImplemented
        return (
            self.space == other.space
            and self.source == other.source
            and self.target == other.target
            and self._cols == other._cols
        )

    __hash__ = None

    def render(self) -> List[str]:
        """One line per nonzero entry: row word, column word, value"""
        def word_text(w: Word) -> str:
            return ",".join(str(k) for k in w) or "()"

        return [f"{word_text(row)} <- {word_text(col)}: {render_rational(v)}" for row, col, v in self.items()]

    def __repr__(self) -> str:
        return (
            f"RepMatrix({self.space.m}|{self.space.n}, {boundary_text(self.source)} -> "
            f"{boundary_text(self.target)}, {sum(len(v) for v in self._cols.values())} entries)"
        )
