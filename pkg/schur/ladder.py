"""
Ladder words and their evaluation.

A word is read like an operator product: the rendering lists the letters
last-applied first and ends with the starting idempotent, e.g.

    E1 F3 (q^-1 - F2 E2) (q^-1 - F2 E2) E3 F1 1_[m,0,0,m]
"""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from common.decorators import timed
from diagram.model import Arrow
from ring import RationalQ, render_rational
from schur.generators import local_crossing, local_generator
from schur.wedge import Vector, WedgeMap, states
from schur.weight import LetterKind, SchurWeight

logger = logging.getLogger(__name__)

Roles = Tuple[Optional[Arrow], ...]


@dataclass(frozen=True)
class LadderLetter:
    kind: LetterKind
    index: int = 0
    sign: int = 1
    value: Optional[RationalQ] = None

    @classmethod
    def e(cls, i: int) -> "LadderLetter":
        return cls(LetterKind.E, i)

    @classmethod
    def f(cls, i: int) -> "LadderLetter":
        return cls(LetterKind.F, i)

    @classmethod
    def crossing(cls, i: int, sign: int) -> "LadderLetter":
        return cls(LetterKind.CROSSING, i, sign)

    @classmethod
    def scalar(cls, value) -> "LadderLetter":
        return cls(LetterKind.SCALAR, value=RationalQ.coerce(value))

    def __str__(self) -> str:
        if self.kind is LetterKind.CROSSING:
            q = "q^-1" if self.sign > 0 else "q"
            return f"({q} - F{self.index} E{self.index})"
        if self.kind is LetterKind.SCALAR:
            return f"({render_rational(self.value)})"
        return f"{self.kind.value}{self.index}"


@dataclass(frozen=True)
class LadderWord:
    start: SchurWeight
    letters: Tuple[LadderLetter, ...]
    start_roles: Optional[Roles] = None
    end_roles: Optional[Roles] = None

    def __post_init__(self):
        weight = self.start
        for letter in self.letters:
            if letter.kind is LetterKind.SCALAR:
                continue
            # raises on an index outside the ladder
            weight.pair(letter.index)
            weight = weight.shifted(letter.kind, letter.index)

    @property
    def end(self) -> SchurWeight:
        weight = self.start
        for letter in self.letters:
            if letter.kind in (LetterKind.E, LetterKind.F):
                weight = weight.shifted(letter.kind, letter.index)
        return weight

    def render(self, m: Optional[int] = None) -> str:
        parts = [str(letter) for letter in reversed(self.letters)]
        parts.append(self.start.render(m))
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def _apply_letter(vector: Vector, letter: LadderLetter, weight: SchurWeight, m: int) -> Vector:
    if letter.kind is LetterKind.SCALAR:
        return {s: v * letter.value for s, v in vector.items()}
    if letter.kind is LetterKind.CROSSING:
        if weight.pair(letter.index) != (1, 1):
            raise ValueError(f"crossing at column {letter.index} of {weight}")
        return local_crossing(m, letter.sign).apply_at(vector, letter.index)
    a, b = weight.pair(letter.index)
    return local_generator(m, letter.kind, a, b).apply_at(vector, letter.index)


@timed("schur.eval_ladder")
def eval_ladder(word: LadderWord, m: int) -> WedgeMap:
    """Matrix of the word from 1_start to 1_end"""
    end = word.end
    columns = {}
    widest = 0
    for state in states(m, word.start.parts):
        vector: Vector = {state: RationalQ.one()}
        weight = word.start
        for letter in word.letters:
            vector = _apply_letter(vector, letter, weight, m)
            if letter.kind in (LetterKind.E, LetterKind.F):
                weight = weight.shifted(letter.kind, letter.index)
            widest = max(widest, len(vector))
            if not vector:
                break
        columns[state] = vector
    logger.debug(f"ladder m={m}: {len(word.letters)} letters on {word.start.l} columns, widest state {widest}")
    return WedgeMap(m, word.start.parts, end.parts, columns)
