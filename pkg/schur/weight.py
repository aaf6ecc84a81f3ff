"""
Weights 1_[a_1, ..., a_l] of the idempotented q-Schur algebra.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Tuple


class LetterKind(str, Enum):
    E = "E"
    F = "F"
    CROSSING = "X"
    SCALAR = "c"


def shift(a: int, b: int, kind: LetterKind) -> Tuple[int, int]:
    """E moves one box from the right column to the left one, F the reverse"""
    if kind is LetterKind.E:
        return a + 1, b - 1
    if kind is LetterKind.F:
        return a - 1, b + 1
    return a, b


def admissible(m: int, degrees: Sequence[int]) -> bool:
    return all(0 <= a <= m for a in degrees)


def degree_text(a: int, m: Optional[int]) -> str:
    if m is None:
        return str(a)
    if a == m:
        return "m"
    if a == m - 1 and m > 2:
        return "m-1"
    return str(a)


@dataclass(frozen=True)
class SchurWeight:
    parts: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))

    @property
    def l(self) -> int:
        return len(self.parts)

    @property
    def N(self) -> int:
        return sum(self.parts)

    def admissible(self, m: int) -> bool:
        return admissible(m, self.parts)

    def pair(self, i: int) -> Tuple[int, int]:
        if not 1 <= i < self.l:
            raise IndexError(f"column pair {i} outside 1..{self.l - 1}")
        return self.parts[i - 1], self.parts[i]

    def shifted(self, kind: LetterKind, i: int) -> "SchurWeight":
        a, b = shift(*self.pair(i), kind)
        parts = list(self.parts)
        parts[i - 1], parts[i] = a, b
        return SchurWeight(tuple(parts))

    def render(self, m: Optional[int] = None) -> str:
        """1_[...] with degrees m and m-1 written symbolically when m is given"""
        return "1_[" + ",".join(degree_text(a, m) for a in self.parts) + "]"

    def __str__(self) -> str:
        return self.render()
