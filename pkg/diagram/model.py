"""
Slice diagrams of oriented framed tangles.

A diagram is a bottom-to-top stack of elementary slices between boundary
objects. Positions are 1-based: a slice at position i acts on points i and
i+1 of the object below it; a cup at position i inserts its new points as
points i and i+1.
"""

from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence, Tuple

from common.exceptions import MalformedDiagram, ParseError


class Arrow(str, Enum):
    UP = "u"
    DOWN = "d"

    def flipped(self) -> "Arrow":
        return Arrow.DOWN if self is Arrow.UP else Arrow.UP


class Generator(str, Enum):
    CUP_POS = "cup+"
    CUP_NEG = "cup-"
    CAP_POS = "cap+"
    CAP_NEG = "cap-"
    X_POS = "x+"
    X_NEG = "x-"
    ID = "id"

    @property
    def is_cup(self) -> bool:
        return self in (Generator.CUP_POS, Generator.CUP_NEG)

    @property
    def is_cap(self) -> bool:
        return self in (Generator.CAP_POS, Generator.CAP_NEG)

    @property
    def is_crossing(self) -> bool:
        return self in (Generator.X_POS, Generator.X_NEG)

    @property
    def epsilon(self) -> int:
        """+1 for x+, -1 for x-"""
        if not self.is_crossing:
            raise ValueError(f"{self.value} is not a crossing")
        return 1 if self is Generator.X_POS else -1

    def mirrored(self) -> "Generator":
        if self is Generator.X_POS:
            return Generator.X_NEG
        if self is Generator.X_NEG:
            return Generator.X_POS
        return self


Boundary = Tuple[Arrow, ...]

# legs created by cups / consumed by caps, left to right
CUP_LEGS = {
    Generator.CUP_POS: (Arrow.DOWN, Arrow.UP),
    Generator.CUP_NEG: (Arrow.UP, Arrow.DOWN),
}
CAP_LEGS = {
    Generator.CAP_POS: (Arrow.DOWN, Arrow.UP),
    Generator.CAP_NEG: (Arrow.UP, Arrow.DOWN),
}


def cup_for(legs: Tuple[Arrow, Arrow]) -> Generator:
    return Generator.CUP_POS if legs == CUP_LEGS[Generator.CUP_POS] else Generator.CUP_NEG


def cap_for(legs: Tuple[Arrow, Arrow]) -> Generator:
    return Generator.CAP_POS if legs == CAP_LEGS[Generator.CAP_POS] else Generator.CAP_NEG


def parse_boundary(text: str) -> Boundary:
    """'-' is the empty object, otherwise a string over u/d"""
    text = text.strip()
    if text == "-":
        return ()
    try:
        return tuple(Arrow(ch) for ch in text)
    except ValueError:
        raise ParseError(f"bad boundary object {text!r}") from None


def boundary_text(b: Sequence[Arrow]) -> str:
    return "".join(a.value for a in b) if b else "-"


@dataclass(frozen=True)
class Slice:
    position: int
    generator: Generator

    def __str__(self) -> str:
        return f"slice {self.position} {self.generator.value}"


@dataclass(frozen=True)
class SliceDiagram:
    source: Boundary
    slices: Tuple[Slice, ...]
    target: Boundary

    @classmethod
    def build(cls, source, slices, target) -> "SliceDiagram":
        """Accept boundary text or arrow sequences and (position, name) pairs"""
        if isinstance(source, str):
            source = parse_boundary(source)
        if isinstance(target, str):
            target = parse_boundary(target)
        built = []
        for s in slices:
            if not isinstance(s, Slice):
                position, name = s
                s = Slice(int(position), Generator(name))
            built.append(s)
        return cls(tuple(source), tuple(built), tuple(target))

    @property
    def is_closed(self) -> bool:
        return not self.source and not self.target

    @property
    def crossing_count(self) -> int:
        return sum(1 for s in self.slices if s.generator.is_crossing)


@dataclass(frozen=True)
class DiagramStats:
    components: int
    writhe: int
    crossings: int


def apply_slice(obj: Boundary, s: Slice, index: int = None) -> Boundary:
    """Boundary object above a slice; raises MalformedDiagram on mismatch"""
    p = s.position
    g = s.generator
    n = len(obj)
    if g.is_cup:
        if not 1 <= p <= n + 1:
            raise MalformedDiagram(f"cup position {p} outside 1..{n + 1}", slice_index=index)
        return obj[:p - 1] + CUP_LEGS[g] + obj[p - 1:]
    if g is Generator.ID:
        if not 1 <= p <= max(n, 1):
            raise MalformedDiagram(f"id position {p} outside 1..{max(n, 1)}", slice_index=index)
        return obj
    if not 1 <= p < n:
        raise MalformedDiagram(f"{g.value} position {p} needs points {p},{p + 1} of {n}", slice_index=index)
    pair = (obj[p - 1], obj[p])
    if g.is_cap:
        if pair != CAP_LEGS[g]:
            raise MalformedDiagram(
                f"{g.value} at {p} expects {boundary_text(CAP_LEGS[g])}, found {boundary_text(pair)}",
                slice_index=index,
            )
        return obj[:p - 1] + obj[p + 1:]
    return obj[:p - 1] + (pair[1], pair[0]) + obj[p + 1:]


def boundaries(d: SliceDiagram) -> List[Boundary]:
    """All interface objects, bottom to top (len(slices) + 1 of them)"""
    objects = [tuple(d.source)]
    for index, s in enumerate(d.slices):
        objects.append(apply_slice(objects[-1], s, index))
    if objects[-1] != tuple(d.target):
        raise MalformedDiagram(
            f"top object {boundary_text(objects[-1])} does not match target {boundary_text(d.target)}",
            slice_index=len(d.slices) - 1 if d.slices else None,
        )
    return objects


def crossing_sign(g: Generator, left: Arrow, right: Arrow) -> int:
    """Sign of a crossing slice given the arrows below it"""
    return g.epsilon if left == right else -g.epsilon
