"""
Framed Reidemeister moves, planar isotopies and diagram combinators.

A MoveSpec names a move kind, the slice index where its pattern starts (for
insertions: the interface level the new slices go in at) and a position.
Every rewrite returns a new diagram; the input is never modified.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import List, Sequence

from common.exceptions import MalformedDiagram, PatternMismatch
from diagram.model import (
    Arrow,
    Boundary,
    Generator,
    Slice,
    SliceDiagram,
    boundaries,
)

logger = logging.getLogger(__name__)


class MoveKind(str, Enum):
    R1_INSERT = "r1_insert"
    R1_DELETE = "r1_delete"
    R2_INSERT = "r2_insert"
    R2_DELETE = "r2_delete"
    R3 = "r3"
    COMMUTE = "commute"
    ZIGZAG_INSERT = "zigzag_insert"
    ZIGZAG_DELETE = "zigzag_delete"


@dataclass(frozen=True)
class MoveSpec:
    kind: MoveKind
    index: int
    position: int = 1
    sign: int = 1
    side: str = "right"


# (input width, output width) of each generator
_WIDTHS = {
    Generator.CUP_POS: (0, 2),
    Generator.CUP_NEG: (0, 2),
    Generator.CAP_POS: (2, 0),
    Generator.CAP_NEG: (2, 0),
    Generator.X_POS: (2, 2),
    Generator.X_NEG: (2, 2),
    Generator.ID: (1, 1),
}


def _crossing(sign: int) -> Generator:
    return Generator.X_POS if sign > 0 else Generator.X_NEG


def _splice(d: SliceDiagram, index: int, remove: int, new: Sequence[Slice]) -> SliceDiagram:
    slices = d.slices[:index] + tuple(new) + d.slices[index + remove:]
    out = SliceDiagram(d.source, slices, d.target)
    try:
        boundaries(out)
    except MalformedDiagram as e:
        raise PatternMismatch(f"rewrite at slice {index} breaks the diagram: {e}") from None
    return out


def _object_at(d: SliceDiagram, level: int) -> Boundary:
    objects = boundaries(d)
    if not 0 <= level < len(objects):
        raise PatternMismatch(f"interface level {level} outside 0..{len(objects) - 1}")
    return objects[level]


def _window(d: SliceDiagram, index: int, size: int) -> Sequence[Slice]:
    if index < 0 or index + size > len(d.slices):
        raise PatternMismatch(f"no {size} slices starting at {index}")
    return d.slices[index:index + size]


# ============================================================================
# CURLS (R1')
# ============================================================================

def curl_slices(arrow: Arrow, position: int, sign: int) -> List[Slice]:
    """A single kink on the strand at position; sign is the kink's writhe"""
    p = position
    if arrow is Arrow.UP:
        return [Slice(p + 1, Generator.CUP_NEG), Slice(p, _crossing(sign)), Slice(p + 1, Generator.CAP_NEG)]
    return [Slice(p + 1, Generator.CUP_POS), Slice(p, _crossing(sign)), Slice(p + 1, Generator.CAP_POS)]


def add_curl(d: SliceDiagram, level: int, position: int, sign: int) -> SliceDiagram:
    """Insert one kink; changes the framing by sign"""
    obj = _object_at(d, level)
    if not 1 <= position <= len(obj):
        raise PatternMismatch(f"no strand at position {position} of level {level}")
    return _splice(d, level, 0, curl_slices(obj[position - 1], position, sign))


def _is_curl(window: Sequence[Slice], position: int, sign: int) -> bool:
    p = position
    cup, x, cap = window
    return (
        cup.position == p + 1 and cup.generator.is_cup
        and x.position == p and x.generator is _crossing(sign)
        and cap.position == p + 1 and cap.generator.is_cap
    )


def _r1_insert(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    obj = _object_at(d, m.index)
    p = m.position
    if not 1 <= p <= len(obj):
        raise PatternMismatch(f"no strand at position {p} of level {m.index}")
    arrow = obj[p - 1]
    pair = curl_slices(arrow, p, m.sign) + curl_slices(arrow, p, -m.sign)
    return _splice(d, m.index, 0, pair)


def _r1_delete(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    window = _window(d, m.index, 6)
    p = window[1].position
    first = window[1].generator
    if not first.is_crossing:
        raise PatternMismatch(f"no curl pair at slice {m.index}")
    sign = first.epsilon
    if not (_is_curl(window[:3], p, sign) and _is_curl(window[3:], p, -sign)):
        raise PatternMismatch(f"no opposite curl pair at slice {m.index}")
    return _splice(d, m.index, 6, [])


# ============================================================================
# R2 / R3
# ============================================================================

def _r2_insert(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    obj = _object_at(d, m.index)
    if not 1 <= m.position < len(obj):
        raise PatternMismatch(f"no strand pair at position {m.position} of level {m.index}")
    pair = [Slice(m.position, _crossing(m.sign)), Slice(m.position, _crossing(-m.sign))]
    return _splice(d, m.index, 0, pair)


def _r2_delete(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    a, b = _window(d, m.index, 2)
    if not (a.generator.is_crossing and b.generator.is_crossing
            and a.position == b.position and a.generator is b.generator.mirrored()):
        raise PatternMismatch(f"no cancelling crossing pair at slice {m.index}")
    return _splice(d, m.index, 2, [])


def _r3(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    s1, s2, s3 = _window(d, m.index, 3)
    if not all(s.generator.is_crossing for s in (s1, s2, s3)):
        raise PatternMismatch(f"R3 needs three crossings at slice {m.index}")
    p1, p2, p3 = s1.position, s2.position, s3.position
    if not (p1 == p3 and abs(p1 - p2) == 1):
        raise PatternMismatch(f"crossing positions {p1},{p2},{p3} are not an R3 triangle")
    g1, g2, g3 = s1.generator, s2.generator, s3.generator
    if g1 is g3 and g1 is not g2:
        raise PatternMismatch("middle strand does not pass between the other two")
    new = [Slice(p2, g3), Slice(p1, g2), Slice(p2, g1)]
    return _splice(d, m.index, 3, new)


# ============================================================================
# DISTANT COMMUTATION / ZIGZAGS
# ============================================================================

def _commute(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    lower, upper = _window(d, m.index, 2)
    a, b = lower.position, upper.position
    in_a, out_a = _WIDTHS[lower.generator]
    in_b, out_b = _WIDTHS[upper.generator]
    if b + in_b - 1 < a:
        new = [Slice(b, upper.generator), Slice(a + out_b - in_b, lower.generator)]
    elif b > a + out_a - 1:
        new = [Slice(b - (out_a - in_a), upper.generator), Slice(a, lower.generator)]
    else:
        raise PatternMismatch(f"slices {m.index} and {m.index + 1} overlap")
    return _splice(d, m.index, 2, new)


def _zigzag_insert(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    obj = _object_at(d, m.index)
    p = m.position
    if not 1 <= p <= len(obj):
        raise PatternMismatch(f"no strand at position {p} of level {m.index}")
    up = obj[p - 1] is Arrow.UP
    if m.side == "right":
        cup = Generator.CUP_POS if up else Generator.CUP_NEG
        cap = Generator.CAP_NEG if up else Generator.CAP_POS
        new = [Slice(p + 1, cup), Slice(p, cap)]
    elif m.side == "left":
        cup = Generator.CUP_NEG if up else Generator.CUP_POS
        cap = Generator.CAP_POS if up else Generator.CAP_NEG
        new = [Slice(p, cup), Slice(p + 1, cap)]
    else:
        raise PatternMismatch(f"unknown zigzag side {m.side!r}")
    return _splice(d, m.index, 0, new)


def _zigzag_delete(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    cup, cap = _window(d, m.index, 2)
    if not (cup.generator.is_cup and cap.generator.is_cap and abs(cup.position - cap.position) == 1):
        raise PatternMismatch(f"no zigzag at slice {m.index}")
    return _splice(d, m.index, 2, [])


_MOVES = {
    MoveKind.R1_INSERT: _r1_insert,
    MoveKind.R1_DELETE: _r1_delete,
    MoveKind.R2_INSERT: _r2_insert,
    MoveKind.R2_DELETE: _r2_delete,
    MoveKind.R3: _r3,
    MoveKind.COMMUTE: _commute,
    MoveKind.ZIGZAG_INSERT: _zigzag_insert,
    MoveKind.ZIGZAG_DELETE: _zigzag_delete,
}


def apply_move(d: SliceDiagram, m: MoveSpec) -> SliceDiagram:
    """Rewrite d by one move; raises PatternMismatch where the pattern is absent"""
    out = _MOVES[m.kind](d, m)
    logger.debug(f"Applied {m.kind.value} at slice {m.index}, position {m.position}")
    return out


def applicable_moves(d: SliceDiagram) -> List[MoveSpec]:
    """Every move with a matching pattern, insertions at every level"""
    objects = boundaries(d)
    moves: List[MoveSpec] = []
    for level, obj in enumerate(objects):
        for p in range(1, len(obj) + 1):
            for sign in (1, -1):
                moves.append(MoveSpec(MoveKind.R1_INSERT, level, p, sign))
            for side in ("right", "left"):
                moves.append(MoveSpec(MoveKind.ZIGZAG_INSERT, level, p, side=side))
            if p < len(obj):
                for sign in (1, -1):
                    moves.append(MoveSpec(MoveKind.R2_INSERT, level, p, sign))
    for kind in (MoveKind.R1_DELETE, MoveKind.R2_DELETE, MoveKind.R3,
                 MoveKind.COMMUTE, MoveKind.ZIGZAG_DELETE):
        for index in range(len(d.slices)):
            spec = MoveSpec(kind, index)
            try:
                _MOVES[kind](d, spec)
            except PatternMismatch:
                continue
            moves.append(spec)
    return moves


# ============================================================================
# COMBINATORS
# ============================================================================

def mirror(d: SliceDiagram) -> SliceDiagram:
    """Swap every x+ with x-"""
    return SliceDiagram(
        d.source,
        tuple(Slice(s.position, s.generator.mirrored()) for s in d.slices),
        d.target,
    )


def disjoint_union(left: SliceDiagram, right: SliceDiagram) -> SliceDiagram:
    """Side-by-side tensor product, left diagram first"""
    shift = len(left.target)
    slices = left.slices + tuple(Slice(s.position + shift, s.generator) for s in right.slices)
    return SliceDiagram(left.source + right.source, slices, left.target + right.target)


def compose(lower: SliceDiagram, upper: SliceDiagram) -> SliceDiagram:
    """Stack upper on top of lower"""
    if lower.target != upper.source:
        raise MalformedDiagram("target of the lower diagram differs from source of the upper one")
    return SliceDiagram(lower.source, lower.slices + upper.slices, upper.target)


def orient_upward(d: SliceDiagram) -> SliceDiagram:
    """Rewrite every crossing so both of its strands point up"""
    objects = boundaries(d)
    slices: List[Slice] = []
    for t, s in enumerate(d.slices):
        g, i = s.generator, s.position
        if not g.is_crossing:
            slices.append(s)
            continue
        left, right = objects[t][i - 1], objects[t][i]
        if left is Arrow.UP and right is Arrow.UP:
            slices.append(s)
        elif left is Arrow.DOWN and right is Arrow.UP:
            slices += [Slice(i + 2, Generator.CUP_NEG), Slice(i + 1, g.mirrored()), Slice(i, Generator.CAP_POS)]
        elif left is Arrow.UP and right is Arrow.DOWN:
            slices += [Slice(i, Generator.CUP_POS), Slice(i + 1, g.mirrored()), Slice(i + 2, Generator.CAP_NEG)]
        else:
            slices += [
                Slice(i + 2, Generator.CUP_NEG),
                Slice(i + 3, Generator.CUP_NEG),
                Slice(i + 2, g),
                Slice(i + 1, Generator.CAP_POS),
                Slice(i, Generator.CAP_POS),
            ]
    return SliceDiagram(d.source, tuple(slices), d.target)
