"""
Seeded random braids and move sequences for property tests and the selftest.
"""

import random
from typing import List, Optional, Tuple

from diagram.braid import BraidWord
from diagram.model import SliceDiagram
from diagram.moves import MoveKind, MoveSpec, applicable_moves, apply_move

_GROWING = {
    MoveKind.R1_INSERT: 2,
    MoveKind.R2_INSERT: 2,
}


def random_braid(rng: random.Random, strands: int, length: int) -> BraidWord:
    if strands < 2:
        return BraidWord(strands, ())
    letters = tuple(
        rng.randint(1, strands - 1) * rng.choice((1, -1))
        for _ in range(length)
    )
    return BraidWord(strands, letters)


def random_moves(
    d: SliceDiagram,
    rng: random.Random,
    steps: int = 1,
    max_crossings: Optional[int] = None,
) -> Tuple[SliceDiagram, List[MoveSpec]]:
    """Apply steps random applicable moves, never exceeding max_crossings"""
    applied: List[MoveSpec] = []
    for _ in range(steps):
        candidates = applicable_moves(d)
        if max_crossings is not None:
            budget = max_crossings - d.crossing_count
            candidates = [m for m in candidates if _GROWING.get(m.kind, 0) <= budget]
        if not candidates:
            break
        move = rng.choice(candidates)
        d = apply_move(d, move)
        applied.append(move)
    return d, applied
