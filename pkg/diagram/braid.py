"""
Braid words and their closures.
"""

import logging
import re
from dataclasses import dataclass
from typing import List, Tuple

from common.exceptions import IndexOutOfRange, ParseError
from diagram.model import Arrow, Generator, Slice, SliceDiagram

logger = logging.getLogger(__name__)

_LETTER = re.compile(r"\S+")


@dataclass(frozen=True)
class BraidWord:
    """Signed generator indices: k > 0 is sigma_k, k < 0 is sigma_|k|^-1"""
    strands: int
    letters: Tuple[int, ...]

    def __post_init__(self):
        if self.strands < 1:
            raise IndexOutOfRange(f"a braid needs at least one strand, got {self.strands}")
        for k in self.letters:
            if k == 0 or abs(k) >= self.strands:
                raise IndexOutOfRange(f"generator {k} out of range for {self.strands} strands")

    def __str__(self) -> str:
        return " ".join(str(k) for k in self.letters)

    def inverse(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in reversed(self.letters)))

    def mirror(self) -> "BraidWord":
        return BraidWord(self.strands, tuple(-k for k in self.letters))


def parse_braid(text: str, strands: int) -> BraidWord:
    """Whitespace-separated signed integers, e.g. '1 1 1' or '-2 1 -2'"""
    letters: List[int] = []
    for m in _LETTER.finditer(text):
        token = m.group(0)
        try:
            k = int(token)
        except ValueError:
            raise ParseError(f"bad braid letter {token!r}", position=m.start()) from None
        if k == 0:
            raise ParseError("braid letter 0 is not a generator", position=m.start())
        letters.append(k)
    return BraidWord(strands, tuple(letters))


def braid_permutation(b: BraidWord) -> List[int]:
    """Where each starting strand ends up, 0-based"""
    position = list(range(b.strands))
    for k in b.letters:
        i = abs(k) - 1
        position[i], position[i + 1] = position[i + 1], position[i]
    return position


def braid_cycles(b: BraidWord) -> int:
    perm = braid_permutation(b)
    seen = set()
    cycles = 0
    for start in range(b.strands):
        if start in seen:
            continue
        cycles += 1
        k = start
        while k not in seen:
            seen.add(k)
            k = perm[k]
    return cycles


def braid_diagram(b: BraidWord) -> SliceDiagram:
    """The open braid: n upward strands, one crossing per letter"""
    slices = tuple(
        Slice(abs(k), Generator.X_POS if k > 0 else Generator.X_NEG)
        for k in b.letters
    )
    up = (Arrow.UP,) * b.strands
    return SliceDiagram(up, slices, up)


def braid_closure(b: BraidWord) -> SliceDiagram:
    """
    Close the braid to the right: n nested cups, the crossings on the
    right-hand (upward) strands, n nested caps.
    """
    n = b.strands
    slices = [Slice(p, Generator.CUP_POS) for p in range(1, n + 1)]
    slices += [
        Slice(n + abs(k), Generator.X_POS if k > 0 else Generator.X_NEG)
        for k in b.letters
    ]
    slices += [Slice(p, Generator.CAP_POS) for p in range(n, 0, -1)]
    logger.debug(f"Closed braid on {n} strands with {len(b.letters)} crossings")
    return SliceDiagram((), tuple(slices), ())
