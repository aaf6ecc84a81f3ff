"""
Line-based slice file format.

    source: <u/d string or ->
    slice <position> <generator>
    ...
    target: <u/d string or ->

A file may instead hold a single braid line ``braid <n>: <letters>``, which
reads as the closure of that braid. Blank lines and lines starting with
``#`` are ignored.
"""

import re
from typing import List, Optional, Tuple

from common.exceptions import ParseError
from diagram.braid import braid_closure, parse_braid
from diagram.model import (
    Generator,
    Slice,
    SliceDiagram,
    boundary_text,
    parse_boundary,
)

_BRAID_LINE = re.compile(r"^braid\s+(\d+)\s*:(.*)$")


def serialize(d: SliceDiagram) -> str:
    lines = [f"source: {boundary_text(d.source)}"]
    lines.extend(str(s) for s in d.slices)
    lines.append(f"target: {boundary_text(d.target)}")
    return "\n".join(lines) + "\n"


def _content_lines(text: str) -> List[Tuple[int, str]]:
    out = []
    for number, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if line and not line.startswith("#"):
            out.append((number, line))
    return out


def _boundary_line(number: int, line: str, key: str):
    if not line.startswith(f"{key}:"):
        raise ParseError(f"expected '{key}:' line", line=number)
    try:
        return parse_boundary(line[len(key) + 1:])
    except ParseError as e:
        raise ParseError(e.message, line=number) from None


def _slice_line(number: int, line: str) -> Slice:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "slice":
        raise ParseError(f"expected 'slice <position> <generator>', got {line!r}", line=number)
    try:
        position = int(parts[1])
    except ValueError:
        raise ParseError(f"bad slice position {parts[1]!r}", line=number) from None
    if position < 1:
        raise ParseError(f"slice position must be >= 1, got {position}", line=number)
    try:
        generator = Generator(parts[2])
    except ValueError:
        raise ParseError(f"unknown generator {parts[2]!r}", line=number) from None
    return Slice(position, generator)


def deserialize(text: str) -> SliceDiagram:
    """Parse the slice format; ParseError carries the 1-based line number"""
    lines = _content_lines(text)
    if not lines:
        raise ParseError("empty diagram file", line=1)
    first_number, first = lines[0]
    if first.startswith("braid"):
        if len(lines) > 1:
            raise ParseError("a braid file holds a single line", line=lines[1][0])
        return braid_closure(parse_braid_line(first, first_number))
    if len(lines) < 2:
        raise ParseError("missing 'target:' line", line=first_number + 1)
    source = _boundary_line(first_number, first, "source")
    slices = [_slice_line(number, line) for number, line in lines[1:-1]]
    last_number, last = lines[-1]
    target = _boundary_line(last_number, last, "target")
    return SliceDiagram(source, tuple(slices), target)


def parse_braid_line(line: str, number: Optional[int] = None):
    m = _BRAID_LINE.match(line.strip())
    if not m:
        raise ParseError("expected 'braid <n>: <letters>'", line=number)
    try:
        return parse_braid(m.group(2), int(m.group(1)))
    except ParseError as e:
        raise ParseError(e.message, position=e.position, line=number) from None


def parse_input(text: str) -> SliceDiagram:
    return deserialize(text)
