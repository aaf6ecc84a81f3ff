"""
Strand tracing through a slice diagram.

Every boundary point of every interface lies on exactly one strand. Open
strands run from a start endpoint (a source point pointing up or a target
point pointing down) to an end endpoint; closed strands start at their
lowest, then leftmost, point.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from common.exceptions import MalformedDiagram
from diagram.model import (
    Arrow,
    Boundary,
    DiagramStats,
    Generator,
    SliceDiagram,
    boundaries,
    crossing_sign,
)

logger = logging.getLogger(__name__)

Endpoint = Tuple[str, int]          # ("s", position) or ("t", position)
Point = Tuple[int, int]             # (interface level, position)
Visit = Tuple[int, bool]            # (crossing slice index, passes over)


@dataclass
class TracedStrand:
    points: List[Point] = field(default_factory=list)
    visits: List[Visit] = field(default_factory=list)
    start: Optional[Endpoint] = None
    end: Optional[Endpoint] = None

    @property
    def closed(self) -> bool:
        return self.start is None


@dataclass
class Trace:
    objects: List[Boundary]
    strands: List[TracedStrand]
    signs: Dict[int, int]

    @property
    def closed_strands(self) -> List[TracedStrand]:
        return [s for s in self.strands if s.closed]

    def arrow(self, point: Point) -> Arrow:
        level, position = point
        return self.objects[level][position - 1]

    @property
    def writhe(self) -> int:
        return sum(self.signs.values())


class _Walker:
    def __init__(self, d: SliceDiagram, objects: List[Boundary]):
        self.slices = d.slices
        self.objects = objects
        self.top = len(d.slices)

    def step(self, point: Point):
        """Follow the strand one slice from point; returns (next point or endpoint, visit)"""
        level, p = point
        if self.objects[level][p - 1] is Arrow.UP:
            if level == self.top:
                return ("t", p), None
            return self._through_from_below(level, p)
        if level == 0:
            return ("s", p), None
        return self._through_from_above(level - 1, p)

    def _through_from_below(self, t: int, p: int):
        s = self.slices[t]
        i, g = s.position, s.generator
        if g.is_crossing and p in (i, i + 1):
            if p == i:
                return (t + 1, i + 1), (t, g is Generator.X_POS)
            return (t + 1, i), (t, g is Generator.X_NEG)
        if g.is_cap and p in (i, i + 1):
            return (t, i + 1 if p == i else i), None
        if g.is_cup and p >= i:
            return (t + 1, p + 2), None
        if g.is_cap and p >= i + 2:
            return (t + 1, p - 2), None
        return (t + 1, p), None

    def _through_from_above(self, t: int, p: int):
        s = self.slices[t]
        i, g = s.position, s.generator
        if g.is_crossing and p in (i, i + 1):
            if p == i + 1:
                return (t, i), (t, g is Generator.X_POS)
            return (t, i + 1), (t, g is Generator.X_NEG)
        if g.is_cup and p in (i, i + 1):
            return (t + 1, i + 1 if p == i else i), None
        if g.is_cup and p >= i + 2:
            return (t, p - 2), None
        if g.is_cap and p >= i:
            return (t, p + 2), None
        return (t, p), None


def trace(d: SliceDiagram) -> Trace:
    """Trace every strand; raises MalformedDiagram through boundary validation"""
    objects = boundaries(d)
    walker = _Walker(d, objects)
    signs = {
        t: crossing_sign(s.generator, objects[t][s.position - 1], objects[t][s.position])
        for t, s in enumerate(d.slices)
        if s.generator.is_crossing
    }
    seen = set()
    strands: List[TracedStrand] = []

    starts = [(("s", p), (0, p)) for p, a in enumerate(d.source, 1) if a is Arrow.UP]
    starts += [(("t", p), (walker.top, p)) for p, a in enumerate(d.target, 1) if a is Arrow.DOWN]
    for endpoint, point in starts:
        strand = TracedStrand(start=endpoint)
        current = point
        while True:
            seen.add(current)
            strand.points.append(current)
            nxt, visit = walker.step(current)
            if visit is not None:
                strand.visits.append(visit)
            if isinstance(nxt[0], str):
                strand.end = nxt
                break
            current = nxt
        strands.append(strand)

    for level, obj in enumerate(objects):
        for p in range(1, len(obj) + 1):
            if (level, p) in seen:
                continue
            strand = TracedStrand()
            current = (level, p)
            while True:
                if current in seen:
                    raise MalformedDiagram("strand tracing revisited a point", slice_index=current[0])
                seen.add(current)
                strand.points.append(current)
                nxt, visit = walker.step(current)
                if visit is not None:
                    strand.visits.append(visit)
                if isinstance(nxt[0], str):
                    raise MalformedDiagram("closed strand reached the boundary", slice_index=current[0])
                if nxt == (level, p):
                    break
                current = nxt
            strands.append(strand)

    logger.debug(f"Traced {len(strands)} strands through {len(d.slices)} slices")
    return Trace(objects=objects, strands=strands, signs=signs)


def validate(d: SliceDiagram) -> DiagramStats:
    """Check boundary matching and orientation coherence; count components"""
    t = trace(d)
    return DiagramStats(components=len(t.strands), writhe=t.writhe, crossings=len(t.signs))


def diagram_stats(d: SliceDiagram) -> DiagramStats:
    return validate(d)
