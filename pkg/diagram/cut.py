"""
Cutting a closed diagram open into a (1,1)-tangle.
"""

import logging
from typing import List

from common.exceptions import ComponentNotFound, MalformedDiagram
from diagram.model import Arrow, Generator, Slice, SliceDiagram
from diagram.trace import trace

logger = logging.getLogger(__name__)


def cut_open(d: SliceDiagram, component: int = 1) -> SliceDiagram:
    """
    Cut component (1-based, numbered by first appearance bottom to top, left
    to right) at its lowest, then leftmost, downward point. The cut ends are
    threaded over every other strand to position 1, so the result runs from
    a single upward source point to a single upward target point.
    """
    if not d.is_closed:
        raise MalformedDiagram("only closed diagrams can be cut open")
    traced = trace(d)
    strands = traced.closed_strands
    if not 1 <= component <= len(strands):
        raise ComponentNotFound(f"component {component} not in 1..{len(strands)}")
    points = [pt for pt in strands[component - 1].points if traced.arrow(pt) is Arrow.DOWN]
    level, p = min(points)

    def shifted(slices) -> List[Slice]:
        return [Slice(s.position + 1, s.generator) for s in slices]

    slices = shifted(d.slices[:level])
    slices += [Slice(k, Generator.X_POS) for k in range(1, p)]
    slices += [Slice(p, Generator.CAP_NEG), Slice(p, Generator.CUP_NEG)]
    slices += [Slice(k, Generator.X_NEG) for k in range(p - 1, 0, -1)]
    slices += shifted(d.slices[level:])
    logger.debug(f"Cut component {component} at level {level}, position {p}")
    return SliceDiagram((Arrow.UP,), tuple(slices), (Arrow.UP,))
