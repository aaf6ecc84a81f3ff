"""
Evaluate slice diagrams as exact matrices of U_q(gl(m|n)) intertwiners.
"""

import logging

from common.decorators import log_function_call, timed
from common.exceptions import MalformedDiagram, NonScalarEndomorphism
from diagram import SliceDiagram, boundaries, cut_open, orient_upward
from quantumrep.generators import rt_generators
from quantumrep.matrix import Column, RepMatrix
from quantumrep.qgroup import build_qgroup
from ring import RationalQ

logger = logging.getLogger(__name__)


@timed("rt.eval_tangle")
def eval_tangle_rt(d: SliceDiagram, m: int, n: int) -> RepMatrix:
    """
    Push every source basis word through the slices bottom to top.

    Crossings are first rewritten onto upward pairs, so only R and R^-1
    on V (x) V are ever applied.
    """
    boundaries(d)
    g = build_qgroup(m, n)
    gens = rt_generators(g)
    up = orient_upward(d)

    columns = {}
    widest = 0
    for word in g.space.words(up.source):
        vector: Column = {word: RationalQ.one()}
        for s in up.slices:
            vector = gens.for_generator(s.generator).apply_at(vector, s.position)
            widest = max(widest, len(vector))
            if not vector:
                break
        columns[word] = vector
    logger.debug(f"RT gl({m}|{n}): {len(up.slices)} slices, widest state {widest} words")
    return RepMatrix(g.space, up.source, up.target, columns)


@log_function_call
def rt_closed(d: SliceDiagram, m: int, n: int) -> RationalQ:
    """The 1x1 matrix of a closed diagram as a scalar"""
    if not d.is_closed:
        raise MalformedDiagram("rt_closed needs a closed diagram")
    return eval_tangle_rt(d, m, n).entry((), ())


@log_function_call
def alexander_rt(d: SliceDiagram, component: int = 1) -> RationalQ:
    """Scalar of the cut-open diagram at gl(1|1)"""
    if not d.is_closed or not d.slices:
        raise MalformedDiagram("alexander_rt needs a nonempty closed diagram")
    matrix = eval_tangle_rt(cut_open(d, component), 1, 1)
    value = matrix.scalar_value()
    if value is None:
        raise NonScalarEndomorphism(f"cut-open gl(1|1) matrix is not scalar: {matrix.render()}")
    return value
