"""
H_N acting on V^{(x)N} for V = C(q)^m, T_i acting as R at tensor positions i, i+1.
"""

import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

from common.exceptions import DivisionByZero
from diagram.model import Arrow
from hecke.algebra import HeckeElem
from hecke.perm import Perm
from quantumrep import RepMatrix, build_qgroup, rt_generators

logger = logging.getLogger(__name__)

DEFAULT_POINTS = (Fraction(2), Fraction(3, 5), Fraction(-7, 3), Fraction(11, 4))


def _basis_image(w: Perm, m: int, cache: Dict[Perm, RepMatrix]) -> RepMatrix:
    if w in cache:
        return cache[w]
    g = build_qgroup(m, 0)
    obj = (Arrow.UP,) * w.size
    result = RepMatrix.identity(g.space, obj)
    if w.length:
        r = rt_generators(g).r
        # T_w = T_{i_1} ... T_{i_k}
        for i in reversed(w.reduced_word()):
            result = r.lift(obj, i) * result
    cache[w] = result
    return result


def schur_weyl_rep(h: HeckeElem, m: int) -> RepMatrix:
    """Image of h in End(V^{(x)N}) for gl(m)"""
    g = build_qgroup(m, 0)
    obj = (Arrow.UP,) * h.n
    cache: Dict[Perm, RepMatrix] = {}
    total = RepMatrix.zero(g.space, obj, obj)
    for w, c in h.items():
        total = total + _basis_image(w, m, cache).scaled(c)
    return total


def span_rank(matrices: Sequence[RepMatrix], points: Optional[Iterable[Fraction]] = None) -> int:
    """
    Rank of the Q(q)-span of the matrices.

    Each matrix is flattened to a row, the rows are evaluated at rational
    points and ranked exactly over QQ; the largest rank seen is the generic
    rank unless every point is special.
    """
    if not matrices:
        return 0
    positions = sorted({(row, col) for mat in matrices for row, col, _ in mat.items()})
    if not positions:
        return 0
    best = 0
    for point in points or DEFAULT_POINTS:
        try:
            rows: List[list] = []
            for mat in matrices:
                values = [mat.entry(row, col).evaluate(point) for row, col in positions]
                rows.append([QQ(v.numerator, v.denominator) for v in values])
        except DivisionByZero:
            logger.debug(f"Skipping rank point q = {point}: pole")
            continue
        rank = DomainMatrix(rows, (len(rows), len(positions)), QQ).rank()
        logger.debug(f"Rank {rank} of {len(rows)} matrices at q = {point}")
        best = max(best, rank)
    return best
