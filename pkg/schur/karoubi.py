"""
Hom spaces between wedge tensor products inside End(V^{(x)N}).

The idempotent of 1_[a_1, ..., a_l] is p_{a_1} (x) ... (x) p_{a_l}; the maps
from 1_source to 1_target are p_target o rep(H_N) o p_source.
"""

import logging
from functools import lru_cache
from typing import Sequence, Tuple

from hecke import HeckeElem, all_perms, schur_weyl_rep, span_rank
from quantumrep import RepMatrix, build_qgroup
from schur.wedge import build_wedge

logger = logging.getLogger(__name__)


def weight_idempotent(parts: Sequence[int], m: int) -> RepMatrix:
    g = build_qgroup(m, 0)
    result = RepMatrix.identity(g.space, ())
    for a in parts:
        if a:
            result = result.tensor(build_wedge(m, a).idempotent())
    return result


def karoubi_hom_dimension(target: Sequence[int], source: Sequence[int], m: int) -> int:
    """dim of 1_target H_N 1_source acting on V^{(x)N} for gl(m)"""
    n = sum(source)
    if sum(target) != n:
        return 0
    p_source = weight_idempotent(source, m)
    p_target = weight_idempotent(target, m)
    images = [p_target * schur_weyl_rep(HeckeElem.basis(w), m) * p_source for w in all_perms(n)]
    rank = span_rank(images)
    logger.debug(f"Hom({list(source)} -> {list(target)}) for m={m}: dimension {rank}")
    return rank


@lru_cache(maxsize=None)
def _count_tables(rows: Tuple[int, ...], cols: Tuple[int, ...]) -> int:
    if not rows:
        return 1 if not any(cols) else 0
    first, rest = rows[0], rows[1:]

    def fill(j: int, left: int, used: Tuple[int, ...]) -> int:
        if j == len(cols):
            return _count_tables(rest, tuple(c - u for c, u in zip(cols, used))) if left == 0 else 0
        return sum(fill(j + 1, left - x, used + (x,)) for x in range(min(left, cols[j]) + 1))

    return fill(0, first, ())


def contingency_tables(rows: Sequence[int], cols: Sequence[int]) -> int:
    """
    Nonnegative integer matrices with the given row and column sums.

    Equals the Hom dimension between the wedge tensor products when m >= N.
    """
    return _count_tables(tuple(rows), tuple(cols))
