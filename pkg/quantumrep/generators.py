"""
Images of the elementary slices under the Reshetikhin-Turaev functor.

    cup-  : 1 -> sum_k x_k (x) x_k*
    cup+  : 1 -> sum_k c_k x_k* (x) x_k
    cap+  : x_k* (x) x_k -> 1
    cap-  : x_k (x) x_k* -> d_k
    x+    : R on V (x) V
    x-    : R^-1 on V (x) V

with c_k = q^{m-n+1-2k}, d_k = q^{-m+n-1+2k} for k <= m and
c_k = -q^{m-n+2k-1-4m}, d_k = -q^{3m+n+1-2k} for k > m. Both circles then
evaluate to [m-n].
"""

import logging
from dataclasses import dataclass
from typing import Dict

from common.decorators import cache_result
from diagram.model import Arrow, Generator
from quantumrep.matrix import RepMatrix
from quantumrep.qgroup import QGroupData
from ring import RationalQ

logger = logging.getLogger(__name__)

UP_UP = (Arrow.UP, Arrow.UP)
UP_DOWN = (Arrow.UP, Arrow.DOWN)
DOWN_UP = (Arrow.DOWN, Arrow.UP)


@dataclass(frozen=True, eq=False)
class RTGenerators:
    cup_pos: RepMatrix
    cup_neg: RepMatrix
    cap_pos: RepMatrix
    cap_neg: RepMatrix
    r: RepMatrix
    r_inv: RepMatrix

    def for_generator(self, gen: Generator) -> RepMatrix:
        return {
            Generator.CUP_POS: self.cup_pos,
            Generator.CUP_NEG: self.cup_neg,
            Generator.CAP_POS: self.cap_pos,
            Generator.CAP_NEG: self.cap_neg,
            Generator.X_POS: self.r,
            Generator.X_NEG: self.r_inv,
        }[gen]

    def as_dict(self) -> Dict[str, RepMatrix]:
        return {
            "cup+": self.cup_pos,
            "cup-": self.cup_neg,
            "cap+": self.cap_pos,
            "cap-": self.cap_neg,
            "R": self.r,
            "R^-1": self.r_inv,
        }


def cup_coefficient(g: QGroupData, k: int) -> RationalQ:
    m, n = g.m, g.n
    if k <= m:
        return RationalQ.q_power(m - n + 1 - 2 * k)
    return -RationalQ.q_power(m - n + 2 * k - 1 - 4 * m)


def cap_coefficient(g: QGroupData, k: int) -> RationalQ:
    m, n = g.m, g.n
    if k <= m:
        return RationalQ.q_power(-m + n - 1 + 2 * k)
    return -RationalQ.q_power(3 * m + n + 1 - 2 * k)


def r_matrix(g: QGroupData) -> RepMatrix:
    space = g.space
    entries = []
    for i in range(1, space.dim + 1):
        for j in range(1, space.dim + 1):
            col = (i, j)
            if i == j:
                value = RationalQ.q_power(-1) if i <= g.m else -RationalQ.q_power(1)
                entries.append((col, col, value))
                continue
            sign = -1 if space.parity(i) and space.parity(j) else 1
            entries.append(((j, i), col, sign))
            if i > j:
                entries.append((col, col, RationalQ.q_power(-1) - RationalQ.q_power(1)))
    return RepMatrix.from_entries(space, UP_UP, UP_UP, entries)


@cache_result("rt_generators")
def rt_generators(g: QGroupData) -> RTGenerators:
    space = g.space
    ks = range(1, space.dim + 1)
    cup_neg = RepMatrix.from_entries(space, (), UP_DOWN, [((k, k), (), 1) for k in ks])
    cup_pos = RepMatrix.from_entries(space, (), DOWN_UP, [((k, k), (), cup_coefficient(g, k)) for k in ks])
    cap_pos = RepMatrix.from_entries(space, DOWN_UP, (), [((), (k, k), 1) for k in ks])
    cap_neg = RepMatrix.from_entries(space, UP_DOWN, (), [((), (k, k), cap_coefficient(g, k)) for k in ks])
    r = r_matrix(g)
    r_inv = r.inverse()
    logger.debug(f"RT generators for gl({g.m}|{g.n}) ready")
    return RTGenerators(cup_pos, cup_neg, cap_pos, cap_neg, r, r_inv)
