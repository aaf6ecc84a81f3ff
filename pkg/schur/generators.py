"""
Ladder generators E_i, F_i acting on tensor products of wedge spaces.

The box maps move one basis vector between neighbouring columns:

    E-hat on (a, b) = (merge_{a,1} (x) 1) o (1 (x) split_{1,b-1})
    F-hat on (a, b) = (1 (x) merge_{1,b}) o (split_{a-1,1} (x) 1)

E_i and F_i are these maps times scalars lambda_E(a, b), lambda_F(a, b).
The gauge fixes lambda_E(a, b) = [b]; every lambda_F is then solved from the
relation E F - F E = [a - b] on 1_[a,b], checked on every state, and the
crossing q^-1 - F E on 1_[1,1] is checked against R.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Tuple

from common.decorators import cache_result
from common.exceptions import InconsistentNormalization
from diagram.model import Arrow
from quantumrep import RepMatrix, build_qgroup, rt_generators
from ring import RationalQ, qint, render_rational
from schur.wedge import WedgeMap, merge, split, states
from schur.weight import LetterKind, SchurWeight, admissible, shift

logger = logging.getLogger(__name__)

Pair = Tuple[int, int]


@cache_result("ladder_box")
def box_map(m: int, kind: LetterKind, a: int, b: int) -> WedgeMap:
    """Unnormalized E-hat / F-hat from (a, b); zero into inadmissible weights"""
    target = shift(a, b, kind)
    if not (admissible(m, (a, b)) and admissible(m, target)):
        return WedgeMap.zero(m, (a, b), target)
    if kind is LetterKind.E:
        first = split(m, 1, b - 1).lift((a, b), 2)
        return merge(m, a, 1).lift((a, 1, b - 1), 1) * first
    first = split(m, a - 1, 1).lift((a, b), 1)
    return merge(m, 1, b).lift((a - 1, 1, b), 2) * first


@dataclass(frozen=True, eq=False)
class Normalization:
    m: int
    lambda_e: Dict[Pair, RationalQ]
    lambda_f: Dict[Pair, RationalQ]

    def scalar(self, kind: LetterKind, a: int, b: int) -> RationalQ:
        table = self.lambda_e if kind is LetterKind.E else self.lambda_f
        return table.get((a, b), RationalQ.zero())

    def generator(self, kind: LetterKind, a: int, b: int) -> WedgeMap:
        return box_map(self.m, kind, a, b).scaled(self.scalar(kind, a, b))


def _edge_product(m: int, a: int, b: int) -> RationalQ:
    """
    lambda_F(a, b) * lambda_E(a-1, b+1), read off one state where the other
    term of the commutator vanishes
    """
    f_hat = box_map(m, LetterKind.F, a, b)
    e_hat = box_map(m, LetterKind.E, a - 1, b + 1)
    if b < a:
        # E-hat kills (S, T) with T inside S
        state = (tuple(range(1, a + 1)), tuple(range(1, b + 1)))
        d = (e_hat * f_hat).entry(state, state)
        wanted = qint(a - b)
    else:
        # F-hat kills (S, T) with S inside T
        state = (tuple(range(1, a)), tuple(range(1, b + 2)))
        d = (f_hat * e_hat).entry(state, state)
        wanted = -qint(a - b - 2)
    if d.is_zero():
        raise InconsistentNormalization(f"no scalar fixes the edge [{a},{b}] -> [{a - 1},{b + 1}] for m={m}")
    return wanted / d


def _check_commutator(norm: Normalization, a: int, b: int):
    m = norm.m
    ef = norm.generator(LetterKind.E, a - 1, b + 1) * norm.generator(LetterKind.F, a, b)
    fe = norm.generator(LetterKind.F, a + 1, b - 1) * norm.generator(LetterKind.E, a, b)
    expected = WedgeMap.identity(m, (a, b)).scaled(qint(a - b))
    if ef - fe != expected:
        raise InconsistentNormalization(f"E F - F E on [{a},{b}] is not [{a - b}] for m={m}")


def _check_anchor(norm: Normalization):
    m = norm.m
    g = build_qgroup(m, 0)
    fe = norm.generator(LetterKind.F, 2, 0) * norm.generator(LetterKind.E, 1, 1)
    crossing = WedgeMap.identity(m, (1, 1)).scaled(RationalQ.q_power(-1)) - fe
    up_up = (Arrow.UP, Arrow.UP)
    cols = {s[0] + s[1]: {r[0] + r[1]: v for r, v in crossing.column(s).items()} for s in states(m, (1, 1))}
    if RepMatrix(g.space, up_up, up_up, cols) != rt_generators(g).r:
        raise InconsistentNormalization(f"q^-1 - F E on [1,1] differs from R for m={m}")


@cache_result("ladder_normalization")
def normalize(m: int) -> Normalization:
    """Solve and verify every lambda for rank m"""
    if m < 1:
        raise ValueError(f"ladders need m >= 1, got {m}")
    lambda_e: Dict[Pair, RationalQ] = {}
    lambda_f: Dict[Pair, RationalQ] = {}
    for a in range(1, m + 1):
        for b in range(m):
            product = _edge_product(m, a, b)
            lambda_e[(a - 1, b + 1)] = qint(b + 1)
            lambda_f[(a, b)] = product / qint(b + 1)
    norm = Normalization(m, lambda_e, lambda_f)
    for a in range(m + 1):
        for b in range(m + 1):
            _check_commutator(norm, a, b)
    _check_anchor(norm)
    logger.debug(
        f"ladder normalization m={m}: "
        + ", ".join(f"F[{a},{b}]={render_rational(v)}" for (a, b), v in sorted(lambda_f.items()))
    )
    return norm


@cache_result("ladder_generator")
def local_generator(m: int, kind: LetterKind, a: int, b: int) -> WedgeMap:
    """E or F on the two columns (a, b)"""
    return normalize(m).generator(kind, a, b)


@cache_result("ladder_crossing")
def local_crossing(m: int, sign: int) -> WedgeMap:
    """q^-1 - F E (positive) or q - F E (negative) on 1_[1,1]"""
    fe = local_generator(m, LetterKind.F, 2, 0) * local_generator(m, LetterKind.E, 1, 1)
    return WedgeMap.identity(m, (1, 1)).scaled(RationalQ.q_power(-sign)) - fe


def schur_generator(kind: LetterKind, i: int, weight: SchurWeight, m: int) -> WedgeMap:
    """E_i or F_i on 1_weight, identity on the other columns"""
    if kind not in (LetterKind.E, LetterKind.F):
        raise ValueError(f"{kind.value} is not a ladder generator")
    a, b = weight.pair(i)
    return local_generator(m, kind, a, b).lift(weight.parts, i)


def schur_crossing(weight: SchurWeight, i: int, sign: int, m: int) -> WedgeMap:
    if weight.pair(i) != (1, 1):
        raise ValueError(f"crossings need degrees (1, 1) at columns {i}, {i + 1} of {weight}")
    return local_crossing(m, sign).lift(weight.parts, i)
