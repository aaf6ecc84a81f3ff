"""
Compile slice diagrams into ladder words.

Every boundary point is a column: an upward point has degree 1, a downward
point degree m-1. Each cup owns a pair of empty columns, (m, 0) for cup+ and
(0, m) for cup-, appended to the right of the source columns in the order
the cups occur. The four cup/cap rules are

    cup+ : F on (m, 0) -> (m-1, 1)      cap+ : E on (m-1, 1) -> (m, 0)
    cup- : E on (0, m) -> (1, m-1)      cap- : F on (1, m-1) -> (0, m)

and an upward crossing of sign s is q^-s - F E on (1, 1). Empty columns are
moved past their neighbours by E^k or F^k followed by the scalar that makes
the string the plain exchange of the two columns.

Words of V and V* are read as ladder states by sending x_k to e_k and x_k*
to phi_k e_{[m]-k}, with phi read off the cup+ rule. The remaining cup/cap
scalars come from the zigzag identities and the unknot value [m].
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from common.decorators import cache_result, log_function_call
from common.exceptions import InconsistentNormalization, MalformedDiagram
from diagram import SliceDiagram, boundaries, orient_upward
from diagram.model import Arrow, Generator
from quantumrep import RepMatrix, build_qgroup
from quantumrep.matrix import Column
from ring import RationalQ, qint, render_rational
from schur.generators import local_generator
from schur.ladder import LadderLetter, LadderWord, Roles, eval_ladder
from schur.wedge import State, Subset, Vector, WedgeMap, states
from schur.weight import LetterKind, SchurWeight

logger = logging.getLogger(__name__)


def rules(m: int) -> Dict[Generator, Tuple[LetterKind, Tuple[int, int]]]:
    """Letter and starting degrees of each cup/cap rule"""
    return {
        Generator.CUP_POS: (LetterKind.F, (m, 0)),
        Generator.CUP_NEG: (LetterKind.E, (0, m)),
        Generator.CAP_POS: (LetterKind.E, (m - 1, 1)),
        Generator.CAP_NEG: (LetterKind.F, (1, m - 1)),
    }


def _strand_subset(k: int, arrow: Arrow, m: int) -> Subset:
    if arrow is Arrow.UP:
        return (k,)
    return tuple(j for j in range(1, m + 1) if j != k)


def _strand_index(subset: Subset, arrow: Arrow, m: int) -> int:
    if arrow is Arrow.UP:
        return subset[0]
    return next(k for k in range(1, m + 1) if k not in subset)


def _empty_subset(degree: int, m: int) -> Subset:
    return () if degree == 0 else tuple(range(1, m + 1))


# ============================================================================
# TRANSPORT
# ============================================================================

def _encode(word, degrees, roles: Roles, phi: Dict[int, RationalQ], m: int) -> Tuple[State, RationalQ]:
    """Ladder state and scalar with Phi(x_word) = scalar * state"""
    letters = iter(word)
    state: List[Subset] = []
    scalar = RationalQ.one()
    for degree, arrow in zip(degrees, roles):
        if arrow is None:
            state.append(_empty_subset(degree, m))
            continue
        k = next(letters)
        state.append(_strand_subset(k, arrow, m))
        if arrow is Arrow.DOWN:
            scalar = scalar * phi[k]
    return tuple(state), scalar


def _decode(state: State, roles: Roles, phi: Dict[int, RationalQ], m: int) -> Tuple[Tuple[int, ...], RationalQ]:
    """Word and scalar with state = scalar * Phi(x_word)"""
    word = []
    scalar = RationalQ.one()
    for subset, arrow in zip(state, roles):
        if arrow is None:
            continue
        k = _strand_index(subset, arrow, m)
        word.append(k)
        if arrow is Arrow.DOWN:
            scalar = scalar / phi[k]
    return tuple(word), scalar


def transport(wmap: WedgeMap, source_roles: Roles, target_roles: Roles, phi: Dict[int, RationalQ]) -> RepMatrix:
    """Phi^-1 o wmap o Phi as a matrix between words of V and V*"""
    m = wmap.m
    g = build_qgroup(m, 0)
    source = tuple(a for a in source_roles if a is not None)
    target = tuple(a for a in target_roles if a is not None)
    cols: Dict[tuple, Column] = {}
    for word in g.space.words(source):
        state, scalar = _encode(word, wmap.source, source_roles, phi, m)
        out: Column = {}
        for row, value in wmap.column(state).items():
            row_word, row_scalar = _decode(row, target_roles, phi, m)
            total = value * scalar * row_scalar
            out[row_word] = out[row_word] + total if row_word in out else total
        cols[word] = out
    return RepMatrix(g.space, source, target, cols)


# ============================================================================
# CALIBRATION
# ============================================================================

@dataclass(frozen=True, eq=False)
class Calibration:
    """
    phi identifies x_k* with phi_k e_{[m]-k}; ratios[g] is the factor the raw
    rule of g carries over its normalized form
    """
    m: int
    phi: Dict[int, RationalQ]
    ratios: Dict[Generator, RationalQ]


_CIRCLE_NEG = ("-", [(1, "cup-"), (1, "cap-")], "-")
_CIRCLE_POS = ("-", [(1, "cup+"), (1, "cap+")], "-")
_ZIGZAG_CUP_POS = ("u", [(2, "cup+"), (1, "cap-")], "u")
_ZIGZAG_CUP_NEG = ("u", [(1, "cup-"), (2, "cap+")], "u")

_UNIT = {gen: RationalQ.one() for gen in rules(1)}


def _rule_map(m: int, gen: Generator) -> WedgeMap:
    kind, (a, b) = rules(m)[gen]
    return local_generator(m, kind, a, b)


def _raw_closed(shape, m: int) -> RationalQ:
    value = _closed_value(_compile(SliceDiagram.build(*shape), m, _UNIT), m)
    if value.is_zero():
        raise InconsistentNormalization(f"raw circle {shape[1]} vanishes for m={m}")
    return value


def _raw_zigzag(shape, m: int, phi: Dict[int, RationalQ]) -> RationalQ:
    word = _compile(SliceDiagram.build(*shape), m, _UNIT)
    value = transport(eval_ladder(word, m), word.start_roles, word.end_roles, phi).scalar_value()
    if value is None or value.is_zero():
        raise InconsistentNormalization(f"zigzag {shape[1]} is not a nonzero scalar for m={m}")
    return value


@cache_result("ladder_calibration")
def calibrate(m: int) -> Calibration:
    """
    Fix the cup/cap scalars from the ladder relations alone.

    cup+ is left raw. cap- follows from the zigzag through cup+, cup- from
    F E 1_[0,m] = [m], cap+ from the zigzag through cup-, and E F 1_[m,0] = [m]
    is then checked.
    """
    full = (tuple(range(1, m + 1)), ())
    image = _rule_map(m, Generator.CUP_POS).column(full)
    phi: Dict[int, RationalQ] = {}
    for k in range(1, m + 1):
        value = image.get((_strand_subset(k, Arrow.DOWN, m), (k,)))
        if value is None:
            raise InconsistentNormalization(f"cup+ ladder rule misses x_{k}* (x) x_{k} for m={m}")
        phi[k] = value

    unknot = qint(m)
    ratios = {Generator.CUP_POS: RationalQ.one()}
    ratios[Generator.CAP_NEG] = _raw_zigzag(_ZIGZAG_CUP_POS, m, phi)
    ratios[Generator.CUP_NEG] = _raw_closed(_CIRCLE_NEG, m) / (unknot * ratios[Generator.CAP_NEG])
    ratios[Generator.CAP_POS] = _raw_zigzag(_ZIGZAG_CUP_NEG, m, phi) / ratios[Generator.CUP_NEG]
    circle = _raw_closed(_CIRCLE_POS, m) / ratios[Generator.CAP_POS]
    if circle != unknot:
        raise InconsistentNormalization(
            f"E F 1_[{m},0] gives {render_rational(circle)} instead of [{m}]"
        )
    logger.debug(f"ladder calibration m={m}: " + ", ".join(
        f"{gen.value}={render_rational(r)}" for gen, r in ratios.items()
    ))
    return Calibration(m, phi, ratios)


@cache_result("ladder_swap")
def swap_scalar(m: int, x: int, y: int) -> RationalQ:
    """c with E^(y-x) (or F^(x-y)) = c * plain exchange on 1_[x,y]"""
    if x not in (0, m) and y not in (0, m):
        raise ValueError(f"columns of degrees {x} and {y} are not exchanged by a ladder")
    if x == y:
        return RationalQ.one()
    kind = LetterKind.E if x < y else LetterKind.F
    c: Optional[RationalQ] = None
    for state in states(m, (x, y)):
        vector: Vector = {state: RationalQ.one()}
        a, b = x, y
        for _ in range(abs(y - x)):
            vector = local_generator(m, kind, a, b).apply_at(vector, 1)
            a, b = (a + 1, b - 1) if kind is LetterKind.E else (a - 1, b + 1)
        swapped = (state[1], state[0])
        value = vector.get(swapped)
        if value is None or len(vector) != 1 or (c is not None and value != c):
            raise InconsistentNormalization(f"exchange of columns [{x},{y}] is not scalar for m={m}")
        c = value
    return c


# ============================================================================
# COMPILER
# ============================================================================

@dataclass
class _Column:
    degree: int
    arrow: Optional[Arrow]
    token: int


class _LadderBuilder:
    def __init__(self, m: int, source: Tuple[Arrow, ...], cups: List[Generator], ratios: Dict[Generator, RationalQ]):
        self.m = m
        self.columns: List[_Column] = [
            _Column(1 if a is Arrow.UP else m - 1, a, -1) for a in source
        ]
        for token, gen in enumerate(cups):
            left, right = rules(m)[gen][1]
            self.columns += [_Column(left, None, token), _Column(right, None, token)]
        self.start = SchurWeight(tuple(c.degree for c in self.columns))
        self.start_roles: Roles = tuple(c.arrow for c in self.columns)
        self.letters: List[LadderLetter] = []
        self.scale = RationalQ.one()
        self.ratios = ratios

    def strands(self) -> List[int]:
        return [j for j, c in enumerate(self.columns) if c.arrow is not None]

    def swap(self, j: int):
        """Exchange columns j and j+1 (0-based)"""
        x, y = self.columns[j].degree, self.columns[j + 1].degree
        if x != y:
            kind = LetterKind.E if x < y else LetterKind.F
            self.letters += [LadderLetter(kind, j + 1)] * abs(y - x)
            c = swap_scalar(self.m, x, y)
            if not c.is_one():
                self.letters.append(LadderLetter.scalar(c.inv()))
        self.columns[j], self.columns[j + 1] = self.columns[j + 1], self.columns[j]

    def adjacent_strands(self, i: int) -> int:
        """Bring strand i+1 next to strand i; column of strand i"""
        strands = self.strands()
        left, right = strands[i - 1], strands[i]
        while right > left + 1:
            self.swap(right - 1)
            right -= 1
        return left

    def cup(self, i: int, gen: Generator, token: int):
        pair = next(j for j, c in enumerate(self.columns) if c.token == token and c.arrow is None)
        strands = self.strands()
        if i <= len(strands):
            while pair > strands[i - 1]:
                self.swap(pair - 1)
                self.swap(pair)
                pair -= 1
        kind, _ = rules(self.m)[gen]
        self.letters.append(LadderLetter(kind, pair + 1))
        left, right = (Arrow.DOWN, Arrow.UP) if gen is Generator.CUP_POS else (Arrow.UP, Arrow.DOWN)
        for column, arrow in ((self.columns[pair], left), (self.columns[pair + 1], right)):
            column.arrow = arrow
            column.degree = 1 if arrow is Arrow.UP else self.m - 1
        self.scale = self.scale / self.ratios[gen]

    def cap(self, i: int, gen: Generator):
        j = self.adjacent_strands(i)
        kind, _ = rules(self.m)[gen]
        self.letters.append(LadderLetter(kind, j + 1))
        left, right = (self.m, 0) if gen is Generator.CAP_POS else (0, self.m)
        self.columns[j].degree, self.columns[j].arrow = left, None
        self.columns[j + 1].degree, self.columns[j + 1].arrow = right, None
        self.scale = self.scale / self.ratios[gen]

    def crossing(self, i: int, gen: Generator):
        j = self.adjacent_strands(i)
        self.letters.append(LadderLetter.crossing(j + 1, gen.epsilon))

    def word(self) -> LadderWord:
        letters = list(self.letters)
        if not self.scale.is_one():
            letters.append(LadderLetter.scalar(self.scale))
        end_roles = tuple(c.arrow for c in self.columns)
        return LadderWord(self.start, tuple(letters), self.start_roles, end_roles)


def _compile(d: SliceDiagram, m: int, ratios: Dict[Generator, RationalQ]) -> LadderWord:
    boundaries(d)
    up = orient_upward(d)
    cups = [s.generator for s in up.slices if s.generator.is_cup]
    builder = _LadderBuilder(m, up.source, cups, ratios)
    token = 0
    for s in up.slices:
        g = s.generator
        if g.is_cup:
            builder.cup(s.position, g, token)
            token += 1
        elif g.is_cap:
            builder.cap(s.position, g)
        elif g.is_crossing:
            builder.crossing(s.position, g)
    word = builder.word()
    logger.debug(f"ladder for m={m}: {builder.start.l} columns, {len(word.letters)} letters")
    return word


def _closed_value(word: LadderWord, m: int) -> RationalQ:
    wmap = eval_ladder(word, m)
    (source,) = states(m, word.start.parts)
    (target,) = states(m, word.end.parts)
    return wmap.entry(target, source)


@log_function_call
def tangle_to_ladder(d: SliceDiagram, m: int) -> LadderWord:
    """Ladder word of d for sl_m; crossings are first turned upward"""
    if m < 1:
        raise ValueError(f"ladders need m >= 1, got {m}")
    return _compile(d, m, calibrate(m).ratios)


def ladder_to_rep(word: LadderWord, m: int, phi: Optional[Dict[int, RationalQ]] = None) -> RepMatrix:
    """The evaluated word as a map between words of V and V*; phi overrides the dual identification"""
    if word.start_roles is None or word.end_roles is None:
        raise ValueError("ladder word carries no boundary roles")
    return transport(eval_ladder(word, m), word.start_roles, word.end_roles, phi or calibrate(m).phi)


@log_function_call
def schur_closed(d: SliceDiagram, m: int) -> RationalQ:
    """The sl_m invariant of a closed diagram by ladder evaluation"""
    if not d.is_closed:
        raise MalformedDiagram("schur_closed needs a closed diagram")
    return _closed_value(tangle_to_ladder(d, m), m)
