"""
The vector representation of U_q(gl(m|n)) with its Hopf data.

Generators act on V = C(q)^{m|n} by E_i x_{i+1} = x_i, F_i x_i = x_{i+1},
L_i x_i = q x_i. Tensor words are acted on through the iterated
coproduct with Koszul signs, duals through the antipode.
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from common.decorators import cache_result
from diagram.model import Arrow, Boundary, boundary_text
from quantumrep.matrix import RepMatrix, SuperSpace
from ring import RationalQ, qint

logger = logging.getLogger(__name__)

V: Boundary = (Arrow.UP,)
V_DUAL: Boundary = (Arrow.DOWN,)


class GenKind(str, Enum):
    E = "E"
    F = "F"
    L = "L"
    L_INV = "L^-1"
    K = "K"
    K_INV = "K^-1"


class Gen(NamedTuple):
    kind: GenKind
    index: int

    def __str__(self) -> str:
        if self.kind is GenKind.L_INV:
            return f"L{self.index}^-1"
        if self.kind is GenKind.K_INV:
            return f"K{self.index}^-1"
        return f"{self.kind.value}{self.index}"


def E(i: int) -> Gen:
    return Gen(GenKind.E, i)


def F(i: int) -> Gen:
    return Gen(GenKind.F, i)


def L(i: int) -> Gen:
    return Gen(GenKind.L, i)


def K(i: int) -> Gen:
    return Gen(GenKind.K, i)


def K_inv(i: int) -> Gen:
    return Gen(GenKind.K_INV, i)


_INVERSE = {
    GenKind.L: GenKind.L_INV,
    GenKind.L_INV: GenKind.L,
    GenKind.K: GenKind.K_INV,
    GenKind.K_INV: GenKind.K,
}

# Delta(x) = sum of left (x) right; None is the unit
Coproduct = List[Tuple[Optional[Gen], Optional[Gen]]]


@dataclass(frozen=True, eq=False)
class QGroupData:
    space: SuperSpace
    on_v: Dict[Gen, RepMatrix] = field(repr=False)

    @property
    def m(self) -> int:
        return self.space.m

    @property
    def n(self) -> int:
        return self.space.n

    @property
    def rank(self) -> int:
        return self.space.dim - 1

    def parity(self, x: Gen) -> int:
        if x.kind in (GenKind.E, GenKind.F):
            return (self.space.parity(x.index) + self.space.parity(x.index + 1)) % 2
        return 0

    def generators(self) -> List[Gen]:
        """E_i, F_i and L_i; K_i and the inverses are products of these"""
        gens = [E(i) for i in range(1, self.rank + 1)] + [F(i) for i in range(1, self.rank + 1)]
        return gens + [L(i) for i in range(1, self.space.dim + 1)]

    def matrix(self, x: Gen) -> RepMatrix:
        return self.on_v[x]

    # ------------------------------------------------------------------
    # Hopf structure
    # ------------------------------------------------------------------

    def coproduct(self, x: Gen) -> Coproduct:
        if x.kind is GenKind.E:
            return [(x, K_inv(x.index)), (None, x)]
        if x.kind is GenKind.F:
            return [(x, None), (K(x.index), x)]
        return [(x, x)]

    def counit(self, x: Gen) -> int:
        return 0 if x.kind in (GenKind.E, GenKind.F) else 1

    def antipode(self, x: Gen) -> RepMatrix:
        """S(x) on V: S(E) = -E K, S(F) = -K^-1 F, S(L) = L^-1"""
        if x.kind is GenKind.E:
            return -(self.on_v[x] * self.on_v[K(x.index)])
        if x.kind is GenKind.F:
            return -(self.on_v[K_inv(x.index)] * self.on_v[x])
        return self.on_v[Gen(_INVERSE[x.kind], x.index)]

    def on_dual(self, x: Gen) -> RepMatrix:
        """(x.f)(v) = (-1)^{|x||f|} f(S(x) v) on V*"""
        s = self.antipode(x)
        odd = self.parity(x)
        entries = []
        for row, col, value in s.items():
            # x . x_j* has coefficient S(x)[j][k] on x_k*
            (j,), (k,) = row, col
            sign = -1 if odd and self.space.parity(j) else 1
            entries.append(((k,), (j,), value * sign))
        return RepMatrix.from_entries(self.space, V_DUAL, V_DUAL, entries)

    def action(self, x: Gen, obj: Boundary) -> RepMatrix:
        return _action(self, x, tuple(obj))


@cache_result("qgroup_action")
def _action(g: QGroupData, x: Gen, obj: Boundary) -> RepMatrix:
    if not obj:
        return RepMatrix.identity(g.space, obj).scaled(g.counit(x))
    if len(obj) == 1:
        return g.matrix(x) if obj[0] is Arrow.UP else g.on_dual(x)

    head, rest = obj[:1], obj[1:]
    total = RepMatrix.zero(g.space, obj, obj)
    for left, right in g.coproduct(x):
        a = _action(g, left, head) if left is not None else RepMatrix.identity(g.space, head)
        b = _action(g, right, rest) if right is not None else RepMatrix.identity(g.space, rest)
        parity = g.parity(right) if right is not None else 0
        total = total + a.tensor(b, parity)
    return total


# ============================================================================
# CONSTRUCTION
# ============================================================================

def _diagonal(space: SuperSpace, exponent) -> RepMatrix:
    entries = [((j,), (j,), RationalQ.q_power(exponent(j))) for j in range(1, space.dim + 1)]
    return RepMatrix.from_entries(space, V, V, entries)


def _k_exponent(space: SuperSpace, i: int, j: int) -> int:
    """K_i = L_i^{(-1)^|i|} L_{i+1}^{-(-1)^|i+1|} on x_j"""
    out = 0
    if j == i:
        out += (-1) ** space.parity(i)
    if j == i + 1:
        out -= (-1) ** space.parity(i + 1)
    return out


@cache_result("build_qgroup")
def build_qgroup(m: int, n: int) -> QGroupData:
    space = SuperSpace(m, n)
    on_v: Dict[Gen, RepMatrix] = {}
    for i in range(1, space.dim):
        on_v[E(i)] = RepMatrix.from_entries(space, V, V, [((i,), (i + 1,), 1)])
        on_v[F(i)] = RepMatrix.from_entries(space, V, V, [((i + 1,), (i,), 1)])
        on_v[K(i)] = _diagonal(space, lambda j, i=i: _k_exponent(space, i, j))
        on_v[K_inv(i)] = _diagonal(space, lambda j, i=i: -_k_exponent(space, i, j))
    for i in range(1, space.dim + 1):
        on_v[L(i)] = _diagonal(space, lambda j, i=i: 1 if j == i else 0)
        on_v[Gen(GenKind.L_INV, i)] = _diagonal(space, lambda j, i=i: -1 if j == i else 0)
    logger.debug(f"Built U_q(gl({m}|{n})) on V with {len(on_v)} generator matrices")
    return QGroupData(space, on_v)


def dual_action(g: QGroupData) -> Dict[Gen, RepMatrix]:
    """
    The action on V* written out case by case:

        E_i x_i*     = -q^-1 x_{i+1}*  (i < m),   -q x_{i+1}*  (i >= m)
        F_i x_{i+1}* = -q x_i*  (i < m),  q^-1 x_i*  (i = m),  -q^-1 x_i*  (i > m)
        K_i x_i*     = q^-1 x_i*  (i <= m),  q x_i*  (i > m)
        K_i x_{i+1}* = q x_{i+1}*  (i < m),  q^-1 x_{i+1}*  (i >= m)
        L_i x_i*     = q^-1 x_i*
    """
    space, m = g.space, g.m
    out: Dict[Gen, RepMatrix] = {}

    def single(row: int, col: int, value) -> RepMatrix:
        return RepMatrix.from_entries(space, V_DUAL, V_DUAL, [((row,), (col,), value)])

    def diag(values: Dict[int, int]) -> RepMatrix:
        entries = [((j,), (j,), RationalQ.q_power(values.get(j, 0))) for j in range(1, space.dim + 1)]
        return RepMatrix.from_entries(space, V_DUAL, V_DUAL, entries)

    for i in range(1, space.dim):
        out[E(i)] = single(i + 1, i, -RationalQ.q_power(-1 if i < m else 1))
        if i < m:
            out[F(i)] = single(i, i + 1, -RationalQ.q_power(1))
        elif i == m:
            out[F(i)] = single(i, i + 1, RationalQ.q_power(-1))
        else:
            out[F(i)] = single(i, i + 1, -RationalQ.q_power(-1))
        k_values = {i: -1 if i <= m else 1, i + 1: 1 if i < m else -1}
        out[K(i)] = diag(k_values)
        out[K_inv(i)] = diag({j: -e for j, e in k_values.items()})
    for i in range(1, space.dim + 1):
        out[L(i)] = diag({i: -1})
        out[Gen(GenKind.L_INV, i)] = diag({i: 1})
    return out


# ============================================================================
# RELATIONS
# ============================================================================

@dataclass(frozen=True)
class RelationCheck:
    relation: str
    detail: str
    obj: str
    ok: bool


@dataclass
class RelationReport:
    m: int
    n: int
    checks: List[RelationCheck] = field(default_factory=list)

    @property
    def failures(self) -> List[RelationCheck]:
        return [c for c in self.checks if not c.ok]

    @property
    def ok(self) -> bool:
        return not self.failures

    def relations(self) -> List[str]:
        return sorted({c.relation for c in self.checks})

    def __str__(self) -> str:
        lines = [f"gl({self.m}|{self.n}): {len(self.checks) - len(self.failures)}/{len(self.checks)} relations hold"]
        lines += [f"  FAILED {c.relation} {c.detail} on {c.obj}" for c in self.failures]
        return "\n".join(lines)


def _serre(a: RepMatrix, b: RepMatrix, two: RationalQ) -> RepMatrix:
    """a^2 b - [2] a b a + b a^2"""
    return a * a * b - (a * b * a).scaled(two) + b * a * a


def _super_serre(mid: RepMatrix, lo: RepMatrix, hi: RepMatrix, two: RationalQ) -> RepMatrix:
    return (
        mid * lo * mid * hi + lo * mid * hi * mid + mid * hi * mid * lo
        + hi * mid * lo * mid - (mid * lo * hi * mid).scaled(two)
    )


def check_relations(g: QGroupData, objects: Optional[Sequence[Boundary]] = None) -> RelationReport:
    """
    Verify the defining relations as matrix identities on each object
    (default V and V (x) V), acting through the coproduct.
    """
    objects = [tuple(o) for o in (objects or [V, (Arrow.UP, Arrow.UP)])]
    report = RelationReport(g.m, g.n)
    m, rank, dim = g.m, g.rank, g.space.dim
    two = qint(2)
    qdiff_inv = (RationalQ.q_power(1) - RationalQ.q_power(-1)).inv()

    for obj in objects:
        where = boundary_text(obj)
        act = {x: g.action(x, obj) for x in g.generators()}
        for i in range(1, rank + 1):
            act[K(i)] = g.action(K(i), obj)
            act[K_inv(i)] = g.action(K_inv(i), obj)
        zero = RepMatrix.zero(g.space, obj, obj)

        def record(relation: str, detail: str, ok: bool):
            report.checks.append(RelationCheck(relation, detail, where, ok))

        for i in range(1, rank + 1):
            for j in range(1, dim + 1):
                e_exp = (1 if j == i else 0) - (1 if j == i + 1 else 0)
                lj = act[L(j)]
                record("weight", f"L{j} E{i}", lj * act[E(i)] == (act[E(i)] * lj).scaled(RationalQ.q_power(e_exp)))
                record("weight", f"L{j} F{i}", lj * act[F(i)] == (act[F(i)] * lj).scaled(RationalQ.q_power(-e_exp)))

        for i in range(1, rank + 1):
            lhs = (act[E(i)] * act[F(i)]).scaled((-1) ** g.space.parity(i)) \
                - (act[F(i)] * act[E(i)]).scaled((-1) ** g.space.parity(i + 1))
            rhs = (act[K(i)] - act[K_inv(i)]).scaled(qdiff_inv)
            record("commutator", f"E{i} F{i}", lhs == rhs)

        if 1 <= m <= rank:
            record("nilpotent", f"E{m}^2", act[E(m)] * act[E(m)] == zero)
            record("nilpotent", f"F{m}^2", act[F(m)] * act[F(m)] == zero)

        for i in range(1, rank + 1):
            for j in range(1, rank + 1):
                if abs(i - j) >= 2 and i < j:
                    record("far-commute", f"E{i} E{j}", act[E(i)] * act[E(j)] == act[E(j)] * act[E(i)])
                    record("far-commute", f"F{i} F{j}", act[F(i)] * act[F(j)] == act[F(j)] * act[F(i)])
                if i != j:
                    record("mixed-commute", f"E{i} F{j}", act[E(i)] * act[F(j)] == act[F(j)] * act[E(i)])

        for i in range(1, rank):
            if m in (i, i + 1):
                continue
            a, b = act[E(i)], act[E(i + 1)]
            record("serre", f"E{i}^2 E{i + 1}", _serre(a, b, two) == zero)
            record("serre", f"E{i + 1}^2 E{i}", _serre(b, a, two) == zero)
            a, b = act[F(i)], act[F(i + 1)]
            record("serre", f"F{i}^2 F{i + 1}", _serre(a, b, two) == zero)
            record("serre", f"F{i + 1}^2 F{i}", _serre(b, a, two) == zero)

        if m >= 2 and g.n >= 2:
            record("super-serre", f"E{m}", _super_serre(act[E(m)], act[E(m - 1)], act[E(m + 1)], two) == zero)
            record("super-serre", f"F{m}", _super_serre(act[F(m)], act[F(m - 1)], act[F(m + 1)], two) == zero)

    logger.debug(f"Checked {len(report.checks)} relations for gl({g.m}|{g.n}), {len(report.failures)} failed")
    return report


def intertwines(matrix: RepMatrix, g: QGroupData,
                source: Optional[Boundary] = None, target: Optional[Boundary] = None) -> bool:
    """True if the even map commutes with every generator acting on its source and target"""
    source = tuple(matrix.source if source is None else source)
    target = tuple(matrix.target if target is None else target)
    for x in g.generators():
        if g.action(x, target) * matrix != matrix * g.action(x, source):
            logger.debug(f"{x} does not commute with {matrix!r}")
            return False
    return True
