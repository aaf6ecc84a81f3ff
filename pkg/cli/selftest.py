"""
Acceptance suite run by `--selftest`.

Every check compares exact values; a failing or raising check is reported
in the table and makes the run fail.
"""

import logging
import random
from dataclasses import dataclass, field
from datetime import datetime
from typing import Callable, Dict, List, Optional, Sequence

from common import format_seconds, metrics
from config import config
from diagram import (
    SliceDiagram,
    braid_closure,
    deserialize,
    diagram_stats,
    parse_braid,
    random_braid,
    random_moves,
)
from hecke import HeckeElem, all_perms, antisymmetrizer, schur_weyl_rep, span_rank
from quantumrep import (
    RepMatrix,
    alexander_rt,
    build_qgroup,
    check_relations,
    rt_closed,
    rt_generators,
)
from ring import BETA, LaurentQ, RationalQ, quantum_int, qint, specialize_beta
from schur import WedgeMap, normalize, schur_closed, schur_crossing
from schur.weight import SchurWeight
from skein import ReducedVariant, SkeinEvaluator, homfly, jones, reduced

logger = logging.getLogger(__name__)

TREFOIL_JONES = RationalQ(LaurentQ({3: -1, -1: 1, -3: 1, -5: 1}))

TREFOIL_TEXT = """\
source: -
slice 1 cup+
slice 2 cup+
slice 3 x+
slice 3 x+
slice 3 x+
slice 2 cap+
slice 1 cap+
target: -
"""

HOPF_TEXT = """\
source: -
slice 1 cup+
slice 3 cup-
slice 2 x+
slice 2 x+
slice 3 cap-
slice 1 cap+
target: -
"""

BENCH_8 = "1 -2 1 -2 1 -2 1 -2"
BENCH_10 = "1 -2 1 -2 1 -2 1 -2 1 -2"


@dataclass
class SelftestCheck:
    name: str
    ok: bool
    detail: str = ""
    elapsed: float = 0.0


@dataclass
class SelftestReport:
    checks: List[SelftestCheck] = field(default_factory=list)
    timings: Dict[str, float] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> List[SelftestCheck]:
        return [c for c in self.checks if not c.ok]

    def table(self) -> str:
        width = max((len(c.name) for c in self.checks), default=4)
        lines = [f"{'check':<{width}}  result  time"]
        for c in self.checks:
            status = "PASS" if c.ok else "FAIL"
            line = f"{c.name:<{width}}  {status:<6}  {format_seconds(c.elapsed)}"
            if c.detail:
                line += f"  {c.detail}"
            lines.append(line)
        for name, seconds in self.timings.items():
            lines.append(f"timing {name}: {format_seconds(seconds)}")
        passed = len(self.checks) - len(self.failures)
        lines.append(f"{passed}/{len(self.checks)} checks passed")
        return "\n".join(lines)


@dataclass
class SelftestContext:
    rng: random.Random
    cases: int
    report: SelftestReport
    mutate_r: bool = False


CheckFn = Callable[[SelftestContext], Optional[str]]
_CHECKS: Dict[str, CheckFn] = {}


def check(name: str) -> Callable[[CheckFn], CheckFn]:
    """Register a selftest check; it returns a detail string or raises AssertionError"""
    def decorator(func: CheckFn) -> CheckFn:
        _CHECKS[name] = func
        return func
    return decorator


def check_names() -> List[str]:
    return list(_CHECKS)


def _closure(word: str, strands: int) -> SliceDiagram:
    return braid_closure(parse_braid(word, strands))


def _random_closed(rng: random.Random, max_strands: int = 3, max_length: int = 4) -> SliceDiagram:
    return braid_closure(random_braid(rng, rng.randint(1, max_strands), rng.randint(0, max_length)))


def _named_links() -> Dict[str, SliceDiagram]:
    unknot = SliceDiagram.build("-", [(1, "cup+"), (1, "cap+")], "-")
    return {
        "unknot": unknot,
        "trefoil": deserialize(TREFOIL_TEXT),
        "figure_eight": _closure("1 -2 1 -2", 3),
        "hopf": deserialize(HOPF_TEXT),
    }


# ============================================================================
# CHECKS
# ============================================================================

@check("trefoil-jones")
def _trefoil_jones(ctx: SelftestContext) -> str:
    d = deserialize(TREFOIL_TEXT)
    assert jones(d) == TREFOIL_JONES, "skein"
    assert rt_closed(d, 2, 0) == TREFOIL_JONES, "rt(2,0)"
    assert schur_closed(d, 2) == TREFOIL_JONES, "schur(2)"
    return "skein, rt(2,0), schur(2)"


@check("unknot-family")
def _unknot_family(ctx: SelftestContext) -> str:
    unknot = _named_links()["unknot"]
    assert homfly(unknot) == quantum_int(BETA), "skein"
    for m, n in ((1, 0), (2, 0), (3, 0), (1, 1), (2, 1)):
        assert rt_closed(unknot, m, n) == qint(m - n), f"rt({m},{n})"
    for m in (1, 2, 3, 4):
        assert schur_closed(unknot, m) == qint(m), f"schur({m})"
    return "skein, 5 RT ranks, 4 Schur ranks"


@check("hopf-link")
def _hopf_link(ctx: SelftestContext) -> str:
    hopf = _named_links()["hopf"]
    generic = homfly(hopf)
    for m in (2, 3):
        expected = qint(m) * (RationalQ.q_power(1) * qint(m - 1) + RationalQ.q_power(-m - 1))
        value = schur_closed(hopf, m)
        assert value == expected, f"schur({m})"
        assert value == specialize_beta(generic, m), f"skein at beta={m}"
        assert value == rt_closed(hopf, m, 0), f"rt({m},0)"
    return "m = 2, 3"


@check("scalar-principle")
def _scalar_principle(ctx: SelftestContext) -> str:
    for k in range(20):
        d = _random_closed(ctx.rng)
        generic = homfly(d)
        low = rt_closed(d, 1, 0)
        assert rt_closed(d, 2, 1) == low == specialize_beta(generic, 1), f"case {k}: gl(2|1)"
        two = rt_closed(d, 2, 0)
        assert rt_closed(d, 3, 1) == two == specialize_beta(generic, 2), f"case {k}: gl(3|1)"
    return "20 random closures"


@check("alexander")
def _alexander(ctx: SelftestContext) -> str:
    for name, d in _named_links().items():
        value = alexander_rt(d)
        assert value == reduced(d, ReducedVariant.ALEXANDER), name
        for component in range(2, diagram_stats(d).components + 1):
            assert alexander_rt(d, component) == value, f"{name} cut at component {component}"
        if name == "unknot":
            assert value == RationalQ.one(), "unknot"
    return "skein vs gl(1|1), every cut"


@check("reidemeister")
def _reidemeister(ctx: SelftestContext) -> str:
    for k in range(ctx.cases):
        d = _random_closed(ctx.rng, max_length=3)
        moved, moves = random_moves(d, ctx.rng, steps=2, max_crossings=6)
        assert homfly(moved) == homfly(d), f"case {k}: skein after {len(moves)} moves"
        assert rt_closed(moved, 2, 0) == rt_closed(d, 2, 0), f"case {k}: rt"
        assert schur_closed(moved, 2) == schur_closed(d, 2), f"case {k}: schur"
    return f"{ctx.cases} perturbations"


@check("hecke")
def _hecke(ctx: SelftestContext) -> str:
    q, q_inv = RationalQ.q_power(1), RationalQ.q_power(-1)
    for n in (2, 3, 4):
        one = HeckeElem.one(n)
        for i in range(1, n):
            t = HeckeElem.generator(i, n)
            assert t * t == t.scaled(q_inv - q) + one, f"quadratic T{i} in H_{n}"
            if i + 1 < n:
                u = HeckeElem.generator(i + 1, n)
                assert t * u * t == u * t * u, f"braid T{i} in H_{n}"
            for j in range(i + 2, n):
                u = HeckeElem.generator(j, n)
                assert t * u == u * t, f"commute T{i} T{j} in H_{n}"
    for l in (1, 2, 3, 4):
        p = antisymmetrizer(l)
        assert p * p == p, f"antisymmetrizer p_{l}"
    for n in (1, 2, 3, 4):
        rank = span_rank([schur_weyl_rep(HeckeElem.basis(w), n) for w in all_perms(n)])
        expected = len(all_perms(n))
        assert rank == expected, f"Schur-Weyl rank {rank} for N = m = {n}"
    return "relations, p_l for l <= 4, Schur-Weyl for N <= 4"


@check("quantum-group")
def _quantum_group(ctx: SelftestContext) -> str:
    for m, n in ((3, 0), (1, 1), (2, 1)):
        g = build_qgroup(m, n)
        report = check_relations(g)
        assert report.ok, str(report)
        gens = rt_generators(g)
        r = gens.r
        if ctx.mutate_r:
            r = r + RepMatrix.identity(g.space, r.source)
        uuu = r.source + r.source[:1]
        r1, r2 = r.lift(uuu, 1), r.lift(uuu, 2)
        assert r1 * r2 * r1 == r2 * r1 * r2, f"YBE for gl({m}|{n})"
        ident = RepMatrix.identity(g.space, r.source)
        assert r - gens.r_inv == ident.scaled(RationalQ.q_power(-1) - RationalQ.q_power(1)), f"R - R^-1 for gl({m}|{n})"
    return "(3,0), (1,1), (2,1)"


@check("schur-anchor")
def _schur_anchor(ctx: SelftestContext) -> str:
    for m in (1, 2, 3, 4):
        normalize(m)
    for m in (2, 3):
        w = SchurWeight((1, 1))
        pos, neg = schur_crossing(w, 1, 1, m), schur_crossing(w, 1, -1, m)
        assert pos * neg == WedgeMap.identity(m, (1, 1)), f"crossing inverse for m={m}"
    return "normalization for m <= 4"


@check("performance")
def _performance(ctx: SelftestContext) -> str:
    big = _closure(BENCH_10, 3)
    start = datetime.now()
    homfly(big, SkeinEvaluator(memo=True))
    ten = (datetime.now() - start).total_seconds()
    ctx.report.timings["skein 10 crossings"] = ten
    assert ten < 30.0, f"10-crossing skein took {ten:.1f}s"

    bench = _closure(BENCH_8, 3)
    timings = {}
    for memo in (True, False):
        start = datetime.now()
        homfly(bench, SkeinEvaluator(memo=memo))
        timings[memo] = (datetime.now() - start).total_seconds()
    ctx.report.timings["skein 8 crossings, memo"] = timings[True]
    ctx.report.timings["skein 8 crossings, no memo"] = timings[False]
    ratio = timings[False] / max(timings[True], 1e-9)
    assert ratio >= 5.0, f"memo speedup {ratio:.1f}x"
    return f"memo speedup {ratio:.1f}x"


# ============================================================================
# RUNNER
# ============================================================================

def selftest(
    names: Optional[Sequence[str]] = None,
    cases: Optional[int] = None,
    seed: Optional[int] = None,
    mutate_r: bool = False,
) -> SelftestReport:
    """Run the named checks (all by default) and collect a pass/fail table"""
    report = SelftestReport()
    ctx = SelftestContext(
        rng=random.Random(config.RANDOM_SEED if seed is None else seed),
        cases=config.SELFTEST_CASES if cases is None else cases,
        report=report,
        mutate_r=mutate_r,
    )
    selected = list(names) if names else check_names()
    unknown = [n for n in selected if n not in _CHECKS]
    if unknown:
        raise ValueError(f"unknown selftest checks: {', '.join(unknown)}")

    for name in selected:
        start = datetime.now()
        try:
            detail = _CHECKS[name](ctx) or ""
            ok = True
        except AssertionError as e:
            ok, detail = False, f"failed: {e}"
        except Exception as e:
            logger.exception(f"selftest check {name} raised")
            ok, detail = False, f"{type(e).__name__}: {e}"
        elapsed = (datetime.now() - start).total_seconds()
        report.checks.append(SelftestCheck(name, ok, detail, elapsed))
        logger.info(f"selftest {name}: {'pass' if ok else 'FAIL'} in {elapsed:.3f}s")

    stats = metrics.get_stats()
    logger.debug(f"selftest metrics: {stats['counters']}")
    return report
