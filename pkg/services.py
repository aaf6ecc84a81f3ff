"""
Invariant services for QuantumLinks
Job validation, engine dispatch, framing and cross-engine agreement
"""

import logging
from dataclasses import dataclass, field
from datetime import datetime
from typing import Dict, List, Optional, Tuple, Union

from common import CrossEngineMismatch, IncompatibleJob, hash_string, metrics
from config import EngineKind, FramingMode, InvariantKind
from diagram import SliceDiagram, diagram_stats, serialize
from quantumrep import alexander_rt, rt_closed
from ring import GroundElem, RationalQ, parse_ground, parse_rational, qint, render_ground, render_rational
from schur import schur_closed
from skein import ReducedVariant, SkeinEvaluator, framing_normalize, homfly, reduced, rt_sln

logger = logging.getLogger(__name__)

Value = Union[GroundElem, RationalQ]


# ============================================================================
# JOBS
# ============================================================================

@dataclass(frozen=True)
class InvariantSpec:
    """Which invariant to compute; params hold n for sln and (m, n) for glmn"""
    kind: InvariantKind
    params: Tuple[int, ...] = ()

    @classmethod
    def jones(cls) -> "InvariantSpec":
        return cls(InvariantKind.JONES)

    @classmethod
    def sln(cls, n: int) -> "InvariantSpec":
        return cls(InvariantKind.SLN, (n,))

    @classmethod
    def glmn(cls, m: int, n: int) -> "InvariantSpec":
        return cls(InvariantKind.GLMN, (m, n))

    @property
    def rank(self) -> Optional[Tuple[int, int]]:
        """(m, n) of the RT functor computing this invariant"""
        if self.kind is InvariantKind.JONES:
            return 2, 0
        if self.kind is InvariantKind.SLN:
            return self.params[0], 0
        if self.kind is InvariantKind.GLMN:
            return self.params[0], self.params[1]
        if self.kind is InvariantKind.ALEXANDER:
            return 1, 1
        return None

    @property
    def beta(self) -> Optional[int]:
        """Specialization point of the generic skein value"""
        rank = self.rank
        return None if rank is None else rank[0] - rank[1]

    def __str__(self) -> str:
        return " ".join([self.kind.value, *(str(p) for p in self.params)])


@dataclass(frozen=True)
class Job:
    diagram: SliceDiagram
    invariant: InvariantSpec
    engine: EngineKind = EngineKind.SKEIN
    framing: FramingMode = FramingMode.FRAMED
    reduced: bool = False
    memo: Optional[bool] = None
    workers: Optional[int] = None

    @property
    def digest(self) -> str:
        return diagram_digest(self.diagram)


@dataclass
class EngineResult:
    engine: EngineKind
    value: Value
    elapsed: float

    @property
    def text(self) -> str:
        return render_value(self.value)


@dataclass
class JobReport:
    job: Job
    results: List[EngineResult] = field(default_factory=list)
    skein_stats: Dict[str, int] = field(default_factory=dict)

    @property
    def text(self) -> str:
        return self.results[0].text

    def lines(self) -> List[str]:
        """One polynomial per line; the all engine prefixes each with its engine"""
        if self.job.engine is EngineKind.ALL:
            return [f"{r.engine.value}: {r.text}" for r in self.results]
        return [self.text]


def diagram_digest(d: SliceDiagram) -> str:
    return hash_string(serialize(d))


def render_value(value: Value) -> str:
    if isinstance(value, GroundElem):
        return render_ground(value)
    return render_rational(value)


# ============================================================================
# COMPATIBILITY
# ============================================================================

_ENGINES = {
    InvariantKind.HOMFLY: (EngineKind.SKEIN,),
    InvariantKind.JONES: (EngineKind.SKEIN, EngineKind.RT, EngineKind.SCHUR),
    InvariantKind.SLN: (EngineKind.SKEIN, EngineKind.RT, EngineKind.SCHUR),
    InvariantKind.ALEXANDER: (EngineKind.SKEIN, EngineKind.RT),
    InvariantKind.GLMN: (EngineKind.SKEIN, EngineKind.RT),
}

_PARAM_COUNT = {
    InvariantKind.HOMFLY: 0,
    InvariantKind.JONES: 0,
    InvariantKind.SLN: 1,
    InvariantKind.ALEXANDER: 0,
    InvariantKind.GLMN: 2,
}


def compatible_engines(invariant: InvariantSpec) -> Tuple[EngineKind, ...]:
    return _ENGINES[invariant.kind]


def check_job(job: Job):
    """Raise IncompatibleJob unless every selection in the job fits together"""
    inv = job.invariant
    if len(inv.params) != _PARAM_COUNT[inv.kind]:
        raise IncompatibleJob(f"{inv.kind.value} takes {_PARAM_COUNT[inv.kind]} parameters, got {len(inv.params)}")
    if inv.kind is InvariantKind.SLN and inv.params[0] < 1:
        raise IncompatibleJob(f"sln needs n >= 1, got {inv.params[0]}")
    if inv.kind is InvariantKind.GLMN:
        m, n = inv.params
        if m < 0 or n < 0 or m + n == 0:
            raise IncompatibleJob(f"glmn needs m, n >= 0 and m + n >= 1, got {m} {n}")
        if job.reduced and m == n:
            raise IncompatibleJob("reduced glmn needs m != n; use alexander for the m = n value")
    if job.engine is not EngineKind.ALL and job.engine not in compatible_engines(inv):
        raise IncompatibleJob(f"{inv} cannot be computed by the {job.engine.value} engine")
    if not job.diagram.is_closed:
        raise IncompatibleJob("invariants are computed for closed diagrams")


# ============================================================================
# ENGINES
# ============================================================================

def _skein_value(job: Job, evaluator: SkeinEvaluator) -> Value:
    d, inv = job.diagram, job.invariant
    if inv.kind is InvariantKind.HOMFLY:
        return reduced(d, ReducedVariant.GENERIC, evaluator=evaluator) if job.reduced else homfly(d, evaluator)
    if inv.kind is InvariantKind.ALEXANDER:
        return reduced(d, ReducedVariant.ALEXANDER, evaluator=evaluator)
    if job.reduced:
        return reduced(d, ReducedVariant.SLN, inv.beta, evaluator)
    return rt_sln(d, inv.beta, evaluator)


def _rt_value(job: Job) -> Value:
    d, inv = job.diagram, job.invariant
    if inv.kind is InvariantKind.ALEXANDER:
        return alexander_rt(d)
    m, n = inv.rank
    value = rt_closed(d, m, n)
    return value / qint(m - n) if job.reduced else value


def _schur_value(job: Job) -> Value:
    m, _ = job.invariant.rank
    value = schur_closed(job.diagram, m)
    return value / qint(m) if job.reduced else value


def normalize_framing(value: Value, beta: Optional[int], writhe: int) -> Value:
    """Undo the framing dependence: multiply by u^writhe (u = q^beta once specialized)"""
    if isinstance(value, GroundElem):
        return framing_normalize(value, writhe)
    return value * RationalQ.q_power(beta * writhe)


def compute(job: Job, engine: EngineKind, evaluator: Optional[SkeinEvaluator] = None) -> EngineResult:
    """Value of a checked job on one concrete engine"""
    start_time = datetime.now()
    if engine is EngineKind.SKEIN:
        value = _skein_value(job, evaluator or SkeinEvaluator(job.memo, job.workers))
    elif engine is EngineKind.RT:
        value = _rt_value(job)
    elif engine is EngineKind.SCHUR:
        value = _schur_value(job)
    else:
        raise IncompatibleJob(f"{engine.value} is not a concrete engine")

    if job.framing is FramingMode.NORMALIZED and job.invariant.kind is not InvariantKind.ALEXANDER:
        value = normalize_framing(value, job.invariant.beta, diagram_stats(job.diagram).writhe)

    elapsed = (datetime.now() - start_time).total_seconds()
    metrics.record_call(f"engine.{engine.value}", elapsed)
    logger.info(f"{job.invariant} via {engine.value} in {elapsed:.3f}s")
    return EngineResult(engine, value, elapsed)


def run_job(job: Job) -> JobReport:
    """Compute the job; the all engine runs every compatible engine and compares"""
    check_job(job)
    engines = compatible_engines(job.invariant) if job.engine is EngineKind.ALL else (job.engine,)
    evaluator = SkeinEvaluator(job.memo, job.workers)
    report = JobReport(job)
    for engine in engines:
        report.results.append(compute(job, engine, evaluator))
    if EngineKind.SKEIN in engines:
        report.skein_stats = evaluator.stats
    check_agreement(report.results)
    return report


def check_agreement(results: List[EngineResult]):
    if len({r.text for r in results}) > 1:
        values = {r.engine.value: r.text for r in results}
        logger.error(f"engines disagree: {values}")
        raise CrossEngineMismatch(
            "engines disagree: " + "; ".join(f"{k} = {v}" for k, v in values.items()),
            values=values,
        )


# ============================================================================
# CACHED RUNS
# ============================================================================

async def run_job_cached(job: Job) -> JobReport:
    """
    run_job backed by the result cache.

    Engines whose value is already stored are reported from the cache with
    elapsed time 0; the cache must be initialized by the caller.
    """
    from db import get_cached_result, save_result

    check_job(job)
    engines = compatible_engines(job.invariant) if job.engine is EngineKind.ALL else (job.engine,)
    invariant_text = str(job.invariant)
    evaluator = SkeinEvaluator(job.memo, job.workers)
    report = JobReport(job)
    crossings = job.diagram.crossing_count
    for engine in engines:
        cached = await get_cached_result(job.digest, invariant_text, engine.value, job.framing.value, job.reduced)
        if cached is not None:
            generic = job.invariant.kind is InvariantKind.HOMFLY
            value = parse_ground(cached) if generic else parse_rational(cached)
            report.results.append(EngineResult(engine, value, 0.0))
            continue
        result = compute(job, engine, evaluator)
        await save_result(
            job.digest, invariant_text, engine.value, job.framing.value, job.reduced,
            result.text, crossings=crossings, elapsed=f"{result.elapsed:.3f}",
        )
        report.results.append(result)
    report.skein_stats = evaluator.stats
    check_agreement(report.results)
    return report
