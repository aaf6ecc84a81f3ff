import io
import logging

import pytest

from cli import build_parser, parse_invariant, run, selftest
from cli.selftest import SelftestCheck, SelftestReport
from common import (
    EXIT_COMPUTATION,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    CrossEngineMismatch,
    IncompatibleJob,
    NotDivisible,
)
from config import EngineKind, FramingMode, InvariantKind
from diagram import SliceDiagram, add_curl, serialize
from ring import qint, render_rational
from services import InvariantSpec, Job, check_job, compatible_engines, run_job


TREFOIL_JONES = "-q^3 + q^-1 + q^-3 + q^-5"
HOPF_SL2 = "q^2 + 1 + q^-2 + q^-4"


def invoke(*argv):
    out = io.StringIO()
    code = run(list(argv), out=out)
    return code, out.getvalue().splitlines()


# ============================================================================
# COMMAND LINE
# ============================================================================

def test_trefoil_jones():
    code, lines = invoke("--braid", "1 1 1", "--strands", "2", "--invariant", "jones")
    assert code == EXIT_OK
    assert lines == [TREFOIL_JONES]


def test_unknot_sl5():
    code, lines = invoke("--braid", "", "--strands", "1", "--invariant", "sln", "5")
    assert code == EXIT_OK
    assert lines == ["q^4 + q^2 + 1 + q^-2 + q^-4"]


def test_hopf_file_all_engines(tmp_path, hopf):
    path = tmp_path / "hopf.tangle"
    path.write_text(serialize(hopf))
    code, lines = invoke("--file", str(path), "--invariant", "sln", "2", "--engine", "all")
    assert code == EXIT_OK
    assert lines == [f"skein: {HOPF_SL2}", f"rt: {HOPF_SL2}", f"schur: {HOPF_SL2}"]


def test_homfly_default_invariant():
    code, lines = invoke("--braid", "", "--strands", "1")
    assert code == EXIT_OK
    assert lines == ["(q)/(q^2 - 1)*u - (q)/(q^2 - 1)*u^-1"]


@pytest.mark.parametrize(
    "argv",
    [
        ("--braid", "1 1 1", "--invariant", "jones"),
        ("--braid", "1", "--strands", "2", "--invariant", "knotty"),
        ("--braid", "1", "--strands", "2", "--invariant", "sln", "two"),
        ("--braid", "1", "--strands", "2", "--invariant", "homfly", "--engine", "schur"),
        ("--braid", "3", "--strands", "2", "--invariant", "jones"),
        ("--braid", "1 x", "--strands", "2"),
        ("--braid", "1", "--strands", "2", "--engine", "abacus"),
        ("--file", "/nonexistent/link.tangle"),
        ("--invariant", "jones"),
    ],
)
def test_usage_errors(argv):
    code, _ = invoke(*argv)
    assert code == EXIT_USAGE


def test_help_exits_cleanly():
    code, _ = invoke("--help")
    assert code == EXIT_OK


def test_mismatch_exit_code(monkeypatch):
    def disagree(job):
        raise CrossEngineMismatch("engines disagree", values={"skein": "1", "rt": "2"})

    monkeypatch.setattr("cli.runner.run_job", disagree)
    code, lines = invoke("--braid", "1", "--strands", "2", "--invariant", "jones", "--engine", "all")
    assert code == EXIT_MISMATCH
    assert lines == ["skein: 1", "rt: 2"]


def test_computation_error_exit_code(monkeypatch):
    def fail(job):
        raise NotDivisible("remainder")

    monkeypatch.setattr("cli.runner.run_job", fail)
    code, _ = invoke("--braid", "1", "--strands", "2", "--invariant", "jones")
    assert code == EXIT_COMPUTATION


def test_selftest_flag(monkeypatch):
    report = SelftestReport([SelftestCheck("trefoil-jones", True, "ok")])
    monkeypatch.setattr("cli.runner.selftest", lambda: report)
    code, lines = invoke("--selftest")
    assert code == EXIT_OK
    assert lines[-1] == "1/1 checks passed"

    report.checks.append(SelftestCheck("quantum-group", False, "failed: YBE"))
    code, _ = invoke("--selftest")
    assert code == EXIT_COMPUTATION


def test_output_is_stable_across_workers():
    _, single = invoke("--braid", "1 -2 1 -2", "--strands", "3", "--invariant", "sln", "3")
    _, threaded = invoke("--braid", "1 -2 1 -2", "--strands", "3", "--invariant", "sln", "3", "--workers", "3")
    _, no_memo = invoke("--braid", "1 -2 1 -2", "--strands", "3", "--invariant", "sln", "3", "--no-memo")
    assert single == threaded == no_memo


def test_parser_defaults():
    args = build_parser().parse_args(["--braid", "1", "--strands", "2"])
    assert args.engine == "skein"
    assert args.invariant == ["homfly"]
    assert not args.reduced and not args.normalized and not args.selftest


def test_parse_invariant():
    assert parse_invariant(["glmn", "2", "1"]) == InvariantSpec.glmn(2, 1)
    assert parse_invariant(["JONES"]) == InvariantSpec.jones()
    with pytest.raises(IncompatibleJob, match="unknown invariant"):
        parse_invariant(["colored"])


# ============================================================================
# SERVICES
# ============================================================================

def test_compatible_engines():
    assert compatible_engines(InvariantSpec(InvariantKind.HOMFLY)) == (EngineKind.SKEIN,)
    assert EngineKind.SCHUR in compatible_engines(InvariantSpec.sln(3))
    assert EngineKind.SCHUR not in compatible_engines(InvariantSpec.glmn(2, 1))
    assert EngineKind.SCHUR not in compatible_engines(InvariantSpec(InvariantKind.ALEXANDER))


@pytest.mark.parametrize(
    "invariant, engine, reduced",
    [
        (InvariantSpec.sln(0), EngineKind.SKEIN, False),
        (InvariantSpec(InvariantKind.SLN), EngineKind.SKEIN, False),
        (InvariantSpec.glmn(1, 1), EngineKind.RT, True),
        (InvariantSpec.glmn(0, 0), EngineKind.RT, False),
        (InvariantSpec(InvariantKind.ALEXANDER), EngineKind.SCHUR, False),
        (InvariantSpec.glmn(2, 1), EngineKind.SCHUR, False),
    ],
)
def test_incompatible_jobs(unknot, invariant, engine, reduced):
    with pytest.raises(IncompatibleJob):
        check_job(Job(unknot, invariant, engine, reduced=reduced))


def test_open_diagram_rejected():
    with pytest.raises(IncompatibleJob, match="closed"):
        check_job(Job(SliceDiagram.build("u", [], "u"), InvariantSpec.jones()))


def test_reduced_jones_all_engines(trefoil):
    report = run_job(Job(trefoil, InvariantSpec.jones(), EngineKind.ALL, reduced=True))
    framed = run_job(Job(trefoil, InvariantSpec.jones(), EngineKind.RT)).results[0].value
    assert [r.engine for r in report.results] == [EngineKind.SKEIN, EngineKind.RT, EngineKind.SCHUR]
    assert report.results[0].value == framed / qint(2)


@pytest.mark.parametrize("engine", [EngineKind.SKEIN, EngineKind.RT, EngineKind.SCHUR])
def test_normalized_framing_removes_curl(unknot, engine):
    curled = add_curl(unknot, 1, 1, 1)
    framed = run_job(Job(curled, InvariantSpec.sln(2), engine))
    normalized = run_job(Job(curled, InvariantSpec.sln(2), engine, FramingMode.NORMALIZED))
    assert framed.text != render_rational(qint(2))
    assert normalized.text == render_rational(qint(2))


def test_normalized_homfly_removes_curl(unknot):
    curled = add_curl(unknot, 1, 1, -1)
    plain = run_job(Job(unknot, InvariantSpec(InvariantKind.HOMFLY)))
    normalized = run_job(Job(curled, InvariantSpec(InvariantKind.HOMFLY), framing=FramingMode.NORMALIZED))
    assert normalized.text == plain.text


def test_glmn_scalar_principle(figure_eight):
    report = run_job(Job(figure_eight, InvariantSpec.glmn(2, 1), EngineKind.ALL))
    low = run_job(Job(figure_eight, InvariantSpec.sln(1), EngineKind.RT))
    assert len({r.text for r in report.results}) == 1
    assert report.text == low.text


@pytest.mark.parametrize("name", ["unknot", "trefoil", "figure_eight", "hopf"])
def test_alexander_all_engines(test_links, name):
    report = run_job(Job(test_links[name], InvariantSpec(InvariantKind.ALEXANDER), EngineKind.ALL))
    assert [r.engine for r in report.results] == [EngineKind.SKEIN, EngineKind.RT]
    if name == "unknot":
        assert report.text == "1"


def test_homfly_all_runs_skein_only(hopf):
    report = run_job(Job(hopf, InvariantSpec(InvariantKind.HOMFLY), EngineKind.ALL))
    assert [r.engine for r in report.results] == [EngineKind.SKEIN]
    assert "expansions" in report.skein_stats


def test_job_digest_tracks_diagram(trefoil, hopf):
    assert Job(trefoil, InvariantSpec.jones()).digest == Job(trefoil, InvariantSpec.sln(3)).digest
    assert Job(trefoil, InvariantSpec.jones()).digest != Job(hopf, InvariantSpec.jones()).digest
    assert len(Job(hopf, InvariantSpec.jones()).digest) == 64


# ============================================================================
# SELFTEST
# ============================================================================

def test_selftest_subset_passes():
    report = selftest(names=["trefoil-jones", "unknot-family", "hopf-link", "schur-anchor"])
    assert report.ok, report.table()
    assert "4/4 checks passed" in report.table()


def test_selftest_reports_corrupted_r_matrix():
    report = selftest(names=["quantum-group"], mutate_r=True)
    assert not report.ok
    (failure,) = report.failures
    assert "YBE" in failure.detail


def test_selftest_reidemeister_cases():
    report = selftest(names=["reidemeister"], cases=5, seed=7)
    assert report.ok, report.table()
    assert report.checks[0].detail == "5 perturbations"


def test_selftest_unknown_check():
    with pytest.raises(ValueError, match="unknown"):
        selftest(names=["nope"])


def test_cache_flag(tmp_path):
    url = f"sqlite:///{tmp_path / 'results.db'}"
    argv = ("--braid", "1 1 1", "--strands", "2", "--invariant", "jones", "--cache", url)
    first = invoke(*argv)
    second = invoke(*argv)
    assert first == second == (EXIT_OK, [TREFOIL_JONES])


def test_debug_log_reports_metrics(caplog):
    caplog.set_level(logging.DEBUG, logger="cli.runner")
    code, _ = invoke("--braid", "1 1 1", "--strands", "2", "--invariant", "jones")
    assert code == EXIT_OK
    messages = [r.getMessage() for r in caplog.records if r.name == "cli.runner"]
    assert any(m.startswith("timing engine.skein: ") for m in messages)


def test_metrics_stay_quiet_above_debug(caplog):
    caplog.set_level(logging.INFO, logger="cli.runner")
    invoke("--braid", "1 1 1", "--strands", "2", "--invariant", "jones")
    assert not any(r.getMessage().startswith("timing ") for r in caplog.records)
