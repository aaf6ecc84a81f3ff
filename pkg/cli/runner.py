"""
Job runner: argument handling, optional result cache and exit codes
"""

import argparse
import asyncio
import logging
import sys
from typing import List, Optional, TextIO

from common import (
    EXIT_COMPUTATION,
    EXIT_MISMATCH,
    EXIT_OK,
    EXIT_USAGE,
    CrossEngineMismatch,
    IncompatibleJob,
    IndexOutOfRange,
    MalformedDiagram,
    ParseError,
    QuantumLinkError,
    format_seconds,
    metrics,
)
from config import config
from cli.args import build_job, build_parser
from cli.selftest import selftest
from services import Job, JobReport, run_job, run_job_cached

logger = logging.getLogger(__name__)

# errors in what the user typed, as opposed to failures of a computation
USAGE_ERRORS = (IncompatibleJob, ParseError, IndexOutOfRange, MalformedDiagram, OSError)


def log_metrics():
    """Dump the collected engine metrics at debug level"""
    if not logger.isEnabledFor(logging.DEBUG):
        return
    stats = metrics.get_stats()
    for name, value in sorted(stats["counters"].items()):
        logger.debug(f"counter {name}: {value}")
    for name, entry in sorted(stats["calls"].items()):
        logger.debug(f"timing {name}: {entry['calls']} calls, {format_seconds(entry['total_time'])}")
    for name, entry in sorted(stats["caches"].items()):
        logger.debug(f"cache {name}: {entry['hits']} hits, {entry['misses']} misses")


async def run_with_cache(job: Job, url: str) -> JobReport:
    """Run the job against the result cache at url, closing it afterwards"""
    from db import init_db, shutdown_db

    await init_db(url)
    try:
        return await run_job_cached(job)
    finally:
        await shutdown_db()


def execute(args: argparse.Namespace, out: TextIO = sys.stdout) -> int:
    """Run the parsed command line; returns the exit code"""
    if args.selftest:
        report = selftest()
        print(report.table(), file=out)
        return EXIT_OK if report.ok else EXIT_COMPUTATION

    try:
        job = build_job(args)
        url = args.cache or config.DATABASE_URL
        if url:
            report = asyncio.run(run_with_cache(job, url))
        else:
            report = run_job(job)
    except CrossEngineMismatch as e:
        logger.error(f"Cross-engine mismatch: {e}")
        for engine, value in e.values.items():
            print(f"{engine}: {value}", file=out)
        return EXIT_MISMATCH
    except USAGE_ERRORS as e:
        logger.error(f"Usage error: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except QuantumLinkError as e:
        logger.error(f"Computation failed: {e}")
        print(f"error: {e}", file=sys.stderr)
        return EXIT_COMPUTATION

    for line in report.lines():
        print(line, file=out)
    if report.skein_stats:
        logger.info(f"skein stats: {report.skein_stats}")
    log_metrics()
    return EXIT_OK


def run(argv: Optional[List[str]] = None, out: TextIO = sys.stdout) -> int:
    """Parse argv and run; argparse failures map to the usage exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_USAGE
    if args.log_level:
        logging.getLogger().setLevel(args.log_level)
    return execute(args, out)
