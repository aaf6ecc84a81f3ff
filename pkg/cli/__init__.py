"""
Command-line module for QuantumLinks
Argument parsing, the job runner and the acceptance selftest
"""

from cli.args import build_job, build_parser, load_diagram, parse_args, parse_invariant
from cli.runner import execute, run, run_with_cache
from cli.selftest import SelftestCheck, SelftestReport, check_names, selftest

__all__ = [
    # Arguments
    'build_job',
    'build_parser',
    'load_diagram',
    'parse_args',
    'parse_invariant',

    # Runner
    'execute',
    'run',
    'run_with_cache',

    # Selftest
    'SelftestCheck',
    'SelftestReport',
    'check_names',
    'selftest',
]
