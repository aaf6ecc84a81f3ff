"""
Command-line arguments and job construction
"""

import argparse
from pathlib import Path
from typing import List, Optional, Sequence

from common import APP_INFO, LOG_LEVELS, IncompatibleJob
from config import EngineKind, FramingMode, InvariantKind, config
from diagram import SliceDiagram, braid_closure, deserialize, parse_braid
from services import InvariantSpec, Job


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quantumlinks",
        description=APP_INFO["description"],
    )
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--braid", metavar="WORD", help="braid word of signed generator indices, e.g. '1 -2 1'")
    source.add_argument("--file", metavar="PATH", help="slice diagram file")
    parser.add_argument("--strands", type=int, metavar="N", help="strand count of --braid")
    parser.add_argument(
        "--invariant",
        nargs="+",
        default=["homfly"],
        metavar="NAME",
        help="homfly | jones | sln N | alexander | glmn M N",
    )
    parser.add_argument(
        "--engine",
        choices=[e.value for e in EngineKind],
        default=EngineKind.SKEIN.value,
        help="computation pipeline; 'all' runs every compatible engine and compares",
    )
    parser.add_argument("--reduced", action="store_true", help="divide by the unknot value")
    parser.add_argument("--normalized", action="store_true", help="multiply by u^writhe (framing-independent value)")
    parser.add_argument("--selftest", action="store_true", help="run the acceptance suite")
    parser.add_argument("--cache", metavar="URL", default=None, help="result cache URL, e.g. sqlite:///results.db")
    parser.add_argument("--workers", type=int, default=None, metavar="K", help="skein worker threads")
    parser.add_argument("--no-memo", action="store_true", help="disable the shared skein memo")
    parser.add_argument(
        "--log-level",
        choices=list(LOG_LEVELS),
        default=None,
        type=str.upper,
        help=f"log level (default {config.LOG_LEVEL})",
    )
    parser.add_argument("--version", action="version", version=f"{APP_INFO['name']} {APP_INFO['version']}")
    return parser


def parse_invariant(tokens: Sequence[str]) -> InvariantSpec:
    """['sln', '3'] -> InvariantSpec(sln, (3,)); parameter counts are checked with the job"""
    if not tokens:
        raise IncompatibleJob("--invariant needs a name")
    name, *rest = tokens
    try:
        kind = InvariantKind(name.lower())
    except ValueError:
        choices = ", ".join(k.value for k in InvariantKind)
        raise IncompatibleJob(f"unknown invariant {name!r}; expected one of {choices}") from None
    try:
        params = tuple(int(p) for p in rest)
    except ValueError:
        raise IncompatibleJob(f"{kind.value} parameters must be integers, got {' '.join(rest)}") from None
    return InvariantSpec(kind, params)


def load_diagram(args: argparse.Namespace) -> SliceDiagram:
    if args.file is not None:
        return deserialize(Path(args.file).read_text())
    if args.braid is not None:
        if args.strands is None:
            raise IncompatibleJob("--braid needs --strands")
        return braid_closure(parse_braid(args.braid, args.strands))
    raise IncompatibleJob("give --braid with --strands, or --file")


def build_job(args: argparse.Namespace) -> Job:
    return Job(
        diagram=load_diagram(args),
        invariant=parse_invariant(args.invariant),
        engine=EngineKind(args.engine),
        framing=FramingMode.NORMALIZED if args.normalized else FramingMode.FRAMED,
        reduced=args.reduced,
        memo=False if args.no_memo else None,
        workers=args.workers,
    )


def parse_args(argv: Optional[List[str]] = None) -> argparse.Namespace:
    return build_parser().parse_args(argv)
