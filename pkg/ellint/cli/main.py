"""
Command-line front end.

    ellint eval    --kind half-monomial --a 1 --nu 1 --m 2
    ellint compare --kind half-general --a 1 --b 1 --nu 2 --m 2
    ellint table   --kind half-monomial --a 1 --nu 1:3:3 --m 2 --format csv

Records go to stdout, structured error records and logs to stderr.
"""
from __future__ import annotations

import argparse
import logging
import sys
from typing import Any, Callable, Dict, Optional, Sequence

from pydantic import ValidationError

from ..config import TOL_ENV_VAR, get_settings
from ..models import IntegralKind, Strategy
from .commands import PARAM_ORDER, CommandResult, cmd_compare, cmd_eval, cmd_table
from .error_handling import create_error_record
from .records import RecordWriter

logger = logging.getLogger(__name__)


def _add_common_arguments(parser: argparse.ArgumentParser, numeric: Callable[[str], Any]) -> None:
    parser.add_argument("--kind", required=True, choices=[k.value for k in IntegralKind])
    for name in PARAM_ORDER:
        help_text = "finite upper limit of the incomplete integral" if name == "x" else None
        parser.add_argument(f"--{name}", type=numeric, default=None, help=help_text)
    parser.add_argument(
        "--tol",
        type=float,
        default=None,
        help=f"relative tolerance (default 1e-10, or ${TOL_ENV_VAR})",
    )
    parser.add_argument("--max-terms", type=int, default=None, help="series term cap (default 500)")
    parser.add_argument("--format", choices=["json", "csv"], default="json")
    parser.add_argument(
        "--force-method",
        choices=[s.value for s in Strategy],
        default=Strategy.AUTO.value,
    )
    parser.add_argument("--verbose", action="store_true", help="debug logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ellint", description="Elliptic-type integral evaluation")
    subparsers = parser.add_subparsers(dest="command", required=True)
    _add_common_arguments(subparsers.add_parser("eval", help="evaluate one integral"), float)
    _add_common_arguments(subparsers.add_parser("compare", help="primary path against quadrature"), float)
    _add_common_arguments(
        subparsers.add_parser("table", help="parameter sweep; ranged values as lo:hi:count"),
        str,
    )
    return parser


def _configure_logging(verbose: bool) -> None:
    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.WARNING,
        stream=sys.stderr,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _params(args: argparse.Namespace) -> Dict[str, Any]:
    return {"kind": args.kind, **{name: getattr(args, name) for name in PARAM_ORDER}}


def run(args: argparse.Namespace) -> CommandResult:
    params = _params(args)
    try:
        settings = get_settings().with_overrides(tol=args.tol, max_terms=args.max_terms)
    except ValidationError as exc:
        logger.error("Invalid settings: %s", exc)
        return CommandResult(errors=[create_error_record(params, exc)])
    strategy = Strategy(args.force_method)
    commands = {"eval": cmd_eval, "compare": cmd_compare, "table": cmd_table}
    return commands[args.command](params, tol=settings.tol, strategy=strategy, settings=settings)


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    _configure_logging(args.verbose)
    result = run(args)
    RecordWriter(sys.stdout, args.format).write_all(result.records)
    if result.errors:
        RecordWriter(sys.stderr, "json").write_all(result.errors)
    return result.exit_code
