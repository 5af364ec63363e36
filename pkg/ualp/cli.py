# ualp/cli.py
"""Command-line front end: `python -m ualp {eval,tabulate,verify,identities}`.

Standard output carries only CSV or JSON; status and diagnostics go to
standard error. Exit codes: 0 success, 1 verification failures, 2 usage
error, 3 I/O error.
"""
import argparse
import asyncio
import csv
import io
import json
import sys
from datetime import datetime, timezone
from typing import Any, List, Optional, Sequence

import colorama
import numpy as np
from pydantic import ValidationError

from . import __version__
from .core import DEFAULT_WORKERS, VerificationRunner
from .errors import GridEntryError, UALPError
from .grids import DEFAULT_GRID, PRESETS, preset_grid
from .identities import identity_from_name
from .polynomials import ualp_eval
from .ualp_types import IdentityName, PolyParams, QuadratureMethod, QuadratureSpec, ReportDocument, VerificationRecord
from .util import debug_print, format_number, print_banner, print_status, to_json_text

EXIT_OK = 0
EXIT_FAILURES = 1
EXIT_USAGE = 2
EXIT_IO = 3

DEFAULT_ABS_TOL = 1e-7
DEFAULT_REL_TOL = 1e-7

RECORD_COLUMNS = [
    "identity_name", "parameters", "closed_form", "numeric", "abs_diff", "rel_diff",
    "passed", "numeric_error_estimate", "annotation",
]


class UsageError(Exception):
    pass


class OutputError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """Reports argument errors as one line and exit code 2."""

    def error(self, message: str):
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


"""------------Parser------------"""

def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--abs-tol", type=float, default=DEFAULT_ABS_TOL, help="absolute pass tolerance")
    common.add_argument("--rel-tol", type=float, default=DEFAULT_REL_TOL, help="relative pass tolerance")
    common.add_argument("--format", choices=["json", "csv"], default=None,
                        help="report format (verify: json by default; tables are always csv)")
    common.add_argument("--output", default=None, help="write to this path instead of standard output")
    common.add_argument("--no-timestamp", action="store_true", help="write a null timestamp for reproducible reports")
    common.add_argument("--debug", action="store_true", help="timestamped diagnostics on standard error")
    common.add_argument("--workers", type=int, default=DEFAULT_WORKERS, help="concurrent grid points during verify")

    parser = _ArgumentParser(prog="ualp", description="Universal associated Legendre polynomials and their integrals")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    evaluate = commands.add_parser("eval", parents=[common], help="evaluate P at given abscissae")
    evaluate.add_argument("--m-prime", type=float, required=True)
    evaluate.add_argument("--n", type=int, required=True)
    points = evaluate.add_mutually_exclusive_group(required=True)
    points.add_argument("--x", type=float, nargs="+", help="abscissae in [-1, 1]")
    points.add_argument("--x-range", type=float, nargs=3, metavar=("START", "STOP", "COUNT"),
                        help="COUNT evenly spaced abscissae from START to STOP")

    tabulate = commands.add_parser("tabulate", parents=[common], help="table of P for n = 0..n-max")
    tabulate.add_argument("--m-prime", type=float, required=True)
    tabulate.add_argument("--n-max", type=int, required=True)
    tabulate.add_argument("--x-count", type=int, required=True)

    verify = commands.add_parser("verify", parents=[common], help="check an identity over a parameter grid")
    verify.add_argument("--identity", required=True)
    grid = verify.add_mutually_exclusive_group()
    grid.add_argument("--grid", default=DEFAULT_GRID, help="compiled-in grid preset")
    grid.add_argument("--grid-file", default=None, help="JSON array of parameter objects")
    verify.add_argument("--method", choices=[method.value for method in QuadratureMethod],
                        default=QuadratureMethod.TANH_SINH.value)

    commands.add_parser("identities", parents=[common], help="list identities and their grid presets")
    return parser


"""------------Output------------"""

def _csv_text(rows: Sequence[Sequence[str]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\r\n")
    writer.writerows(rows)
    return buffer.getvalue()


def _emit(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    try:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as error:
        raise OutputError(f"cannot write {output}: {error.strerror or error}") from None


def _cell(value: Any) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, float)):
        return format_number(value)
    if isinstance(value, dict):
        return ";".join(f"{key}={_cell(item)}" for key, item in value.items())
    return str(value)


def _table_only(args: argparse.Namespace) -> None:
    if args.format == "json":
        raise UsageError(f"{args.command} writes CSV tables only; --format json applies to verify")


"""------------Commands------------"""

def cmd_eval(args: argparse.Namespace) -> int:
    _table_only(args)
    params = PolyParams(m_prime=args.m_prime, n=args.n)
    if args.x is not None:
        xs = np.asarray(args.x, dtype=float)
    else:
        start, stop, count = args.x_range
        if count != int(count) or count < 2:
            raise UsageError(f"--x-range COUNT must be an integer >= 2, got {format_number(count)}")
        xs = np.linspace(start, stop, int(count))
    values = np.atleast_1d(ualp_eval(params, xs))
    rows = [["x", "value"]] + [[format_number(x), format_number(v)] for x, v in zip(xs.tolist(), values.tolist())]
    _emit(_csv_text(rows), args.output)
    return EXIT_OK


def cmd_tabulate(args: argparse.Namespace) -> int:
    _table_only(args)
    if args.n_max < 0:
        raise UsageError(f"--n-max must be >= 0, got {args.n_max}")
    if args.x_count < 2:
        raise UsageError(f"--x-count must be >= 2, got {args.x_count}")
    xs = np.linspace(-1.0, 1.0, args.x_count)
    columns = []
    header = ["x"]
    for n in range(args.n_max + 1):
        params = PolyParams(m_prime=args.m_prime, n=n)
        header.append(f"P_{format_number(params.l_prime)}^{format_number(params.m_prime)}")
        columns.append(np.atleast_1d(ualp_eval(params, xs)).tolist())
    rows = [header] + [
        [format_number(x)] + [format_number(column[i]) for column in columns] for i, x in enumerate(xs.tolist())
    ]
    _emit(_csv_text(rows), args.output)
    return EXIT_OK


def _load_grid(args: argparse.Namespace, identity: IdentityName) -> List[Any]:
    if args.grid_file is None:
        return preset_grid(identity, args.grid)
    try:
        with open(args.grid_file, encoding="utf-8") as handle:
            text = handle.read()
    except OSError as error:
        raise OutputError(f"cannot read grid file {args.grid_file}: {error.strerror or error}") from None
    try:
        grid = json.loads(text)
    except json.JSONDecodeError as error:
        raise GridEntryError(f"grid file {args.grid_file} is not valid JSON: {error}") from None
    if not isinstance(grid, list):
        raise GridEntryError(f"grid file {args.grid_file} must hold a JSON array of parameter objects")
    return grid


def _timestamp(args: argparse.Namespace) -> Optional[str]:
    if args.no_timestamp:
        return None
    return datetime.now(timezone.utc).isoformat(timespec="seconds")


def _report_text(report: ReportDocument, fmt: str) -> str:
    if fmt == "csv":
        rows = [RECORD_COLUMNS] + [
            [_cell(getattr(record, column)) for column in RECORD_COLUMNS]
            for record in report.records
        ]
        return _csv_text(rows)
    return to_json_text(report.model_dump(mode="json"))


def cmd_verify(args: argparse.Namespace) -> int:
    identity = identity_from_name(args.identity)
    grid = _load_grid(args, identity)
    if args.workers < 1:
        raise UsageError(f"--workers must be >= 1, got {args.workers}")
    if not (args.abs_tol > 0 and args.rel_tol > 0):
        raise UsageError("--abs-tol and --rel-tol must be positive")
    spec = QuadratureSpec(method=QuadratureMethod(args.method))
    runner = VerificationRunner(spec, args.abs_tol, args.rel_tol, max_workers=args.workers, debug=args.debug)

    print_banner(f"Verifying {identity.value} over {len(grid)} points")

    async def status_callback(index: int, record: VerificationRecord):
        note = f" ({record.annotation})" if record.annotation else ""
        print_status(record.passed, f"[{index}] {_cell(record.parameters)} {'passed' if record.passed else 'FAILED'}{note}")

    records = asyncio.run(runner.run_grid(identity, grid, status_callback=status_callback))
    report = ReportDocument.from_records(
        tool_version=__version__,
        timestamp=_timestamp(args),
        identity_name=identity,
        tolerance_config={
            "abs_tol": args.abs_tol,
            "rel_tol": args.rel_tol,
            "quadrature_abs_tol": spec.abs_tol,
            "quadrature_rel_tol": spec.rel_tol,
            "max_levels": spec.max_levels,
            "max_segments": spec.max_segments,
        },
        records=records,
    )
    _emit(_report_text(report, args.format or "json"), args.output)
    summary = report.summary
    print_status(report.all_passed, f"{summary.passed}/{summary.total} passed, {summary.failed} failed")
    return EXIT_OK if report.all_passed else EXIT_FAILURES


def cmd_identities(args: argparse.Namespace) -> int:
    _table_only(args)
    rows = [["identity", "grid", "points"]]
    for identity in IdentityName:
        for name, grid in PRESETS[identity].items():
            rows.append([identity.value, name, str(len(grid))])
    _emit(_csv_text(rows), args.output)
    return EXIT_OK


COMMANDS = {
    "eval": cmd_eval,
    "tabulate": cmd_tabulate,
    "verify": cmd_verify,
    "identities": cmd_identities,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    colorama.just_fix_windows_console()
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exit_request:
        return int(exit_request.code or 0)

    debug_print(args.debug, f"ualp {__version__} {args.command}")
    try:
        return COMMANDS[args.command](args)
    except OutputError as error:
        print(f"ualp: error: {error}", file=sys.stderr)
        return EXIT_IO
    except (UsageError, UALPError, ValidationError) as error:
        message = str(error).replace("\n", " ")
        print(f"ualp: error: {message}", file=sys.stderr)
        return EXIT_USAGE
