"""
Batch command line: eval, table, verify and constants.

Exit status 0 on success, 1 on numerical or domain errors (the error class
name goes to stderr), 2 on flag errors. Numbers are printed with repr, the
shortest decimal that round-trips binary64.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Dict, List, Literal, Optional, Union

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from . import config
from .errors import GammamorphicError
from .identities import CATALOG, catalog_ids, parse_ids
from .registry import FUNCTIONS, TABLE_COLUMNS, EvalParams, TableRow, constants, evaluate, function_names, parse_number
from .special_base import Number, ValueWithError

logger = logging.getLogger(__name__)

FORMATS = ("json", "csv", "text")


# ============================================================================
# Run manifest
# ============================================================================

class ArgumentGrid(BaseModel):
    """Real segment, or a complex rectangle when the imaginary range is given."""
    model_config = ConfigDict(extra="forbid")

    start: float
    stop: float
    count: int = Field(ge=1)
    im_start: Optional[float] = None
    im_stop: Optional[float] = None
    im_count: int = Field(default=1, ge=1)

    @model_validator(mode="after")
    def _imaginary_range(self):
        if (self.im_start is None) != (self.im_stop is None):
            raise ValueError("im_start and im_stop go together")
        return self

    def points(self) -> List[Number]:
        """Row-major: the real part runs fastest."""
        res = np.linspace(self.start, self.stop, self.count)
        if self.im_start is None:
            return [float(r) for r in res]
        ims = np.linspace(self.im_start, self.im_stop, self.im_count)
        return [float(r) if im == 0 else complex(float(r), float(im)) for im in ims for r in res]


class RunManifest(BaseModel):
    """
    A table run: function, grid, parameters and output format. verify reads
    only the tolerance overrides, keyed by identity id.
    """
    model_config = ConfigDict(extra="forbid")

    function: Optional[str] = None
    grid: Optional[ArgumentGrid] = None
    route: Optional[str] = None
    alpha: Optional[Union[float, complex]] = None
    omega1: Optional[Union[float, complex]] = None
    omega2: Optional[Union[float, complex]] = None
    n: Optional[int] = None
    format: Literal["json", "csv", "text"] = "csv"
    log: bool = False
    tolerances: Dict[str, float] = Field(default_factory=dict)

    @model_validator(mode="after")
    def _known_function(self):
        if self.function is None:
            return self
        if self.function not in FUNCTIONS:
            raise ValueError(f"unknown function '{self.function}'")
        if self.grid is None and FUNCTIONS[self.function].needs_x:
            raise ValueError(f"{self.function} needs an argument grid")
        return self

    def params(self) -> EvalParams:
        return EvalParams(alpha=self.alpha, omega1=self.omega1, omega2=self.omega2, n=self.n, route=self.route)

    @classmethod
    def load(cls, path: str) -> "RunManifest":
        return cls.model_validate_json(Path(path).read_text())


# ============================================================================
# Output
# ============================================================================

def _num(v) -> str:
    return repr(float(v)) if not isinstance(v, str) else v


def _aligned(header: List[str], rows: List[List[str]]) -> str:
    widths = [max(len(h), *(len(r[i]) for r in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
    return "\n".join(lines) + "\n"


def render_rows(rows: List[TableRow], fmt: str) -> str:
    if fmt == "json":
        return json.dumps([r.model_dump() for r in rows], indent=2) + "\n"
    body = [[_num(getattr(r, c)) for c in TABLE_COLUMNS] for r in rows]
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        writer.writerows(body)
        return buf.getvalue()
    return _aligned(list(TABLE_COLUMNS), body)


def render_value(x: Optional[Number], result: ValueWithError, fmt: str) -> str:
    if fmt in ("json", "csv"):
        return render_rows([TableRow.of(0.0 if x is None else x, result)], fmt)
    value = result.value
    shown = repr(value) if isinstance(value, float) else f"({value.real!r}, {value.imag!r})"
    return f"value      {shown}\nabs_error  {result.abs_error!r}\nroute      {result.route.value}\n"


def _emit(text: str, output: Optional[str]):
    if output is None:
        sys.stdout.write(text)
        return
    Path(output).write_text(text)
    logger.info("wrote %s", output)


# ============================================================================
# Commands
# ============================================================================

def _params(args) -> EvalParams:
    def opt(v):
        return None if v is None else parse_number(v)

    return EvalParams(alpha=opt(args.alpha), omega1=opt(args.omega1), omega2=opt(args.omega2), n=args.n, route=args.route)


def cmd_eval(args) -> int:
    # x and the numeric flags are parsed during flag validation in main
    result = evaluate(args.function, args.x, args.params, log=args.log)
    _emit(render_value(args.x, result, args.format), None)
    return 0


def _evaluate_point(manifest: RunManifest, params: EvalParams, x: Number) -> TableRow:
    try:
        result = evaluate(manifest.function, x, params, log=manifest.log)
    except GammamorphicError as e:
        # the message names the first failing argument
        raise type(e)(f"at x = {x!r}: {e}") from e
    return TableRow.of(x, result)


def build_table(manifest: RunManifest, workers: int = 1) -> List[TableRow]:
    """Rows in grid order; the first failing argument aborts the whole table."""
    params = manifest.params()
    points = manifest.grid.points() if manifest.grid is not None else [0.0]
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda x: _evaluate_point(manifest, params, x), points))
    return [_evaluate_point(manifest, params, x) for x in points]


def _manifest_from_args(args) -> RunManifest:
    if args.manifest:
        manifest = RunManifest.load(args.manifest)
        if manifest.function is None:
            raise ValueError(f"{args.manifest} names no function")
        if args.format is not None:
            manifest = manifest.model_copy(update={"format": args.format})
        return manifest
    if args.function is None:
        raise ValueError("table needs a function name or --manifest")
    grid = None
    if args.start is not None or args.stop is not None:
        grid = ArgumentGrid(
            start=args.start,
            stop=args.stop,
            count=args.count,
            im_start=args.im_start,
            im_stop=args.im_stop,
            im_count=args.im_count,
        )
    p = _params(args)
    return RunManifest(
        function=args.function,
        grid=grid,
        route=p.route,
        alpha=p.alpha,
        omega1=p.omega1,
        omega2=p.omega2,
        n=p.n,
        format=args.format or "csv",
        log=args.log,
    )


def cmd_table(args, manifest: RunManifest) -> int:
    rows = build_table(manifest, args.workers)
    # rendering happens only after every row succeeded, so no partial output
    _emit(render_rows(rows, manifest.format), args.output)
    return 0


def render_reports(result, as_json: bool) -> str:
    if as_json:
        return json.dumps(result.to_json_dict(), indent=2) + "\n"
    header = ["id", "params", "abs_residual", "tolerance", "pass", "status", "notes"]
    rows = []
    for r in result.reports:
        rows.append([
            r.id.value,
            json.dumps(r.to_json_dict()["params"], separators=(",", ":")),
            "-" if r.abs_residual is None else f"{r.abs_residual:.3e}",
            f"{r.tolerance:.0e}",
            "yes" if r.passed else "NO",
            r.status.value,
            r.notes,
        ])
    s = result.summary
    counts = ", ".join(f"{k} {v}" for k, v in s.by_status.items() if v)
    footer = f"\n{s.passed}/{s.total} pass ({counts}); density {s.density}\n"
    if s.failing_verified:
        footer += f"failing verified identities: {', '.join(s.failing_verified)}\n"
    return _aligned(header, rows) + footer


def cmd_verify(args, manifest: Optional[RunManifest]) -> int:
    from .verification_graph import run_suite

    tolerances = manifest.tolerances if manifest is not None else {}
    result = run_suite(filter=args.only, density=args.density, workers=args.workers, tolerances=tolerances)
    _emit(render_reports(result, args.json), None)
    return result.summary.exit_code


def cmd_constants(args) -> int:
    rows = constants()
    if args.format == "json":
        text = json.dumps([r.model_dump() for r in rows], indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "value", "abs_error", "route"])
        writer.writerows([[r.name, repr(r.value), repr(r.abs_error), r.route] for r in rows])
        text = buf.getvalue()
    else:
        text = _aligned(["name", "value", "abs_error", "route"], [[r.name, repr(r.value), repr(r.abs_error), r.route] for r in rows])
    _emit(text, None)
    return 0


# ============================================================================
# Parser
# ============================================================================

def _epilog() -> str:
    functions = "\n".join(f"  {name:<12} {entry.description}" for name, entry in FUNCTIONS.items())
    ids = "\n".join(f"  {i.value:<24} {CATALOG[i].formula}" for i in catalog_ids())
    return f"functions:\n{functions}\n\nidentities:\n{ids}\n"


def _add_function_params(p: argparse.ArgumentParser):
    p.add_argument("--alpha", help="period ratio α of g2 (real or complex, e.g. 2 or 1+0.5j)")
    p.add_argument("--omega1", help="first period of double-sine (default 1)")
    p.add_argument("--omega2", help="second period of double-sine (default 1)")
    p.add_argument("--n", type=int, help="order of gn / kn, prelimit order of omega-tilde")
    p.add_argument("--route", help="route name (see each function's routes)")
    p.add_argument("--log", action="store_true", help="print the logarithm instead of the value")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gammamorphic",
        description="Barnes G family: multi-route evaluation, tables and identity verification.",
        epilog=_epilog(),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("-v", "--verbose", action="count", default=0, help="-v for INFO, -vv for DEBUG logging on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", help="evaluate one function at one argument", epilog=_epilog(),
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("function", choices=function_names())
    p.add_argument("--x", help="argument, real or complex (1+2j)")
    _add_function_params(p)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("table", help="evaluate over a grid (CSV, JSON or text)")
    p.add_argument("function", nargs="?", choices=function_names())
    p.add_argument("--start", type=float)
    p.add_argument("--stop", type=float)
    p.add_argument("--count", type=int, default=11)
    p.add_argument("--im-start", type=float, dest="im_start")
    p.add_argument("--im-stop", type=float, dest="im_stop")
    p.add_argument("--im-count", type=int, default=1, dest="im_count")
    _add_function_params(p)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--output", help="write to this file instead of stdout")
    p.add_argument("--manifest", help="JSON file mirroring RunManifest")
    p.add_argument("--workers", type=int, default=1)

    p = sub.add_parser("verify", help="run the identity verification suite", epilog=_epilog(),
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("--only", help="comma-separated identity ids")
    p.add_argument("--density", choices=config.DENSITIES, default=config.SUITE_DENSITY)
    p.add_argument("--json", action="store_true", help="emit JSON reports and the summary")
    p.add_argument("--manifest", help="JSON file whose 'tolerances' override catalog tolerances")
    p.add_argument("--workers", type=int, default=config.SUITE_WORKERS)

    p = sub.add_parser("constants", help="print γ, ζ(3), ln A, A, ln ω̃, ζ'(-1) and ln G(1/2)")
    p.add_argument("--format", choices=FORMATS, default="text")

    return parser


def _configure_logging(verbose: int):
    level = logging.DEBUG if verbose >= 2 else logging.INFO if verbose == 1 else config.LOG_LEVEL
    logging.basicConfig(stream=sys.stderr, level=level, format="%(levelname)s %(name)s: %(message)s", force=True)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    _configure_logging(args.verbose)

    # flag-level validation: exit 2 with usage
    manifest: Optional[RunManifest] = None
    try:
        if args.command == "verify":
            args.only = parse_ids(args.only) if args.only else None
            if args.manifest:
                manifest = RunManifest.load(args.manifest)
                parse_ids(",".join(manifest.tolerances))
        elif args.command == "table":
            manifest = _manifest_from_args(args)
        elif args.command == "eval":
            args.x = None if args.x is None else parse_number(args.x)
            args.params = _params(args)
    except (ValueError, ValidationError, OSError) as e:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {e}", file=sys.stderr)
        return 2

    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "table":
            return cmd_table(args, manifest)
        if args.command == "verify":
            return cmd_verify(args, manifest)
        return cmd_constants(args)
    except GammamorphicError as e:
        print(f"{type(e).__name__}: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
