"""Command-line front end: ``bjop``.

Exit codes: 0 success, 1 verification failure, 2 usage, parse or I/O error.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

from . import grid as gn
from .errors import BjopError, ParseError
from .harness import SUITES, HarnessConfig, run_all, run_suite, summary_dict, to_csv, to_text
from .operators import op_commutator
from .parser import parse_symbol
from .quantize import QuantizationRule, quantize
from .symbols import poisson_bracket

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class _UsageError(Exception):
    pass


def _length(text: str) -> float:
    """Accept ``50.3``, ``16pi`` or ``16*pi``."""
    s = text.replace(" ", "").lower()
    try:
        if s.endswith("pi"):
            head = s[:-2].rstrip("*")
            return (float(head) if head else 1.0) * math.pi
        return float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a length: {text!r}") from None


def _rule(text: str) -> QuantizationRule:
    try:
        return QuantizationRule.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _use_color(stream) -> bool:
    mode = os.environ.get("BJOP_COLOR", "auto").lower()
    return mode != "never" and stream.isatty()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="bjop", description="Quantization calculus on phase space.")
    sub = p.add_subparsers(dest="command", required=True)

    q = sub.add_parser("quantize", help="quantize a polynomial symbol")
    q.add_argument("expr")
    q.add_argument("--rule", type=_rule, default=QuantizationRule.born_jordan(), help="bj | weyl | tau=<p/q>")
    q.add_argument("--dim", type=int, default=1)

    pb = sub.add_parser("poisson", help="Poisson bracket of two symbols")
    pb.add_argument("a")
    pb.add_argument("b")
    pb.add_argument("--dim", type=int, default=1)

    c = sub.add_parser("commutator", help="quantize two symbols and commute them")
    c.add_argument("a")
    c.add_argument("b")
    c.add_argument("--rule", type=_rule, default=QuantizationRule.born_jordan())
    c.add_argument("--dim", type=int, default=1)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("suite", help=f"one of {', '.join(SUITES)}, all")
    v.add_argument("--rmax", type=int)
    v.add_argument("--smax", type=int)
    v.add_argument("--N", type=int)
    v.add_argument("--L", type=_length)
    v.add_argument("--rule", type=_rule, help="restrict dirac_grid to one rule")
    v.add_argument("--config", type=Path, help="JSON file with harness settings")
    v.add_argument("--json", type=Path, dest="json_path", help="also write the JSON report here")
    v.add_argument("--format", choices=("json", "text", "csv"), default="json")
    v.add_argument("--no-timing", action="store_true", help="write elapsed_s as 0 for reproducible output")

    g = sub.add_parser("grid", help="grid test vectors")
    gsub = g.add_subparsers(dest="grid_command", required=True)
    ge = gsub.add_parser("export", help="write a test vector")
    ge.add_argument("kind", help="gaussian | hermite1 | planewave:<k>")
    ge.add_argument("--N", type=int, default=256)
    ge.add_argument("--L", type=_length, default=16 * math.pi)
    ge.add_argument("--out", type=Path, required=True)
    ge.add_argument("--format", choices=("csv", "json"), default="csv")
    return p


def _cmd_quantize(args, out):
    a = parse_symbol(args.expr, args.dim)
    print(quantize(a, args.rule), file=out)
    return EXIT_OK


def _cmd_poisson(args, out):
    a, b = parse_symbol(args.a, args.dim), parse_symbol(args.b, args.dim)
    print(poisson_bracket(a, b), file=out)
    return EXIT_OK


def _cmd_commutator(args, out):
    a, b = parse_symbol(args.a, args.dim), parse_symbol(args.b, args.dim)
    print(op_commutator(quantize(a, args.rule), quantize(b, args.rule)), file=out)
    return EXIT_OK


def _config_from_args(args) -> HarnessConfig:
    settings = {}
    if args.config is not None:
        settings.update(json.loads(args.config.read_text()))
        settings.update(settings.pop("grid", {}))
    for key in ("rmax", "smax", "N", "L"):
        val = getattr(args, key)
        if val is not None:
            settings[key] = val
    if args.rule is not None:
        settings["rules"] = (str(args.rule),)
    try:
        cfg = HarnessConfig.from_dict(settings)
        cfg.grid  # validates N and L
    except (TypeError, ValueError) as exc:
        raise _UsageError(str(exc)) from None
    return cfg


def _cmd_verify(args, out):
    if args.suite != "all" and args.suite not in SUITES:
        raise _UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}, all")
    cfg = _config_from_args(args)
    if args.suite == "all":
        reports = run_all(cfg)
    else:
        try:
            reports = [run_suite(args.suite, cfg)]
        except (ValueError, gn.CommensurabilityError) as exc:
            raise _UsageError(str(exc)) from None
    timing = not args.no_timing
    payload = summary_dict(reports, timing) if args.suite == "all" else reports[0].to_dict(timing)
    text = json.dumps(payload, indent=2) + "\n"
    if args.json_path is not None:
        args.json_path.write_text(text)
    if args.format == "json":
        out.write(text)
    elif args.format == "csv":
        out.write(to_csv(reports))
    else:
        out.write(to_text(reports, color=_use_color(out)))
    return EXIT_OK if all(r.passed for r in reports) else EXIT_FAIL


def _cmd_grid(args, out):
    grid = gn.Grid(args.N, args.L)
    kind = args.kind
    if kind == "gaussian":
        u = gn.gaussian(grid)
    elif kind == "hermite1":
        u = gn.hermite1(grid)
    elif kind.startswith("planewave:"):
        try:
            k = int(kind.split(":", 1)[1])
        except ValueError:
            raise _UsageError(f"bad plane-wave index in {kind!r}") from None
        u = gn.planewave(grid, k)
    else:
        raise _UsageError(f"unknown vector kind {kind!r}")
    if args.format == "csv":
        u.to_csv(args.out)
    else:
        u.to_json(args.out)
    return EXIT_OK


_COMMANDS = {
    "quantize": _cmd_quantize,
    "poisson": _cmd_poisson,
    "commutator": _cmd_commutator,
    "verify": _cmd_verify,
    "grid": _cmd_grid,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args, out)
    except ParseError as exc:
        print(f"bjop: parse error: {exc}", file=sys.stderr)
    except (_UsageError, BjopError, ValueError) as exc:
        print(f"bjop: {exc}", file=sys.stderr)
    except OSError as exc:
        print(f"bjop: I/O error: {exc}", file=sys.stderr)
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
