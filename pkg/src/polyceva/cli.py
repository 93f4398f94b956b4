"""Command-line front end.

Subcommands: verify, counterexample, fuzz, svg.  Exit codes:

    0  the checked identity holds
    1  the identity was computed and fails (kernel bug sentinel)
    2  input error (bad JSON, bad rational, structural invariant, flags)
    3  degenerate configuration (parallel/tangent/vertex collision)

Machine-readable JSON is the default output; --pretty renders an
aligned factor table instead.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .ceva import CevaConfig, build_converse_counterexample, ceva_product
from .circle import (
    InscribedConfig,
    ThroughPoint,
    concurrent_secants_check,
    inscribed_identity_report,
)
from .configio import (
    CounterexampleInput,
    ceva_run_report,
    counterexample_run_report,
    inscribed_run_report,
    parse_config,
)
from .errors import ConfigError, DegenerateConfig, GeometryError, Tangent
from .fuzz import GenParams, fuzz_ceva, fuzz_inscribed
from .svgout import (
    render_ceva_svg,
    render_counterexample_svg,
    render_inscribed_svg,
)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyceva",
        description="Exact rational verification of cevian product "
                    "identities on polygons.")
    parser.add_argument("--pretty", action="store_true",
                        help="human-readable output instead of JSON")
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check the product identity of a config file")
    verify.add_argument("config", type=Path)
    _output_flags(verify)

    counter = sub.add_parser("counterexample",
                             help="build the non-concurrent pentagon with product -1")
    counter.add_argument("config", type=Path)
    _output_flags(counter)

    fuzz = sub.add_parser("fuzz", help="run seeded random verification batches")
    fuzz.add_argument("--trials", type=int, default=100)
    fuzz.add_argument("--kind", choices=("ceva", "inscribed", "concurrent"),
                      default="ceva")
    fuzz.add_argument("--n-min", type=int, default=3)
    fuzz.add_argument("--n-max", type=int, default=7)
    fuzz.add_argument("--seed", type=int, default=0)
    fuzz.add_argument("--bound", type=int, default=10)

    svg = sub.add_parser("svg", help="render a config as a standalone SVG figure")
    svg.add_argument("config", type=Path)
    svg.add_argument("--out", type=Path, required=True)
    return parser


def _output_flags(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group()
    group.add_argument("--json", dest="force_json", action="store_true",
                       help="machine-readable JSON (default)")
    group.add_argument("--pretty", dest="pretty", action="store_true",
                       default=argparse.SUPPRESS)


def _emit(report: dict, pretty: bool) -> None:
    if pretty:
        _print_pretty(report)
    else:
        print(json.dumps(report, indent=2))


def _print_pretty(report: dict) -> None:
    head = [f"kind: {report['kind']}   n={report['n']} s={report['s']} t={report['t']}"]
    if "K" in report:
        head.append(f"K = {report['K']}   branch {report['branch']}   "
                    f"concurrent: {report['concurrent']}")
    print("\n".join(head))
    factors = report.get("factors", [])
    if factors:
        width = max(len(f["value"]) for f in factors)
        print(f"  {'i':>3} {'j':>3}  ratio")
        for f in factors:
            print(f"  {f['i']:>3} {f['j']:>3}  {f['value']:>{width}}")
    print(f"product  {report['product']}")
    if report.get("expected") is not None:
        print(f"expected {report['expected']}")
    for key, value in report.get("diagnostics", {}).items():
        if key in ("lhs_squared", "rhs_squared"):
            print(f"{key} {value}")
    print(f"holds    {'yes' if report['holds'] else 'NO'}")


def _verify_report(parsed) -> dict:
    if isinstance(parsed, CevaConfig):
        return ceva_run_report(parsed, ceva_product(parsed))
    if isinstance(parsed, InscribedConfig):
        specs = parsed.line_specs
        shared = (all(isinstance(s, ThroughPoint) for s in specs)
                  and len({s.point for s in specs}) == 1)
        if shared:
            report = concurrent_secants_check(parsed)
            return inscribed_run_report(parsed, report, Fraction(-1) ** parsed.n)
        return inscribed_run_report(parsed, inscribed_identity_report(parsed), None)
    assert isinstance(parsed, CounterexampleInput)
    result = build_converse_counterexample(parsed.vertices, parsed.pivot,
                                           parsed.seed)
    return counterexample_run_report(result, parsed.seed)


def _cmd_verify(args, pretty: bool) -> int:
    parsed = parse_config(args.config.read_bytes())
    report = _verify_report(parsed)
    _emit(report, pretty)
    return 0 if report["holds"] else 1


def _cmd_counterexample(args, pretty: bool) -> int:
    parsed = parse_config(args.config.read_bytes())
    if not isinstance(parsed, CounterexampleInput):
        raise ConfigError("counterexample subcommand needs a config of "
                          "kind 'counterexample'")
    result = build_converse_counterexample(parsed.vertices, parsed.pivot,
                                           parsed.seed)
    report = counterexample_run_report(result, parsed.seed)
    _emit(report, pretty)
    return 0 if report["holds"] else 1


def _cmd_fuzz(args) -> int:
    try:
        params = GenParams(seed=args.seed, n_min=args.n_min, n_max=args.n_max,
                           coordinate_bound=args.bound)
        if args.trials < 0:
            raise ValueError("--trials must be nonnegative")
    except ValueError as exc:
        raise ConfigError(str(exc)) from exc
    if args.kind == "ceva":
        report = fuzz_ceva(params, args.trials)
    else:
        report = fuzz_inscribed(params, args.trials,
                                concurrent=args.kind == "concurrent")
    print(json.dumps(report.to_dict(), indent=2))
    return 0 if not report.failures else 1


def _cmd_svg(args) -> int:
    parsed = parse_config(args.config.read_bytes())
    if isinstance(parsed, CevaConfig):
        doc = render_ceva_svg(parsed)
    elif isinstance(parsed, InscribedConfig):
        doc = render_inscribed_svg(parsed)
    else:
        doc = render_counterexample_svg(parsed.vertices, parsed.pivot,
                                        parsed.seed)
    args.out.write_text(doc)
    return 0


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    pretty = getattr(args, "pretty", False) and not getattr(args, "force_json", False)
    try:
        if args.command == "verify":
            return _cmd_verify(args, pretty)
        if args.command == "counterexample":
            return _cmd_counterexample(args, pretty)
        if args.command == "fuzz":
            return _cmd_fuzz(args)
        return _cmd_svg(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (DegenerateConfig, Tangent) as exc:
        print(f"degenerate: {exc}", file=sys.stderr)
        return 3
    except GeometryError as exc:
        print(f"geometry error: {exc}", file=sys.stderr)
        return 3


def run() -> None:
    raise SystemExit(main())
