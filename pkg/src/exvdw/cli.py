"""Command-line front end: ``exvdw <subcommand> [options]``.

Exit status: 0 success, 1 configuration error, 2 numerical non-convergence
(the partial dataset is still written), 3 internal error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import replace
from pathlib import Path

from .core import parse_config
from .errors import ConfigError, NotApplicable, ValidationError, VdwError
from .sweep import FIGURES, METHODS, figure_dataset, run_config

EXIT_OK, EXIT_CONFIG, EXIT_NONCONVERGENT, EXIT_INTERNAL = 0, 1, 2, 3


def _cell(v):
    if v is None:
        return ""
    if isinstance(v, float):
        return format(v, ".9g")
    return str(v)


def to_csv(result):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([result.axis_name, *result.columns, "flags"])
    for row in result.rows:
        *vals, flags = row
        w.writerow([_cell(v) for v in vals] + [";".join(flags)])
    return buf.getvalue()


def _json_value(v):
    if isinstance(v, float) and not math.isfinite(v):
        return None
    return v


def to_json(result):
    rows = [[_json_value(v) for v in row[:-1]] + [list(row[-1])] for row in result.rows]
    doc = {"metadata": result.metadata, "rows": rows}
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"


def _emit(result, fmt, output):
    text = to_csv(result) if fmt == "csv" else to_json(result)
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    for skip in result.metadata.get("skipped", []):
        print(f"skipped {skip['axis_value']!r}: {skip['reason']}", file=sys.stderr)


def _add_output_flags(p):
    p.add_argument("--output", help="output file (default: standard output)")
    p.add_argument("--format", choices=("csv", "json"), help="dataset format")
    p.add_argument("--points", type=int, help="number of sweep points")
    p.add_argument("--min", type=float, help="sweep lower bound")
    p.add_argument("--max", type=float, help="sweep upper bound")


def build_parser():
    parser = argparse.ArgumentParser(prog="exvdw", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("pair", "surface", "media", "lifshitz"):
        p = sub.add_parser(name, help=f"run a {name} configuration")
        p.add_argument("--config", required=True, help="JSON run configuration")
        p.add_argument("--method", choices=METHODS[name],
                       help=f"evaluation method (default {METHODS[name][0]})")
        _add_output_flags(p)
    p = sub.add_parser("figure", help="dataset behind one of the comparison figures")
    p.add_argument("--which", required=True, choices=FIGURES)
    p.add_argument("--gamma-ratio", type=float, help="gamma_B / omega_B (default 0.02)")
    p.add_argument("--temperature", type=float, help="T / omega_B for figures 4a, 4b, 5")
    p.add_argument("--omega-ratio", type=float, help="omega_A / omega_B for figure 6")
    _add_output_flags(p)
    sub.add_parser("verify", help="run the independent provenance checks")
    return parser


def _override_sweep(cfg, args):
    changes = {k: getattr(args, k) for k in ("min", "max", "points") if getattr(args, k) is not None}
    if not changes:
        return cfg
    if cfg.sweep is None:
        raise ConfigError("--points/--min/--max need a sweep in the config")
    s = replace(cfg.sweep, **changes)
    # re-validate through the parser so the same rules apply
    doc = cfg.to_dict()
    doc["sweep"] = {"axis": s.axis, "min": s.min, "max": s.max, "points": s.points,
                    "scale": s.scale}
    return parse_config(json.dumps(doc))


def _run_problem(args):
    try:
        text = Path(args.config).read_text(encoding="utf-8")
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    cfg = parse_config(text)
    if cfg.problem != args.command:
        raise ConfigError(f"config is for problem {cfg.problem!r}, not {args.command!r}")
    cfg = _override_sweep(cfg, args)
    result = run_config(cfg, args.method)
    _emit(result, args.format or cfg.output, args.output)
    return EXIT_NONCONVERGENT if result.nonconvergent else EXIT_OK


def _run_figure(args):
    overrides = {"gamma_ratio": args.gamma_ratio, "temperature": args.temperature,
                 "omega_ratio": args.omega_ratio, "min": args.min, "max": args.max,
                 "points": args.points}
    result = figure_dataset(args.which, overrides)
    _emit(result, args.format or "csv", args.output)
    return EXIT_OK


def _run_verify():
    from .oracle import provenance_checks

    ok = True
    for c in provenance_checks():
        ok &= c.passed
        status = "PASS" if c.passed else "FAIL"
        print(f"{status}  {c.name}: computed={c.computed:.12g} expected={c.expected:.12g} "
              f"gap={c.gap:.3g} tol={c.tol:.3g}")
    return EXIT_OK if ok else EXIT_INTERNAL


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            return _run_verify()
        if args.command == "figure":
            return _run_figure(args)
        return _run_problem(args)
    except (ConfigError, ValidationError, NotApplicable) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except VdwError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NONCONVERGENT
    except Exception as exc:  # invariant violation somewhere below
        print(f"internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


__all__ = ["main", "build_parser", "to_csv", "to_json"]
