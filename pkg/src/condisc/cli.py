"""Command-line front end.

Exit codes: 0 success, 1 invalid input, 2 internal invariant violation
(the analyzer caught itself producing impossible numbers -- a bug, not a
property of the input).
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .conductor import analyze
from .errors import InstanceError, InternalInvariantViolation
from .harness import default_specs, run_trial
from .instancefile import load_instance
from .render import dot_cover, dot_model, dot_tree, render_text


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="condisc",
        description="Exact conductor/discriminant analysis of split hyperelliptic equations "
        "over a discretely valued base",
    )
    parser.add_argument("--version", action="version", version=f"condisc {__version__}")
    sub = parser.add_subparsers(dest="command", metavar="{analyze,batch}")

    pa = sub.add_parser("analyze", help="analyze one instance file")
    pa.add_argument("input", help="JSON instance file (roots or matrix mode)")
    pa.add_argument("--format", choices=("text", "json"), default="text")
    pa.add_argument("--dot-dir", metavar="DIR", help="write t_b.dot, t_y.dot, t_x.dot here")
    pa.add_argument("--strict", action="store_true", help="treat warnings as errors")
    pa.add_argument("--allow-small-genus", action="store_true",
                    help="accept 2 or 4 roots (outside the supported theory; for synthetic tests)")

    pb = sub.add_parser("batch", help="analyze every .json instance in a directory")
    pb.add_argument("directory")
    pb.add_argument("--format", choices=("jsonl",), default="jsonl")
    pb.add_argument("--allow-small-genus", action="store_true")

    pf = sub.add_parser("fuzz")  # internal: randomized identity sweep
    pf.add_argument("--trials", type=int, default=100)
    pf.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_analyze(args) -> int:
    source, label = load_instance(args.input, allow_small=args.allow_small_genus)
    report = analyze(source, allow_small=args.allow_small_genus, label=label)
    if args.strict and report.warnings:
        for w in report.warnings:
            print(f"error (strict): {w}", file=sys.stderr)
        return 1
    if args.dot_dir:
        outdir = Path(args.dot_dir)
        outdir.mkdir(parents=True, exist_ok=True)
        (outdir / "t_b.dot").write_text(dot_tree(report))
        (outdir / "t_y.dot").write_text(dot_cover(report.ygraph))
        (outdir / "t_x.dot").write_text(dot_model(report.xgraph))
    if args.format == "json":
        print(report.to_json())
    else:
        sys.stdout.write(render_text(report))
    return 0


def _cmd_batch(args) -> int:
    directory = Path(args.directory)
    files = sorted(directory.glob("*.json")) if directory.is_dir() else []
    if not files:
        print(f"no instances found in {args.directory}", file=sys.stderr)
        return 1
    failures = 0
    invariant_trips = 0
    for path in files:
        try:
            source, label = load_instance(path, allow_small=args.allow_small_genus)
            report = analyze(source, allow_small=args.allow_small_genus, label=label)
        except InstanceError as exc:
            failures += 1
            print(f"{path.name}: {exc}", file=sys.stderr)
            continue
        except InternalInvariantViolation as exc:
            invariant_trips += 1
            print(f"{path.name}: INTERNAL: {exc}", file=sys.stderr)
            continue
        line = report.to_json_dict()
        if line["label"] is None:
            line["label"] = path.stem
        print(json.dumps(line, separators=(",", ":")))
    if failures or invariant_trips:
        print(f"batch: {failures} invalid, {invariant_trips} internal failures "
              f"out of {len(files)} files", file=sys.stderr)
    if invariant_trips:
        return 2
    return 1 if failures else 0


def _cmd_fuzz(args) -> int:
    equal = strict = 0
    for spec in default_specs(args.trials, base_seed=args.seed):
        report = run_trial(spec)
        if report.equality_holds:
            equal += 1
        else:
            strict += 1
    print(f"fuzz: {args.trials} trials ok ({equal} with equality, {strict} strict)")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help()
        return 1
    try:
        if args.command == "analyze":
            return _cmd_analyze(args)
        if args.command == "batch":
            return _cmd_batch(args)
        return _cmd_fuzz(args)
    except InstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except InternalInvariantViolation as exc:
        print(f"internal invariant violation: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
