"""Command-line front end.

Exit status: 0 on success, 1 when verification finds a mismatch, 2 on any
input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .complexity import complexity_report, degree_of_complexity, round_half_up
from .datasets import worked_example
from .fuzzy import MODES
from .miner import BOXES, REGIONS, mine
from .oracle import export_decision_boundary, verify_grid, verify_random

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT = 0, 1, 2
GEOMETRY_FLAGS = {"regions": REGIONS, "boxes": BOXES}
EXAMPLE_FILE = "worked_example.json"


class InputError(Exception):
    pass


def cmd_mine(args) -> int:
    base = io.load_fuzzy(args.input)
    crb = mine(base, args.mode, GEOMETRY_FLAGS[args.geometry])
    _write(args.output, io.dumps(crb))
    ratio = round_half_up(degree_of_complexity(len(crb), base.n_rules))
    print(f"{base.n_rules} fuzzy → {len(crb)} crisp, complexity {ratio:g}")
    return EXIT_OK


def cmd_verify(args) -> int:
    base = io.load_fuzzy(args.fuzzy)
    crb = io.load_crisp(args.crisp)
    try:
        if args.random is not None:
            report = verify_random(base, crb, args.random, args.seed)
        else:
            report = verify_grid(base, crb, args.grid)
    except ValueError as exc:
        raise InputError(str(exc))
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_complexity(args) -> int:
    report = complexity_report(io.load_fuzzy(args.input))
    if args.json:
        print(json.dumps(report.as_dict(), indent=2))
        return EXIT_OK
    print(f"fuzzy rules:               {report.fuzzy_rule_count}")
    print(f"crisp rules (regions):     {report.crisp_rule_count}")
    print(f"crisp rules (boxes):       {report.hyperrect_rule_count}")
    print(f"upper bound (sufficient):  {report.sufficient_upper_bound}")
    print(f"upper bound (additive):    {report.additive_upper_bound}")
    print(f"degree of complexity:      {report.rounded_complexity:g} ({report.degree_of_complexity:.6f})")
    return EXIT_OK


def cmd_boundary(args) -> int:
    base = io.load_fuzzy(args.input)
    classifier = base
    if args.crisp is not None:
        classifier = io.load_crisp(args.crisp)
        if classifier.source.n_features != base.n_features:
            raise InputError("crisp and fuzzy bases have different dimensions")
    try:
        grid = export_decision_boundary(classifier, resolution=args.resolution)
    except ValueError as exc:
        raise InputError(str(exc))
    _write(args.output, grid.to_csv())
    return EXIT_OK


def cmd_example(args) -> int:
    out = Path(args.output_dir)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create {out}: {exc}")
    path = out / EXAMPLE_FILE
    _write(path, io.dumps(worked_example()))
    print(path)
    return EXIT_OK


def _write(path, text: str) -> None:
    try:
        Path(path).write_text(text, encoding="utf-8")
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fuzzy2crisp", description="Crisp equivalents of fuzzy rule-based classifiers.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mine", help="mine an equivalent crisp rule base")
    p.add_argument("input")
    p.add_argument("-m", "--mode", choices=MODES, default=None, help="inference mode (default: the file's)")
    p.add_argument("-g", "--geometry", choices=sorted(GEOMETRY_FLAGS), default="regions")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_mine)

    p = sub.add_parser("verify", help="check fuzzy and crisp decisions agree")
    p.add_argument("fuzzy")
    p.add_argument("crisp")
    how = p.add_mutually_exclusive_group()
    how.add_argument("--grid", type=int, default=50, metavar="N", help="points per dimension (default 50)")
    how.add_argument("--random", type=int, default=None, metavar="N", help="uniform random samples")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("complexity", help="crisp rule counts, bounds and degree of complexity")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_complexity)

    p = sub.add_parser("boundary", help="export a 2-D decision boundary grid as CSV")
    p.add_argument("input")
    p.add_argument("-r", "--resolution", type=int, default=200)
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--crisp", default=None, metavar="PATH", help="export this crisp rule base instead")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("example", help="write the bundled worked example")
    p.add_argument("output_dir")
    p.set_defaults(func=cmd_example)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, io.DocumentError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
