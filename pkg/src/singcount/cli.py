"""Command-line front end.

Exit status: 0 success, 1 verification failed, 2 bad input, 3 evaluation error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from concurrent.futures import ThreadPoolExecutor

from .cohomology import WeightError
from .counts import CountResult, count, formula
from .polyring import Poly, PolySyntaxError, mono_str
from .singularity import SingClass
from .targets import TableError, load_table
from .targetspec import TargetSyntaxError, parse_target
from .verify import run_verification

EXIT_OK, EXIT_FAILED, EXIT_INPUT, EXIT_EVAL = 0, 1, 2, 3

log = logging.getLogger("singcount")


class InputError(Exception):
    pass


def poly_to_json(p: Poly) -> dict:
    return {
        "terms": [{"coeff": str(c), "monomial": mono_str(m)} for m, c in p.sorted_terms()],
        "text": str(p),
    }


def result_to_json(sing: SingClass, target_text: str, dimension: int, res: CountResult) -> dict:
    return {
        "singularity": str(sing),
        "target": target_text,
        "dimension": dimension,
        "route": res.route,
        "value": poly_to_json(res.value),
        "checks": [{"name": n, "passed": ok} for n, ok in res.checks],
        "discrepancies": [r.to_dict() for r in res.discrepancies()],
    }


def _build_target(text: str, allow_ranges=False):
    try:
        spec = parse_target(text, allow_ranges=allow_ranges)
        return spec, (None if allow_ranges else spec.build())
    except (TargetSyntaxError, TableError, PolySyntaxError) as exc:
        raise InputError(str(exc)) from None
    except ValueError as exc:
        raise InputError(f"invalid target {text!r}: {exc}") from None


def cmd_count(args) -> int:
    sing = SingClass.parse(args.sing)
    if args.route and sing is not SingClass.A2:
        raise InputError("--route applies only to A2")
    spec, target = _build_target(args.target)
    res = count(sing, target, route=args.route, verify=args.verify)
    if args.json:
        print(json.dumps(result_to_json(sing, str(spec), target.dimension, res), indent=2))
    else:
        print(res.value)
        print(f"route: {res.route}")
        for name, ok in res.checks:
            print(f"check {name}: {'ok' if ok else 'FAILED'}")
        for note in res.notes:
            print(f"discrepancy: {note}")
    return EXIT_OK if res.passed else EXIT_EVAL


def cmd_formula(args) -> int:
    if args.dim < 1:
        raise InputError("--dim must be >= 1")
    if args.route and args.sing != "A2":
        raise InputError("--route applies only to A2")
    p = formula(SingClass.parse(args.sing), args.dim, route=args.route)
    if args.json:
        print(json.dumps({"singularity": args.sing, "dimension": args.dim, "value": poly_to_json(p)}, indent=2))
    else:
        print(p)
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_dim < 1:
        raise InputError("--max-dim must be >= 1")
    table = None
    if args.table:
        try:
            table = load_table(args.table)
        except TableError as exc:
            raise InputError(str(exc)) from None
    rep = run_verification(args.max_dim, table)
    if args.json:
        print(json.dumps(rep.to_dict(), indent=2))
    else:
        for c in rep.checks:
            print(f"{'PASS' if c.passed else 'FAIL'}  {c.name}")
        print(f"{sum(c.passed for c in rep.checks)}/{len(rep.checks)} checks passed")
        print(f"{len(rep.discrepancies)} documented discrepancies:")
        for r in rep.discrepancies:
            print(f"  {r}")
    return EXIT_OK if rep.ok else EXIT_FAILED


def cmd_table(args) -> int:
    sing = SingClass.parse(args.sing)
    spec, _ = _build_target(args.target, allow_ranges=True)
    if spec.kind == "table":
        raise InputError("table targets have no degree ranges")
    try:
        cells = list(spec.expand(diagonal=args.diagonal))
    except TargetSyntaxError as exc:
        raise InputError(str(exc)) from None
    labels = [lab for lab, _ in spec.ranges()]

    def run(cell):
        degrees, concrete = cell
        return degrees, count(sing, concrete.build(), route=args.route, cross_check=False).value

    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        rows = list(pool.map(run, cells))

    if args.format == "json":
        print(json.dumps({
            "singularity": str(sing),
            "target": str(spec),
            "rows": [{"degrees": deg, "value": poly_to_json(v)} for deg, v in rows],
        }, indent=2))
    elif args.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(labels + ["value"])
        for deg, v in rows:
            w.writerow([deg[lab] for lab in labels] + [str(v)])
        sys.stdout.write(buf.getvalue())
    else:
        print(f"N({sing}) on {spec}")
        width = max([len(lab) for lab in labels] + [4])
        print("  ".join(f"{lab:>{width}}" for lab in labels) + ("  " if labels else "") + "value")
        for deg, v in rows:
            print("  ".join(f"{deg[lab]:>{width}}" for lab in labels) + ("  " if labels else "") + str(v))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        sys.exit(EXIT_INPUT)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="singcount", description="Count hypersurfaces with A1/A2/A3 singularities.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    sings = [s.name for s in SingClass]

    c = sub.add_parser("count", help="count singular hypersurfaces on a target")
    c.add_argument("--sing", required=True, choices=sings)
    c.add_argument("--target", required=True, help='e.g. "pm(m=2,d=4)" or "product((m=1,d=d1),(m=1,d=d2))"')
    c.add_argument("--route", choices=["det", "proj"], help="A2 only")
    c.add_argument("--verify", action="store_true", help="A2: also run the other route")
    c.add_argument("--json", action="store_true")
    c.set_defaults(func=cmd_count)

    f = sub.add_parser("formula", help="generic count as a polynomial in c1, x_i")
    f.add_argument("--sing", required=True, choices=sings)
    f.add_argument("--dim", required=True, type=int)
    f.add_argument("--route", choices=["det", "proj"])
    f.add_argument("--json", action="store_true")
    f.set_defaults(func=cmd_formula)

    v = sub.add_parser("verify", help="run the self-check suite")
    v.add_argument("--max-dim", type=int, default=5)
    v.add_argument("--table", help="also check a table-target JSON file")
    v.add_argument("--json", action="store_true")
    v.set_defaults(func=cmd_verify)

    t = sub.add_parser("table", help="counts over ranges of degrees")
    t.add_argument("--sing", required=True, choices=sings)
    t.add_argument("--target", required=True, help='e.g. "pm(m=2,d=1..5)"')
    t.add_argument("--route", choices=["det", "proj"])
    t.add_argument("--diagonal", action="store_true", help="step all ranges together")
    t.add_argument("--format", choices=["text", "json", "csv"], default="text")
    t.add_argument("--jobs", type=int, default=1)
    t.set_defaults(func=cmd_table)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except InputError as exc:
        print(f"singcount: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except TableError as exc:
        print(f"singcount: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (WeightError, ArithmeticError, ValueError) as exc:
        print(f"singcount: evaluation error: {exc}", file=sys.stderr)
        return EXIT_EVAL


if __name__ == "__main__":
    sys.exit(main())
