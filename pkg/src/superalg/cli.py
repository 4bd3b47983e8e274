"""Command-line front door.

Subcommands:
  verify  <suite>        run a named verification suite
  eval    <expression>   normalize an expression over a ring descriptor
  certify <morphism.json>  check a user-supplied morphism for idempotence

Exit codes: 0 pass, 1 clause failure, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from .errors import ParseError, SuperAlgError
from .expressions import parse_element
from .reports import SuiteReport
from .suites import SUITES
from .supermodule import SuperMorphism, split_idempotent
from .superring import SuperRing

EXIT_PASS = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


def _use_color() -> bool:
    return sys.stdout.isatty() and not os.environ.get("NO_COLOR")


def _emit(report: SuiteReport, fmt: str) -> int:
    if fmt == "json":
        print(report.to_json_text())
    else:
        print(report.to_text(color=_use_color()))
    return EXIT_PASS if report.passed else EXIT_FAIL


def _load_ring(path: str) -> SuperRing:
    with open(path, encoding="utf-8") as fh:
        return SuperRing.from_json(json.load(fh))


def cmd_verify(args) -> int:
    suite = SUITES[args.suite]
    # Pass only the flags the suite accepts, mapped to its parameter names.
    accepted = suite.__code__.co_varnames[: suite.__code__.co_argcount]
    flags = {"L": args.L, "n": args.n, "max_n": args.max_n, "seed": args.seed, "count": args.count}
    params = {name: value for name, value in flags.items() if name in accepted and value is not None}
    report = suite(**params)
    return _emit(report, args.format)


def cmd_eval(args) -> int:
    ring = _load_ring(args.ring)
    element = parse_element(args.expression, ring)
    if args.format == "json":
        print(json.dumps(element.to_json(), indent=2, sort_keys=True))
    else:
        print(element.to_text())
    return EXIT_PASS


def cmd_certify(args) -> int:
    with open(args.file, encoding="utf-8") as fh:
        morphism = SuperMorphism.from_json(json.load(fh))
    if morphism.source != morphism.target:
        raise SuperAlgError("certification requires a square matrix (source = target)")
    start = time.perf_counter()
    report = SuiteReport(
        "certify-idempotent",
        params={"file": args.file, "type": f"({morphism.source.p},{morphism.source.q})"},
    )
    residual = morphism.compose(morphism) - morphism
    offending = [
        f"[{i}][{j}] = {entry.to_text()}"
        for i, row in enumerate(residual.matrix)
        for j, entry in enumerate(row)
        if not entry.is_zero()
    ]
    idempotent = report.add(
        "idempotent",
        not offending,
        "residual g^2 - g: " + ("0" if not offending else "; ".join(offending[:3])),
    )
    degree = morphism.degree()
    report.add(
        "parity-analysis",
        True,
        f"morphism degree: {'mixed' if degree is None else degree}",
    )
    if idempotent:
        split = split_idempotent(morphism)
        ident = SuperMorphism.identity(morphism.ring, morphism.source)
        report.add(
            "split-round-trip",
            split.iso_inv.compose(split.iso) == ident,
            "x -> (g(x), x - g(x)) inverts; F = Im g + Ker g",
        )
    report.wall_time = time.perf_counter() - start
    return _emit(report, args.format)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="superalg",
        description="Exact superalgebra computations and verification suites.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="run a named verification suite")
    verify.add_argument("suite", choices=sorted(SUITES))
    verify.add_argument("--L", type=int, default=None, help="Grassmann generator count")
    verify.add_argument("--n", type=int, default=None, help="instance index (sphere/landi level)")
    verify.add_argument("--max-n", dest="max_n", type=int, default=None)
    verify.add_argument("--seed", type=int, default=None)
    verify.add_argument("--count", type=int, default=None, help="randomized trial count")
    verify.add_argument("--format", choices=("text", "json"), default="text")
    verify.set_defaults(func=cmd_verify)

    evaluate = sub.add_parser("eval", help="normalize an expression over a ring")
    evaluate.add_argument("expression")
    evaluate.add_argument("--ring", required=True, help="path to a ring descriptor JSON file")
    evaluate.add_argument("--format", choices=("text", "json"), default="text")
    evaluate.set_defaults(func=cmd_eval)

    certify = sub.add_parser("certify", help="certify a morphism JSON file as an idempotent")
    certify.add_argument("file")
    certify.add_argument("--format", choices=("text", "json"), default="text")
    certify.set_defaults(func=cmd_certify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (SuperAlgError, OSError, json.JSONDecodeError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
