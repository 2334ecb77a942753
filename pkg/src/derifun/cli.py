"""Command-line front end: ``derifun derive | derham | curtis-e1 | check``."""

from __future__ import annotations

import argparse
import csv
import io
import json
import re
import sys
import time

from .budget import Budget, default_cap
from .curtis import curtis_e1
from .derived import METHODS, DerivedRequest, derham_homology, derived_functor
from .errors import BudgetExceeded, DerifunError, ParseError, UnknownName, UnsupportedDegree
from .functors import parse_functor
from .zlinalg import FgAbGroup

EXIT_OK, EXIT_PARSE, EXIT_BUDGET, EXIT_MISMATCH = 0, 2, 3, 4

_GROUP_TERM = re.compile(r"\s*(?:(Z)(?:\s*\^\s*(\d+)|\s*/\s*(\d+))?|(0))\s*")


def parse_group(text: str) -> FgAbGroup:
    """Parse ``Z``, ``Z^k``, ``Z/m`` and ``0`` joined by ``+`` into canonical form."""
    orders: list[int] = []
    pos = 0
    if not text.strip():
        raise ParseError("empty group expression", 0)
    while True:
        m = _GROUP_TERM.match(text, pos)
        if not m or m.end() == pos:
            at = len(text) - len(text[pos:].lstrip())
            raise ParseError(f"expected Z, Z^k, Z/m or 0 at {text[at:]!r}", at)
        z, power, modulus, zero = m.groups()
        if z:
            if power is not None:
                orders.extend([0] * int(power))
            elif modulus is not None:
                if int(modulus) == 0:
                    raise ParseError("modulus must be positive", m.start(3))
                orders.append(int(modulus))
            else:
                orders.append(0)
        pos = m.end()
        if pos == len(text):
            break
        if text[pos] != "+":
            raise ParseError(f"unexpected {text[pos]!r}", pos)
        pos += 1
    return FgAbGroup.from_orders(orders)


def format_group(a: FgAbGroup) -> str:
    return str(a)


def _budget(args) -> Budget:
    return Budget(cap=args.budget if args.budget is not None else default_cap())


def _cmd_derive(args) -> int:
    functor = parse_functor(args.functor)
    group = parse_group(args.group)
    budget = _budget(args)
    start = time.perf_counter()
    req = DerivedRequest(functor, group, args.shift, args.max_degree, args.method, budget=budget)
    result = derived_functor(req)
    wall = (time.perf_counter() - start) * 1000
    degrees = {str(i): (str(v) if v is not None else "unknown") for i, v in sorted(result.values.items())}
    doc = {
        "functor": functor.expr(),
        "group": str(group),
        "shift": args.shift,
        "method": args.method,
        "degrees": degrees,
        "provenance": {str(i): p for i, p in sorted(result.provenance.items())},
        "budget": result.budget_report,
        "wall_time_ms": round(wall, 3),
    }
    if args.format == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["i", "value"])
        for i, v in degrees.items():
            writer.writerow([i, v])
        sys.stdout.write(buf.getvalue())
    else:
        for i, v in degrees.items():
            print(f"L_{i} {doc['functor']}({doc['group']}, {args.shift}) = {v}")
    return EXIT_BUDGET if result.unknown else EXIT_OK


def _cmd_derham(args) -> int:
    hom = derham_homology(args.n, args.rank, args.variant)
    if args.format == "json":
        doc = {"n": args.n, "rank": args.rank, "variant": args.variant,
               "homology": {str(i): str(g) for i, g in sorted(hom.items())}}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        for i, g in sorted(hom.items()):
            print(f"H_{i} {args.variant}^{args.n}(Z^{args.rank}) = {g}")
    return EXIT_OK


def _cmd_curtis(args) -> int:
    group = parse_group(args.group)
    page = curtis_e1(group, args.moore_dim, args.r_max, args.q_max, budget=args.budget)
    if args.format == "json":
        print(json.dumps(page.to_json(), indent=2, sort_keys=True))
    elif args.format == "csv":
        sys.stdout.write(page.to_csv())
    else:
        print(page.to_text())
    return EXIT_OK


def _cmd_check(args) -> int:
    from .suites import run_suite

    failures = 0
    total = 0
    for outcome in run_suite(args.suite, seed=args.seed):
        total += 1
        failures += not outcome.ok
        print(outcome.line(), flush=True)
    print(f"{total - failures}/{total} passed")
    return EXIT_MISMATCH if failures else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="derifun", description="Derived functors of non-additive functors.")
    sub = parser.add_subparsers(dest="command", required=True)

    d = sub.add_parser("derive", help="L_i F(A, n) for 0 <= i <= max-degree")
    d.add_argument("--functor", required=True)
    d.add_argument("--group", required=True)
    d.add_argument("--shift", type=int, default=0)
    d.add_argument("--max-degree", type=int, default=4)
    d.add_argument("--method", choices=METHODS, default="auto")
    d.add_argument("--format", choices=("text", "json", "csv"), default="text")
    d.add_argument("--budget", type=int, default=None, help="matrix column cap")
    d.set_defaults(run=_cmd_derive)

    r = sub.add_parser("derham", help="homology of the (dual) de Rham complex of Z^rank")
    r.add_argument("--n", type=int, required=True)
    r.add_argument("--rank", type=int, required=True)
    r.add_argument("--variant", choices=("C", "D"), default="C")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(run=_cmd_derham)

    c = sub.add_parser("curtis-e1", help="Curtis E1 page for a Moore space")
    c.add_argument("--group", required=True)
    c.add_argument("--moore-dim", type=int, required=True)
    c.add_argument("--r-max", type=int, default=4)
    c.add_argument("--q-max", type=int, default=6)
    c.add_argument("--budget", type=int, default=None)
    c.add_argument("--format", choices=("text", "json", "csv"), default="text")
    c.set_defaults(run=_cmd_curtis)

    k = sub.add_parser("check", help="golden tables or property suite")
    k.add_argument("--suite", choices=("paper-tables", "properties"), required=True)
    k.add_argument("--seed", type=int, default=0)
    k.set_defaults(run=_cmd_check)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.run(args)
    except (ParseError, UnknownName, UnsupportedDegree) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except DerifunError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
