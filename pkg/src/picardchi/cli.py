"""Command-line front end.

    picardchi wt0 --g 3 --format text
    picardchi top --g 2 --format json
    picardchi chi --g 2 --kind top --max-n 8
    picardchi equivariant --g 2 --kind top --n 7
    picardchi verify tables|properties|ncount|bounds|all [--seed S] [--depth D]

Results go to stdout, diagnostics to stderr.  ``verify`` exits 1 when any
check fails; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import sys

from . import formulas as fm
from .verify import SUITES, run_suite

FORMATS = ("text", "latex", "json")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="picardchi",
        description="Euler characteristics of universal Picard stacks over M_{g,n}.")
    sub = ap.add_subparsers(dest="command", required=True)

    for name, help_ in (("wt0", "weight-zero generating function"),
                        ("top", "topological generating function")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--g", type=int, required=True)
        p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("chi", help="chi(Pic_{g,n}) for n = 0..max-n")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--kind", choices=("wt0", "top"), required=True)
    p.add_argument("--max-n", type=int, default=0)

    p = sub.add_parser("equivariant", help="S_n-equivariant Euler characteristic (power sums)")
    p.add_argument("--g", type=int, required=True)
    p.add_argument("--kind", choices=("wt0", "top"), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=FORMATS, default="text")

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("suite", choices=SUITES + ("all",))
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    return ap


def main(argv: list[str] | None = None) -> int:
    ap = _parser()
    args = ap.parse_args(argv)

    if args.command in ("wt0", "top", "chi", "equivariant") and args.g < 2:
        ap.error(f"--g must be >= 2 (closed formulas are stated for g >= 2), got {args.g}")

    if args.command in ("wt0", "top"):
        print(fm.jacobian(args.g, args.command).render(args.format))
        return 0

    if args.command == "chi":
        if args.max_n < 0:
            ap.error("--max-n must be nonnegative")
        for n, value in enumerate(fm.chi_series(args.g, args.kind, args.max_n)):
            print(f"{n}\t{value}")
        return 0

    if args.command == "equivariant":
        if args.n < 0:
            ap.error("--n must be nonnegative")
        print(fm.equivariant_chi(args.g, args.kind, args.n).render(args.format))
        return 0

    report = run_suite(args.suite, seed=args.seed, depth=args.depth)
    if args.json:
        print(report.to_json())
    else:
        print("\n".join(report.lines()))
        failed = sum(not c.passed for c in report.checks)
        print(f"{len(report.checks) - failed}/{len(report.checks)} checks passed",
              file=sys.stderr)
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
