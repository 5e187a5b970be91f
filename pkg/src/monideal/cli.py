"""Command-line front end.

Exit codes: 0 success, 1 a verification row failed, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .betti import betti_table, invariants_report
from .families import FamilyError, edge_ideal, parse_family_spec
from .formats import FormatError, ideal_to_json, parse_graph_file, parse_ideal_file
from .hilbert import hilbert_function_prefix, hilbert_series
from .ideal import IdealError, MonomialIdeal
from .oracle import OracleBoundError, taylor_betti
from .verify import LIMITS, SUITES, run_suite

ENGINES = {"hochster": betti_table, "taylor": taylor_betti}


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``a..b`` (inclusive) or a single integer."""
    lo, sep, hi = text.partition("..")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a..b, got {text!r}") from None
    if b < a:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return range(a, b + 1)


def _char(text: str) -> int:
    try:
        p = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad characteristic {text!r}") from None
    if p != 0 and (p < 2 or any(p % d == 0 for d in range(2, int(p**0.5) + 1))):
        raise argparse.ArgumentTypeError(f"characteristic must be 0 or a prime, got {p}")
    return p


def _add_source(p: argparse.ArgumentParser) -> None:
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help="family spec, e.g. herzog, Irs:2,3, thm:5,2, g2:3")
    src.add_argument("--ideal", metavar="PATH", help="ideal file (text or JSON)")
    src.add_argument("--inline", metavar="TEXT", help="ideal text with ';' for newlines")
    src.add_argument("--graph", metavar="PATH", help="graph file (needs --edge-ideal)")
    p.add_argument("--edge-ideal", action="store_true", help="use the edge ideal of --graph")
    p.add_argument("--json", action="store_true", help="emit JSON")


def _add_field(p: argparse.ArgumentParser) -> None:
    p.add_argument("--char", type=_char, default=0, help="field characteristic (0 or prime)")
    p.add_argument("--engine", choices=sorted(ENGINES), default="hochster")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="monideal", description="Invariants of monomial ideals.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="reg, depth, dim, h-vector and friends of S/I")
    _add_source(p)
    _add_field(p)

    p = sub.add_parser("hilbert", help="reduced Hilbert series of S/I")
    _add_source(p)
    p.add_argument("--dmax", type=int, default=None, help="also print H(S/I, k) for k <= dmax")

    p = sub.add_parser("betti", help="graded Betti table of S/I")
    _add_source(p)
    _add_field(p)

    p = sub.add_parser("ideal", help="canonical form of the ideal")
    _add_source(p)

    p = sub.add_parser("verify", help="check the stated closed forms")
    p.add_argument("suite", choices=[*SUITES, "all"])
    for name in ("r", "s", "n", "m"):
        p.add_argument(f"--{name}", type=parse_range, default=None, metavar="A..B")
    p.add_argument("--count", type=int, default=None, help="random ideals for lemmas/oracle")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--char", type=_char, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--failures-only", action="store_true")
    return parser


def load_ideal(args) -> MonomialIdeal:
    if args.graph is not None and not args.edge_ideal:
        raise UsageError("--graph requires --edge-ideal")
    if args.edge_ideal and args.graph is None:
        raise UsageError("--edge-ideal requires --graph")
    if args.family is not None:
        return parse_family_spec(args.family)
    if args.graph is not None:
        return edge_ideal(parse_graph_file(args.graph))
    if args.inline is not None:
        return parse_ideal_file(args.inline.replace(";", "\n") + "\n")
    return parse_ideal_file(args.ideal)


def cmd_invariants(args, out) -> int:
    I = load_ideal(args)
    report = invariants_report(I, args.char, ENGINES[args.engine])
    if args.json:
        data = report.to_json()
        data["hilbert_series"] = hilbert_series(I).to_json()
        print(json.dumps(data, sort_keys=True), file=out)
        return 0
    rows = [
        ("ideal", str(I)),
        ("reg", report.reg),
        ("dim", report.dim),
        ("depth", report.depth),
        ("pd", report.pd),
        ("deg h", report.deg_h),
        ("h-vector", list(report.h_coeffs)),
        ("Cohen-Macaulay", report.is_CM),
        ("h symmetric", report.h_symmetric),
        ("h unimodal", report.h_unimodal),
        ("pure resolution", report.has_pure_resolution),
        ("Hilbert series", str(hilbert_series(I))),
    ]
    width = max(len(k) for k, _ in rows)
    for key, value in rows:
        print(f"{key.ljust(width)}  {value}", file=out)
    return 0


def cmd_hilbert(args, out) -> int:
    I = load_ideal(args)
    I.require_proper()
    hs = hilbert_series(I)
    prefix = hilbert_function_prefix(I, args.dmax) if args.dmax is not None else None
    if args.json:
        data = hs.to_json()
        if prefix is not None:
            data["values"] = prefix
        print(json.dumps(data), file=out)
    else:
        print(hs, file=out)
        if prefix is not None:
            print("values " + " ".join(map(str, prefix)), file=out)
    return 0


def cmd_betti(args, out) -> int:
    I = load_ideal(args)
    I.require_proper()
    table = ENGINES[args.engine](I, args.char)
    if args.json:
        print(json.dumps(table.to_json()), file=out)
    else:
        print(table.format(), file=out)
    return 0


def cmd_ideal(args, out) -> int:
    I = load_ideal(args)
    if args.json:
        print(json.dumps(ideal_to_json(I)), file=out)
    else:
        print(str(I), file=out)
    return 0


def cmd_verify(args, out) -> int:
    ranges = {}
    for name in ("r", "s", "n", "m"):
        value = getattr(args, name)
        if value is not None:
            if value.stop - 1 > LIMITS[name]:
                raise UsageError(f"--{name} upper end exceeds the limit {LIMITS[name]}")
            ranges[name] = value
    if args.count is not None:
        if not 1 <= args.count <= LIMITS["count"]:
            raise UsageError(f"--count must be in 1..{LIMITS['count']}")
        ranges["count"] = args.count
    ranges["seed"] = args.seed
    checks = run_suite(args.suite, ranges, args.char)
    failed = [c for c in checks if not c.passed]
    shown = failed if args.failures_only else checks
    if args.json:
        rows = [
            {"claim": c.claim, "params": c.params, "expected": repr(c.expected),
             "computed": repr(c.computed), "passed": c.passed}
            for c in shown
        ]
        print(json.dumps({"rows": rows, "failures": len(failed)}), file=out)
    else:
        for c in shown:
            status = "PASS" if c.passed else "FAIL"
            print(f"{status}  {c.claim}  [{c.params}]  expected={c.expected!r} computed={c.computed!r}", file=out)
        print(f"{len(checks) - len(failed)}/{len(checks)} passed", file=out)
    return 1 if failed else 0


COMMANDS = {
    "invariants": cmd_invariants,
    "hilbert": cmd_hilbert,
    "betti": cmd_betti,
    "ideal": cmd_ideal,
    "verify": cmd_verify,
}


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return COMMANDS[args.command](args, out)
    except (UsageError, IdealError, FormatError, FamilyError, OracleBoundError, OSError) as exc:
        print(f"monideal: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
