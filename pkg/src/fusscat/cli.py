"""Command-line front end.

Subcommands: count, equiv, canon, convert, table, verify.  Exit codes:
0 for success (and for "equivalent" / "all cells agree"), 1 for a
negative verdict (not equivalent, or a count mismatch), 2 for usage or
data errors.  Output is deterministic; counts are printed as decimal
strings.  An expression argument of "-" reads one line from stdin.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import counting, dyck, expr
from .errors import FusscatError
from .params import Params


def _int_range(text: str) -> range:
    """Range syntax: "3" or "2..4" (inclusive)."""
    lo, sep, hi = text.partition("..")
    if sep:
        return range(int(lo), int(hi) + 1)
    return range(int(lo), int(lo) + 1)


def _operand(text: str) -> str:
    if text == "-":
        return sys.stdin.readline().rstrip("\n")
    return text


def _parse_dyck_arg(text: str, params: Params) -> dyck.DyckTuple:
    return dyck.parse_dyck(text, params)


def _render(d: dyck.DyckTuple, fmt: str, params: Params) -> str:
    if fmt == "expr":
        return expr.unparse(dyck.from_dyck(d, params))
    if fmt in ("ns", "dyck"):
        return dyck.print_dyck(d, "ns")
    return dyck.print_dyck(d, "tuple")


def _cmd_count(args) -> int:
    params = Params(args.m, args.k)
    length = args.length if args.length is not None else args.leaves - 1
    if args.brute:
        value = counting.count_minimal_brute(params, length)
    else:
        value = counting.modular_fuss_catalan(params, length)
    print(value)
    return 0


def _cmd_equiv(args) -> int:
    params = Params(args.m, args.k)
    tuples = [dyck.to_dyck(expr.parse(_operand(text), params), params)
              for text in (args.left, args.right)]
    same = dyck.equivalent(tuples[0], tuples[1], params)
    record = {
        "equivalent": same,
        "signatures": [list(dyck.signature(d, params)) for d in tuples],
    }
    if same:
        record["canonical"] = _render(dyck.canonicalize(tuples[0], params),
                                      "expr", params)
    print(json.dumps(record))
    return 0 if same else 1


def _cmd_canon(args) -> int:
    params = Params(args.m, args.k)
    text = _operand(args.input)
    if args.in_format == "expr":
        d = dyck.to_dyck(expr.parse(text, params), params)
    else:
        d = _parse_dyck_arg(text, params)
    minimal = dyck.canonicalize(d, params)
    record = {
        "canonical": _render(minimal, args.out_format, params),
        "signature": list(dyck.signature(minimal, params)),
    }
    print(json.dumps(record))
    return 0


def _cmd_convert(args) -> int:
    params = Params(args.m, 1)  # conversion is k-independent
    text = _operand(args.input)
    if args.from_format == "expr":
        d = dyck.to_dyck(expr.parse(text, params), params)
    else:
        d = _parse_dyck_arg(text, params)
    if args.to_format == "expr":
        print(expr.unparse(dyck.from_dyck(d, params)))
    elif args.to_format == "dyck-ns":
        print(dyck.print_dyck(d, "ns"))
    else:
        print(dyck.print_dyck(d, "tuple"))
    return 0


def _cmd_table(args) -> int:
    rows = []
    for m in args.m_range:
        for k in args.k_range:
            params = Params(m, k)
            for length in args.length_range:
                if length < 1 or length % (m - 1) != 0:
                    continue
                rows.append((m, k, length,
                             counting.modular_fuss_catalan(params, length)))
    if args.format == "csv":
        print("m,k,length,count")
        for m, k, length, count in rows:
            print("%d,%d,%d,%d" % (m, k, length, count))
    else:
        for m, k, length, count in rows:
            print(json.dumps({"m": m, "k": k, "length": length,
                              "count": str(count)}))
    return 0


def _cmd_verify(args) -> int:
    mismatches = 0
    cells = 0
    for m in args.m_range:
        for k in args.k_range:
            params = Params(m, k)
            for length in range(m - 1, args.max_length + 1, m - 1):
                cells += 1
                formula = counting.modular_fuss_catalan(params, length)
                brute = counting.count_minimal_brute(params, length)
                line = ("m=%d k=%d length=%d formula=%d brute=%d"
                        % (m, k, length, formula, brute))
                ok = formula == brute
                if args.classes:
                    try:
                        reports = counting.enumerate_classes(params, length + 1)
                    except counting.BudgetError:
                        line += " classes=skipped"
                    else:
                        line += " classes=%d" % len(reports)
                        ok = ok and len(reports) == formula
                print(line + (" ok" if ok else " MISMATCH"))
                if not ok:
                    mismatches += 1
    print("checked %d cells, %d mismatches" % (cells, mismatches))
    return 1 if mismatches else 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fusscat",
        description="Canonical forms and exact counting for k-associative "
                    "m-ary operations.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--m", type=int, required=True, help="arity (>= 2)")
        p.add_argument("--k", type=int, required=True,
                       help="associativity degree (>= 1)")

    p = sub.add_parser("count", help="number of equivalence classes")
    common(p)
    size = p.add_mutually_exclusive_group(required=True)
    size.add_argument("--length", type=int, help="tuple length L")
    size.add_argument("--leaves", type=int, help="leaf count N (= L + 1)")
    p.add_argument("--brute", action="store_true",
                   help="count by enumeration instead of the formula")
    p.set_defaults(func=_cmd_count)

    p = sub.add_parser("equiv", help="test two expressions for equivalence")
    common(p)
    p.add_argument("left")
    p.add_argument("right")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("canon", help="canonical form of an expression or path")
    common(p)
    p.add_argument("--in", dest="in_format", choices=("expr", "dyck"),
                   default="expr")
    p.add_argument("--out", dest="out_format",
                   choices=("expr", "tuple", "ns", "dyck"), default="expr")
    p.add_argument("input")
    p.set_defaults(func=_cmd_canon)

    p = sub.add_parser("convert", help="convert between representations")
    p.add_argument("--m", type=int, required=True, help="arity (>= 2)")
    p.add_argument("--from", dest="from_format", required=True,
                   choices=("expr", "dyck-ns", "dyck-tuple"))
    p.add_argument("--to", dest="to_format", required=True,
                   choices=("expr", "dyck-ns", "dyck-tuple"))
    p.add_argument("input")
    p.set_defaults(func=_cmd_convert)

    p = sub.add_parser("table", help="count table over parameter ranges")
    p.add_argument("--m-range", type=_int_range, required=True,
                   metavar="LO..HI")
    p.add_argument("--k-range", type=_int_range, required=True,
                   metavar="LO..HI")
    p.add_argument("--length-range", type=_int_range, required=True,
                   metavar="LO..HI")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("verify", help="cross-check formula against brute force")
    p.add_argument("--m-range", type=_int_range, required=True,
                   metavar="LO..HI")
    p.add_argument("--k-range", type=_int_range, required=True,
                   metavar="LO..HI")
    p.add_argument("--max-length", type=int, required=True)
    p.add_argument("--classes", action="store_true",
                   help="also enumerate classes where the budget allows")
    p.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except FusscatError as error:
        print("error: %s" % error, file=sys.stderr)
        return 2
    except BrokenPipeError:
        return 2
