"""Command-line front end.

Exit status: 0 all checks passed, 1 at least one identity violated,
2 usage or input error. Bad input never maps to 1.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .catalog import apply_mapping, mapping_table, parse_mapping
from .errors import RootspaceError
from .identities import (
    COMMUTATIVE,
    Mode,
    applicable_identities,
    check_suite,
    parse_identity,
    residual,
    trace_identity,
)
from .limits import LIMIT_MODES, ORDER_ONE, limit_applier, limit_mapping_set
from .textio import (
    FORMATS,
    limit_lines,
    parse_poly,
    print_poly,
    report_line,
    report_obj,
    reports_json,
    table_lines,
    trace_lines,
)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rootspace",
        description="verify identities of tensor-power root space families",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", help="run the identity suite for a family")
    p.add_argument("family")
    p.add_argument("--max-order", type=int, default=3)
    p.add_argument("--orders", help="comma-separated orders, e.g. 2,1,3")
    p.add_argument("--commutative", action="store_true")
    p.add_argument("--leibniz", action="store_true", help="implies --commutative")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("apply", help="apply one mapping to two expressions")
    p.add_argument("family")
    p.add_argument("mapping")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--format", choices=FORMATS, default="ascii")

    p = sub.add_parser("limit", help="commutative limit of an NCRS family")
    p.add_argument("family")
    p.add_argument("--mode", choices=LIMIT_MODES, default=ORDER_ONE)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--json", action="store_true")

    p = sub.add_parser("trace", help="print an identity expansion step by step")
    p.add_argument("family")
    p.add_argument("identity")
    p.add_argument("--orders", required=True)
    p.add_argument("--format", choices=FORMATS, default="ascii")

    p = sub.add_parser("table", help="show each mapping on generic arguments")
    p.add_argument("family")
    p.add_argument("--format", choices=FORMATS, default="ascii")

    return parser


def _parse_orders(text: str, minimum: int = 2, maximum: int = 3):
    parts = [s.strip() for s in text.split(",")]
    try:
        orders = tuple(int(s) for s in parts)
    except ValueError:
        raise ValueError("bad --orders value: %r" % (text,))
    if not minimum <= len(orders) <= maximum:
        raise ValueError("--orders takes %d or %d integers" % (minimum, maximum))
    if any(o < 1 for o in orders):
        raise ValueError("orders must be >= 1: %r" % (text,))
    return orders


def _cmd_verify(args) -> int:
    mode = Mode(commutative=args.commutative or args.leibniz, leibniz=args.leibniz)
    if args.max_order < 1:
        raise ValueError("--max-order must be >= 1")
    if args.orders is not None:
        orders = _parse_orders(args.orders)
        reports = []
        for identity in applicable_identities(args.family, mode):
            if identity.arity > len(orders):
                continue
            reports.append(
                residual(args.family, identity, orders[: identity.arity], mode)
            )
    else:
        reports = check_suite(args.family, args.max_order, mode)
    if args.json:
        print(reports_json(reports))
    else:
        for report in reports:
            print(report_line(report))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_apply(args) -> int:
    mid = parse_mapping(args.mapping)
    left = parse_poly(args.left)
    right = parse_poly(args.right)
    value = apply_mapping(args.family, mid, left, right)
    print(print_poly(value, args.format))
    return 0


def _cmd_limit(args) -> int:
    mapping_set = limit_mapping_set(args.family, args.mode)
    reports = []
    if args.verify:
        applier = limit_applier(args.family, args.mode)
        for identity in applicable_identities(args.family, COMMUTATIVE):
            reports.append(
                residual(
                    args.family,
                    identity,
                    (1,) * identity.arity,
                    COMMUTATIVE,
                    applier=applier,
                )
            )
    if args.json:
        obj = json.loads(limit_lines(mapping_set, fmt="json")[0])
        if args.verify:
            obj["reports"] = [report_obj(r) for r in reports]
        print(json.dumps(obj, indent=2))
    else:
        for line in limit_lines(mapping_set):
            print(line)
        for report in reports:
            print(report_line(report))
    return 0 if all(r.passed for r in reports) else 1


def _cmd_trace(args) -> int:
    identity = parse_identity(args.identity)
    orders = _parse_orders(args.orders)
    if identity.arity > len(orders):
        raise ValueError(
            "%s takes %d orders, got %d" % (identity, identity.arity, len(orders))
        )
    # graded identities exist only on the commutative side
    mode = COMMUTATIVE if identity.name.startswith("graded-") else Mode()
    trace = trace_identity(args.family, identity, orders[: identity.arity], mode)
    for line in trace_lines(trace, args.format):
        print(line)
    return 0


def _cmd_table(args) -> int:
    rows = mapping_table(args.family)
    for line in table_lines(args.family, rows, args.format):
        print(line)
    return 0


_COMMANDS = {
    "verify": _cmd_verify,
    "apply": _cmd_apply,
    "limit": _cmd_limit,
    "trace": _cmd_trace,
    "table": _cmd_table,
}


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _COMMANDS[args.command](args)
    except (RootspaceError, ValueError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
