"""Command-line interface.

Exit codes: 0 ok, 1 usage error, 2 domain error, 3 verification failure.
Data goes to stdout; banners and diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import alcove_oracle, genfunc, verify
from .errors import QGRankError
from .rank_engine import Method, RankQuery, rank
from .records import OutputRecord, to_csv, to_json
from .root_systems import LieType, alcove_params, all_types, build_root_system, params_for_level

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN, EXIT_VERIFY = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _banner(args, text):
    if not args.quiet:
        print(text, file=sys.stderr)


def cmd_rank(args) -> int:
    t = LieType.parse(args.type)
    result = rank(RankQuery(t, args.ell, Method.parse(args.method)))
    record = OutputRecord.from_result(result)
    if args.format == "json":
        print(json.dumps(record.to_dict(), indent=2))
    elif args.format == "csv":
        sys.stdout.write(to_csv([record]))
    else:
        _banner(args, f"# rank of C({t}, q, {args.ell})")
        print("\n".join(record.text_lines()))
    return EXIT_OK


def _series_parity(t: LieType, parity: str) -> int:
    m = build_root_system(t).m
    if parity in ("auto", "divisible"):
        return 0
    if m == 1:
        raise QGRankError(f"{t} is simply laced (m = 1): only --parity divisible applies")
    return 1


def cmd_series(args) -> int:
    t = LieType.parse(args.type)
    params = alcove_params(t, _series_parity(t, args.parity))
    series = genfunc.build_F(params)
    coeffs = genfunc.expand(series, args.terms)
    if args.format == "json":
        print(json.dumps({
            "type": t.label,
            "ell_m": params.ell_m,
            "factors": list(series.factors),
            "coefficients": coeffs,
        }, indent=2))
        return EXIT_OK
    _banner(args, f"# {t}, ell_m = {params.ell_m}, parts = {list(params.parts)}")
    print(f"F(x) = 1/[{series.describe_denominator()}]")
    print(" ".join(map(str, coeffs)))
    return EXIT_OK


def cmd_weights(args) -> int:
    t = LieType.parse(args.type)
    params = params_for_level(t, args.ell)
    labels = alcove_oracle.enumerate_alcove(params, args.ell)
    _banner(args, f"# {t} at ell = {args.ell}: coordinates follow parts {list(params.parts)}")
    for lab in labels:
        print(lab)
    print(f"count = {len(labels)}")
    return EXIT_OK


def _table_records(types, lo, hi, method):
    records = []
    for t in types:
        for ell in range(lo, hi + 1):
            params = params_for_level(t, ell)
            if ell <= params.rho_pairing:
                records.append(OutputRecord.degenerate_level(params, ell, method.short))
            else:
                records.append(OutputRecord.from_result(rank(RankQuery(t, ell, method))))
    return records


def cmd_table(args) -> int:
    if args.all_types:
        types = all_types(args.max_rank)
    elif args.type:
        types = [LieType.parse(args.type)]
    else:
        raise UsageError("table needs --type or --all-types")
    records = _table_records(types, args.ell_min, args.ell_max, Method.parse(args.method))
    if args.format == "json":
        print(to_json(records))
    else:
        sys.stdout.write(to_csv(records))
    return EXIT_OK


def cmd_verify(args) -> int:
    fixture = None
    if args.fixture:
        with open(args.fixture) as fh:
            fixture = fh.read()
    enum_counter = alcove_oracle.count_alcove
    if args.inject_fault == "enumeration":
        enum_counter = verify.broken_enumeration
    report = verify.run(fixture, max_rank=args.max_rank, max_ell=args.max_ell, enum_counter=enum_counter)
    for line in report.lines:
        print(line)
    if report.passed:
        print("verification passed")
        return EXIT_OK
    print(f"verification FAILED: {len(report.failures)} mismatch(es)")
    return EXIT_VERIFY


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {v}")
    return v


def _nonneg(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {v}")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--quiet", action="store_true", help="suppress the banner on stderr")

    p = _Parser(prog="qgrank", description="Ranks of pre-modular categories C(g, q, ell).")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    r = sub.add_parser("rank", parents=[common], help="rank at one level")
    r.add_argument("--type", required=True, help="Lie type, e.g. A3, B5, E8, F4, G2")
    r.add_argument("--ell", required=True, type=_positive)
    r.add_argument("--method", choices=["gf", "enum", "both"], default="both")
    r.add_argument("--format", choices=["text", "json", "csv"], default="text")
    r.set_defaults(func=cmd_rank)

    s = sub.add_parser("series", parents=[common], help="expand the generating function")
    s.add_argument("--type", required=True)
    s.add_argument("--parity", choices=["auto", "divisible", "indivisible"], default="auto",
                   help="divisibility of ell by m (auto = divisible)")
    s.add_argument("--terms", type=_nonneg, default=10, help="highest exponent to print")
    s.add_argument("--format", choices=["text", "json"], default="text")
    s.set_defaults(func=cmd_series)

    w = sub.add_parser("weights", parents=[common], help="list alcove weights")
    w.add_argument("--type", required=True)
    w.add_argument("--ell", required=True, type=_positive)
    w.set_defaults(func=cmd_weights)

    t = sub.add_parser("table", parents=[common], help="ranks over a range of levels")
    t.add_argument("--type")
    t.add_argument("--all-types", action="store_true")
    t.add_argument("--max-rank", type=_positive, default=8)
    t.add_argument("--ell-min", type=_positive, default=1)
    t.add_argument("--ell-max", type=_nonneg, required=True)
    t.add_argument("--method", choices=["gf", "enum", "both"], default="both")
    t.add_argument("--format", choices=["csv", "json"], default="csv")
    t.set_defaults(func=cmd_table)

    v = sub.add_parser("verify", parents=[common], help="self-verification")
    v.add_argument("--fixture", help="rank-table fixture file (default: bundled)")
    v.add_argument("--max-rank", type=_positive, default=8)
    v.add_argument("--max-ell", type=_positive, default=100)
    v.add_argument("--inject-fault", choices=["enumeration"], help=argparse.SUPPRESS)
    v.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"qgrank: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QGRankError as exc:
        print(f"qgrank: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
