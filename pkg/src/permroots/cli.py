"""Command-line interface.

Subcommands: exists, count, roots, table, prob (alias: verify), selftest.
Exit codes: 0 success (a correct "no roots exist" answer is success),
2 usage errors, 3 malformed inputs, 4 size-cap refusals, 5 internal
assertion failures.  Size caps (S_n scan bound, root stream limit, series
truncation) are explicit flags with loud refusals, never silent clamps.
Decimal columns are presentation only; all computation is exact.
"""

from __future__ import annotations

import argparse
import csv
import itertools
import json
import sys
from fractions import Fraction
from math import factorial

from .counting import root_count
from .egf import check_prime_power_equalities, r_total, root_count_from_egf
from .gsets import count_epsilons, g_set_bounded
from .numtheory import bracket
from .perm import (
    CycleType,
    OracleSizeError,
    Permutation,
    brute_force_roots,
    cycle_type,
    cycle_types,
    enumerate_roots,
    format_cycle_type,
    format_permutation,
    has_mth_root,
    parse_cycle_type,
    parse_permutation,
)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INPUT = 3
EXIT_SIZE = 4
EXIT_INTERNAL = 5

DEFAULT_ROOT_LIMIT = 10_000
DEFAULT_TRUNCATION_CAP = 40
DEFAULT_ORACLE_BOUND = 8


class CapRefusal(Exception):
    """A requested computation exceeds an explicit size cap."""


def _require_m(m: int) -> int:
    if m < 1:
        raise ValueError(f"m must be a positive integer, got {m}")
    return m


def _resolve_cycle_type(args) -> CycleType:
    if args.perm is not None:
        return cycle_type(parse_permutation(args.perm))
    return parse_cycle_type(args.type)


def _resolve_permutation(args) -> Permutation:
    if args.perm is not None:
        return parse_permutation(args.perm)
    return parse_cycle_type(args.type).canonical_permutation()


def _parse_range(text: str) -> tuple[int, int]:
    """Inclusive degree range: "0..5", or a single degree "7"."""
    lo_text, sep, hi_text = text.partition("..")
    try:
        lo = int(lo_text)
        hi = int(hi_text) if sep else lo
    except ValueError as exc:
        raise ValueError(f"bad range {text!r}: use A..B or a single integer") from exc
    if lo < 0 or hi < lo:
        raise ValueError(f"bad range {text!r}: need 0 <= A <= B")
    return lo, hi


def _decimal_text(value: Fraction, places: int = 12) -> str:
    """Fixed-point rendering of a nonnegative rational, presentation only."""
    rounded = round(value * 10**places)
    digits = f"{rounded:0{places + 1}d}"
    return f"{digits[:-places]}.{digits[-places:]}"


def _print_aligned(rows: list[dict], columns: list[str]) -> None:
    widths = {
        col: max(len(col), *(len(str(row[col])) for row in rows)) if rows else len(col)
        for col in columns
    }
    print("  ".join(col.rjust(widths[col]) for col in columns))
    for row in rows:
        print("  ".join(str(row[col]).rjust(widths[col]) for col in columns))


def _witness_rows(t: CycleType, m: int) -> list[dict]:
    """Per-length divisibility witness: a root exists iff every row divides."""
    return [
        {
            "ell": ell,
            "a": count,
            "required": bracket(ell, m),
            "divides": count % bracket(ell, m) == 0,
        }
        for ell, count in t.nonzero()
    ]


def _cmd_exists(args) -> int:
    t = _resolve_cycle_type(args)
    m = _require_m(args.m)
    rows = _witness_rows(t, m)
    answer = has_mth_root(t, m)
    assert answer == all(row["divides"] for row in rows)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "m": m,
                    "cycle_type": format_cycle_type(t),
                    "exists": answer,
                    "witness": rows,
                },
                sort_keys=True,
            )
        )
    else:
        print("yes" if answer else "no")
        if rows:
            _print_aligned(
                [{**row, "divides": "yes" if row["divides"] else "no"} for row in rows],
                ["ell", "a", "required", "divides"],
            )
    return EXIT_OK


def _count_detail(t: CycleType, m: int) -> list[dict]:
    """Per-length breakdown: admissible cycle-fusion sizes and solution counts."""
    detail = []
    for ell, count in t.nonzero():
        elements = g_set_bounded(m, ell, count).elements
        detail.append(
            {
                "ell": ell,
                "a": count,
                "admissible_g": list(elements),
                "solutions": count_epsilons(elements, count),
            }
        )
    return detail


def _cmd_count(args) -> int:
    t = _resolve_cycle_type(args)
    m = _require_m(args.m)
    value = root_count(t, m)
    detail = _count_detail(t, m) if args.verbose else None
    if args.format == "json":
        payload = {"m": m, "cycle_type": format_cycle_type(t), "count": value}
        if detail is not None:
            payload["detail"] = detail
        print(json.dumps(payload, sort_keys=True))
    else:
        print(value)
        if detail is not None:
            for row in detail:
                gs = ", ".join(str(g) for g in row["admissible_g"])
                print(
                    f"ell={row['ell']} a={row['a']} admissible g=[{gs}] "
                    f"solutions={row['solutions']}"
                )
    return EXIT_OK


def _cmd_roots(args) -> int:
    sigma = _resolve_permutation(args)
    m = _require_m(args.m)
    if args.limit < 1:
        raise ValueError(f"--limit must be positive, got {args.limit}")
    limit = None if args.all else args.limit
    total = root_count(cycle_type(sigma), m)
    emitted = 0
    for tau in enumerate_roots(sigma, m):
        if limit is not None and emitted >= limit:
            print(
                f"error: output truncated at --limit {limit} of {total} roots; "
                f"raise --limit or pass --all",
                file=sys.stderr,
            )
            return EXIT_SIZE
        print(format_permutation(tau))
        emitted += 1
    return EXIT_OK


def _table_rows(lo: int, hi: int, m: int) -> list[dict]:
    rows = []
    for n in range(lo, hi + 1):
        count = r_total(n, m)
        prob = Fraction(count, factorial(n))
        rows.append(
            {
                "n": n,
                "m": m,
                "r_total": count,
                "p_num": prob.numerator,
                "p_den": prob.denominator,
                "p_decimal": _decimal_text(prob),
            }
        )
    return rows


TABLE_COLUMNS = ["n", "m", "r_total", "p_num", "p_den", "p_decimal"]


def _cmd_table(args) -> int:
    m = _require_m(args.m)
    lo, hi = _parse_range(args.n)
    if hi > args.truncation_cap:
        raise CapRefusal(
            f"degree {hi} exceeds the truncation cap {args.truncation_cap}; "
            f"raise --truncation-cap explicitly"
        )
    rows = _table_rows(lo, hi, m)
    if args.format == "json":
        print(json.dumps(rows, sort_keys=True))
    elif args.format == "csv":
        writer = csv.writer(sys.stdout, lineterminator="\n")
        writer.writerow(TABLE_COLUMNS)
        for row in rows:
            writer.writerow([row[col] for col in TABLE_COLUMNS])
    else:
        _print_aligned(rows, TABLE_COLUMNS)
    return EXIT_OK


def _cmd_prob(args) -> int:
    if args.blocks < 1:
        raise ValueError(f"--blocks must be positive, got {args.blocks}")
    top = args.blocks * args.q - 1
    if top > args.truncation_cap:
        raise CapRefusal(
            f"{args.blocks} blocks reach degree {top}, above the truncation cap "
            f"{args.truncation_cap}; raise --truncation-cap explicitly"
        )
    report = check_prime_power_equalities(args.q, args.r, args.blocks)
    if args.format == "json":
        payload = {
            "q": report.q,
            "r": report.r,
            "m": report.m,
            "all_equal": report.all_equal,
            "blocks": [
                {
                    "j": block.j,
                    "ns": list(block.ns),
                    "probabilities": [
                        f"{p.numerator}/{p.denominator}" for p in block.probabilities
                    ],
                    "equal": block.equal,
                }
                for block in report.blocks
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"m = {report.q}^{report.r} = {report.m}")
        for block in report.blocks:
            probs = " ".join(f"{p.numerator}/{p.denominator}" for p in block.probabilities)
            verdict = "equal" if block.equal else "UNEQUAL"
            print(f"block j={block.j}  n={block.ns[0]}..{block.ns[-1]}  p: {probs}  [{verdict}]")
        print(f"all blocks equal: {'yes' if report.all_equal else 'NO'}")
    if not report.all_equal:
        print("error: a probability block failed its equality check", file=sys.stderr)
        return EXIT_INTERNAL
    return EXIT_OK


def _cmd_selftest(args) -> int:
    max_n = args.max_n
    ms = [int(tok) for tok in args.m_values.split(",") if tok.strip()]
    if not ms or any(m < 1 for m in ms):
        raise ValueError(f"bad -m list {args.m_values!r}")
    if max_n < 0:
        raise ValueError(f"--max-n must be nonnegative, got {args.max_n}")
    if max_n > args.oracle_bound:
        raise CapRefusal(
            f"--max-n {max_n} exceeds the oracle bound {args.oracle_bound}; "
            f"raise --oracle-bound explicitly"
        )

    for m in ms:
        for n in range(max_n + 1):
            for image in itertools.permutations(range(1, n + 1)):
                sigma = Permutation(image)
                expected = brute_force_roots(sigma, m, max_n=args.oracle_bound)
                constructed = sorted(enumerate_roots(sigma, m))
                counted = root_count(cycle_type(sigma), m)
                assert constructed == expected, f"root sets differ for {sigma}, m={m}"
                assert counted == len(expected), f"root count differs for {sigma}, m={m}"
    print(f"ok oracle equivalence: n <= {max_n}, m in {ms}")

    for m in ms:
        for n in range(max_n + 1):
            total = sum(root_count(t, m) * t.class_size() for t in cycle_types(n))
            assert total == factorial(n), f"global root identity fails at n={n}, m={m}"
    print(f"ok global identity sum(root_count * class_size) == n!: n <= {max_n}, m in {ms}")

    for m in ms:
        for n in range(max_n + 1):
            for t in cycle_types(n):
                assert root_count_from_egf(m, t) == root_count(t, m), (
                    f"series and product formulas differ at {t}, m={m}"
                )
    print(f"ok generating-function agreement: weight <= {max_n}, m in {ms}")

    for n in range(max_n + 1):
        for m in ms:
            r_total(n, m)  # internally cross-checks series vs classification
    print(f"ok r_total dual route: n <= {max_n}, m in {ms}")

    for q, r in ((2, 1), (2, 2), (3, 1)):
        blocks = max(1, (max_n + 1) // q)
        report = check_prime_power_equalities(q, r, blocks)
        assert report.all_equal, f"probability blocks unequal for m={q}^{r}"
    print("ok prime-power probability blocks: m in [2, 4, 3]")

    print("selftest passed")
    return EXIT_OK


def _add_input_group(sub: argparse.ArgumentParser) -> None:
    group = sub.add_mutually_exclusive_group(required=True)
    group.add_argument("--perm", help='permutation in one-line notation, e.g. "2 3 1"')
    group.add_argument("--type", help='cycle type, e.g. "1^2 3" for two fixed points and a 3-cycle')


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="permroots",
        description="Exact m-th roots of permutations: existence, counts, "
        "construction, and root probabilities.",
        epilog="Exit codes: 0 ok, 2 usage, 3 bad input, 4 size-cap refusal, "
        "5 internal assertion failure.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_exists = sub.add_parser("exists", help="decide whether an m-th root exists")
    p_exists.add_argument("-m", type=int, required=True, help="root degree")
    _add_input_group(p_exists)
    p_exists.add_argument("--format", choices=["text", "json"], default="text")
    p_exists.set_defaults(func=_cmd_exists)

    p_count = sub.add_parser("count", help="exact number of m-th roots")
    p_count.add_argument("-m", type=int, required=True, help="root degree")
    _add_input_group(p_count)
    p_count.add_argument("--format", choices=["text", "json"], default="text")
    p_count.add_argument(
        "-v",
        "--verbose",
        action="count",
        default=0,
        help="also print the per-length breakdown (admissible g, solution counts)",
    )
    p_count.set_defaults(func=_cmd_count)

    p_roots = sub.add_parser(
        "roots", help="stream all m-th roots in one-line notation"
    )
    p_roots.add_argument("-m", type=int, required=True, help="root degree")
    _add_input_group(p_roots)
    p_roots.add_argument(
        "--limit",
        type=int,
        default=DEFAULT_ROOT_LIMIT,
        help=f"refuse to stream more than this many roots (default {DEFAULT_ROOT_LIMIT})",
    )
    p_roots.add_argument(
        "--all", action="store_true", help="stream every root, ignoring --limit"
    )
    p_roots.set_defaults(func=_cmd_roots)

    p_table = sub.add_parser(
        "table", help="r_total and root probability over a range of degrees"
    )
    p_table.add_argument("-m", type=int, required=True, help="root degree")
    p_table.add_argument("--n", required=True, help='degree range "A..B" (or one degree)')
    p_table.add_argument("--format", choices=["text", "csv", "json"], default="text")
    p_table.add_argument(
        "--truncation-cap",
        type=int,
        default=DEFAULT_TRUNCATION_CAP,
        help=f"largest degree the series may be expanded to (default {DEFAULT_TRUNCATION_CAP})",
    )
    p_table.set_defaults(func=_cmd_table)

    p_prob = sub.add_parser(
        "prob",
        aliases=["verify"],
        help="verify equal root probabilities on blocks of prime-power length",
    )
    p_prob.add_argument("-q", type=int, required=True, help="prime base of m = q^r")
    p_prob.add_argument("-r", type=int, default=1, help="exponent of m = q^r (default 1)")
    p_prob.add_argument(
        "--blocks", type=int, default=8, help="number of blocks to verify (default 8)"
    )
    p_prob.add_argument("--format", choices=["text", "json"], default="text")
    p_prob.add_argument(
        "--truncation-cap",
        type=int,
        default=DEFAULT_TRUNCATION_CAP,
        help=f"largest degree the series may be expanded to (default {DEFAULT_TRUNCATION_CAP})",
    )
    p_prob.set_defaults(func=_cmd_prob)

    p_self = sub.add_parser(
        "selftest", help="run the oracle-equivalence and identity suites"
    )
    p_self.add_argument(
        "--max-n", type=int, default=5, help="largest degree to scan exhaustively (default 5)"
    )
    p_self.add_argument(
        "-m",
        dest="m_values",
        default="2,3,4",
        help='comma-separated root degrees (default "2,3,4")',
    )
    p_self.add_argument(
        "--oracle-bound",
        type=int,
        default=DEFAULT_ORACLE_BOUND,
        help=f"cap on the exhaustive S_n scan (default {DEFAULT_ORACLE_BOUND})",
    )
    p_self.set_defaults(func=_cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args)
    except (CapRefusal, OracleSizeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SIZE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
