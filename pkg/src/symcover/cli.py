"""Command-line front end.

Output on stdout is exactly the requested format (text, csv or json) and is
byte-identical across runs and thread counts; anything diagnostic goes to
stderr.  Exit codes: 0 success, 1 verification or certification failure,
2 usage error, 3 cache or environment error.
"""

from __future__ import annotations

import argparse
import csv
import json
import os
import sys
from pathlib import Path

from .character_table import DEFAULT_MAX_N, TableStore
from .class_functions import (
    Decomposition,
    decompose,
    irreducible,
    pointwise_product,
    power_exact,
)
from .covering import (
    CoveringReport,
    VerifyReport,
    covering_record,
    covering_survey,
    verify_brauer,
    verify_non_rectangle,
    verify_rectangle,
    verify_semigroup,
    verify_table1,
    verify_theorem1,
    verify_theta_move,
)
from .generic import (
    DEFAULT_INT_TOL,
    DEFAULT_ORTHO_TOL,
    CertificationError,
    SchemaError,
    dihedral_table,
    generic_covering,
    parse_generic_table,
)
from .partitions import Partition, format_partition, parse_partition, size
from .support import SupportCache

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2
EXIT_ENV = 3


class UsageError(ValueError):
    pass


def default_cache_dir() -> Path:
    env = os.environ.get("SYMCOVER_CACHE_DIR")
    if env:
        return Path(env)
    return Path.home() / ".cache" / "symcover"


def _parse_threads(text: str) -> int:
    if text == "auto":
        return os.cpu_count() or 1
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid thread count {text!r}")
    if value < 1:
        raise argparse.ArgumentTypeError("thread count must be >= 1")
    return value


def _parse_range(text: str) -> list[int]:
    """A single integer, or an inclusive range written a..b."""
    if ".." in text:
        lo_text, _, hi_text = text.partition("..")
        lo, hi = int(lo_text), int(hi_text)
        if lo > hi:
            raise UsageError(f"empty range {text!r}")
        return list(range(lo, hi + 1))
    return [int(text)]


def _require_n(n: int, lo: int, what: str, hi: int = DEFAULT_MAX_N) -> None:
    if not lo <= n <= hi:
        raise UsageError(f"{what} requires {lo} <= n <= {hi}, got {n}")


def _partition_arg(text: str, n: int) -> Partition:
    lam = parse_partition(text)
    if size(lam) != n:
        raise UsageError(f"{text!r} is not a partition of {n}")
    return lam


def _emit(text: str) -> None:
    sys.stdout.write(text)


def _json_dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv_text(rows: list[list[str]]) -> str:
    from io import StringIO

    buf = StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def _aligned(rows: list[list[str]], right: set[int]) -> str:
    """Plain text table; columns in `right` are right-aligned."""
    widths = [max(len(r[i]) for r in rows) for i in range(len(rows[0]))]
    lines = []
    for row in rows:
        cells = [
            cell.rjust(widths[i]) if i in right else cell.ljust(widths[i])
            for i, cell in enumerate(row)
        ]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


# --- emission of the artifact shapes ---


def emit_table(table, fmt: str) -> None:
    parts = [format_partition(p) for p in table.partitions]
    if fmt == "json":
        _emit(
            _json_dump(
                {
                    "n": table.n,
                    "partitions": parts,
                    "class_sizes": [str(s) for s in table.class_sizes],
                    "values": [[str(v) for v in row] for row in table.values],
                }
            )
        )
        return
    rows = [["partition"] + parts]
    for lam, row in zip(table.partitions, table.values):
        rows.append([format_partition(lam)] + [str(v) for v in row])
    if fmt == "csv":
        _emit(_csv_text(rows))
    else:
        _emit(_aligned(rows, right=set(range(1, len(rows[0])))))


def emit_decomposition(dec: Decomposition, fmt: str) -> None:
    pairs = [(format_partition(p), str(m)) for p, m in sorted(dec.mult.items(), reverse=True) if m]
    if fmt == "json":
        _emit(_json_dump(dec.to_json_dict()))
    elif fmt == "csv":
        _emit(_csv_text([["partition", "multiplicity"]] + [list(p) for p in pairs]))
    else:
        _emit(_aligned([["partition", "multiplicity"]] + [list(p) for p in pairs], right={1}))


def emit_support(n: int, support: frozenset, fmt: str) -> None:
    parts = [format_partition(p) for p in sorted(support, reverse=True)]
    if fmt == "json":
        _emit(_json_dump({"n": n, "support": parts}))
    elif fmt == "csv":
        _emit(_csv_text([["partition"]] + [[p] for p in parts]))
    else:
        _emit("\n".join(parts) + "\n" if parts else "")


def _maybe(v: int | None):
    return "none" if v is None else v


def emit_covering(report: CoveringReport, fmt: str) -> None:
    if fmt == "json":
        _emit(
            _json_dump(
                {
                    "group": report.group,
                    "characters": [
                        {
                            "character": r.character,
                            "degree": str(r.degree),
                            "e": _maybe(r.e),
                            "d": _maybe(r.d),
                            "e_witness_k": r.e_witness_k,
                            "d_witness_k": r.d_witness_k,
                            "faithful": r.faithful,
                            "center_order_of_chi": str(r.center_order),
                        }
                        for r in report.characters
                    ],
                    "e_max": _maybe(report.e_max),
                    "d_max": _maybe(report.d_max),
                }
            )
        )
        return
    header = [
        "character",
        "degree",
        "e",
        "d",
        "e_witness_k",
        "d_witness_k",
        "faithful",
        "center_order_of_chi",
    ]
    rows = [header]
    for r in report.characters:
        rows.append(
            [
                r.character,
                str(r.degree),
                str(_maybe(r.e)),
                str(_maybe(r.d)),
                str(r.e_witness_k),
                str(r.d_witness_k),
                "yes" if r.faithful else "no",
                str(r.center_order),
            ]
        )
    if fmt == "csv":
        rows.append(["e_max", str(_maybe(report.e_max)), "", "", "", "", "", ""])
        rows.append(["d_max", str(_maybe(report.d_max)), "", "", "", "", "", ""])
        _emit(_csv_text(rows))
    else:
        _emit(_aligned(rows, right=set(range(1, 8))))
        _emit(f"e_max = {_maybe(report.e_max)}\n")
        _emit(f"d_max = {_maybe(report.d_max)}\n")


def emit_verify(target: str, runs: list[VerifyReport], fmt: str) -> None:
    total_checks = sum(r.checks for r in runs)
    total_failures = sum(len(r.failures) for r in runs)
    if fmt == "json":
        _emit(
            _json_dump(
                {
                    "target": target,
                    "runs": [
                        {
                            "scope": r.scope,
                            "checks": r.checks,
                            "failures": r.failures,
                            "passed": r.passed,
                        }
                        for r in runs
                    ],
                    "checks": total_checks,
                    "failures": total_failures,
                    "passed": total_failures == 0,
                }
            )
        )
        return
    if fmt == "csv":
        rows = [["target", "scope", "checks", "failures", "passed"]]
        for r in runs:
            rows.append([target, r.scope, str(r.checks), str(len(r.failures)), str(r.passed).lower()])
        _emit(_csv_text(rows))
        return
    for r in runs:
        if r.passed:
            _emit(f"PASS {target} {r.scope} checks={r.checks}\n")
        else:
            _emit(f"FAIL {target} {r.scope} checks={r.checks} failures={len(r.failures)}\n")
            _emit(f"  first counterexample: {r.failures[0]}\n")
    _emit(f"total: {len(runs)} run(s), {total_checks} checks, {total_failures} failures\n")


# --- subcommand handlers ---


def _store(args) -> TableStore:
    return TableStore(cache_dir=args.cache_dir, max_n=DEFAULT_MAX_N)


def cmd_table(args) -> int:
    _require_n(args.n, 1, "table")
    table = _store(args).table(args.n)
    emit_table(table, args.format)
    return EXIT_OK


def cmd_kron(args) -> int:
    _require_n(args.n, 1, "kron")
    lam = _partition_arg(args.lam, args.n)
    mu = _partition_arg(args.mu, args.n)
    table = _store(args).table(args.n)
    if args.support_only:
        cache = SupportCache(table)
        emit_support(args.n, cache.pair_support(lam, mu), args.format)
        return EXIT_OK
    product = pointwise_product(irreducible(table, lam), irreducible(table, mu))
    emit_decomposition(decompose(product, table), args.format)
    return EXIT_OK


def cmd_power(args) -> int:
    _require_n(args.n, 1, "power")
    if args.k < 1:
        raise UsageError("k must be >= 1")
    lam = _partition_arg(args.lam, args.n)
    table = _store(args).table(args.n)
    if args.support_only:
        cache = SupportCache(table)
        seq = cache.power_support_sequence(lam, args.k)
        emit_support(args.n, seq[-1], args.format)
        return EXIT_OK
    emit_decomposition(power_exact(lam, args.k, table), args.format)
    return EXIT_OK


def cmd_cover(args) -> int:
    _require_n(args.n, 2, "cover")
    table = _store(args).table(args.n)
    cache = SupportCache(table)
    if args.lam is not None:
        lam = _partition_arg(args.lam, args.n)
        record = covering_record(lam, cache)
        nonlinear = [record] if record.degree > 1 else []
        report = CoveringReport(
            group=f"S{args.n}",
            characters=[record],
            e_max=record.e if nonlinear else None,
            d_max=record.d if nonlinear else None,
        )
    else:
        report = covering_survey(args.n, cache, threads=args.threads)
    emit_covering(report, args.format)
    return EXIT_OK


_VERIFY_DEFAULTS = {
    # target: (default range, extended range, minimum n)
    "theorem1": ((5, 10), (5, 12), 5),
    "non-rectangle": ((3, 10), (3, 12), 3),
    "rectangle": ((7, 10), (7, 12), 7),
    "brauer": ((5, 10), (5, 12), 2),
}


def _verify_ns(args, target: str) -> list[int]:
    default, extended, lo = _VERIFY_DEFAULTS[target]
    if args.n is None:
        a, b = extended if args.extended else default
        return list(range(a, b + 1))
    ns = _parse_range(args.n)
    for n in ns:
        _require_n(n, lo, f"verify {target}")
    return ns


def cmd_verify(args) -> int:
    store = _store(args)
    target = args.target
    runs: list[VerifyReport] = []
    if target == "table1":
        runs.append(verify_table1(store))
    elif target == "theta-move":
        if args.n is None:
            raise UsageError("verify theta-move requires --n")
        for n in _parse_range(args.n):
            _require_n(n, 1, "verify theta-move")
            if not 1 <= args.u <= n or args.v < 1:
                raise UsageError(f"theta-move needs 1 <= u <= n and v >= 1, got u={args.u} v={args.v}")
            runs.append(verify_theta_move(n, args.u, args.v, store.table(n)))
    elif target == "semigroup":
        if args.samples < 1 or args.max_size < 2:
            raise UsageError("semigroup needs samples >= 1 and max size >= 2")
        runs.append(
            verify_semigroup(store, samples=args.samples, seed=args.seed, max_total=args.max_size)
        )
    else:
        fn = {
            "theorem1": verify_theorem1,
            "non-rectangle": verify_non_rectangle,
            "rectangle": verify_rectangle,
            "brauer": verify_brauer,
        }[target]
        for n in _verify_ns(args, target):
            runs.append(fn(n, SupportCache(store.table(n))))
    emit_verify(target, runs, args.format)
    return EXIT_OK if all(r.passed for r in runs) else EXIT_VERIFY


def cmd_generic(args) -> int:
    if args.dihedral is not None:
        if args.dihedral < 3 or args.dihedral % 2 == 0:
            raise UsageError("--dihedral takes an odd integer >= 3")
        gt = dihedral_table(args.dihedral)
    else:
        try:
            raw = Path(args.table).read_text()
        except OSError as exc:
            raise UsageError(f"cannot read {args.table}: {exc}")
        try:
            data = json.loads(raw)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"{args.table} is not valid JSON: {exc}")
        gt = parse_generic_table(data)
    report = generic_covering(gt, int_tol=args.int_tol, ortho_tol=args.ortho_tol)
    emit_covering(report, args.format)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument(
        "--cache-dir",
        type=Path,
        default=default_cache_dir(),
        help="character table cache directory (default: $SYMCOVER_CACHE_DIR or ~/.cache/symcover)",
    )
    common.add_argument(
        "--format", choices=("text", "csv", "json"), default="text", help="output format"
    )
    common.add_argument(
        "--threads",
        type=_parse_threads,
        default=1,
        metavar="N|auto",
        help="worker threads for surveys (default 1)",
    )
    common.add_argument(
        "--extended",
        action="store_true",
        help="extend default verification ranges to n=12",
    )

    parser = argparse.ArgumentParser(
        prog="symcover",
        description="Constituents of powers of symmetric group characters and their covering numbers.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", parents=[common], help="emit the character table of S_n")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("kron", parents=[common], help="decompose a product of two irreducibles")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--mu", required=True, metavar="PARTITION")
    p.add_argument("--support-only", action="store_true")
    p.set_defaults(func=cmd_kron)

    p = sub.add_parser("power", parents=[common], help="decompose a power of an irreducible")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, metavar="PARTITION")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--support-only", action="store_true")
    p.set_defaults(func=cmd_power)

    p = sub.add_parser("cover", parents=[common], help="covering numbers e and d")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", default=None, metavar="PARTITION")
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument(
        "target",
        choices=(
            "theorem1",
            "table1",
            "non-rectangle",
            "rectangle",
            "theta-move",
            "semigroup",
            "brauer",
        ),
    )
    p.add_argument("--n", default=None, metavar="N|A..B")
    p.add_argument("--u", type=int, default=2)
    p.add_argument("--v", type=int, default=2)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-size", type=int, default=9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("generic", parents=[common], help="covering numbers over a supplied character table")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--table", default=None, metavar="FILE", help="GenericCharTable JSON file")
    src.add_argument("--dihedral", type=int, default=None, metavar="M", help="built-in dihedral table of order 2M")
    p.add_argument("--int-tol", type=float, default=DEFAULT_INT_TOL)
    p.add_argument("--ortho-tol", type=float, default=DEFAULT_ORTHO_TOL)
    p.set_defaults(func=cmd_generic)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, SchemaError) as exc:
        print(f"symcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        # bad partitions, out-of-range verification parameters
        print(f"symcover: error: {exc}", file=sys.stderr)
        return EXIT_USAGE if not isinstance(exc, CertificationError) else EXIT_VERIFY
    except OSError as exc:
        print(f"symcover: cache/environment error: {exc}", file=sys.stderr)
        return EXIT_ENV


if __name__ == "__main__":
    sys.exit(main())
