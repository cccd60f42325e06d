"""Command-line front end: pl, factorize, zimin, verify, bench.

Input is raw bytes by default (one byte, one symbol), so palindromicity is
decided over bytes even for multibyte encodings; pass --decimal to feed
whitespace-separated integer symbols instead, which is also the on-disk
form the zimin subcommand emits. Exit codes: 0 success, 1 verification
failure, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ProcessPoolExecutor

from .bench import FamilySpec, csv_header, csv_row, fit_scaling, run_instrumented
from .core import Text
from .fast import pl_fast
from .generators import bitcount, text_to_decimal, zimin_prefix
from .naive import ORACLE_CAP_DEFAULT, OracleCapError, pl_oracle, pl_quadratic
from .reconstruct import factorize, verify_factorization

_ENGINES = {
    "fast": lambda t, cap: pl_fast(t),
    "quadratic": lambda t, cap: pl_quadratic(t),
    "oracle": lambda t, cap: pl_oracle(t, cap=cap),
}


def _read_bytes(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _load_text(args) -> Text:
    data = _read_bytes(args.file)
    if args.decimal:
        return Text(tuple(int(tok) for tok in data.split()))
    if not args.keep_newline:
        if data.endswith(b"\r\n"):
            data = data[:-2]
        elif data.endswith(b"\n"):
            data = data[:-1]
    return Text(data)


def _add_input_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("file", nargs="?", default="-", help="input file, or - for stdin")
    p.add_argument(
        "--decimal",
        action="store_true",
        help="input is whitespace-separated decimal symbols, not raw bytes",
    )
    p.add_argument(
        "--keep-newline",
        action="store_true",
        help="keep a trailing newline as part of the input",
    )


def _part_text(t: Text, start: int, length: int, decimal: bool) -> str:
    seg = t.segment(start, start + length - 1)
    if decimal:
        return " ".join(str(int(c)) for c in seg)
    if isinstance(seg, bytes):
        return seg.decode("latin-1")
    return "".join(str(c) for c in seg)


def cmd_pl(args) -> int:
    t = _load_text(args)
    records = _ENGINES[args.algorithm](t, args.oracle_cap)
    if args.all_prefixes:
        sys.stdout.write("\n".join(str(v) for v in records.pl_list()) + "\n")
    else:
        print(records.final.pl)
    return 0


def cmd_factorize(args) -> int:
    t = _load_text(args)
    records = _ENGINES[args.algorithm](t, args.oracle_cap)
    f = factorize(t, records)
    if not verify_factorization(t, f, records.final.pl):
        print("factorization failed self-verification", file=sys.stderr)
        return 1
    if args.json:
        payload = {
            "pl": records.final.pl,
            "parts": [{"start": p.start, "length": p.length} for p in f.parts],
        }
        print(json.dumps(payload))
    else:
        print("|".join(_part_text(t, p.start, p.length, args.decimal) for p in f.parts))
    return 0


def cmd_zimin(args) -> int:
    t = zimin_prefix(args.n)
    if t.n:
        print(text_to_decimal(t))
    if args.stats:
        from .fast import FastState

        state = FastState(expected_n=t.n)
        print("j,gap_triples,bitcount,match")
        all_match = True
        for j, c in enumerate(t, start=1):
            state.push(c)
            expected = bitcount(j)
            ok = state.gap_size == expected
            all_match = all_match and ok
            print(f"{j},{state.gap_size},{expected},{'yes' if ok else 'no'}")
        print(f"all_match={'true' if all_match else 'false'}")
        if not all_match:
            return 1
    return 0


def cmd_verify(args) -> int:
    t = _load_text(args)
    runs = {"fast": pl_fast(t).pl_list(), "quadratic": pl_quadratic(t).pl_list()}
    if t.n <= args.oracle_cap:
        runs["oracle"] = pl_oracle(t, cap=args.oracle_cap).pl_list()
    else:
        print(f"oracle skipped: length {t.n} above cap {args.oracle_cap}", file=sys.stderr)
    names = sorted(runs)
    base = runs[names[0]]
    for name in names[1:]:
        other = runs[name]
        for j, (a, b) in enumerate(zip(base, other)):
            if a != b:
                print(f"disagreement at prefix {j}: {names[0]}={a} {name}={b}")
                return 1
    print(f"agree on all {t.n + 1} prefixes: {', '.join(names)}")
    return 0


def _run_one(spec: FamilySpec, algorithm: str):
    return run_instrumented(spec, algorithm=algorithm)


def cmd_bench(args) -> int:
    sizes = [args.n] if args.sizes is None else [int(s) for s in args.sizes.split(",")]
    if any(n is None for n in sizes):
        print("bench needs --n or --sizes", file=sys.stderr)
        return 2
    seeds = list(range(args.seed, args.seed + args.seeds))
    specs = []
    for n in sizes:
        if args.family == "random":
            specs.extend(
                FamilySpec("random", n=n, sigma=args.sigma, seed=s) for s in seeds
            )
        elif args.family == "file":
            specs.append(FamilySpec("file", path=args.path))
        else:
            specs.append(FamilySpec(args.family, n=n))

    if args.per_round is not None:
        if len(specs) != 1:
            print("--per-round needs exactly one run (one size, one seed)", file=sys.stderr)
            return 2
        spec = specs[0]
        out = sys.stdout if args.per_round == "-" else open(args.per_round, "w")
        try:
            out.write(csv_header(spec, args.algorithm) + "\n")
            summary = run_instrumented(
                spec, algorithm=args.algorithm, round_sink=lambda s: out.write(csv_row(s) + "\n")
            )
        finally:
            if out is not sys.stdout:
                out.close()
        summaries = [summary]
    elif args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            summaries = list(pool.map(_run_one, specs, [args.algorithm] * len(specs)))
    else:
        summaries = [run_instrumented(spec, algorithm=args.algorithm) for spec in specs]

    for summary in summaries:
        if args.json:
            print(summary.to_json())
        else:
            print(
                f"family={summary.family} algorithm={summary.algorithm} n={summary.n} "
                f"total_triples={summary.total_triples} "
                f"mean_suffix_palindromes={summary.mean_suffix_palindromes:.3f} "
                f"final_pl={summary.final_pl} wall_ms={summary.wall_clock_millis:.1f}"
            )
    if args.fit:
        try:
            report = fit_scaling(summaries)
        except ValueError as exc:
            print(f"fit refused: {exc}", file=sys.stderr)
            return 2
        print(report.format_table())
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="palfactor",
        description="minimum palindromic factorization toolkit",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pl", help="print the palindromic length of the input")
    _add_input_flags(p)
    p.add_argument("--all-prefixes", action="store_true", help="one value per prefix, 0..n")
    p.add_argument("--algorithm", choices=sorted(_ENGINES), default="fast")
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP_DEFAULT)
    p.set_defaults(func=cmd_pl)

    p = sub.add_parser("factorize", help="print one minimum palindromic factorization")
    _add_input_flags(p)
    p.add_argument("--json", action="store_true", help="emit 1-based start/length parts as JSON")
    p.add_argument("--algorithm", choices=sorted(_ENGINES), default="fast")
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP_DEFAULT)
    p.set_defaults(func=cmd_factorize)

    p = sub.add_parser("zimin", help="print a ruler-word prefix as decimal symbols")
    p.add_argument("n", type=int)
    p.add_argument(
        "--stats",
        action="store_true",
        help="additionally print per-round triple counts against the 1-bit count",
    )
    p.set_defaults(func=cmd_zimin)

    p = sub.add_parser("verify", help="cross-check all engines on every prefix")
    _add_input_flags(p)
    p.add_argument("--oracle-cap", type=int, default=ORACLE_CAP_DEFAULT)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="instrumented runs and scaling fits")
    p.add_argument("--family", choices=["zimin", "random", "file", "repeated"], required=True)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--sizes", default=None, help="comma-separated ladder of sizes")
    p.add_argument("--sigma", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--seeds", type=int, default=1, help="number of consecutive seeds per size")
    p.add_argument("--path", default=None, help="input file for --family file")
    p.add_argument("--algorithm", choices=["fast", "quadratic"], default="fast")
    p.add_argument("--per-round", default=None, help="write per-round CSV here (- for stdout)")
    p.add_argument("--json", action="store_true", help="summaries as one JSON object per line")
    p.add_argument("--fit", action="store_true", help="fit linear vs n*log2(n) models")
    p.add_argument("--jobs", type=int, default=1, help="parallel worker processes")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OracleCapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
