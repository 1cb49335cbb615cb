"""Command-line frontend: eval, inv, table, sweep, bench."""

from __future__ import annotations

import argparse
import sys

from .dyadic import normalize, parse_dyadic
from .errors import DomainError, SeedMismatchError
from .forward import TrigKind, forward, full_circle
from .inverse import InverseConfig, InverseKind, inverse
from .metrics import BENCH_TAGS, bench, rows_to_csv, sweep
from .signature import SigSeed, build_signature, level_signs, unprimed_bits

_FORWARD_FNS = tuple(k.value for k in TrigKind)
_INVERSE_FNS = tuple(k.value for k in InverseKind)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dyadtrig")
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate a forward function at a dyadic point")
    p_eval.add_argument("--fn", required=True, choices=_FORWARD_FNS)
    p_eval.add_argument("--x", required=True, help='dyadic argument "n/m", m a power of two')
    p_eval.add_argument("--turns", action="store_true",
                        help="treat x as full turns instead of quarter-turn units (cos/sin only)")

    p_inv = sub.add_parser("inv", help="invert a function value to a dyadic argument")
    p_inv.add_argument("--fn", required=True, choices=_INVERSE_FNS)
    p_inv.add_argument("--v", required=True, type=float)
    p_inv.add_argument("--eps", type=float, default=1e-10)
    p_inv.add_argument("--depth", type=int, default=48)

    p_table = sub.add_parser("table", help="print the signature table for lattice level k")
    p_table.add_argument("--k", required=True, type=int)

    p_sweep = sub.add_parser("sweep", help="CSV error sweep over the k-lattice")
    p_sweep.add_argument("--fn", required=True, choices=_FORWARD_FNS + _INVERSE_FNS)
    p_sweep.add_argument("--k", required=True, type=int)
    p_sweep.add_argument("--depth", type=int, default=None,
                         help="max search depth (inverse functions only)")
    p_sweep.add_argument("--csv", action="store_true", help="sweeps always emit CSV; accepted for symmetry")

    p_bench = sub.add_parser("bench", help="median ns/call over the k-lattice")
    p_bench.add_argument("--fn", required=True, choices=BENCH_TAGS)
    p_bench.add_argument("--k", required=True, type=int)
    p_bench.add_argument("--reps", type=int, default=25)
    p_bench.add_argument("--csv", action="store_true")

    return parser


def _run_eval(args) -> int:
    kind = TrigKind(args.fn)
    x = parse_dyadic(args.x)
    if args.turns:
        if kind not in (TrigKind.COS, TrigKind.SIN):
            print("error: --turns applies to cos and sin only", file=sys.stderr)
            return 2
        value = full_circle(kind, x)
    else:
        value = forward(kind, x)
    print(format(value, ".17g"))
    return 0


def _run_inv(args) -> int:
    cfg = InverseConfig(eps=args.eps, max_depth=args.depth)
    result = inverse(InverseKind(args.fn), args.v, cfg)
    print(f"{result.value} {'converged' if result.converged else 'unconverged'}")
    return 0


def _run_table(args) -> int:
    k = args.k
    if not 1 <= k <= 20:
        raise DomainError(f"table needs k in [1, 20], got {k}")
    print("fraction\tsig\tsig'\tsigns")
    for n in range(1, 1 << k):
        x = normalize(n, k)
        sig = build_signature(x, SigSeed.COS)
        mask = unprimed_bits(sig, SigSeed.COS)
        signs = ",".join("+" if s > 0 else "-" for s in level_signs(sig, SigSeed.COS))
        print(f"{x}\t{mask}\t{sig.bits}\t({signs})")
    return 0


def _run_sweep(args) -> int:
    try:
        kind = TrigKind(args.fn)
    except ValueError:
        kind = InverseKind(args.fn)
    rows = sweep(kind, args.k, depth=args.depth)
    sys.stdout.write(rows_to_csv(rows))
    return 0


def _run_bench(args) -> int:
    row = bench(args.fn, args.k, args.reps)
    if args.csv:
        sys.stdout.write(rows_to_csv([row]))
    else:
        print(f"{row.fn} k={row.k}: {row.ns_per_call:.1f} ns/call (median of {args.reps})")
    return 0


_HANDLERS = {
    "eval": _run_eval,
    "inv": _run_inv,
    "table": _run_table,
    "sweep": _run_sweep,
    "bench": _run_bench,
}


def run(argv: list[str] | None = None) -> int:
    """Execute one CLI invocation; 0 on success, 1 on domain errors, 2 on usage."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return _HANDLERS[args.command](args)
    except (DomainError, SeedMismatchError, ZeroDivisionError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
