"""Command line front end: single runs, multi-seed sweeps, buffer footprint.

Seeds are mandatory everywhere; there is no wall-clock fallback, so the one
failure mode this tool must never have -- accidental nondeterminism -- cannot
happen by omission.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass

from .engine import run
from .genome import CAPACITY, GaConfig, GaError, Mode
from .problems import parse_problem
from .report import OutputFormat, Reporter, SWEEP_CSV_HEADER

# footprint models the 16-bit-integer embedded layout, not the host's widths
BYTES_PER_VALUE = 2
ARRAY_NAMES = ("t0_a", "t0_b", "t1_a", "t1_b", "fitness", "cdf")
SCALAR_NAMES = ("top_fitness", "sum_fitness", "best_a", "best_b", "pop_size", "mutation_per_mille")
TARGET_RAM_BYTES = 2048  # classic 8-bit AVR SRAM budget, for the headroom line


@dataclass(frozen=True)
class FootprintReport:
    arrays: tuple[tuple[str, int], ...]
    arrays_total: int
    scalars: tuple[str, ...]
    scalars_total: int
    total: int


def footprint_report() -> FootprintReport:
    """Byte layout of the persistent engine buffers at fixed capacity."""
    arrays = tuple((name, CAPACITY * BYTES_PER_VALUE) for name in ARRAY_NAMES)
    arrays_total = sum(size for _, size in arrays)
    scalars_total = len(SCALAR_NAMES) * BYTES_PER_VALUE
    return FootprintReport(
        arrays=arrays,
        arrays_total=arrays_total,
        scalars=SCALAR_NAMES,
        scalars_total=scalars_total,
        total=arrays_total + scalars_total,
    )


def parse_seed(text: str) -> int:
    """Decimal or 0x-prefixed hexadecimal unsigned 64-bit seed."""
    t = text.strip().lower()
    try:
        value = int(t[2:], 16) if t.startswith("0x") else int(t, 10)
    except ValueError:
        raise ValueError(f"invalid seed {text!r}: expected decimal or 0x-hex") from None
    if not 0 <= value < 1 << 64:
        raise ValueError(f"seed {text!r} out of unsigned 64-bit range")
    return value


def parse_seeds(text: str) -> list[int]:
    """Seed list: inclusive range 'a..b' or comma-separated values."""
    t = text.strip()
    if ".." in t:
        lo_text, _, hi_text = t.partition("..")
        lo, hi = parse_seed(lo_text), parse_seed(hi_text)
        if hi < lo:
            raise ValueError(f"empty seed range {text!r}")
        return list(range(lo, hi + 1))
    seeds = [parse_seed(part) for part in t.split(",") if part.strip()]
    if not seeds:
        raise ValueError("seed list is empty")
    return seeds


def _add_common_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", default="bitcount",
                   help="fitness function: bitcount or pattern:<8 hex digits> (default: bitcount)")
    p.add_argument("--pop-size", type=int, default=99,
                   help="population size, at most 100 (default: 99)")
    p.add_argument("--generations", type=int, default=100,
                   help="number of generations, at most 65535 (default: 100)")
    p.add_argument("--mutation", type=int, default=1,
                   help="whole-half mutation rate per thousand, 0..1000 (default: 1)")
    p.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.STRICT.value,
                   help="strict validates and fixes the historical quirks; compat keeps them "
                        "(default: strict)")
    p.add_argument("--out", default=None, help="output file (default: stdout)")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ga32",
        description="Fixed-memory 32-bit-chromosome genetic algorithm runner",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_run = sub.add_parser("run", help="execute one seeded run")
    _add_common_flags(p_run)
    p_run.add_argument("--seed", required=True, help="PRNG seed, decimal or 0x-hex (required)")
    p_run.add_argument("--verbosity", type=int, choices=(0, 1, 2), default=0,
                       help="paper-format detail level (default: 0)")
    p_run.add_argument("--format", dest="fmt", choices=[f.value for f in OutputFormat],
                       default=OutputFormat.PAPER.value, help="output format (default: paper)")

    p_sweep = sub.add_parser("sweep", help="run once per seed and summarize as CSV")
    _add_common_flags(p_sweep)
    p_sweep.add_argument("--seeds", required=True,
                         help="inclusive range 'a..b' or comma list '3,5,8' (required)")

    sub.add_parser("footprint", help="print the fixed buffer byte layout")

    return parser


def _open_sink(path):
    if path is None:
        return sys.stdout, False
    return open(path, "w", encoding="utf-8", newline=""), True


def cmd_run(args) -> int:
    config = GaConfig(
        pop_size=args.pop_size,
        n_generations=args.generations,
        mutation_per_mille=args.mutation,
        mode=Mode(args.mode),
        seed=parse_seed(args.seed),
    )
    config.validate()
    problem = parse_problem(args.problem)
    sink, owned = _open_sink(args.out)
    try:
        reporter = Reporter(
            fmt=OutputFormat(args.fmt), verbosity=args.verbosity, sink=sink, config=config
        )
        run(config, problem, reporter)
    finally:
        if owned:
            sink.close()
    return 0


def cmd_sweep(args) -> int:
    seeds = parse_seeds(args.seeds)
    problem = parse_problem(args.problem)
    configs = [
        GaConfig(
            pop_size=args.pop_size,
            n_generations=args.generations,
            mutation_per_mille=args.mutation,
            mode=Mode(args.mode),
            seed=seed,
        )
        for seed in seeds
    ]
    for config in configs:
        config.validate()
    sink, owned = _open_sink(args.out)
    try:
        sink.write(SWEEP_CSV_HEADER + "\n")
        for config in configs:
            try:
                result = run(config, problem)
            except GaError as exc:
                raise GaError(f"seed {config.seed} failed: {exc}") from exc
            final = result.per_generation[-1]
            sink.write(
                f"{config.seed},{result.best_ever_fitness},{result.first_attained_at},"
                f"{final.top_fitness},{final.sum_fitness}\n"
            )
    finally:
        if owned:
            sink.close()
    return 0


def cmd_footprint(args) -> int:
    report = footprint_report()
    print(f"persistent engine buffers at capacity {CAPACITY}, 16-bit layout:")
    for name, size in report.arrays:
        print(f"  {name}: {CAPACITY} x {BYTES_PER_VALUE} = {size} bytes")
    print(f"arrays subtotal: {report.arrays_total} bytes")
    print(f"scalars ({len(report.scalars)} x {BYTES_PER_VALUE}): {report.scalars_total} bytes")
    print(f"total: {report.total} bytes")
    headroom = TARGET_RAM_BYTES - report.total
    print(f"fits a {TARGET_RAM_BYTES}-byte RAM target with {headroom} bytes to spare")
    return 0


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handler = {"run": cmd_run, "sweep": cmd_sweep, "footprint": cmd_footprint}[args.command]
    try:
        return handler(args)
    except (GaError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
