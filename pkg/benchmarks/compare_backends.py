#!/usr/bin/env python3
"""Times the numba kernels against the pure numpy fallback on identical runs
and checks that both backends produce bit-identical results.

Usage: python benchmarks/compare_backends.py [--pop 100] [--generations 200]
       [--runs 10] [--mutation 1]
"""

import argparse
import time

from ga32 import GaConfig, Mode, bitcount_fitness, run
from ga32.kernels import get_kernels


def time_backend(kernels, configs, repeats):
    # one warmup pass so jit compilation/cache loading stays out of the clock
    run(configs[0], bitcount_fitness, kernels=kernels)
    best = float("inf")
    results = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        results = [run(cfg, bitcount_fitness, kernels=kernels) for cfg in configs]
        best = min(best, time.perf_counter() - t0)
    return best, results


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--pop", type=int, default=100)
    parser.add_argument("--generations", type=int, default=200)
    parser.add_argument("--runs", type=int, default=10, help="seeds per timed pass")
    parser.add_argument("--mutation", type=int, default=1)
    parser.add_argument("--repeats", type=int, default=3, help="timed passes, best kept")
    args = parser.parse_args()

    configs = [
        GaConfig(
            pop_size=args.pop,
            n_generations=args.generations,
            mutation_per_mille=args.mutation,
            mode=Mode.STRICT if args.pop % 2 == 0 else Mode.COMPAT,
            seed=seed,
        )
        for seed in range(args.runs)
    ]
    total_generations = args.runs * args.generations

    print(f"workload: {args.runs} runs x {args.generations} generations, "
          f"pop {args.pop}, mutation {args.mutation}/1000")
    timings = {}
    outputs = {}
    for name in ("numba", "numpy"):
        elapsed, results = time_backend(get_kernels(name), configs, args.repeats)
        timings[name] = elapsed
        outputs[name] = results
        print(f"  {name:>5}: {elapsed:8.3f}s  "
              f"({1e6 * elapsed / total_generations:7.1f} us/generation)")

    if outputs["numba"] == outputs["numpy"]:
        print("results: bit-identical across backends")
    else:
        raise SystemExit("results: BACKENDS DIVERGED (this is a bug)")
    print(f"speedup: numba is {timings['numpy'] / timings['numba']:.1f}x faster")


if __name__ == "__main__":
    main()
