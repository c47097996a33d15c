#!/usr/bin/env python3
"""Compare the compiled arithmetic kernel against the pure-Python fallback.

Micro-benchmarks call both kernel modules directly; the end-to-end row runs
one verification suite in a subprocess per kernel (the kernel is chosen at
import time, so it cannot be swapped within a process).

Usage: python benchmarks/bench_kernels.py [--quick]
"""

import argparse
import os
import random
import subprocess
import sys
import time

sys.path.insert(0, os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "src"))

from bicyclic import _kernel_py as pure  # noqa: E402
from bicyclic.verify import rand_ordinal_below  # noqa: E402

try:
    from bicyclic import _core as compiled
except ImportError:
    compiled = None


def workload(count, seed=7):
    rng = random.Random(seed)
    return [rand_ordinal_below(rng, "w", max_coeff=9, max_terms=4)._rep for _ in range(count)]


def time_op(fn, pairs, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for x, y in pairs:
            fn(x, y)
        best = min(best, time.perf_counter() - start)
    return best


def time_mul(mod, quads, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for a, b, c, d in quads:
            mod.pair_mul(a, b, c, d)
        best = min(best, time.perf_counter() - start)
    return best


def end_to_end(kernel, trials):
    env = dict(os.environ, BICYCLIC_KERNEL=kernel, PYTHONPATH="src")
    start = time.perf_counter()
    subprocess.run(
        [sys.executable, "-m", "bicyclic.cli", "verify", "balpha-assoc",
         "--trials", str(trials), "--seed", "1"],
        check=True,
        capture_output=True,
        env=env,
        cwd=os.path.dirname(os.path.dirname(os.path.abspath(__file__))),
    )
    return time.perf_counter() - start


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()

    if compiled is None:
        print("compiled kernel not built (python setup.py build_ext --inplace); nothing to compare")
        return

    n = 300 if args.quick else 800
    repeat = 3
    reps = workload(n)
    rng = random.Random(11)
    pairs = [(rng.choice(reps), rng.choice(reps)) for _ in range(20_000)]
    quads = [tuple(rng.choice(reps) for _ in range(4)) for _ in range(20_000)]

    rows = []
    for name, fn_pure, fn_comp in (
        ("ord_cmp", pure.ord_cmp, compiled.ord_cmp),
        ("ord_add", pure.ord_add, compiled.ord_add),
        ("ord_sub", pure.ord_sub, compiled.ord_sub),
    ):
        tp = time_op(fn_pure, pairs, repeat)
        tc = time_op(fn_comp, pairs, repeat)
        rows.append((name, len(pairs), tp, tc))
    tp = time_mul(pure, quads, repeat)
    tc = time_mul(compiled, quads, repeat)
    rows.append(("pair_mul", len(quads), tp, tc))

    trials = 2_000 if args.quick else 20_000
    rows.append(("verify balpha-assoc", trials, end_to_end("pure", trials), end_to_end("compiled", trials)))

    width = max(len(r[0]) for r in rows)
    print(f"{'operation':<{width}}  {'n':>7}  {'pure':>9}  {'compiled':>9}  speedup")
    for name, count, tp, tc in rows:
        print(f"{name:<{width}}  {count:>7}  {tp:>8.3f}s  {tc:>8.3f}s  x{tp / tc:.1f}")


if __name__ == "__main__":
    main()
