"""Benchmark the jitted window kernels against the pure-numpy fallback.

Usage:
    python3 benchmarks/bench_kernels.py [--n 4] [--count 4000]

The two paths compute identical integers; this only measures time.  Run with
FLAGOPS_NUMBA=0 to confirm the fallback is what the package would use when
numba is disabled.
"""

import argparse
import time

import numpy as np

from flagops import kernels


def make_windows(n, count, seed=0):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        w = np.arange(1, n + 1, dtype=np.int64)
        for _ in range(int(rng.integers(0, 10))):
            i = int(rng.integers(1, n + 1))
            w = kernels.apply_transposition_numpy(w, n, i, i + 1)
        out.append(w)
    return out


def bench(label, fn, windows, n):
    fn(windows[0], n)  # warm-up (and JIT compile on the numba path)
    t0 = time.perf_counter()
    acc = 0
    for w in windows:
        acc += int(np.sum(np.asarray(fn(w, n))))
    dt = time.perf_counter() - t0
    return dt, acc


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--n", type=int, default=4)
    parser.add_argument("--count", type=int, default=4000)
    args = parser.parse_args()

    windows = make_windows(args.n, args.count)
    print(f"backend in use: {kernels.BACKEND}   (windows: {args.count}, n={args.n})")
    pairs = [
        ("length", kernels.length, kernels.length_numpy),
        ("cover_classes", kernels.cover_classes, kernels.cover_classes_numpy),
    ]
    print(f"{'kernel':<16}{'active path':>14}{'numpy path':>14}{'speedup':>10}")
    for label, active, fallback in pairs:
        t_active, a1 = bench(label, active, windows, args.n)
        t_numpy, a2 = bench(label, fallback, windows, args.n)
        assert a1 == a2, "paths disagree"
        speed = t_numpy / t_active if t_active else float("inf")
        print(f"{label:<16}{t_active:>12.4f}s{t_numpy:>13.4f}s{speed:>9.1f}x")


if __name__ == "__main__":
    main()
