#!/usr/bin/env python3
"""Benchmark the compiled kernels against the NumPy fallback.

Usage:
    python benchmarks/bench_kernels.py [--repeat 5]

Times the two hot kernels on representative workloads:

- ``synth``: truncated trigonometric series evaluated at scattered points
  (the scattered-evaluation path of splines and signals);
- ``dft``: direct discrete Fourier coefficients on an odd grid.

Both backends implement identical contracts; the table reports best-of-N
wall times and the speedup of the compiled path.
"""

import argparse
import time

import numpy as np

from trigspec._kernels import available_backends


def _time_best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def synth_cases(rng):
    for J, P in ((512, 512), (2112, 4096), (16384, 2048)):
        a = rng.standard_normal(J)
        b = rng.standard_normal(J)
        t = rng.uniform(0, 2 * np.pi, P)
        yield f"synth J={J:>5} points={P:>4}", ("synth", (0.2, a, b, t))


def dft_cases(rng):
    for n in (16, 64, 256):
        values = rng.standard_normal(2 * n + 1)
        yield f"dft   N={2 * n + 1:>5}", ("dft", (values,))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = available_backends()
    rng = np.random.default_rng(42)
    cases = list(synth_cases(rng)) + list(dft_cases(rng))

    names = sorted(backends)
    header = f"{'case':<28}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for label, (kernel, kargs) in cases:
        times = {}
        results = {}
        for name in names:
            fn = getattr(backends[name], kernel)
            results[name] = fn(*kargs)
            times[name] = _time_best(lambda: fn(*kargs), args.repeat)
        if len(names) == 2:
            ref = np.asarray(results["python"][1] if kernel == "dft" else results["python"])
            fast = np.asarray(results["c"][1] if kernel == "dft" else results["c"])
            assert np.allclose(ref, fast, rtol=1e-10, atol=1e-12), label
        row = f"{label:<28}" + "".join(f"{times[n] * 1e3:>10.3f}ms" for n in names)
        if len(names) == 2:
            row += f"{times['python'] / times['c']:>9.1f}x"
        print(row)
    if "c" not in backends:
        print("\ncompiled backend not built; run `pip install -e .` with Cython")


if __name__ == "__main__":
    main()
