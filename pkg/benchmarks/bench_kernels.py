#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy fallbacks.

Times each kernel on seeded random flag blocks of growing size and prints a
small table.  Numba timings exclude JIT compilation (one warmup call per
kernel).  Select the backend used by the package itself with the
LIERANDERS_NUMBA environment variable; this script always measures both.

Usage: python benchmarks/bench_kernels.py [--sizes 10000,100000,1000000]
"""

import argparse
import time

import numpy as np

from lieranders import catalog, identity_metric
from lieranders.kernels import implementations
from lieranders.sweep import dense_curvature, dense_gram, dense_structure


def make_inputs(n: int):
    algebra = catalog(2)
    metric = identity_metric(4)
    rng = np.random.Generator(np.random.Philox(key=[2024, 0]))
    gram = dense_gram(metric)
    inputs = {
        "struct": dense_structure(algebra),
        "gram": gram,
        "gram_inv": np.linalg.inv(gram),
        "rm4": dense_curvature(algebra, metric),
        "q": np.array([0.0, 0.0, 0.4, 0.2]),
        "V": rng.uniform(-1, 1, size=(n, 4)),
        "U": rng.uniform(-1, 1, size=(n, 4)),
    }
    inputs["F"] = np.sqrt(np.einsum("ni,ni->n", inputs["V"], inputs["V"])) + inputs[
        "V"
    ] @ (gram @ inputs["q"])
    return inputs


def kernel_args(name: str, s: dict):
    if name == "eval_f_batch":
        return (s["gram"], s["q"], s["V"])
    if name == "sectional_batch":
        return (s["rm4"], s["gram"], s["U"], s["V"])
    if name == "correction_batch":
        return (s["struct"], s["gram"], s["gram_inv"], s["q"], s["V"], s["F"])
    if name == "case_correction_batch":
        return (2, 0.4, 0.2, s["V"], s["F"])
    raise KeyError(name)


def bench_one(func, args, repeats: int = 5) -> float:
    func(*args)  # warmup; compiles the numba path
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        func(*args)
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument(
        "--sizes", default="10000,100000,1000000",
        help="comma list of sample counts",
    )
    args = parser.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]

    impls = implementations()
    backends = sorted(impls)
    names = ["eval_f_batch", "sectional_batch", "correction_batch", "case_correction_batch"]

    print(f"backends measured: {', '.join(backends)}")
    header = f"{'kernel':<24}{'n':>10}" + "".join(f"{b + ' (ms)':>16}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for n in sizes:
        inputs = make_inputs(n)
        for name in names:
            times = {}
            for backend in backends:
                func = impls[backend][name]
                times[backend] = bench_one(func, kernel_args(name, inputs))
            row = f"{name:<24}{n:>10}" + "".join(
                f"{times[b] * 1000:>16.3f}" for b in backends
            )
            if len(backends) == 2:
                row += f"{times['numpy'] / times['numba']:>9.1f}x"
            print(row)


if __name__ == "__main__":
    main()
