#!/usr/bin/env python3
"""Timing comparison of the compiled and pure-Python kernel backends.

Run from the repository root after installing the package:

    python benchmarks/bench_kernels.py [--repeat 5]

Workloads cover the three hot loops: the deformed zeta series near its
convergence boundary (hundreds of thousands of terms), the accelerated
alternating sum, and the continued-fraction convergent recurrence.
"""

import argparse
import time

from anyongas import _kernels_py

try:
    from anyongas import _ckernels
except ImportError:
    _ckernels = None


def _time(func, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        func()
        best = min(best, time.perf_counter() - t0)
    return best


def _workloads(mod):
    q = 0.7
    z_hard = q * (1.0 - 1e-6)

    def g_hard():
        return mod.g_series_sum(q, z_hard, 1.5)

    def g_easy():
        total = 0.0
        for i in range(2000):
            total += mod.g_series_sum(q, 0.3 + 1e-7 * i, 1.5)
        return total

    def f_alt():
        total = 0.0
        for i in range(20000):
            total += mod.f_series_sum(1.0 - 1e-9 * i, 1.5)
        return total

    def cf():
        total = 0.0
        for i in range(20000):
            total += mod.cf_convergent_value(0.9 - 1e-9 * i, 200)
        return total

    return [
        ("g series, z near boundary (1 call)", g_hard),
        ("g series, moderate z (2000 calls)", g_easy),
        ("accelerated alternating sum (20000 calls)", f_alt),
        ("continued fraction k=200 (20000 calls)", cf),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if _ckernels is None:
        print("compiled backend not available; timing pure Python only")
    header = f"{'workload':45s} {'python':>10s} {'compiled':>10s} {'speedup':>8s}"
    print(header)
    print("-" * len(header))
    for (name, py_func), c_entry in zip(
        _workloads(_kernels_py),
        _workloads(_ckernels) if _ckernels else _workloads(_kernels_py),
    ):
        t_py = _time(py_func, args.repeat)
        if _ckernels is None:
            print(f"{name:45s} {t_py*1e3:9.2f}ms {'-':>10s} {'-':>8s}")
            continue
        t_c = _time(c_entry[1], args.repeat)
        # keep the two backends honest while we are at it
        assert abs(py_func() - c_entry[1]()) <= 1e-12 * max(1.0, abs(py_func()))
        print(f"{name:45s} {t_py*1e3:9.2f}ms {t_c*1e3:9.2f}ms "
              f"{t_py/t_c:7.1f}x")


if __name__ == "__main__":
    main()
