"""Compare the compiled and pure-Python violator scans.

Usage: python3 benchmarks/bench_scan.py [--n 100000] [--repeat 5]

Times a full scan (no violator) with each backend, then a full solve on
a random instance with each backend.
"""
import argparse
import statistics
import time

import numpy as np

from diskstab import kernels
from diskstab.harness import InstanceSpec, random_instance
from diskstab.lptype import solve


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return statistics.median(times)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=100_000)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    rng = np.random.Generator(np.random.Philox(1))
    n = args.n
    a, b = rng.random(n), rng.random(n) + 5.0
    c = rng.uniform(10.0, 20.0, n)
    kind = np.zeros(n, dtype=np.uint8)
    ident = np.arange(n, dtype=np.int64)
    backends = ["python"] + (["cython"] if kernels.COMPILED else [])

    print(f"scan of {n} disks, no violator (median of {args.repeat})")
    scan_times = {}
    for name in backends:
        sc = kernels.scanner_class(name)(a, b, c, kind, ident, 1e-9)
        scan_times[name] = _best(lambda: sc.first_violator(0, n, 0.5, 5.5, 2, 0.0, 0), args.repeat)
        print(f"  {name:7s} {scan_times[name] * 1e3:9.2f} ms")

    fam = random_instance(InstanceSpec(min(n, 20_000), seed=3))
    print(f"solve on {len(fam)} disks (median of {args.repeat})")
    solve_times = {}
    for name in backends:
        solve_times[name] = _best(lambda: solve(fam, seed=0, backend=name), args.repeat)
        print(f"  {name:7s} {solve_times[name] * 1e3:9.2f} ms")

    if "cython" in scan_times:
        print(f"speedup: scan {scan_times['python'] / scan_times['cython']:.1f}x, "
              f"solve {solve_times['python'] / solve_times['cython']:.1f}x")
    else:
        print("compiled extension not built; only the Python backend was timed")


if __name__ == "__main__":
    main()
