"""Compiled vs pure-Python kernels.

Part 1 times each kernel on the same random encodings through both
implementations.  Part 2 runs whole workloads (a scalar law sweep and the
three algorithms) in subprocesses, once per backend, since the backend is
fixed at import time.

    python benchmarks/bench_kernels.py            # full run
    python benchmarks/bench_kernels.py --quick    # fewer repetitions
"""

from __future__ import annotations

import argparse
import json
import os
import random
import subprocess
import sys
import time
import timeit

import numpy as np

from relpaths import _pykernels

try:
    from relpaths import _ckernels
except ImportError:  # extension not built
    _ckernels = None

KERNELS = ["compose", "converse", "star", "row_fill"]

WORKLOAD = r"""
import random, time
from relpaths import kernels
from relpaths.models import path_instance, topsort_instance, cycle_instance
from relpaths.algorithms import construct_path, topological_sort, construct_cycle
from relpaths.theorems import run_suite
t0 = time.perf_counter()
run_suite(3, "exhaustive", ["term-12", "fin-6", "msc-*", "osc-*", "conn-8way"], backend="scalar")
t1 = time.perf_counter()
rng = random.Random(7)
for _ in range({runs}):
    n = rng.randint(2, 8)
    construct_path(*path_instance(rng, n))
    topological_sort(topsort_instance(rng, n))
    construct_cycle(cycle_instance(rng, n))
t2 = time.perf_counter()
print(kernels.BACKEND, t1 - t0, t2 - t1)
"""


def _inputs(n: int, count: int, seed: int = 1) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    return [(rng.getrandbits(n * n), rng.getrandbits(n * n)) for _ in range(count)]


def time_kernel(mod, name: str, n: int, pairs, repeat: int) -> float:
    """Best-of-``repeat`` microseconds per call."""
    fn = getattr(mod, name)
    if name == "compose":
        run = lambda: [fn(a, b, n) for a, b in pairs]  # noqa: E731
    else:
        run = lambda: [fn(a, n) for a, _ in pairs]  # noqa: E731
    best = min(timeit.repeat(run, number=1, repeat=repeat))
    return best / len(pairs) * 1e6


def time_table(mod, n: int, repeat: int) -> float:
    size = 1 << (n * n)
    out = np.zeros((size, size), dtype=np.uint16)
    return min(timeit.repeat(lambda: mod.fill_compose_table(out, n), number=1, repeat=repeat)) * 1e3


def micro(sizes, count, repeat) -> list[dict]:
    rows = []
    for n in sizes:
        pairs = _inputs(n, count)
        for name in KERNELS:
            py = time_kernel(_pykernels, name, n, pairs, repeat)
            cy = time_kernel(_ckernels, name, n, pairs, repeat) if _ckernels else float("nan")
            rows.append({"kernel": name, "n": n, "python_us": py, "cython_us": cy})
    for n in (2, 3):
        py = time_table(_pykernels, n, repeat)
        cy = time_table(_ckernels, n, repeat) if _ckernels else float("nan")
        rows.append({"kernel": "compose_table", "n": n, "python_us": py * 1e3, "cython_us": cy * 1e3})
    return rows


def workload(runs: int) -> list[dict]:
    rows = []
    for pure in ("1", "0"):
        env = dict(os.environ, RELPATHS_PURE_PYTHON=pure)
        start = time.perf_counter()
        out = subprocess.run(
            [sys.executable, "-c", WORKLOAD.replace("{runs}", str(runs))],
            env=env, capture_output=True, text=True, check=True,
        ).stdout.split()
        rows.append({
            "backend": out[0],
            "sweep_s": float(out[1]),
            "algorithms_s": float(out[2]),
            "process_s": time.perf_counter() - start,
        })
    return rows


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--quick", action="store_true")
    ap.add_argument("--json", metavar="FILE", help="also write the raw numbers")
    args = ap.parse_args(argv)

    count, repeat, runs = (500, 3, 50) if args.quick else (3000, 5, 300)
    sizes = (3, 4, 6, 8, 12)
    if _ckernels is None:
        print("compiled extension not available; showing the Python column only")

    rows = micro(sizes, count, repeat)
    print("## Kernels (microseconds per call, best of %d)\n" % repeat)
    print("| kernel | n | python | cython | speedup |")
    print("|---|---:|---:|---:|---:|")
    for r in rows:
        speed = r["python_us"] / r["cython_us"] if r["cython_us"] == r["cython_us"] else float("nan")
        print(f"| {r['kernel']} | {r['n']} | {r['python_us']:.2f} | {r['cython_us']:.2f} | {speed:.1f}x |")

    work = workload(runs)
    print(f"\n## Workloads (seconds; scalar sweep of 12 laws at n=3, {runs} runs of each algorithm)\n")
    print("| backend | law sweep | algorithms | whole process |")
    print("|---|---:|---:|---:|")
    for w in work:
        print(f"| {w['backend']} | {w['sweep_s']:.2f} | {w['algorithms_s']:.2f} | {w['process_s']:.2f} |")

    if args.json:
        with open(args.json, "w") as fh:
            json.dump({"kernels": rows, "workloads": work}, fh, indent=2)
    return 0


if __name__ == "__main__":
    sys.exit(main())
