#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure numpy fallback.

Times each kernel on pre-generated inputs, then two end-to-end paths that
dominate the verify suite (chart round trip, concurrence under local
unitaries).  Usage:

    python benchmarks/bench_backends.py --trials 20000
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from qubit_bundle import _backend
from qubit_bundle.charts import extract, reconstruct
from qubit_bundle.entanglement import concurrence
from qubit_bundle.linalg import apply_local
from qubit_bundle.sampling import haar_local_pair, haar_state, random_partial_state


def _time(fn, inputs) -> float:
    start = time.perf_counter()
    for args in inputs:
        fn(*args)
    return (time.perf_counter() - start) / len(inputs)


def kernel_benchmarks(rng, trials):
    states = [(rng.standard_normal(4) + 1j * rng.standard_normal(4),) for _ in range(trials)]
    matrices = [
        (rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)),)
        for _ in range(trials)
    ]
    pairs = [
        (
            rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)),
            rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2)),
            rng.standard_normal(4) + 1j * rng.standard_normal(4),
        )
        for _ in range(trials)
    ]
    angles = [
        (rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi)) for _ in range(trials)
    ]
    axes = [
        (*(v / np.linalg.norm(v)), rng.uniform(-math.pi, math.pi))
        for v in rng.standard_normal((trials, 3))
    ]
    k = _backend.kernels
    return {
        "concurrence": _time(k.concurrence, states),
        "apply_local": _time(k.apply_local, pairs),
        "su2_from_axis_angle": _time(k.su2_from_axis_angle, axes),
        "t_north": _time(k.t_north, angles),
        "svd2x2": _time(k.svd2x2, matrices),
    }


def end_to_end_benchmarks(rng, trials):
    partial = [random_partial_state(rng) for _ in range(trials)]
    states = [haar_state(rng) for _ in range(trials)]
    unitaries = [haar_local_pair(rng) for _ in range(trials)]

    start = time.perf_counter()
    for state in partial:
        reconstruct(extract(state))
    round_trip = (time.perf_counter() - start) / trials

    start = time.perf_counter()
    for state, pair in zip(states, unitaries):
        concurrence(apply_local(pair, state))
    lu_concurrence = (time.perf_counter() - start) / trials

    return {"extract+reconstruct": round_trip, "LU concurrence": lu_concurrence}


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=20_000, help="timing trials per kernel")
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    available = _backend.available_backends()
    if len(available) < 2:
        print("compiled backend not built; timing the python fallback only")

    timings = {}
    for name in available:
        with _backend.backend(name):
            rng = np.random.default_rng(args.seed)
            timings[name] = kernel_benchmarks(rng, args.trials)
            timings[name].update(end_to_end_benchmarks(rng, max(args.trials // 10, 1)))

    rows = list(timings[available[0]])
    width = max(len(r) for r in rows)
    header = f"{'benchmark':<{width}}" + "".join(f"  {n:>12}" for n in available)
    if len(available) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for row in rows:
        line = f"{row:<{width}}"
        for name in available:
            line += f"  {timings[name][row] * 1e6:>10.2f}us"
        if len(available) == 2:
            line += f"  {timings['python'][row] / timings['compiled'][row]:>7.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
