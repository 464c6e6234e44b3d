#!/usr/bin/env python3
"""Benchmark the compiled evaluation kernel against the pure-Python twin.

The workload is the realistic hot path: PDE-residual components of the
cubic-radius potential evaluated over a large sample.

    python benchmarks/bench_eval.py [--points N] [--repeats R]
"""

import argparse
import time

import numpy as np

from poiscompat.geometry import equation_e_residual, so3_potential
from poiscompat.scalarfield import SampleSpec, sample_points
from poiscompat.scalarfield import _pyeval
from poiscompat.scalarfield.program import compile_field

try:
    from poiscompat.scalarfield import _speedups
except ImportError:
    _speedups = None


def run_kernel(kernel, prog, pts):
    n = pts.shape[0]
    out = np.empty(n)
    err_code = np.empty(n, dtype=np.int32)
    err_instr = np.empty(n, dtype=np.int32)
    kernel.run_program(prog.code, prog.arg, prog.arg2, prog.consts, pts, out,
                       err_code, err_instr, max(prog.stack_size, 1), False)
    return out


def bench(kernel, programs, pts, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        for prog in programs:
            run_kernel(kernel, prog, pts)
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--points", type=int, default=20000)
    ap.add_argument("--repeats", type=int, default=3)
    args = ap.parse_args()

    residual = equation_e_residual(so3_potential())
    programs = [compile_field(c) for c in residual.components]
    pts = sample_points(SampleSpec(count=args.points))
    n_instr = sum(len(p) for p in programs)
    print(f"workload: {len(programs)} residual components, "
          f"{n_instr} instructions total, {args.points} points")

    t_pure = bench(_pyeval, programs, pts, args.repeats)
    print(f"pure-python : {t_pure:8.4f} s "
          f"({1e9 * t_pure / (args.points * n_instr):6.2f} ns/instr/pt)")
    if _speedups is None:
        print("compiled    : not built (install with Cython to compare)")
        return
    # correctness cross-check before timing
    for prog in programs:
        assert np.array_equal(run_kernel(_speedups, prog, pts),
                              run_kernel(_pyeval, prog, pts))
    t_ext = bench(_speedups, programs, pts, args.repeats)
    print(f"compiled    : {t_ext:8.4f} s "
          f"({1e9 * t_ext / (args.points * n_instr):6.2f} ns/instr/pt)")
    print(f"speedup     : {t_pure / t_ext:8.1f}x")


if __name__ == "__main__":
    main()
