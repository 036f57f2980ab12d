"""Compiled matching kernels against their pure-Python source.

    python3 benchmarks/bench_kernels.py [--repeat N]

Runs Hopcroft-Karp on whole family-B members (their Clar sets cover every
vertex, so residual graphs would be empty) and full Kekulé enumeration on
zigzag chains.
When CLAR_KIT_JIT=0 both columns run the Python path.
"""

import argparse
import time

import numpy as np

from clar_kit import _kernels
from clar_kit.benzenoid import BenzenoidSpec, build_benzenoid
from clar_kit.extremal import family_b_member


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t)
    return min(times)


def hk_case(n):
    g = build_benzenoid(family_b_member(n))
    indptr, indices = g.csr
    left = np.array(g.bipartition, np.bool_) == 0
    active = np.ones(g.vertex_count, np.bool_)
    args = (indptr, indices, left, active)
    return f"hopcroft_karp  n={n:<4} V={g.vertex_count:<5}", _kernels.hopcroft_karp, args


def enum_case(n):
    # zigzag chains have Fibonacci-many Kekulé structures
    g = _zigzag(n)
    indptr, indices = g.csr
    active = np.ones(g.vertex_count, np.bool_)
    args = (indptr, indices, active, np.iinfo(np.int64).max)
    return f"enumerate_mates n={n:<3} V={g.vertex_count:<5}", _kernels.enumerate_mates, args


def _zigzag(n):
    sides = [2 if i % 2 == 0 else 4 for i in range(n - 2)]
    return build_benzenoid(BenzenoidSpec.chain(n, sides))


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()
    print(f"numba jit enabled: {_kernels.JIT_ENABLED}")
    print(f"{'case':<34}{'jit ms':>10}{'python ms':>12}{'speedup':>10}")
    cases = [hk_case(n) for n in (100, 400, 1600)] + [enum_case(n) for n in (8, 12, 16)]
    for label, kernel, kargs in cases:
        kernel(*kargs)  # compile outside the timing
        fast = best_of(lambda: kernel(*kargs), args.repeat)
        slow = best_of(lambda: kernel.py_func(*kargs), max(1, args.repeat // 2))
        print(f"{label:<34}{fast * 1e3:>10.3f}{slow * 1e3:>12.3f}{slow / fast:>9.1f}x")


if __name__ == "__main__":
    main()
