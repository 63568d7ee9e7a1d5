"""Compare the jit and numpy kernel backends on realistic shapes.

Run as: python3 benchmarks/bench_kernels.py
"""

import os
import time

import numpy as np

from qcy import _kernels


def timeit(fn, repeat=5):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best, result


def bench_image_count(rng):
    modulus, m = 5, 8  # 5^8 = 390625 vectors
    mat = rng.integers(0, modulus, size=(m, m), dtype=np.int64)
    rows = []
    for backend in ("numba", "numpy"):
        if backend == "numba" and not _kernels._HAVE_NUMBA:
            continue
        os.environ["QCY_KERNELS"] = backend
        best, result = timeit(lambda: _kernels.image_count(mat, modulus))
        rows.append((backend, best, result))
    return "image_count 8x8 mod 5", rows


def bench_modp_rank(rng):
    p = 2_147_483_629
    mat = rng.integers(0, 10_000, size=(320, 1600), dtype=np.int64)
    rows = []
    for backend in ("numba", "numpy"):
        if backend == "numba" and not _kernels._HAVE_NUMBA:
            continue
        os.environ["QCY_KERNELS"] = backend
        best, result = timeit(
            lambda: _kernels.modp_rank(mat.copy(), p), repeat=3)
        rows.append((backend, best, result))
    return "modp_rank 320x1600", rows


def main():
    rng = np.random.default_rng(20240817)
    print(f"numba available: {_kernels._HAVE_NUMBA}")
    if _kernels._HAVE_NUMBA:
        os.environ["QCY_KERNELS"] = "numba"
        t0 = time.perf_counter()
        _kernels.warmup()
        print(f"jit warmup: {time.perf_counter() - t0:.2f} s")
    for bench in (bench_image_count, bench_modp_rank):
        label, rows = bench(rng)
        print(f"\n{label}")
        results = {r for _, _, r in rows}
        assert len(results) == 1, f"backends disagree: {rows}"
        for backend, best, result in rows:
            print(f"  {backend:<6} {best * 1000:9.2f} ms   (result {result})")
    os.environ.pop("QCY_KERNELS", None)


if __name__ == "__main__":
    main()
