"""Time the numba and pure-numpy kernel backends side by side.

    python3 benchmarks/bench_kernels.py --points 20000 --nmax 10 --repeat 5

The library picks one backend at import time (set TRIJACOBI_DISABLE_NUMBA=1
to force numpy); this script calls both tables explicitly so a single run
compares them. Compilation happens in a warm-up call and is not timed.
"""

import argparse
import time

import numpy as np

from trijacobi import kernels


def best_of(func, repeat):
    func()  # warm-up (triggers numba compilation)
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        func()
        times.append(time.perf_counter() - start)
    return min(times)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=20000)
    parser.add_argument("--nmax", type=int, default=10)
    parser.add_argument("--racah-N", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    u, v = rng.random((2, 2 * args.points))
    keep = u + v < 1
    x = np.ascontiguousarray(u[keep][: args.points])
    y = np.ascontiguousarray(v[keep][: args.points])
    a, b, c = 0.5, 0.3, 1.7
    n = args.nmax

    cases = {
        "jacobi_values": lambda K: K["jacobi_values"](n, a, b, x),
        "tri_values": lambda K: K["tri_values"](n, n // 2, a, b, c, x, y),
        "tri_basis": lambda K: K["tri_basis"](n, a, b, c, x, y),
        "racah_table": lambda K: K["racah_table"](a, b, -args.racah_N - 1.0, 6.2, args.racah_N),
    }
    backends = {"numpy": kernels.numpy_kernels}
    if kernels.numba_kernels is not None:
        backends["numba"] = kernels.numba_kernels

    print(f"active backend: {kernels.BACKEND}; {len(x)} points, nmax={n}, racah N={args.racah_N}")
    print(f"{'kernel':<14} " + " ".join(f"{name:>12}" for name in backends) + f" {'speedup':>9}")
    for label, call in cases.items():
        timings = {name: best_of(lambda K=K: call(K), args.repeat) for name, K in backends.items()}
        ref = call(backends["numpy"])
        if "numba" in backends:
            diff = np.abs(call(backends["numba"]) - ref).max() / max(np.abs(ref).max(), 1.0)
            speed = f"{timings['numpy'] / timings['numba']:8.1f}x"
        else:
            diff, speed = 0.0, "n/a"
        cols = " ".join(f"{1e3 * timings[name]:10.3f}ms" for name in backends)
        print(f"{label:<14} {cols} {speed:>9}   max rel diff {diff:.1e}")


if __name__ == "__main__":
    main()
