"""Timing comparison of the compiled and pure-Python polynomial kernels.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Micro benches hit the raw coefficient kernels; the macro bench runs the full
Salem certification pipeline, which is dominated by Sturm-chain remainder
sequences over big rationals.
"""

import random
import statistics
import time

from salemtori import _kernels as kern
from salemtori.poly import IntPoly
from salemtori.salem import is_salem

RNG = random.Random(411522)

MICRO_REPEAT = 5


def _random_coeffs(degree, bound=10**6):
    return tuple(RNG.randint(-bound, bound) for _ in range(degree)) + (1,)


def _time(fn, repeat=MICRO_REPEAT):
    samples = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        samples.append(time.perf_counter() - t0)
    return min(samples), statistics.median(samples)


def micro_cases():
    a64 = _random_coeffs(64)
    b64 = _random_coeffs(64)
    a256 = _random_coeffs(256)
    b128 = _random_coeffs(128)

    def mul():
        for _ in range(200):
            kern.mul(a64, b64)

    def divmod_monic():
        for _ in range(200):
            kern.divmod_monic(a256, b128)

    def prem():
        for _ in range(200):
            kern.prem(a256, b128)

    def evaluate():
        for _ in range(2000):
            kern.eval_int(a256, 7)

    return (("mul 64x64", mul), ("divmod 256/128", divmod_monic), ("prem 256/128", prem), ("eval deg-256", evaluate))


def macro_salem_sweep():
    polys = []
    for a in range(-6, 7):
        for b in range(-6, 7):
            polys.append(IntPoly((1, a, b, a, 1)))
    for p in polys:
        is_salem(p)


def run(backend):
    kern.use(backend)
    rows = []
    for name, fn in micro_cases():
        best, med = _time(fn)
        rows.append((name, best, med))
    best, med = _time(macro_salem_sweep, repeat=3)
    rows.append(("is_salem 169-poly sweep", best, med))
    return rows


def main():
    available = ["python"]
    try:
        kern.use("cython")
        available.append("cython")
    except Exception as exc:  # compiled extension missing
        print(f"cython backend unavailable: {exc}")
    finally:
        kern.use("python")

    results = {b: run(b) for b in available}
    kern.use(available[-1])

    width = max(len(name) for name, _, _ in results["python"])
    header = f"{'benchmark':<{width}}  " + "  ".join(f"{b + ' best (s)':>16}" for b in available)
    print(header)
    print("-" * len(header))
    for i, (name, _, _) in enumerate(results["python"]):
        cells = "  ".join(f"{results[b][i][1]:>16.6f}" for b in available)
        print(f"{name:<{width}}  {cells}")
    if len(available) == 2:
        print()
        for i, (name, _, _) in enumerate(results["python"]):
            py = results["python"][i][1]
            cy = results["cython"][i][1]
            print(f"{name:<{width}}  cython is {py / cy:5.2f}x the pure-Python speed")


if __name__ == "__main__":
    main()
