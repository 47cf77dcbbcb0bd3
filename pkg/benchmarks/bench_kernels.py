"""Compare the compiled kernels with the pure-Python fallback.

Usage: python3 benchmarks/bench_kernels.py [--repeat N]
"""

from __future__ import annotations

import argparse
import cmath
import math
import random
import timeit

from recipcircle import _kernels_py as pure
from recipcircle import kernels
from recipcircle.arith import poly as poly_mod
from recipcircle.criterion import run_omega
from recipcircle.oracle import random_instance


def _workloads(rng: random.Random):
    a = [rng.randint(-10**12, 10**12) for _ in range(60)]
    b = [rng.randint(-10**12, 10**12) for _ in range(55)]
    va = [rng.uniform(-1, 1) for _ in range(13)]
    vb = [rng.uniform(-1, 1) for _ in range(13)]
    kv = [float(6 - j) for j in range(13)]
    thetas = [rng.uniform(0, 0.4) for _ in range(12)]
    ms = [rng.uniform(0.2, 3) for _ in range(12)]
    coeffs = [rng.uniform(-1, 1) for _ in range(21)]
    init = [cmath.rect(1.3, 0.4 + 2 * math.pi * k / 20) for k in range(20)]
    return {
        "gcd_mod_p (deg 59, 54)": lambda K: K.gcd_mod_p(a, b, 2147483629),
        "trig_pair (13 terms)": lambda K: K.trig_pair(va, vb, kv, 0.69, 0.3, 1.3 + 0.2j),
        "rotation_product (12 factors)": lambda K: K.rotation_product(thetas, ms, 1.1 + 0.3j),
        "simpson_kernel (one step)": lambda K: K.simpson_kernel(va, vb, kv, 0.69, 1.3,
                                                                 1 + 1j, 2 + 0.5j, 0.0, 0.34),
        "aberth (degree 20)": lambda K: K.aberth(coeffs, init),
    }


def _time(fn, repeat: int) -> float:
    number = max(1, repeat)
    return min(timeit.repeat(fn, number=number, repeat=3)) / number


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=20)
    args = parser.parse_args()
    compiled = kernels.compiled
    print(f"active backend: {kernels.BACKEND}")
    if compiled is None:
        print("compiled extension not available; only the fallback can be timed")
    rng = random.Random(0)
    print(f"{'kernel':<32}{'python [ms]':>14}{'cython [ms]':>14}{'speedup':>10}")
    for name, work in _workloads(rng).items():
        tp = _time(lambda: work(pure), args.repeat) * 1e3
        if compiled is not None:
            tc = _time(lambda: work(compiled), args.repeat) * 1e3
            print(f"{name:<32}{tp:>14.4f}{tc:>14.4f}{tp / tc:>10.1f}")
        else:
            print(f"{name:<32}{tp:>14.4f}{'-':>14}{'-':>10}")

    # end to end: the exact omega run spends most of its time in modular gcds
    p = random_instance("OnCircleSimple", 5, 0)
    rows = []
    for label, impl in (("python", pure.gcd_mod_p), ("cython", getattr(compiled, "gcd_mod_p", None))):
        if impl is None:
            continue
        saved = poly_mod.gcd_mod_p
        poly_mod.gcd_mod_p = impl
        try:
            rows.append((label, _time(lambda: run_omega(p), 1)))
        finally:
            poly_mod.gcd_mod_p = saved
    for label, t in rows:
        print(f"run_omega g=5 with {label} gcd_mod_p: {t:.3f} s")


if __name__ == "__main__":
    main()
