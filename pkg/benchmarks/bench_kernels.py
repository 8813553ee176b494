"""Compare the compiled and pure-Python cyclotomic kernels.

Two levels are timed: the raw integer kernels on random reduced vectors, and
an end-to-end genus sweep run in a subprocess per backend (the backend is
chosen once at import, via EQCLASS_PURE_PYTHON).

    python3 benchmarks/bench_kernels.py [--repeat 5]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from eqclass import _kernels_py
from eqclass.cyclotomic import cyclotomic_polynomial

try:
    from eqclass import _ckernels
except ImportError:
    _ckernels = None

SWEEP = """
import time
from eqclass.builders import projective_datum
from eqclass.localization import equivariant_chi_y
from eqclass.kernels import BACKEND
t = time.perf_counter()
for N in range(2, 13):
    for a in range(1, N):
        for b in range(N):
            d = projective_datum(3, (0, a, b, (a + b) % N), N)
            for g in d.group.elements:
                equivariant_chi_y(d, g)
print(BACKEND, time.perf_counter() - t)
"""


def kernel_cases(rng, conductor, count):
    phi = cyclotomic_polynomial(conductor)
    deg = len(phi) - 1
    vec = lambda: [rng.randint(-50, 50) for _ in range(deg)]
    pairs = [(vec(), vec()) for _ in range(count)]
    ypolys = [([vec() for _ in range(4)], [vec() for _ in range(4)]) for _ in range(count // 10)]
    return phi, pairs, ypolys


def time_kernels(mod, phi, pairs, ypolys, repeat):
    mul = min(timeit.repeat(lambda: [mod.mul_mod(a, b, phi) for a, b in pairs], number=1, repeat=repeat))
    ymul = min(timeit.repeat(lambda: [mod.ypoly_mul_mod(a, b, phi) for a, b in ypolys], number=1, repeat=repeat))
    return mul, ymul


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-sweep", action="store_true")
    args = ap.parse_args()
    rng = random.Random(20240601)

    print(f"{'N':>4} {'kernel':>14} {'python (ms)':>12} {'cython (ms)':>12} {'speedup':>8}")
    for conductor in (5, 12, 36, 60):
        phi, pairs, ypolys = kernel_cases(rng, conductor, 2000)
        py = time_kernels(_kernels_py, phi, pairs, ypolys, args.repeat)
        cy = time_kernels(_ckernels, phi, pairs, ypolys, args.repeat) if _ckernels else (float("nan"),) * 2
        for name, p, c in zip(("mul_mod", "ypoly_mul_mod"), py, cy):
            print(f"{conductor:>4} {name:>14} {p * 1e3:12.2f} {c * 1e3:12.2f} {p / c:8.1f}")

    if args.skip_sweep:
        return
    print("\nend-to-end genus sweep on P^3 (seconds):")
    for pure in ("1", "0"):
        env = dict(os.environ, EQCLASS_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", SWEEP], env=env, capture_output=True, text=True, check=True)
        backend, secs = out.stdout.split()
        print(f"  {backend:>7}: {float(secs):.2f}")


if __name__ == "__main__":
    main()
