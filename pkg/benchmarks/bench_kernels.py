"""Compare the compiled quadrature kernels against the pure-Python fallback.

Run from the repository root:

    python3 benchmarks/bench_kernels.py

Times the shear and lift integrals over a disk lattice with both backends
and cross-checks that they agree to near machine precision.
"""

import cmath
import math
import time

from shearlift._kernels import fallback

try:
    from shearlift._kernels import _gk
except ImportError:
    _gk = None

ABS_TOL = 1e-12
REL_TOL = 1e-12
MAX_SUB = 2000


def lattice(rings=8, spokes=12, r_max=0.9):
    return [r_max * j / rings * cmath.exp(2j * math.pi * k / spokes)
            for j in range(1, rings + 1) for k in range(spokes)]


def run_shear(mod, points, c, n):
    out = []
    for z in points:
        out.append(mod.shear_integral(z, mod.PREV_KOEBE, c, mod.OMEGA_POWER,
                                      n, 0.0, ABS_TOL, REL_TOL, MAX_SUB))
    return out


def run_lift(mod, points, c, n):
    return [mod.lift_integral(z, mod.PREV_KOEBE, c, n, ABS_TOL, REL_TOL,
                              MAX_SUB) for z in points]


def bench(label, fn, repeats=3):
    best = math.inf
    result = None
    for _ in range(repeats):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    print(f"  {label:<28s} {best * 1e3:9.2f} ms")
    return result, best


def main():
    points = lattice()
    print(f"{len(points)} disk points, c=0.5, n=4, tol={ABS_TOL:g}")
    if _gk is None:
        print("compiled backend unavailable; timing the fallback only")

    for name, runner in (("shear_integral", run_shear),
                         ("lift_integral", run_lift)):
        print(name)
        py_vals, py_t = bench("python fallback",
                              lambda: runner(fallback, points, 0.5, 4))
        if _gk is None:
            continue
        cy_vals, cy_t = bench("cython", lambda: runner(_gk, points, 0.5, 4))
        worst = max(abs(a - b) for a, b in zip(py_vals, cy_vals))
        print(f"  speedup {py_t / cy_t:5.1f}x   max |diff| {worst:.3e}")


if __name__ == "__main__":
    main()
