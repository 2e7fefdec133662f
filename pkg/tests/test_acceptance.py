"""Acceptance suite: one test (one pass/fail line under pytest -v) per
criterion, with pinned tolerances.  Each test prints its residual summary,
which pytest shows whenever a criterion goes red.
"""

import cmath
import json
import math
import random
import time

import pytest

from shearlift.cli import main as cli_main
from shearlift.families import (FamilyParams, coeffs_f1n, coeffs_f2n,
                                eval_F_0a, eval_F_1a, eval_F_ca, evaluate,
                                family_omega, family_phi, gprime, hprime)
from shearlift.shear import grid_points, shear_at
from shearlift.special import (F1Params, appell_f1, appell_f1_integral,
                               appell_f1_series, gauss_2f1, pochhammer)
from shearlift.surface import GridSpec, lift_f2n, slit_surface_reference
from shearlift.verify import (check_chd_heuristic, check_strip_bound,
                              check_surface, chd_crossing_excess)

GRID_09 = GridSpec(rings=10, spokes=20, r_max=0.9)
GRID_095 = GridSpec(rings=10, spokes=20, r_max=0.95)

FAMILY_SWEEP = (
    [FamilyParams(family=f, n=n)
     for f in ("f_0n", "f_1n", "f_2n") for n in range(1, 9)]
    + [FamilyParams(family="F_ca", c=c, a=a)
       for c in (0.5, 1.5, 2.0) for a in (-1.0, -0.5, 0.0, 0.5, 1.0)]
    + [FamilyParams(family="f_cn", c=c, n=n)
       for c in (0.5, 1.5, 2.0) for n in (3, 4)])


def test_criterion_01_oracle_equivalence_runtime():
    # closed forms vs quadrature shear, max 1e-8 (1e-6 where the F1
    # evaluation falls back to quadrature), full sweep under 2 minutes
    t0 = time.monotonic()
    worst_strict = 0.0
    worst_fallback = 0.0
    fallback_points = 0
    for p in FAMILY_SWEEP:
        phi, omega = family_phi(p), family_omega(p)
        for z in grid_points(GRID_09):
            s = evaluate(p, z)
            o = shear_at(phi, omega, z)
            res = max(abs(s.h - o.h), abs(s.g - o.g))
            if s.fallback:
                fallback_points += 1
                worst_fallback = max(worst_fallback, res)
            else:
                worst_strict = max(worst_strict, res)
    elapsed = time.monotonic() - t0
    print(f"criterion 1: strict residual {worst_strict:.3e}, fallback "
          f"residual {worst_fallback:.3e} over {fallback_points} fallback "
          f"points, {elapsed:.1f}s")
    assert worst_strict < 1e-8
    assert worst_fallback < 1e-6
    assert elapsed < 120.0


def test_criterion_02_defining_identities():
    # |h - g - phi| < 1e-10 across the whole sweep; |g' - omega*h'| < 1e-8
    # for one representative configuration per family (derivatives by
    # Cauchy-circle quadrature on the closed forms)
    from shearlift.analytic import cauchy_derivative

    worst_prev = 0.0
    for p in FAMILY_SWEEP:
        phi = family_phi(p)
        for z in grid_points(GRID_09):
            s = evaluate(p, z)
            worst_prev = max(worst_prev, abs(s.h - s.g - complex(phi.phi(z))))
    assert worst_prev < 1e-10, worst_prev

    reps = [FamilyParams(family="F_a", a=0.5),
            FamilyParams(family="F_0a", a=1.0),
            FamilyParams(family="F_1a", a=-0.5),
            FamilyParams(family="F_ca", c=1.5, a=0.5),
            FamilyParams(family="f_0n", n=4),
            FamilyParams(family="f_1n", n=3),
            FamilyParams(family="f_2n", n=5),
            FamilyParams(family="f_cn", c=0.5, n=3)]
    worst_dil = 0.0
    for p in reps:
        omega = family_omega(p)
        for z in grid_points(GRID_09):
            radius = 0.25 * (1.0 - abs(z))
            hp = cauchy_derivative(lambda w: evaluate(p, w).h, z, radius)
            gp = cauchy_derivative(lambda w: evaluate(p, w).g, z, radius)
            worst_dil = max(worst_dil, abs(gp - complex(omega(z)) * hp))
    print(f"criterion 2: |h-g-phi| {worst_prev:.3e}, "
          f"|g'-omega h'| {worst_dil:.3e}")
    assert worst_dil < 1e-8


def test_criterion_03_jacobian_positivity():
    worst = math.inf
    for p in FAMILY_SWEEP:
        for z in grid_points(GRID_095):
            j = abs(hprime(p, z)) ** 2 - abs(gprime(p, z)) ** 2
            worst = min(worst, j)
    print(f"criterion 3: min Jacobian {worst:.3e}")
    assert worst > 0.0


def test_criterion_04_boundary_value_spot_checks():
    # semicircle collapse of F_0a onto -a/2 +- i pi/4
    for a in (-1.0, 0.0, 1.0):
        for theta in (0.5 * math.pi, 0.25 * math.pi, 0.8 * math.pi):
            s = eval_F_0a(a, 0.9999 * cmath.exp(1j * theta))
            target = -a / 2.0 + 1j * math.copysign(math.pi / 4.0, s.v)
            assert abs(s.f - target) < 0.02, (a, theta)
    # slit endpoint of the c=2 family
    for a in (-1.0, 0.0, 1.0):
        s = eval_F_ca(2.0, a, 0.9999j)
        assert abs(s.f - (-(2.0 - a) / 6.0)) < 0.02, a
    # F_11 boundary parabola: the boundary relation
    # u = (1-a)/8 log(4v^2) - (1+a)/8 (4v^2+1) at a=1 reads u = -v^2 - 1/4,
    # so the residual v^2 + u + 1/4 must vanish
    for theta in (0.3 * math.pi, 0.5 * math.pi, 0.75 * math.pi):
        s = eval_F_1a(1.0, 0.9999 * cmath.exp(1j * theta))
        assert abs(s.v ** 2 + s.u + 0.25) < 0.02, theta
    # strip bound holds at every sample
    for a in (-1.0, -0.5, 0.0, 0.5, 1.0):
        assert check_strip_bound(a).passed, a
    print("criterion 4: collapse, slit endpoint, parabola, strip bound ok")


def test_criterion_05_slit_surface_cross_check():
    rng = random.Random(42)
    worst = 0.0
    for _ in range(100):
        r = 0.95 * math.sqrt(rng.random())
        z = r * cmath.exp(2j * math.pi * rng.random())
        ref = slit_surface_reference(z)
        s = lift_f2n(2, z)
        worst = max(worst, abs(ref.u - s.u), abs(ref.v - s.v),
                    abs(ref.f3 - s.f3))
    print(f"criterion 5: max coordinate residual {worst:.3e}")
    assert worst < 1e-10


def test_criterion_06_minimal_surface_properties():
    for fam, n in (("f_0n", 4), ("f_1n", 4), ("f_2n", 2), ("f_2n", 4)):
        r = check_surface(FamilyParams(family=fam, n=n))
        print(f"criterion 6: {fam} n={n} residual {r.max_residual:.3e}")
        assert r.passed, (fam, n)


def test_criterion_07_special_functions():
    p = F1Params(0.5, 0.3, 0.7, 1.5)
    assert abs(appell_f1(p, 0.35, 0.0)
               - gauss_2f1(0.5, 0.3, 1.5, 0.35)) < 1e-10
    assert abs(appell_f1(p, 0.2, 0.2) - gauss_2f1(0.5, 1.0, 1.5, 0.2)) < 1e-10
    p2 = F1Params(0.5, 0.4, 0.0, 1.2)
    assert abs(appell_f1(p2, 0.3, 0.9) - gauss_2f1(0.5, 0.4, 1.2, 0.3)) < 1e-10
    assert abs(appell_f1_series(p, 0.4, 0.4j)
               - appell_f1_integral(p, 0.4, 0.4j)) < 1e-10
    for k in range(10):
        assert pochhammer(1, k) == math.factorial(k)
        assert pochhammer(3, k) == math.factorial(k + 2) // 2
    print("criterion 7: F1 reductions, overlap, Pochhammer ok")


def test_criterion_08_partial_fractions():
    rng = random.Random(11)
    worst = 0.0
    for n in range(1, 11):
        for coeffs in (coeffs_f1n(n), coeffs_f2n(n)):
            for _ in range(50):
                r = 0.85 * math.sqrt(rng.random())
                z = r * cmath.exp(2j * math.pi * rng.random())
                worst = max(worst,
                            abs(coeffs.reconstruct(z) - coeffs.target(z)))
    print(f"criterion 8: reconstruction residual {worst:.3e}")
    assert worst < 1e-12


def test_criterion_09_determinism(tmp_path):
    jobs = (
        ("map", ["map", "--family", "f_1n", "--n", "3", "--rings", "4",
                 "--spokes", "8", "--samples", "64"], ".svg"),
        ("surface", ["surface", "--family", "f_2n", "--n", "4",
                     "--rings", "3", "--spokes", "6"], ".obj"),
        ("verify", ["verify", "--family", "f_0n", "--n", "2", "--checks",
                    "prevertex_identity,jacobian_positive,chd_heuristic"],
         ".json"),
    )
    for name, argv, ext in jobs:
        a = tmp_path / f"{name}_a{ext}"
        b = tmp_path / f"{name}_b{ext}"
        for out in (a, b):
            assert cli_main(argv + ["--out", str(out)]) == 0
        assert a.read_bytes() == b.read_bytes(), name
    print("criterion 9: map/surface/verify reruns byte-identical")


def test_criterion_10_figure_reproduction(tmp_path):
    # the planar figure set: identity shear, strip shear,
    # wave planes, slits, and the general c sweep
    figures = (("F_a", dict(a=0.3)), ("F_0a", dict(a=0.3)),
               ("f_1n", dict(n=4)), ("f_2n", dict(n=4)),
               ("f_cn", dict(c=0.5, n=3)))
    for fam, kw in figures:
        p = FamilyParams(family=fam, **kw)
        argv = ["map", "--family", fam, "--rings", "6", "--spokes", "12",
                "--samples", "128", "--out",
                str(tmp_path / f"{fam}.svg")]
        for key, val in kw.items():
            argv += [f"--{key}", str(val)]
        assert cli_main(argv) == 0
        assert check_chd_heuristic(p).passed, fam
    # strip morphology visible in the emitted file
    import re
    text = (tmp_path / "F_0a.svg").read_text()
    vs = [float(pt.split(",")[1])
          for m in re.finditer(r'points="([^"]+)"', text)
          for pt in m.group(1).split()]
    assert max(abs(v) for v in vs) < math.pi / 4.0
    # and the heuristic does reject a horizontally re-entrant region
    u_polygon = [(0.0, 0.0), (3.0, 0.0), (3.0, 2.0), (2.0, 2.0), (2.0, 1.0),
                 (1.0, 1.0), (1.0, 2.0), (0.0, 2.0)]
    assert chd_crossing_excess(u_polygon)[0] > 0
    print("criterion 10: figure morphology and CHD fixture ok")
