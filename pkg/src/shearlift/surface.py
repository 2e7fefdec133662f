"""Minimal-surface lifts of the power-dilatation families and meshing.

For even n the dilatation omega = z^n is the square of q(z) = z^(n/2) and
the harmonic map lifts to a minimal graph

    X(z) = (u, v, F3),   F3 = 2 Im int_0^z h'(s) q(s) ds.

The principal root q = +z^(n/2) is fixed throughout; the mirrored surface
is obtained by negating F3.  Closed forms below were validated against the
quadrature lift; the f_1n log coefficient is (n^2+2)/12 and the slit
(n = 2) reference carries the numerator 2z^2 - 3z + 3, both of which the
partial-fraction derivation forces.
"""

import cmath
import math
from dataclasses import dataclass

from . import _kernels
from .analytic import DEFAULT_QUADRATURE, require_disk_point
from .errors import (ConvergenceError, DilatationNotSquareError, DomainError,
                     UnsupportedDomainError, UnsupportedParameterError)
from .families import (PARAM_EPS, FamilyParams, eval_f0n, eval_f1n,
                       eval_f2n, eval_fcn, evaluate)
from .special import F1Params, appell_f1
from .shear import grid_points


@dataclass(frozen=True)
class GridSpec:
    rings: int = 10
    spokes: int = 24
    r_max: float = 0.98

    def __post_init__(self):
        if self.rings < 1:
            raise ValueError("rings must be >= 1")
        if self.spokes < 3:
            raise ValueError("spokes must be >= 3")
        if not 0.0 < self.r_max <= 0.999:
            raise ValueError("r_max must lie in (0, 0.999]")


@dataclass(frozen=True)
class SurfaceSample:
    z: complex
    u: float
    v: float
    f3: float
    fallback: bool = False


@dataclass(frozen=True)
class SurfaceMesh:
    vertices: tuple  # SurfaceSample, center first then ring-major
    faces: tuple  # (i, j, k) zero-based vertex indices


def _require_even(n):
    n = int(n)
    if n % 2 != 0:
        raise DilatationNotSquareError(
            f"omega = z^{n} is not the square of a single-valued analytic "
            "function; the lift needs even n")
    return n


def _numeric_f3(c, n, z, cfg=DEFAULT_QUADRATURE):
    return 2.0 * _kernels.lift_integral(z, _kernels.PREV_KOEBE, float(c),
                                        int(n), cfg.abs_tol, cfg.rel_tol,
                                        cfg.max_subdivisions).imag


def lift_f0n(n, z):
    """Lift of the strip family f_0n (even n)."""
    n = _require_even(n)
    planar = eval_f0n(n, z)
    z = planar.z
    t = z / (1.0 - z) + (-1.0) ** (n // 2) * z / (1.0 + z)
    for k in range(1, n // 2):
        th = 2.0 * math.pi * k / n
        t -= (1j * (-1.0) ** k / math.sin(th)) * cmath.log(
            (1.0 - z * cmath.exp(-1j * th)) / (1.0 - z * cmath.exp(1j * th)))
    return SurfaceSample(z=z, u=planar.u, v=planar.v, f3=(t / n).imag)


def lift_f1n(n, z):
    """Lift of the wave-plane family f_1n (even n)."""
    n = _require_even(n)
    planar = eval_f1n(n, z)
    z = planar.z
    t = (-z / (1.0 - z) + z * (2.0 - z) / (1.0 - z) ** 2
         + (n * n + 2.0) / 12.0 * cmath.log(1.0 - z)
         + (-1.0) ** (n // 2) / 2.0 * cmath.log(1.0 + z))
    for k in range(1, n // 2):
        th = math.pi * k / n
        t += (0.5 * (-1.0) ** k / math.sin(th) ** 2
              * cmath.log(1.0 - 2.0 * z * math.cos(2.0 * th) + z * z))
    return SurfaceSample(z=z, u=planar.u, v=planar.v, f3=(t / n).imag)


def lift_f2n(n, z):
    """Lift of the slit family f_2n (even n)."""
    n = _require_even(n)
    planar = eval_f2n(n, z)
    z = planar.z
    t = ((4.0 - n * n) / (6.0 * n) * z / (1.0 - z)
         - 2.0 / n * z * (2.0 - z) / (1.0 - z) ** 2
         + 4.0 * z * (z * z - 3.0 * z + 3.0) / (3.0 * n * (1.0 - z) ** 3))
    for k in range(1, n // 2):
        th = math.pi * k / n
        t += (1j / (2.0 * n) * (-1.0) ** k
              * math.cos(th) / math.sin(th) ** 3
              * cmath.log((1.0 - z * cmath.exp(-2j * th))
                          / (1.0 - z * cmath.exp(2j * th))))
    return SurfaceSample(z=z, u=planar.u, v=planar.v, f3=t.imag)


def slit_surface_reference(z):
    """Minimal surface over the slit plane k_2(D): the n = 2 lift in fully
    explicit rational form (q = +z convention).

        u  = Re{z(2z^2 - 3z + 3) / (3(1-z)^3)}
        v  = Im{z / (1-z)^2}
        F3 = Im{-z(2-z)/(1-z)^2 + 2z(z^2 - 3z + 3) / (3(1-z)^3)}
    """
    z = require_disk_point(z, r_max=1.0)
    cube = 3.0 * (1.0 - z) ** 3
    u = (z * (2.0 * z * z - 3.0 * z + 3.0) / cube).real
    v = (z / (1.0 - z) ** 2).imag
    f3 = (-z * (2.0 - z) / (1.0 - z) ** 2
          + 2.0 * z * (z * z - 3.0 * z + 3.0) / cube).imag
    return SurfaceSample(z=z, u=u, v=v, f3=f3)


def _f3_fcn_closed(c, n, z):
    p = F1Params(alpha=1.0 - c, beta1=-c, beta2=1.0, gamma=2.0 - c)

    def antideriv(w):
        wc = cmath.exp(c * cmath.log((1.0 + w) / (1.0 - w)))
        t = wc * ((1.0 + w) / (2.0 * n * (1.0 + c) * (1.0 - w))
                  - (-1.0) ** (n // 2) * (1.0 - w)
                  / (2.0 * n * (1.0 - c) * (1.0 + w)))
        for k in range(1, n // 2):
            e = cmath.exp(2j * math.pi * k / n)

            def j_term(ephi):
                return (2.0 ** c * cmath.exp((1.0 - c) * cmath.log(1.0 - w))
                        * ephi
                        * appell_f1(p, 0.5 * (1.0 - w), (1.0 - w) / (1.0 - ephi))
                        / ((1.0 - c) * (1.0 - ephi)))

            t += (2.0 / n) * (-1.0) ** k * (
                j_term(e) / (1.0 - e * e)
                + j_term(e.conjugate()) / (1.0 - (e * e).conjugate()))
        return t

    return (antideriv(z) - antideriv(0j)).imag


def lift_fcn(c, n, z, allow_fallback=True):
    """Lift of the general family f_cn (even n).

    c = 0, 1, 2 delegate to the dedicated family lifts; the excluded
    c-neighborhoods and points outside the F1 domain use the quadrature
    lift, flagged on the sample.
    """
    FamilyParams(family="f_cn", c=c, n=n)
    c = float(c)
    n = _require_even(n)
    if c == 0.0:
        return lift_f0n(n, z)
    if c == 1.0:
        return lift_f1n(n, z)
    if c == 2.0:
        return lift_f2n(n, z)
    planar = eval_fcn(c, n, z, allow_fallback=allow_fallback)
    z = planar.z
    if c <= PARAM_EPS or abs(c - 1.0) <= PARAM_EPS:
        return SurfaceSample(z=z, u=planar.u, v=planar.v,
                             f3=_numeric_f3(c, n, z), fallback=True)
    try:
        f3 = _f3_fcn_closed(c, n, z)
        fallback = planar.fallback
    except (UnsupportedDomainError, DomainError, ConvergenceError) as exc:
        if not allow_fallback:
            raise UnsupportedDomainError(
                f"F1 lift unavailable at z={z}: {exc}") from exc
        f3 = _numeric_f3(c, n, z)
        fallback = True
    return SurfaceSample(z=z, u=planar.u, v=planar.v, f3=f3,
                         fallback=fallback)


def lift_sample(params, z):
    """Dispatch a power-dilatation FamilyParams to its lift."""
    f = params.family
    if f == "f_0n":
        return lift_f0n(params.n, z)
    if f == "f_1n":
        return lift_f1n(params.n, z)
    if f == "f_2n":
        return lift_f2n(params.n, z)
    if f == "f_cn":
        return lift_fcn(params.c, params.n, z)
    raise UnsupportedParameterError(
        f"family {f!r} has no power dilatation; nothing to lift")


def build_mesh(params, grid):
    """Triangulated lift over the ring/spoke lattice.

    Vertex 0 is the center z = 0; ring-major vertices follow.  Faces are
    the center fan plus each quad split along the diagonal toward the
    smaller spoke index, giving spokes + 2*spokes*(rings-1) triangles.
    """
    _require_even(params.n)
    center = SurfaceSample(z=0j, u=0.0, v=0.0, f3=0.0)
    vertices = [center]
    for z in grid_points(grid):
        try:
            vertices.append(lift_sample(params, z))
        except (UnsupportedDomainError, DomainError) as exc:
            raise type(exc)(f"at grid point z={z}: {exc}") from exc
    faces = []
    s = grid.spokes
    for k in range(s):
        faces.append((0, 1 + k, 1 + (k + 1) % s))
    for j in range(grid.rings - 1):
        inner = 1 + j * s
        outer = inner + s
        for k in range(s):
            kn = (k + 1) % s
            faces.append((inner + k, outer + k, outer + kn))
            faces.append((inner + k, outer + kn, inner + kn))
    return SurfaceMesh(vertices=tuple(vertices), faces=tuple(faces))
