"""Branch-safe complex primitives and segment quadrature.

Every multivalued function in the package uses the principal branch.  All
logarithm arguments that arise from the mapping families (1-z, 1+z,
(1+z)/(1-z), 1 - z*e^{i*theta}, 1 - 2z*cos(theta) + z^2) have positive real
part on the open unit disk, so no branch tracking is needed anywhere.
"""

import cmath
from dataclasses import dataclass

import numpy as np

from ._kernels import fallback
from .errors import DomainError

DEFAULT_ABS_TOL = 1e-12
DEFAULT_REL_TOL = 1e-12
DEFAULT_MAX_SUBDIVISIONS = 2000


@dataclass(frozen=True)
class QuadratureConfig:
    abs_tol: float = DEFAULT_ABS_TOL
    rel_tol: float = DEFAULT_REL_TOL
    max_subdivisions: int = DEFAULT_MAX_SUBDIVISIONS

    def __post_init__(self):
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise ValueError("tolerances must be positive")
        if self.max_subdivisions < 1:
            raise ValueError("max_subdivisions must be >= 1")


DEFAULT_QUADRATURE = QuadratureConfig()


def require_disk_point(z, r_max=0.999):
    """Validate |z| < 1 (and below the near-boundary cutoff) and return z
    as a complex number."""
    z = complex(z)
    if not (abs(z) < 1.0):
        raise DomainError(f"point {z} is not inside the unit disk")
    if abs(z) > r_max:
        raise DomainError(
            f"point {z} is too close to the boundary (|z| > {r_max})")
    return z


def principal_log(z):
    """Principal branch logarithm; imaginary part in (-pi, pi]."""
    z = complex(z)
    if z == 0:
        raise DomainError("log(0) is undefined")
    return cmath.log(z)


def principal_pow(z, c):
    """z**c via the principal logarithm, z^c = exp(c*log z)."""
    z = complex(z)
    c = float(c)
    if z == 0:
        if c > 0:
            return 0j
        raise DomainError("0**c is undefined for c <= 0")
    return cmath.exp(c * cmath.log(z))


def cayley(z):
    """Disk-to-right-half-plane map w = (1+z)/(1-z)."""
    z = require_disk_point(z, r_max=1.0)
    return (1.0 + z) / (1.0 - z)


def integrate_segment(integrand, z0, z1, cfg=DEFAULT_QUADRATURE):
    """Adaptive G7/K15 line integral of ``integrand`` along the straight
    segment [z0, z1].

    The integrand must be analytic on the closed segment.  It is called
    with an ndarray of points when it accepts one, otherwise point-wise.
    """
    fvec = _vectorize(integrand)
    return fallback.adaptive_segment(fvec, z0, z1, cfg.abs_tol, cfg.rel_tol,
                                     cfg.max_subdivisions)


def _vectorize(f):
    def call(zs):
        try:
            out = f(zs)
        except TypeError:
            return np.array([f(complex(z)) for z in zs], dtype=complex)
        out = np.asarray(out, dtype=complex)
        if out.shape != np.shape(zs):
            return np.array([f(complex(z)) for z in zs], dtype=complex)
        return out

    return call


def complex_derivative(f, z, step=1e-6):
    """Central-difference derivative of an analytic function.

    Used by verification when no closed-form derivative is registered.
    """
    z = complex(z)
    return (f(z + step) - f(z - step)) / (2.0 * step)


def cauchy_derivative(f, z, radius, order=32):
    """Derivative of an analytic function by trapezoidal Cauchy quadrature
    on a circle of the given radius.

    Converges geometrically in ``order`` as long as f is analytic on the
    closed circle, so the radius can be a fixed fraction of the distance
    to the nearest singularity; this reaches near machine precision where
    finite differences top out around sqrt(eps).
    """
    z = complex(z)
    if radius <= 0:
        raise ValueError("radius must be positive")
    total = 0j
    for m in range(order):
        w = cmath.exp(2j * cmath.pi * m / order)
        total += f(z + radius * w) / w
    return total / (order * radius)
