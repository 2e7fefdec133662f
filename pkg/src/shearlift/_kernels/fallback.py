"""Pure-Python quadrature kernels (numpy-vectorized).

Same contract as the compiled extension ``shearlift._kernels._gk``: an
adaptive Gauss-Kronrod (G7/K15) rule on straight segments, plus the two
parameterized line integrals the shear construction runs in bulk:

* ``shear_integral`` -- integral of phi'(z) / (1 - omega(z)) from 0 to z,
* ``lift_integral``  -- integral of phi'(z) * z^(n/2) / (1 - z^n) from 0 to z.

Prevertex kinds: 0 = identity (phi' = 1), 1 = generalized Koebe with
exponent ``c`` (phi' = (1+z)^(c-1) * (1-z)^(-(c+1))).
Dilatation kinds: 0 = zero, 1 = z^n, 2 = z*(z+a)/(1+a*z).
"""

import numpy as np

from ..errors import ConvergenceError, InvalidDilatationError

BACKEND = "python"

PREV_IDENTITY = 0
PREV_KOEBE = 1

OMEGA_ZERO = 0
OMEGA_POWER = 1
OMEGA_MOBIUS = 2

# 15-point Kronrod abscissae on [-1, 1]; odd indices are the embedded G7.
_XGK_HALF = np.array(
    [
        0.99145537112081263921,
        0.94910791234275852453,
        0.86486442335976907279,
        0.74153118559939443986,
        0.58608723546769113029,
        0.40584515137739716691,
        0.20778495500789846760,
        0.0,
    ]
)
_WGK_HALF = np.array(
    [
        0.02293532201052922496,
        0.06309209262997855329,
        0.10479001032225018384,
        0.14065325971552591875,
        0.16900472663926790283,
        0.19035057806478540991,
        0.20443294007529889241,
        0.20948214108472782801,
    ]
)
_WG_HALF = np.array(
    [
        0.12948496616886969327,
        0.27970539148927666790,
        0.38183005050511894495,
        0.41795918367346938776,
    ]
)

XGK = np.concatenate([-_XGK_HALF[:-1], _XGK_HALF[::-1]])
WGK = np.concatenate([_WGK_HALF[:-1], _WGK_HALF[::-1]])
GAUSS_IDX = np.arange(1, 15, 2)
WG = np.concatenate([_WG_HALF[:-1], _WG_HALF[::-1]])


def adaptive_segment(f, z0, z1, abs_tol, rel_tol, max_subdivisions):
    """Adaptively integrate a vectorized complex function along [z0, z1].

    ``f`` maps an ndarray of points on the segment to an ndarray of values.
    Panels are accepted when |K15 - G7| <= (abs_tol + rel_tol*|K15|) * frac,
    where frac is the panel's share of the segment, so the accepted panels
    together meet the requested budget.
    """
    z0 = complex(z0)
    z1 = complex(z1)
    dz = z1 - z0
    if dz == 0:
        return 0j
    total = 0j
    splits = 0
    stack = [(0.0, 1.0)]
    while stack:
        t0, t1 = stack.pop()
        mid = 0.5 * (t0 + t1)
        hw = 0.5 * (t1 - t0)
        fv = np.asarray(f(z0 + (mid + hw * XGK) * dz)) * dz
        ik = hw * (fv @ WGK)
        ig = hw * (fv[GAUSS_IDX] @ WG)
        err = abs(ik - ig)
        if err <= (abs_tol + rel_tol * abs(ik)) * (t1 - t0):
            total += ik
        else:
            splits += 1
            if splits > max_subdivisions or hw < 1e-15:
                raise ConvergenceError(
                    f"segment quadrature stalled after {splits} subdivisions "
                    f"(panel error {err:.3e})"
                )
            stack.append((mid, t1))
            stack.append((t0, mid))
    return total


def _phi_prime(z, prev_kind, c):
    if prev_kind == PREV_IDENTITY:
        return np.ones_like(z)
    return (1.0 + z) ** (c - 1.0) * (1.0 - z) ** (-(c + 1.0))


def _omega(z, omega_kind, n, a):
    if omega_kind == OMEGA_ZERO:
        return np.zeros_like(z)
    if omega_kind == OMEGA_POWER:
        return z**n
    return z * (z + a) / (1.0 + a * z)


def shear_integral(z, prev_kind, c, omega_kind, n, a, abs_tol, rel_tol,
                   max_subdivisions):
    """h(z) = integral of phi'(zeta)/(1 - omega(zeta)) along [0, z]."""

    def integrand(zs):
        w = _omega(zs, omega_kind, n, a)
        if np.any(np.abs(w) >= 1.0):
            raise InvalidDilatationError(
                "dilatation modulus >= 1 on the integration path")
        return _phi_prime(zs, prev_kind, c) / (1.0 - w)

    return adaptive_segment(integrand, 0j, z, abs_tol, rel_tol,
                            max_subdivisions)


def lift_integral(z, prev_kind, c, n, abs_tol, rel_tol, max_subdivisions):
    """Integral of phi'(zeta) * zeta^(n/2) / (1 - zeta^n) along [0, z].

    This is the Weierstrass-Enneper third-coordinate integrand for the
    power dilatation omega = z^n with the principal root q = z^(n/2);
    ``n`` must be even.
    """
    if n % 2 != 0:
        raise ValueError("lift_integral requires an even power dilatation")
    m = n // 2

    def integrand(zs):
        return _phi_prime(zs, prev_kind, c) * zs**m / (1.0 - zs**n)

    return adaptive_segment(integrand, 0j, z, abs_tol, rel_tol,
                            max_subdivisions)
