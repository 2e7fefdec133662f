# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled quadrature kernels: adaptive G7/K15 on radial segments with the
shear and lift integrands evaluated natively.  Mirrors fallback.py."""

from ..errors import ConvergenceError, InvalidDilatationError

cdef extern from "complex.h" nogil:
    double complex clog(double complex z)
    double complex cexp(double complex z)
    double cabs(double complex z)

BACKEND = "cython"

cdef enum:
    _PREV_IDENTITY = 0
    _PREV_KOEBE = 1
    _OMEGA_ZERO = 0
    _OMEGA_POWER = 1
    _OMEGA_MOBIUS = 2

PREV_IDENTITY = _PREV_IDENTITY
PREV_KOEBE = _PREV_KOEBE

OMEGA_ZERO = _OMEGA_ZERO
OMEGA_POWER = _OMEGA_POWER
OMEGA_MOBIUS = _OMEGA_MOBIUS

cdef double[15] XGK
cdef double[15] WGK
cdef double[7] WG

cdef double[8] _XGK_HALF = [
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0]
cdef double[8] _WGK_HALF = [
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801]
cdef double[4] _WG_HALF = [
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776]

cdef int _i
for _i in range(7):
    XGK[_i] = -_XGK_HALF[_i]
    WGK[_i] = _WGK_HALF[_i]
    XGK[14 - _i] = _XGK_HALF[_i]
    WGK[14 - _i] = _WGK_HALF[_i]
XGK[7] = 0.0
WGK[7] = _WGK_HALF[7]
for _i in range(3):
    WG[_i] = _WG_HALF[_i]
    WG[6 - _i] = _WG_HALF[_i]
WG[3] = _WG_HALF[3]

cdef double complex cpow_real(double complex z, double c) noexcept nogil:
    return cexp(c * clog(z))

cdef double complex ipow(double complex z, int n) noexcept nogil:
    cdef double complex acc = 1.0
    cdef double complex base = z
    cdef int k = n
    while k > 0:
        if k & 1:
            acc = acc * base
        base = base * base
        k >>= 1
    return acc

# mode 0: shear integrand phi'/(1-omega); mode 1: lift integrand
# phi' * z^(n/2) / (1 - z^n).  Returns NaN-signal through err[0] when the
# dilatation leaves the disk.
cdef double complex integrand(double complex z, int mode, int prev_kind,
                              double c, int omega_kind, int n, double a,
                              int* bad) noexcept nogil:
    cdef double complex phip, w
    if prev_kind == _PREV_IDENTITY:
        phip = 1.0
    else:
        phip = cpow_real(1.0 + z, c - 1.0) * cpow_real(1.0 - z, -(c + 1.0))
    if mode == 1:
        return phip * ipow(z, n >> 1) / (1.0 - ipow(z, n))
    if omega_kind == _OMEGA_ZERO:
        return phip
    if omega_kind == _OMEGA_POWER:
        w = ipow(z, n)
    else:
        w = z * (z + a) / (1.0 + a * z)
    if cabs(w) >= 1.0:
        bad[0] = 1
        return 0.0
    return phip / (1.0 - w)

DEF STACK_MAX = 4096

cdef int _adaptive(double complex z1, int mode, int prev_kind, double c,
                   int omega_kind, int n, double a, double abs_tol,
                   double rel_tol, int max_subdivisions,
                   double complex* out) noexcept nogil:
    """Returns 0 on success, 1 on non-convergence, 2 on bad dilatation,
    3 on stack overflow."""
    cdef double t0s[STACK_MAX]
    cdef double t1s[STACK_MAX]
    cdef int top = 0
    cdef double t0, t1, mid, hw, err
    cdef double complex total = 0.0
    cdef double complex ik, ig, fv
    cdef int splits = 0
    cdef int j, bad
    if z1 == 0.0:
        out[0] = 0.0
        return 0
    t0s[0] = 0.0
    t1s[0] = 1.0
    top = 1
    while top > 0:
        top -= 1
        t0 = t0s[top]
        t1 = t1s[top]
        mid = 0.5 * (t0 + t1)
        hw = 0.5 * (t1 - t0)
        ik = 0.0
        ig = 0.0
        bad = 0
        for j in range(15):
            fv = integrand((mid + hw * XGK[j]) * z1, mode, prev_kind, c,
                           omega_kind, n, a, &bad) * z1
            ik = ik + WGK[j] * fv
            if j & 1:
                ig = ig + WG[j >> 1] * fv
        if bad:
            return 2
        ik = hw * ik
        ig = hw * ig
        err = cabs(ik - ig)
        if err <= (abs_tol + rel_tol * cabs(ik)) * (t1 - t0):
            total = total + ik
        else:
            splits += 1
            if splits > max_subdivisions or hw < 1e-15:
                return 1
            if top + 2 > STACK_MAX:
                return 3
            t0s[top] = mid
            t1s[top] = t1
            top += 1
            t0s[top] = t0
            t1s[top] = mid
            top += 1
    out[0] = total
    return 0


cdef _raise(int status, int splits_limit):
    if status == 1:
        raise ConvergenceError(
            f"segment quadrature stalled (subdivision limit {splits_limit})")
    if status == 2:
        raise InvalidDilatationError(
            "dilatation modulus >= 1 on the integration path")
    if status == 3:
        raise ConvergenceError("quadrature panel stack overflow")


def shear_integral(z, int prev_kind, double c, int omega_kind, int n,
                   double a, double abs_tol, double rel_tol,
                   int max_subdivisions):
    """h(z) = integral of phi'(zeta)/(1 - omega(zeta)) along [0, z]."""
    cdef double complex out = 0.0
    cdef int status = _adaptive(z, 0, prev_kind, c, omega_kind, n, a,
                                abs_tol, rel_tol, max_subdivisions, &out)
    if status != 0:
        _raise(status, max_subdivisions)
    return complex(out)


def lift_integral(z, int prev_kind, double c, int n, double abs_tol,
                  double rel_tol, int max_subdivisions):
    """Integral of phi'(zeta) * zeta^(n/2) / (1 - zeta^n) along [0, z]."""
    if n % 2 != 0:
        raise ValueError("lift_integral requires an even power dilatation")
    cdef double complex out = 0.0
    cdef int status = _adaptive(z, 1, prev_kind, c, _OMEGA_POWER, n, 0.0,
                                abs_tol, rel_tol, max_subdivisions, &out)
    if status != 0:
        _raise(status, max_subdivisions)
    return complex(out)
