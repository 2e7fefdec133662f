"""Closed-form evaluators for the cataloged harmonic mapping families.

Each family is the shear of a prevertex map phi (identity or generalized
Koebe k_c) by a dilatation omega (z*(z+a)/(1+a*z) or z^n).  The closed
forms store the analytic parts: either h directly or the analytic sum
P = h + g with h = (P + phi)/2, g = (P - phi)/2 recovered from the
prevertex relation h - g = phi.

Families:

* F_a    -- phi = z,   omega = z(z+a)/(1+az)
* F_0a   -- phi = k_0, same omega (strip images)
* F_1a   -- phi = k_1, same omega (half-plane shear)
* F_ca   -- phi = k_c, same omega, c in (0,2] away from 1
* f_0n   -- phi = k_0, omega = z^n (strip images)
* f_1n   -- phi = k_1, omega = z^n (wave planes)
* f_2n   -- phi = k_2, omega = z^n (slit planes)
* f_cn   -- phi = k_c, omega = z^n, via Appell F1
"""

import cmath
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .analytic import DEFAULT_QUADRATURE, require_disk_point
from .errors import (ConvergenceError, DomainError, UnsupportedDomainError,
                     UnsupportedParameterError)
from .shear import (DilatationSpec, MapSample, PrevertexSpec, koebe_phi,
                    koebe_phi_prime, shear_at)
from .special import DEFAULT_SERIES, F1Params, appell_f1

PARAM_EPS = 1e-3

FAMILY_NAMES = ("F_a", "F_0a", "F_1a", "F_ca", "f_0n", "f_1n", "f_2n", "f_cn")

_MOBIUS_FAMILIES = {"F_a", "F_0a", "F_1a", "F_ca"}
_POWER_FAMILIES = {"f_0n", "f_1n", "f_2n", "f_cn"}


@dataclass(frozen=True)
class FamilyParams:
    family: str
    c: float = 0.0
    a: float = 0.0
    n: int = 1

    def __post_init__(self):
        if self.family not in FAMILY_NAMES:
            raise UnsupportedParameterError(f"unknown family {self.family!r}")
        if self.family in _MOBIUS_FAMILIES and not -1.0 <= self.a <= 1.0:
            raise UnsupportedParameterError("a must lie in [-1, 1]")
        if self.family in _POWER_FAMILIES and (self.n < 1
                                               or self.n != int(self.n)):
            raise UnsupportedParameterError("n must be a positive integer")
        if self.family in ("F_ca", "f_cn") and not 0.0 <= self.c <= 2.0:
            raise UnsupportedParameterError("c must lie in [0, 2]")


def k_c_eval(c, z):
    """Generalized Koebe function k_c at a disk point (log form below
    c = 1e-8)."""
    z = require_disk_point(z, r_max=1.0)
    return complex(koebe_phi(float(c), z))


def family_phi(params):
    """PrevertexSpec of the family (phi = z or k_c)."""
    f = params.family
    if f == "F_a":
        return PrevertexSpec.identity()
    c = {"F_0a": 0.0, "F_1a": 1.0, "f_0n": 0.0, "f_1n": 1.0, "f_2n": 2.0}
    return PrevertexSpec.koebe(c.get(f, params.c))


def family_omega(params):
    """DilatationSpec of the family (Mobius-type or z^n)."""
    if params.family in _MOBIUS_FAMILIES:
        return DilatationSpec.mobius(params.a)
    return DilatationSpec.power(params.n)


def hprime(params, z):
    """Closed-form h'(z) = phi'(z)/(1 - omega(z)) of the family."""
    z = complex(z)
    phi = family_phi(params)
    omega = family_omega(params)
    return complex(phi.derivative(z)) / (1.0 - complex(omega(z)))


def gprime(params, z):
    """Closed-form g'(z) = omega(z) * h'(z) of the family."""
    z = complex(z)
    return complex(family_omega(params)(z)) * hprime(params, z)


def _sample_from_analytic_sum(z, p_val, phi_val, fallback=False):
    # h + g = P and h - g = phi pin both analytic parts.
    h = 0.5 * (p_val + phi_val)
    g = 0.5 * (p_val - phi_val)
    return MapSample.from_hg(z, h, g, fallback=fallback)


def eval_F_a(a, z):
    """Shear of the identity map, Example-style closed form."""
    params = FamilyParams(family="F_a", a=a)
    z = require_disk_point(z, r_max=1.0)
    p = (-z + (1.0 - a) * cmath.log(1.0 + z)
         - (1.0 + a) * cmath.log(1.0 - z))
    return _sample_from_analytic_sum(z, p, z)


def eval_F_0a(a, z):
    """Shear of the strip map k_0; image lies in |v| < pi/4."""
    FamilyParams(family="F_0a", a=a)
    z = require_disk_point(z, r_max=1.0)
    p = (0.5 * (1.0 + a) * z / (1.0 - z) + 0.5 * (1.0 - a) * z / (1.0 + z))
    return _sample_from_analytic_sum(z, p, k_c_eval(0.0, z))


def eval_F_1a(a, z):
    """Shear of the half-plane map k_1."""
    FamilyParams(family="F_1a", a=a)
    z = require_disk_point(z, r_max=1.0)
    p = (0.25 * (1.0 - a) * cmath.log((1.0 + z) / (1.0 - z))
         + 0.5 * (1.0 + a) * z / (1.0 - z) ** 2)
    return _sample_from_analytic_sum(z, p, k_c_eval(1.0, z))


def eval_F_ca(c, a, z):
    """Shear of k_c by the Mobius-type dilatation, via the w-plane form.

    The closed form assumes c in (0,2] away from 1; c = 0 and c = 1 are
    exactly the F_0a and F_1a families, and the punctured 1e-3
    neighborhoods delegate to the quadrature oracle (flagged).
    """
    params = FamilyParams(family="F_ca", c=c, a=a)
    c = float(c)
    a = float(a)
    if c == 0.0:
        return eval_F_0a(a, z)
    if c == 1.0:
        return eval_F_1a(a, z)
    if c <= PARAM_EPS or abs(c - 1.0) <= PARAM_EPS:
        return _oracle_sample(params, z)
    z = require_disk_point(z, r_max=1.0)
    w = (1.0 + z) / (1.0 - z)
    wc = cmath.exp(c * cmath.log(w))
    h = 0.125 * ((a + 1.0) / (c + 1.0) * wc * w + 2.0 / c * wc
                 - (a - 1.0) / (c - 1.0) * wc / w
                 - 2.0 * (1.0 + a * c - 2.0 * c * c) / (c * (1.0 - c * c)))
    g = h - k_c_eval(c, z)
    return MapSample.from_hg(z, h, g)


def _oracle_sample(params, z, cfg=DEFAULT_QUADRATURE):
    sample = shear_at(family_phi(params), family_omega(params), z, cfg)
    return MapSample.from_hg(sample.z, sample.h, sample.g, fallback=True)


# --- omega = z^n families -------------------------------------------------

def _pole_angles(n):
    """Simple-pole angle indices k with theta_k = 2*k*pi/n: the odd case
    pairs all non-real n-th roots of unity, the even case additionally
    drops z = -1 (k = n/2), which is handled by a dedicated term or is
    removable."""
    if n % 2 == 1:
        return range(1, (n - 1) // 2 + 1)
    return range(1, n // 2)


def eval_f0n(n, z):
    """Strip family: shear of k_0 by z^n."""
    FamilyParams(family="f_0n", n=n)
    z = require_disk_point(z, r_max=1.0)
    n = int(n)
    if n % 2 == 1:
        p = z / (1.0 - z)
    else:
        p = 2.0 * z / (1.0 - z * z)
    for k in _pole_angles(n):
        t = 2.0 * math.pi * k / n
        p -= (1j / math.sin(t)) * cmath.log(
            (1.0 - z * cmath.exp(-1j * t)) / (1.0 - z * cmath.exp(1j * t)))
    p /= n
    return _sample_from_analytic_sum(z, p, k_c_eval(0.0, z))


def _h_f1n(n, z):
    h = ((n - 1.0) / (2.0 * n) * z / (1.0 - z)
         + z * (2.0 - z) / (2.0 * n * (1.0 - z) ** 2)
         - (n * n - 1.0) / (12.0 * n) * cmath.log(1.0 - z))
    if n % 2 == 0:
        h += cmath.log(1.0 + z) / (4.0 * n)
    for k in _pole_angles(n):
        t = math.pi * k / n
        h += (cmath.log(1.0 - 2.0 * z * math.cos(2.0 * t) + z * z)
              / (4.0 * n * math.sin(t) ** 2))
    return h


def eval_f1n(n, z):
    """Wave-plane family: shear of k_1 by z^n."""
    FamilyParams(family="f_1n", n=n)
    z = require_disk_point(z, r_max=1.0)
    n = int(n)
    h = _h_f1n(n, z)
    return MapSample.from_hg(z, h, h - k_c_eval(1.0, z))


def _h_f2n(n, z):
    h = ((n - 1.0) * (n - 2.0) / (6.0 * n) * z / (1.0 - z)
         + (n - 2.0) / (2.0 * n) * z * (2.0 - z) / (1.0 - z) ** 2
         + 2.0 * z * (z * z - 3.0 * z + 3.0) / (3.0 * n * (1.0 - z) ** 3))
    for k in _pole_angles(n):
        t = math.pi * k / n
        h += (1j / (4.0 * n) * math.cos(t) / math.sin(t) ** 3
              * cmath.log((1.0 - z * cmath.exp(-2j * t))
                          / (1.0 - z * cmath.exp(2j * t))))
    return h


def eval_f2n(n, z):
    """Slit family: shear of k_2 by z^n (n = 1 is the harmonic Koebe
    function)."""
    FamilyParams(family="f_2n", n=n)
    z = require_disk_point(z, r_max=1.0)
    n = int(n)
    h = _h_f2n(n, z)
    return MapSample.from_hg(z, h, h - k_c_eval(2.0, z))


# --- partial fraction coefficients of h' ----------------------------------

@dataclass(frozen=True)
class PartialFractionCoeffs:
    """Partial-fraction data of h' for the f_1n / f_2n families.

    ``scalars`` holds the exact rational coefficients of the poles at
    z = 1 (and z = -1 where present); ``pole_coeffs`` holds the complex
    conjugate pairs at the remaining n-th roots of unity, keyed by the
    angle index k (theta_k = 2*k*pi/n).
    """

    family: str
    n: int
    scalars: tuple  # ((name, Fraction), ...)
    pole_coeffs: tuple  # ((k, coeff_at_exp(-i theta), conjugate), ...)

    def scalar(self, name):
        return dict(self.scalars)[name]

    def target(self, z):
        """The rational function the decomposition must reproduce."""
        z = complex(z)
        if self.family == "f_1n":
            return 1.0 / ((1.0 - z) ** 2 * (1.0 - z ** self.n))
        return (1.0 + z) / ((1.0 - z) ** 3 * (1.0 - z ** self.n))

    def reconstruct(self, z):
        """Evaluate the partial-fraction sum at z."""
        z = complex(z)
        names = dict(self.scalars)
        total = 0j
        for name, p in (("kappa1", 1), ("kappa2", 2), ("kappa3", 3),
                        ("lambda1", 1), ("lambda2", 2), ("lambda3", 3)):
            if name in names:
                total += float(names[name]) / (1.0 - z) ** p
        if "lambda4" in names:
            if self.family == "f_1n":
                total += float(names["lambda4"]) / (1.0 + z)
            else:
                total += float(names["lambda4"]) / (1.0 - z) ** 4
        for k, alpha, beta in self.pole_coeffs:
            t = 2.0 * math.pi * k / self.n
            total += alpha / (1.0 - z * cmath.exp(-1j * t))
            total += beta / (1.0 - z * cmath.exp(1j * t))
        return total


def coeffs_f1n(n):
    """Residue coefficients of h'_{1,n} = 1/((1-z)^2 (1-z^n))."""
    FamilyParams(family="f_1n", n=n)
    n = int(n)
    base = (("1", Fraction(n * n - 1, 12 * n)),
            ("2", Fraction(n - 1, 2 * n)),
            ("3", Fraction(1, n)))
    if n % 2 == 1:
        scalars = tuple((f"kappa{i}", v) for (i, v) in base)
    else:
        scalars = tuple((f"lambda{i}", v) for (i, v) in base)
        scalars += (("lambda4", Fraction(1, 4 * n)),)
    poles = []
    for k in _pole_angles(n):
        e = cmath.exp(2j * math.pi * k / n)
        alpha = 1.0 / (n * (1.0 - e) ** 2)
        poles.append((k, alpha, alpha.conjugate()))
    return PartialFractionCoeffs(family="f_1n", n=n, scalars=scalars,
                                 pole_coeffs=tuple(poles))


def coeffs_f2n(n):
    """Residue coefficients of h'_{2,n} = (1+z)/((1-z)^3 (1-z^n))."""
    FamilyParams(family="f_2n", n=n)
    n = int(n)
    scalars = (("lambda1", Fraction(0)),
               ("lambda2", Fraction((n - 1) * (n - 2), 6 * n)),
               ("lambda3", Fraction(n - 2, n)),
               ("lambda4", Fraction(2, n)))
    poles = []
    for k in _pole_angles(n):
        e = cmath.exp(2j * math.pi * k / n)
        a_k = (1.0 + e) / (n * (1.0 - e) ** 3)
        poles.append((k, a_k, a_k.conjugate()))
    return PartialFractionCoeffs(family="f_2n", n=n, scalars=scalars,
                                 pole_coeffs=tuple(poles))


# --- f_cn via Appell F1 -----------------------------------------------------

@dataclass(frozen=True)
class F1Constants:
    """Integration constant of h_{c,n}: the bracketed closed form
    evaluated at z = 0, subtracted so that h_{c,n}(0) = 0."""

    c: float
    n: int
    value: complex


def _fcn_bracket(c, n, z):
    """The bracket multiplied by ((1+z)/(1-z))^c in the h_{c,n} displays,
    before the integration constant is removed."""
    p = F1Params(alpha=1.0 - c, beta1=-c, beta2=1.0, gamma=2.0 - c)
    x = 0.5 * (1.0 - z)
    total = 0.25 / c + (1.0 + z) / (4.0 * n * (1.0 + c) * (1.0 - z))
    if n % 2 == 0:
        total -= (1.0 - z) / (4.0 * n * (1.0 - c) * (1.0 + z))
    pref = (2.0 ** c * (1.0 - z)
            / (n * (1.0 - c) * cmath.exp(c * cmath.log(1.0 + z))))
    for k in _pole_angles(n):
        e = cmath.exp(2j * math.pi * k / n)
        f1_plus = appell_f1(p, x, (1.0 - z) / (1.0 - e))
        f1_minus = appell_f1(p, x, (1.0 - z) / (1.0 - e.conjugate()))
        total += pref * (e * f1_plus / ((1.0 - e) * (1.0 - e * e))
                         - f1_minus
                         / ((1.0 - e) * (1.0 - (e * e).conjugate())))
    return total


@lru_cache(maxsize=None)
def fcn_constants(c, n):
    """Integration constant making h_{c,n}(0) = 0 (cached)."""
    return F1Constants(c=c, n=n, value=_fcn_bracket(c, n, 0j))


def eval_fcn(c, n, z, allow_fallback=True):
    """General family: shear of k_c by z^n, via the F1 closed form.

    c = 0, 1, 2 delegate to the dedicated f_0n / f_1n / f_2n forms (the
    F1 parameters degenerate there); punctured 1e-3 neighborhoods of
    0 and 1, and points where F1 leaves its supported domain, fall back
    to the quadrature oracle with the sample flagged.
    """
    params = FamilyParams(family="f_cn", c=c, n=n)
    c = float(c)
    n = int(n)
    if c == 0.0:
        return eval_f0n(n, z)
    if c == 1.0:
        return eval_f1n(n, z)
    if c == 2.0:
        return eval_f2n(n, z)
    if c <= PARAM_EPS or abs(c - 1.0) <= PARAM_EPS:
        if not allow_fallback:
            raise UnsupportedParameterError(
                f"c={c} is inside the excluded neighborhoods of 0 and 1")
        return _oracle_sample(params, z)
    z = require_disk_point(z, r_max=1.0)
    try:
        bracket = _fcn_bracket(c, n, z)
        constant = fcn_constants(c, n).value
    except (UnsupportedDomainError, DomainError, ConvergenceError) as exc:
        # ConvergenceError: the F1 series stalls when an argument sits
        # just inside the unit circle and the Euler integral is closed
        # off (alpha = 1-c < 0); treat it like an unsupported domain
        if not allow_fallback:
            raise UnsupportedDomainError(
                f"F1 closed form unavailable at z={z}: {exc}") from exc
        return _oracle_sample(params, z)
    wc = cmath.exp(c * cmath.log((1.0 + z) / (1.0 - z)))
    h = wc * bracket - constant
    return MapSample.from_hg(z, h, h - k_c_eval(c, z))


def evaluate(params, z, cfg=DEFAULT_SERIES):
    """Dispatch a FamilyParams to its closed-form evaluator."""
    f = params.family
    if f == "F_a":
        return eval_F_a(params.a, z)
    if f == "F_0a":
        return eval_F_0a(params.a, z)
    if f == "F_1a":
        return eval_F_1a(params.a, z)
    if f == "F_ca":
        return eval_F_ca(params.c, params.a, z)
    if f == "f_0n":
        return eval_f0n(params.n, z)
    if f == "f_1n":
        return eval_f1n(params.n, z)
    if f == "f_2n":
        return eval_f2n(params.n, z)
    return eval_fcn(params.c, params.n, z)
