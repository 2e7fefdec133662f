"""Pochhammer symbols, Gauss 2F1 and the two-variable Appell F1.

F1 carries two independent representations:

* a double power series summed along anti-diagonals (|x| < 1, |y| < 1, or
  terminating parameter cases), and
* a one-dimensional Euler-type integral (Re gamma > Re alpha > 0),

plus a dispatcher that picks whichever applies and refuses to extrapolate
outside both domains.
"""

import math
from dataclasses import dataclass

import numpy as np

from ._kernels import fallback
from .analytic import QuadratureConfig, DEFAULT_QUADRATURE
from .errors import ConvergenceError, DomainError, UnsupportedDomainError


@dataclass(frozen=True)
class F1Params:
    alpha: float
    beta1: float
    beta2: float
    gamma: float

    def __post_init__(self):
        if _is_nonpositive_int(self.gamma):
            raise ValueError("gamma must not be a non-positive integer")


@dataclass(frozen=True)
class SeriesConfig:
    term_tol: float = 1e-15
    max_order: int = 4000

    def __post_init__(self):
        if self.term_tol <= 0:
            raise ValueError("term_tol must be positive")
        if self.max_order < 1:
            raise ValueError("max_order must be >= 1")


DEFAULT_SERIES = SeriesConfig()

# Series is preferred inside this radius; beyond it the terms decay too
# slowly for the anti-diagonal tail bound to be trusted.
SERIES_RADIUS = 0.95


def _is_nonpositive_int(q):
    q = float(q)
    return q <= 0 and q == round(q)


def pochhammer(q, k):
    """Rising factorial (q)_k = q (q+1) ... (q+k-1), with (q)_0 = 1."""
    if k < 0 or k != int(k):
        raise ValueError("k must be a non-negative integer")
    acc = 1.0 if not isinstance(q, complex) else 1.0 + 0j
    for j in range(int(k)):
        acc *= q + j
    return acc


def gauss_2f1(a, b, c, x, cfg=DEFAULT_SERIES):
    """Gauss hypergeometric series for |x| < 1."""
    x = complex(x)
    if _is_nonpositive_int(c):
        raise DomainError("2F1 undefined for non-positive integer c")
    terminating = _is_nonpositive_int(a) or _is_nonpositive_int(b)
    if abs(x) >= 1.0 and not terminating:
        raise DomainError("2F1 series requires |x| < 1")
    term = 1.0 + 0j
    total = term
    small = 0
    for k in range(cfg.max_order):
        term *= (a + k) * (b + k) / ((c + k) * (k + 1.0)) * x
        total += term
        if term == 0:
            return total
        if abs(term) < cfg.term_tol * (1.0 + abs(total)):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError("2F1 series did not converge within max_order")


def _series_applicable(p, x, y):
    if _is_nonpositive_int(p.alpha):
        return True
    ok_x = abs(x) < 1.0 or _is_nonpositive_int(p.beta1)
    ok_y = abs(y) < 1.0 or _is_nonpositive_int(p.beta2)
    return ok_x and ok_y


def appell_f1_series(p, x, y, cfg=DEFAULT_SERIES):
    """Double series for F1, summed along anti-diagonals k + l = m.

    Stops when three consecutive anti-diagonal sums fall below term_tol.
    Terminating parameter cases (alpha or a beta a non-positive integer)
    truncate exactly and are valid outside the unit bi-disk.
    """
    x = complex(x)
    y = complex(y)
    if not _series_applicable(p, x, y):
        raise DomainError(
            "F1 series requires |x| < 1 and |y| < 1 for non-terminating "
            "parameters")

    # b1x[k] = (beta1)_k x^k / k!, extended one entry per anti-diagonal.
    b1x = [1.0 + 0j]
    b2y = [1.0 + 0j]
    ratio_ag = 1.0 + 0j  # (alpha)_m / (gamma)_m
    total = 1.0 + 0j
    small = 0
    for m in range(1, cfg.max_order + 1):
        b1x.append(b1x[-1] * (p.beta1 + m - 1) * x / m)
        b2y.append(b2y[-1] * (p.beta2 + m - 1) * y / m)
        ratio_ag *= (p.alpha + m - 1) / (p.gamma + m - 1)
        if ratio_ag == 0:
            return total  # alpha terminated the series
        diag = 0j
        for k in range(m + 1):
            diag += b1x[k] * b2y[m - k]
        term = ratio_ag * diag
        total += term
        if abs(term) < cfg.term_tol * (1.0 + abs(total)):
            small += 1
            if small >= 3:
                return total
        else:
            small = 0
    raise ConvergenceError("F1 series did not converge within max_order")


def _integral_applicable(p, x, y):
    if not (p.gamma > p.alpha > 0):
        return False
    for w in (x, y):
        if w.imag == 0 and w.real >= 1.0:
            return False
    return True


def appell_f1_integral(p, x, y, cfg=DEFAULT_QUADRATURE):
    """Euler-type integral for F1:

        Gamma(g)/(Gamma(a) Gamma(g-a)) *
        int_0^1 t^(a-1) (1-t)^(g-a-1) (1-x t)^(-b1) (1-y t)^(-b2) dt

    valid for gamma > alpha > 0.  Endpoint singularities with exponent
    below 1 are removed by the power substitutions t = (s^(1/a))/2 and
    1 - t = (s^(1/(g-a)))/2 on the two halves.
    """
    x = complex(x)
    y = complex(y)
    if not (p.gamma > p.alpha > 0):
        raise DomainError("Euler integral requires gamma > alpha > 0")
    if not _integral_applicable(p, x, y):
        raise DomainError("1 - x*t or 1 - y*t vanishes on [0, 1]")

    a, d = p.alpha, p.gamma - p.alpha

    def regular(t):
        return (np.power(1.0 - x * t, -p.beta1)
                * np.power(1.0 - y * t, -p.beta2))

    def half_integral(exponent, smooth):
        # int_0^(1/2) t^exponent * smooth(t) dt with t = (s^m)/2.  The
        # integer m is picked so the transformed power m*(exponent+1)-1
        # is at least 1, keeping the integrand C^1 at s = 0 even when
        # the original exponent is fractional.
        m = max(1, math.ceil(2.0 / (exponent + 1.0)))
        scale = 0.5 ** (exponent + 1.0) * m
        q = m * (exponent + 1.0) - 1.0

        def transformed(s):
            t = 0.5 * np.power(s, m)
            return scale * np.power(s, q) * smooth(t)

        return fallback.adaptive_segment(transformed, 0.0, 1.0, cfg.abs_tol,
                                         cfg.rel_tol, cfg.max_subdivisions)

    il = half_integral(a - 1.0,
                       lambda t: np.power(1.0 - t, d - 1.0) * regular(t))
    ir = half_integral(d - 1.0,
                       lambda u: np.power(1.0 - u, a - 1.0)
                       * regular(1.0 - u))
    pref = math.gamma(p.gamma) / (math.gamma(a) * math.gamma(d))
    return pref * (il + ir)


def appell_f1(p, x, y, series_cfg=DEFAULT_SERIES, quad_cfg=DEFAULT_QUADRATURE):
    """Evaluate F1 by whichever representation covers (x, y).

    Terminating and contractive (|x|, |y| < 0.95) cases use the series;
    otherwise the Euler integral.  Raises UnsupportedDomainError when
    neither applies -- never extrapolates.
    """
    x = complex(x)
    y = complex(y)
    if _is_nonpositive_int(p.alpha) or (
            _is_nonpositive_int(p.beta1) and _is_nonpositive_int(p.beta2)):
        return appell_f1_series(p, x, y, series_cfg)
    if max(abs(x), abs(y)) < SERIES_RADIUS and _series_applicable(p, x, y):
        return appell_f1_series(p, x, y, series_cfg)
    if _integral_applicable(p, x, y):
        return appell_f1_integral(p, x, y, quad_cfg)
    if _series_applicable(p, x, y):
        return appell_f1_series(p, x, y, series_cfg)
    raise UnsupportedDomainError(
        f"F1{(p.alpha, p.beta1, p.beta2, p.gamma)} at ({x}, {y}) is outside "
        "both the series and the Euler-integral domains")
