"""Modified Mellin transforms of fourth-moment quantities.

All transforms here are of the shape integral_1^X f(x) x^{-s} dx (lower
limit 1).  Only truncated values are ever produced; for sigma <= 1 the
tail estimate is labeled non-rigorous since the classical integral
diverges and no analytic continuation is attempted numerically.
"""

import math
from dataclasses import dataclass

import numpy as np

from .errors import CoverageError
from .moments import q4_eval_vec
from .quad import integrate_gl, integrate_mellin


@dataclass(frozen=True)
class MellinPoint:
    """A truncated transform value at s = sigma + it."""

    sigma: float
    t: float
    value: complex
    X: float
    tail_est: float
    tail_rigorous: bool = True


def _tail_estimate(grid, sigma, X):
    """Crude modulus bound for the discarded tail integral_X^inf.

    For sigma > 1: (window average of |zeta|^4 over [X/2, X]) *
    X^(1-sigma)/(sigma-1).  For sigma <= 1 a heuristic scale is returned
    and flagged non-rigorous.
    """
    lo = max(grid.t_min, X / 2.0)
    win = grid.z_abs4[(grid.t >= lo) & (grid.t <= X)]
    avg = float(np.mean(win)) if win.size else 1.0
    if sigma > 1.0:
        return avg * X ** (1.0 - sigma) / (sigma - 1.0), True
    return avg * X ** (1.0 - sigma) * math.log(max(X, 2.0)), False


def _sigma_t(s):
    if isinstance(s, (tuple, list)):
        return float(s[0]), float(s[1])
    s = complex(s)
    return s.real, s.imag


def z2_truncated(grid, s, X):
    """Truncated transform of |zeta(1/2+ix)|^4 on [1, X]."""
    sigma, t = _sigma_t(s)
    if sigma <= 0:
        raise ValueError("require sigma > 0")
    grid.require_cover(1.0, X)
    val = integrate_mellin(grid.abs4, 1.0, X, complex(sigma, t))
    tail, rigorous = _tail_estimate(grid, sigma, X)
    return MellinPoint(sigma, t, val, X, tail, rigorous)


# -- smooth bump window ------------------------------------------------

def smooth_step(v):
    """C-infinity step: 0 for v <= 0, 1 for v >= 1, mollifier-based."""
    v = np.asarray(v, dtype=float)
    with np.errstate(over="ignore", divide="ignore", invalid="ignore"):
        ha = np.where(v > 0, np.exp(-1.0 / np.maximum(v, 1e-300)), 0.0)
        hb = np.where(1 - v > 0,
                      np.exp(-1.0 / np.maximum(1.0 - v, 1e-300)), 0.0)
    out = ha / (ha + hb + 1e-300)
    return np.where(v <= 0, 0.0, np.where(v >= 1, 1.0, out))


@dataclass(frozen=True)
class SmoothBump:
    """Window equal to 1 on [K, 2K'], supported in [K/2, 5K'/2].

    Ramps are mollifier steps; r-th derivatives are O(K^-r) with small
    constants (c1 <= 8 verified by dense sampling in the tests).
    """

    K: float
    K_prime: float

    def __post_init__(self):
        if not (self.K < self.K_prime <= 2.0 * self.K):
            raise ValueError("require K < K' <= 2K")

    @property
    def support(self):
        return (self.K / 2.0, 2.5 * self.K_prime)

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        up = smooth_step((x - self.K / 2.0) / (self.K / 2.0))
        down = smooth_step((2.5 * self.K_prime - x) / (0.5 * self.K_prime))
        return up * down

    def derivative_bound(self, r, n_samples=20001):
        """c_r with max|phi^(r)| <= c_r K^-r, by dense finite differences."""
        lo, hi = self.support
        pad = 0.05 * (hi - lo)
        x = np.linspace(lo - pad, hi + pad, n_samples)
        y = self(x)
        h = x[1] - x[0]
        for _ in range(r):
            y = np.gradient(y, h)
        return float(np.max(np.abs(y)) * self.K ** r)


def make_bump(K, K_prime):
    """Window of the (K, K') family; raises ValueError off the domain."""
    return SmoothBump(float(K), float(K_prime))


def f_k(grid, s, bump):
    """Windowed transform integral phi(x) |zeta|^4 x^{-s} dx."""
    sigma, t = _sigma_t(s)
    lo, hi = bump.support
    grid.require_cover(lo, hi)
    f = lambda x: bump(x) * grid.abs4(x)
    return complex(integrate_mellin(f, lo, hi, complex(sigma, t)))


def window_decay(bump, w, s, r=0):
    """|integral phi(x) x^{w-s-1} dx| computed directly.

    w = (d, v), s = (sigma, t).  The kernel exponent is
    (d - sigma - 1) + i(v - t), i.e. x^{-s'} with s' = (sigma + 1 - d)
    - i(v - t).  Rapid decay in |v - t| is what the caller inspects.
    """
    if r > 4:
        raise ValueError("r <= 4")
    d, v = w
    sigma, t = _sigma_t(s)
    lo, hi = bump.support
    s_eff = complex(sigma + 1.0 - d, t - v)
    return abs(integrate_mellin(bump, lo, hi, s_eff))


# -- K(s), k(s) --------------------------------------------------------
#
# Sign convention (numerically verified; see tests): integration by parts
# of integral_1^X E2'(x) E2(x) x^{-s} dx gives
#   K_X(s) = 1/2 E2^2(X) X^{-s} - 1/2 E2^2(1) + (s/2) k_X(s),
# with k_X(s) = integral_1^X E2^2(x) x^{-s-1} dx.  The s-integral term
# enters with a PLUS sign; the printed minus sign in the source relation
# is a typographical slip, and the k(s) linear relation
# k = (2/s)(K + 1/2 E2^2(1)) is consistent with the plus convention.

def _e2_funcs(series):
    if series.has_exact():
        return series.exact, series.exact_deriv
    return series.at, None


def k_direct(grid, series, poly, s, X):
    """Truncated integral of (|zeta|^4 - Q4(log x)) E2(x) x^{-s}."""
    sigma, t = _sigma_t(s)
    grid.require_cover(1.0, X)
    series.require_cover(1.0, X)
    e2f, e2df = _e2_funcs(series)
    if e2df is not None:
        f = lambda x: e2df(x) * e2f(x)
    else:
        f = lambda x: (grid.abs4(x) - q4_eval_vec(poly, np.log(x))) * e2f(x)
    return complex(integrate_mellin(f, 1.0, X, complex(sigma, t)))


def k_via_e2sq(series, s, X):
    """Integration-by-parts form of K(s), truncated at X.

    Returns (value, boundary_term) where value already includes the
    finite-X boundary term 1/2 E2^2(X) X^{-s}.
    """
    sigma, t = _sigma_t(s)
    series.require_cover(1.0, X)
    sc = complex(sigma, t)
    e2f, _ = _e2_funcs(series)
    integral = integrate_mellin(lambda x: np.asarray(e2f(x)) ** 2,
                                1.0, X, sc + 1.0)
    e2_1 = complex(np.asarray(e2f(np.array([1.0])))[0])
    e2_X = complex(np.asarray(e2f(np.array([X])))[0])
    boundary = 0.5 * e2_X ** 2 * X ** (-sc)
    value = boundary - 0.5 * e2_1 ** 2 + 0.5 * sc * integral
    return complex(value), complex(boundary)


def k_lower(series, s, X):
    """k(s) = integral_1^X E2^2(x) x^{-s-1} dx (truncated)."""
    sigma, t = _sigma_t(s)
    series.require_cover(1.0, X)
    e2f, _ = _e2_funcs(series)
    return complex(integrate_mellin(lambda x: np.asarray(e2f(x)) ** 2,
                                    1.0, X, complex(sigma, t) + 1.0))


# -- Gaussian-smoothed moment -----------------------------------------

GAUSS_CUTOFF = 8.0  # truncation |u| <= 8 t^xi; tail < e^-64 * sup|zeta|^4


def smoothed_moment(grid, t, xi, integrand=None):
    """pi^-1/2 t^-xi integral |zeta(1/2+i(t+u))|^4 exp(-(u/t^xi)^2) du.

    Truncated at |u| <= 8 t^xi; negative heights use Schwarz reflection.
    ``integrand`` overrides |zeta|^4 (used by the normalization check).
    """
    if not (0 < xi <= 1):
        raise ValueError("require 0 < xi <= 1")
    t = float(t)
    w = t ** xi
    f = grid.abs4 if integrand is None else integrand
    if integrand is None:
        grid.require_cover(0.0, t + GAUSS_CUTOFF * w)
    # substitution v = u / t^xi; panels resolve the unit x-scale of f
    panel = min(0.25, 0.5 / w)
    val = integrate_gl(
        lambda v: np.asarray(f(t + v * w), dtype=float) * np.exp(-v * v),
        -GAUSS_CUTOFF, GAUSS_CUTOFF, panel)
    return float(val / math.sqrt(math.pi))


# -- Lemma-style mean square inequality --------------------------------

@dataclass(frozen=True)
class PiecewiseConstant:
    """Right-open piecewise-constant function on [breaks[0], breaks[-1]]."""

    breaks: tuple
    values: tuple

    def __post_init__(self):
        if len(self.breaks) != len(self.values) + 1:
            raise ValueError("need len(breaks) == len(values) + 1")

    def __call__(self, x):
        x = np.asarray(x, dtype=float)
        idx = np.clip(np.searchsorted(self.breaks, x, side="right") - 1,
                      0, len(self.values) - 1)
        return np.asarray(self.values)[idx]

    def transform(self, sigma, t):
        """integral g(x) x^{-sigma-it} dx in closed form."""
        z = 1.0 - sigma - 1j * t
        b = np.asarray(self.breaks, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if abs(z) < 1e-14:
            seg = np.log(b[1:]) - np.log(b[:-1])
        else:
            seg = (b[1:] ** z - b[:-1] ** z) / z
        return complex(np.sum(v * seg))

    def sq_weight_integral(self, sigma):
        """integral g^2(x) x^{1-2 sigma} dx in closed form."""
        w = 2.0 - 2.0 * sigma
        b = np.asarray(self.breaks, dtype=float)
        v = np.asarray(self.values, dtype=float)
        if abs(w) < 1e-14:
            seg = np.log(b[1:]) - np.log(b[:-1])
        else:
            seg = (b[1:] ** w - b[:-1] ** w) / w
        return float(np.sum(v * v * seg))


def lemma1_pair(g, a, b, sigma, T, t_step=0.05):
    """Both sides of the mean-square transform inequality.

    lhs = integral_0^T |integral_a^b g(x) x^{-sigma-it} dx|^2 dt,
    rhs = 2 pi integral_a^b g^2(x) x^{1-2 sigma} dx.
    g may be a PiecewiseConstant (exact inner transform) or a callable.
    """
    if T <= 0:
        raise ValueError("T > 0 required")
    exact = isinstance(g, PiecewiseConstant)

    def inner(t):
        if exact:
            return g.transform(sigma, t)
        return integrate_mellin(g, a, b, complex(sigma, t))

    n = max(4, int(math.ceil(T / t_step)))
    ts = np.linspace(0.0, T, n + 1)
    vals = np.array([abs(inner(t)) ** 2 for t in ts])
    # composite Simpson (n forced even by adding one point if needed)
    if n % 2 == 1:
        ts = np.linspace(0.0, T, n + 2)
        vals = np.array([abs(inner(t)) ** 2 for t in ts])
        n += 1
    h = T / n
    lhs = h / 3.0 * (vals[0] + vals[-1] + 4.0 * np.sum(vals[1:-1:2])
                     + 2.0 * np.sum(vals[2:-1:2]))
    if exact:
        rhs = 2.0 * math.pi * g.sq_weight_integral(sigma)
    else:
        rhs = 2.0 * math.pi * float(np.real(integrate_gl(
            lambda x: np.asarray(g(x)) ** 2 * x ** (1.0 - 2.0 * sigma),
            a, b, 0.1)))
    return float(lhs), float(rhs)
