"""Fourth-moment integral, the moment polynomials, and the error term.

The fourth moment of |zeta| on [0, T] is written T*P4(log T) + E2(T)
with P4 of degree 4 and leading coefficient 1/(2 pi^2).  The lower
coefficients are not fixed here: they are either supplied from a file of
published values or produced by a constrained least-squares fit.
"""

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.interpolate import CubicSpline

from .errors import CoverageError, IllConditionedError
from .grid import ZetaGrid
from .quad import cumulative_cells, prefix_lookup

A4 = 1.0 / (2.0 * math.pi ** 2)

# Condition limit for the (column-normalized) normal equations of fit_p4.
COND_LIMIT = 1e12


@dataclass(frozen=True)
class MomentPolynomial:
    """Coefficients a0..a4 of P4 in powers of log T; a4 = 1/(2 pi^2)."""

    a: tuple

    def __post_init__(self):
        if len(self.a) != 5:
            raise ValueError("P4 has exactly five coefficients")
        if self.a[4] != A4:
            raise ValueError("a4 must be 1/(2 pi^2) exactly as represented")

    @classmethod
    def leading_only(cls):
        return cls((0.0, 0.0, 0.0, 0.0, A4))


def p4_eval(poly, x):
    """P4(x) by Horner."""
    acc = 0.0
    for c in reversed(poly.a):
        acc = acc * x + c
    return acc


def q4_eval(poly, x):
    """Q4(x) = P4(x) + P4'(x)."""
    a = poly.a
    b = [a[j] + (j + 1) * a[j + 1] for j in range(4)] + [a[4]]
    acc = 0.0
    for c in reversed(b):
        acc = acc * x + c
    return acc


def fourth_moment(grid, T):
    """integral_0^T |zeta(1/2+it)|^4 dt by the additive Simpson prefix."""
    if T < 0:
        raise CoverageError("T must be >= 0")
    if T == 0:
        return 0.0
    return grid.integral_abs4(0.0, T)


def fit_p4(grid, t_lo, t_hi, n_points=400):
    """Constrained least-squares fit of fourth_moment(T) ~ T * P4(log T).

    a4 is pinned to 1/(2 pi^2); the remaining four coefficients are the
    unconstrained minimizers.  Raises IllConditionedError when the
    condition number of the column-normalized normal equations exceeds
    COND_LIMIT.
    """
    grid.require_cover(t_lo, t_hi)
    if t_lo <= 1.0:
        raise ValueError("fit range must start above T = 1")
    i_lo = int(math.ceil((t_lo - grid.t_min) / grid.step - 1e-9))
    i_hi = int(math.floor((t_hi - grid.t_min) / grid.step + 1e-9))
    if i_hi - i_lo + 1 < 100:
        raise ValueError("fit range must contain at least 100 grid samples")
    idx = np.unique(np.linspace(i_lo, i_hi, n_points).astype(int))
    T = grid.t[idx]
    prefix = grid.prefix()
    y = prefix[idx]
    L = np.log(T)
    cols = [T, T * L, T * L ** 2, T * L ** 3]
    A = np.column_stack(cols)
    rhs = y - A4 * T * L ** 4
    scale = np.linalg.norm(A, axis=0)
    An = A / scale
    cond = np.linalg.cond(An.T @ An)
    if cond > COND_LIMIT:
        raise IllConditionedError(
            f"normal equations condition {cond:.3e} exceeds {COND_LIMIT:.0e}")
    coef, *_ = np.linalg.lstsq(An, rhs, rcond=None)
    coef = coef / scale
    return MomentPolynomial((coef[0], coef[1], coef[2], coef[3], A4))


def e2(grid, poly, T):
    """E2(T) = fourth_moment(T) - T * P4(log T); E2(0) := 0."""
    if T == 0:
        return 0.0
    return fourth_moment(grid, T) - T * p4_eval(poly, math.log(T))


@dataclass
class ErrorTermSeries:
    """Sampled E2 over increasing heights, with its generating polynomial.

    When built from a grid, the series also carries an exact C^1
    evaluator (the spline antiderivative of |zeta|^4 minus T*P4(log T)),
    whose derivative is exactly |zeta|^4_spline - Q4(log x).  The dual
    Mellin-transform identity for K(s) is then a pure quadrature check.
    """

    T_values: np.ndarray
    e2_values: np.ndarray
    poly: MomentPolynomial
    _grid: ZetaGrid = field(default=None, repr=False)
    _interp: object = field(default=None, repr=False)

    def __post_init__(self):
        self.T_values = np.asarray(self.T_values, dtype=float)
        self.e2_values = np.asarray(self.e2_values, dtype=float)
        if self.T_values.size != self.e2_values.size:
            raise ValueError("length mismatch")
        if np.any(np.diff(self.T_values) <= 0):
            raise ValueError("T_values must be strictly increasing")

    @classmethod
    def from_grid(cls, grid, poly, t_lo=1.0, t_hi=None):
        t_hi = grid.t_max if t_hi is None else t_hi
        grid.require_cover(t_lo, t_hi)
        i_lo = int(math.ceil((t_lo - grid.t_min) / grid.step - 1e-9))
        i_hi = int(math.floor((t_hi - grid.t_min) / grid.step + 1e-9))
        T = grid.t[i_lo:i_hi + 1]
        prefix = grid.prefix()[i_lo:i_hi + 1]
        offset = fourth_moment(grid, float(T[0]))
        vals = offset + (prefix - prefix[0]) \
            - T * np.array([p4_eval(poly, v) for v in np.log(T)])
        return cls(T, vals, poly, _grid=grid)

    @property
    def t_lo(self):
        return float(self.T_values[0])

    @property
    def t_hi(self):
        return float(self.T_values[-1])

    def require_cover(self, lo, hi):
        if lo < self.t_lo - 1e-9 or hi > self.t_hi + 1e-9:
            raise CoverageError(
                f"series [{self.t_lo}, {self.t_hi}] does not cover "
                f"[{lo}, {hi}]")

    def has_exact(self):
        return self._grid is not None

    def exact(self, x):
        """E2 as the exact antiderivative of |zeta|^4_spline - Q4(log x)."""
        g = self._grid
        anti = g.spline().antiderivative()
        x = np.asarray(x, dtype=float)
        base = fourth_moment(g, 1.0)
        return base + (anti(x) - anti(1.0)) \
            - x * p4_eval_vec(self.poly, np.log(x))

    def exact_deriv(self, x):
        """d/dx of exact(): |zeta|^4_spline(x) - Q4(log x), exactly."""
        g = self._grid
        x = np.asarray(x, dtype=float)
        return g.spline()(x) - q4_eval_vec(self.poly, np.log(x))

    def at(self, x):
        """E2 at arbitrary heights: exact evaluator or sample spline."""
        if self.has_exact():
            return self.exact(x)
        if self._interp is None:
            self._interp = CubicSpline(self.T_values, self.e2_values)
        return self._interp(x)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            f.write("# p4_coeffs: " + ",".join(
                format(c, ".17g") for c in self.poly.a) + "\n")
            f.write("T,e2\n")
            for T, v in zip(self.T_values, self.e2_values):
                f.write("%.17g,%.17g\n" % (T, v))

    @classmethod
    def load(cls, path):
        with open(path, encoding="utf-8") as f:
            first = f.readline()
            if not first.startswith("# p4_coeffs:"):
                raise CoverageError(f"{path!r}: missing polynomial header")
            a = tuple(float(v) for v in first.split(":", 1)[1].split(","))
            header = f.readline().strip()
            if header != "T,e2":
                raise CoverageError(f"{path!r}: bad header {header!r}")
            data = np.loadtxt(f, delimiter=",", ndmin=2)
        return cls(data[:, 0], data[:, 1], MomentPolynomial(a))


def p4_eval_vec(poly, x):
    acc = np.zeros_like(np.asarray(x, dtype=float))
    for c in reversed(poly.a):
        acc = acc * x + c
    return acc


def q4_eval_vec(poly, x):
    a = poly.a
    b = [a[j] + (j + 1) * a[j + 1] for j in range(4)] + [a[4]]
    acc = np.zeros_like(np.asarray(x, dtype=float))
    for c in reversed(b):
        acc = acc * x + c
    return acc


def _series_power_integral(series, T, power):
    series.require_cover(series.t_lo, T)
    h = series.T_values[1] - series.T_values[0]
    if not np.allclose(np.diff(series.T_values), h, rtol=1e-9):
        # nonuniform series: trapezoid prefix
        y = series.e2_values ** power
        prefix = np.concatenate(
            [[0.0], np.cumsum(0.5 * (y[1:] + y[:-1])
                              * np.diff(series.T_values))])
        i = np.searchsorted(series.T_values, T, side="right") - 1
        i = min(max(i, 0), prefix.size - 1)
        out = prefix[i]
        if i + 1 < prefix.size and T > series.T_values[i]:
            frac = (T - series.T_values[i]) / (
                series.T_values[i + 1] - series.T_values[i])
            out += frac * (prefix[i + 1] - prefix[i])
        return float(out)
    prefix = cumulative_cells(series.e2_values ** power, h)
    return prefix_lookup(prefix, series.T_values[0], h, T)


def e2_mean_square(series, T):
    """integral_1^T E2^2(t) dt over the series' sample grid."""
    return _series_power_integral(series, T, 2)


def e2_fourth_moment(series, T):
    """integral of E2^4 over [series start, T]."""
    return _series_power_integral(series, T, 4)
