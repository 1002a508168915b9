"""Uniform grids of |zeta(1/2+ix)|^4 with certified per-sample errors."""

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.interpolate import CubicSpline

from . import zeta
from .errors import BudgetError, CoverageError
from .quad import cumulative_cells, prefix_lookup

CSV_HEADER = "t,re_z,im_z,z_abs4,err"
_CHUNK = 2048  # fixed evaluation chunk; independent of thread count


@dataclass(frozen=True)
class CriticalSample:
    """One sample of zeta on the critical line."""

    t: float
    z: complex
    z_abs4: float
    err: float


class ZetaGrid:
    """Immutable uniform grid of critical-line samples.

    t[i] = t_min + i*step exactly; every err <= err_budget.  Interpolation
    and prefix-integral machinery is built lazily and cached.
    """

    def __init__(self, t_min, t_max, step, err_budget, z, err):
        n = z.size
        self.t_min = float(t_min)
        self.t_max = float(t_max)
        self.step = float(step)
        self.err_budget = float(err_budget)
        self.t = self.t_min + np.arange(n) * self.step
        self.z = np.asarray(z, dtype=complex)
        self.err = np.asarray(err, dtype=float)
        if np.any(self.err > self.err_budget):
            bad = self.t[np.argmax(self.err)]
            raise BudgetError(
                f"cannot certify err <= {err_budget} at t = {bad}")
        a2 = self.z.real ** 2 + self.z.imag ** 2
        self.z_abs4 = a2 * a2
        self._spline = None
        self._anti = None
        self._prefix = None

    def __len__(self):
        return self.t.size

    def __getitem__(self, i):
        return CriticalSample(float(self.t[i]), complex(self.z[i]),
                              float(self.z_abs4[i]), float(self.err[i]))

    @property
    def samples(self):
        return [self[i] for i in range(len(self))]

    def require_cover(self, lo, hi):
        if lo < self.t_min - 1e-9 or hi > self.t_max + 1e-9:
            raise CoverageError(
                f"grid [{self.t_min}, {self.t_max}] does not cover "
                f"[{lo}, {hi}]")

    def spline(self):
        """Cubic spline of |zeta|^4 over the grid (cached)."""
        if self._spline is None:
            self._spline = CubicSpline(self.t, self.z_abs4)
        return self._spline

    def abs4(self, x):
        """|zeta(1/2+ix)|^4 at arbitrary x, reflecting negative heights."""
        return self.spline()(np.abs(x))

    def prefix(self):
        """Additive cumulative Simpson prefix of |zeta|^4 (cached)."""
        if self._prefix is None:
            self._prefix = cumulative_cells(self.z_abs4, self.step)
        return self._prefix

    def integral_abs4(self, lo, hi):
        """integral of |zeta|^4 over [lo, hi] subseteq coverage; additive."""
        self.require_cover(lo, hi)
        if self._anti is None:
            self._anti = self.spline().antiderivative()
        tail = lambda xg, x: self._anti(x) - self._anti(xg)
        p_hi = prefix_lookup(self.prefix(), self.t_min, self.step, hi,
                             tail=tail)
        p_lo = prefix_lookup(self.prefix(), self.t_min, self.step, lo,
                             tail=tail)
        return p_hi - p_lo

    # -- persistence ----------------------------------------------------

    def cache_name(self):
        return grid_cache_name(self.t_min, self.t_max, self.step)

    def save(self, path):
        with open(path, "w", encoding="utf-8") as f:
            f.write(CSV_HEADER + "\n")
            for i in range(len(self)):
                f.write("%.17g,%.17g,%.17g,%.17g,%.17g\n" % (
                    self.t[i], self.z[i].real, self.z[i].imag,
                    self.z_abs4[i], self.err[i]))

    @classmethod
    def load(cls, path, err_budget=None):
        with open(path, encoding="utf-8") as f:
            header = f.readline().strip()
            if header != CSV_HEADER:
                raise CoverageError(
                    f"corrupt grid file {path!r}: bad header {header!r}")
            data = np.loadtxt(f, delimiter=",", ndmin=2)
        t = data[:, 0]
        step = t[1] - t[0] if t.size > 1 else 1.0
        budget = err_budget if err_budget is not None \
            else float(np.max(data[:, 4])) + 1e-30
        return cls(t[0], t[-1], step, budget,
                   data[:, 1] + 1j * data[:, 2], data[:, 4])


def grid_cache_name(t_min, t_max, step):
    return "grid_%s_%s_%s.csv" % (
        format(t_min, ".12g"), format(t_max, ".12g"), format(step, ".12g"))


def build_grid(t_min, t_max, step, err_budget, threads=1):
    """Evaluate zeta over the uniform grid; deterministic for any threads."""
    if not (0 <= t_min < t_max) or step <= 0 or err_budget <= 0:
        raise ValueError("require 0 <= t_min < t_max, step > 0, budget > 0")
    n = int(math.floor((t_max - t_min) / step + 1e-9)) + 1
    t = t_min + np.arange(n) * step
    err = zeta.zeta_half_err(t)
    if np.any(err > err_budget):
        bad = t[np.argmax(err)]
        raise BudgetError(f"cannot certify err <= {err_budget} at t = {bad}")
    chunks = [t[i:i + _CHUNK] for i in range(0, n, _CHUNK)]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(zeta.zeta_half_vec, chunks))
    else:
        parts = [zeta.zeta_half_vec(c) for c in chunks]
    z = np.concatenate(parts)
    return ZetaGrid(t_min, t[-1], step, err_budget, z, err)
