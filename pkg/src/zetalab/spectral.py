"""Maass-form spectral data ingestion and the explicit-formula sums.

Spectral records (kappa_j, alpha_j H_j^3(1/2)) are external inputs read
from CSV; nothing here computes eigendata from first principles.  A small
bundled sample ships with the package for exercising the pipeline.
"""

import math
from dataclasses import dataclass
from importlib import resources

import numpy as np

from .errors import SpectralParseError
from .mellin import smooth_step, _sigma_t
from .quad import integrate_mellin

# Gaussian truncation: keep kappa with exp(-1/4 (t^(xi-1) kappa)^2) >= cut
TRUNC_CUT = 1e-16


@dataclass(frozen=True)
class SpectralDatum:
    """One record: spectral parameter and alpha_j H_j^3(1/2)."""

    kappa: float
    alpha_h3: float


def load_spectral(path):
    """Read and validate a `kappa,alpha_h3` CSV, ascending kappa."""
    data = []
    with open(path, encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            if lineno == 1 or (not data and line.startswith("kappa")):
                if line != "kappa,alpha_h3":
                    raise SpectralParseError(
                        f"bad header {line!r}", line=lineno)
                continue
            parts = line.split(",")
            if len(parts) != 2:
                raise SpectralParseError(
                    f"expected 2 fields, got {len(parts)}", line=lineno)
            try:
                kappa, alpha = float(parts[0]), float(parts[1])
            except ValueError as exc:
                raise SpectralParseError(str(exc), line=lineno) from exc
            if not (kappa > 0 and math.isfinite(alpha)):
                raise SpectralParseError(
                    "kappa must be > 0 and alpha_h3 finite", line=lineno)
            if data and kappa <= data[-1].kappa:
                raise SpectralParseError(
                    f"kappa {kappa} not ascending", line=lineno)
            data.append(SpectralDatum(kappa, alpha))
    return data


def bundled_sample_path():
    """Path of the bundled illustrative spectral sample."""
    return str(resources.files("zetalab").joinpath("data/maass_sample.csv"))


@dataclass(frozen=True)
class SpectralSum:
    """Value of the explicit-formula sum plus truncation metadata."""

    value: float
    kappa_cut: float
    complete: bool


def _kappa_cut(t, xi):
    return t ** (1.0 - xi) * 2.0 * math.sqrt(-math.log(TRUNC_CUT))


def spectral_sum_I(t, xi, data, cut=TRUNC_CUT):
    """pi/sqrt(2t) sum_j a_j k_j^-1/2 sin(k_j log(k_j/(4 e t))) G(k_j).

    G is the Gaussian factor exp(-1/4 (t^(xi-1) kappa)^2); the sum is
    truncated where G < ``cut``.  ``complete`` is False when the dataset
    ends before the truncation point.
    """
    if not (0.5 <= xi < 1):
        raise ValueError("require 1/2 <= xi < 1")
    if t <= 0:
        raise ValueError("require t > 0")
    kcut = t ** (1.0 - xi) * 2.0 * math.sqrt(-math.log(cut))
    if not data:
        return SpectralSum(0.0, kcut, False)
    kappa = np.array([d.kappa for d in data])
    alpha = np.array([d.alpha_h3 for d in data])
    m = kappa <= kcut
    gauss = np.exp(-0.25 * (t ** (xi - 1.0) * kappa[m]) ** 2)
    terms = alpha[m] / np.sqrt(kappa[m]) \
        * np.sin(kappa[m] * np.log(kappa[m] / (4.0 * math.e * t))) * gauss
    val = math.pi / math.sqrt(2.0 * t) * float(np.sum(terms))
    return SpectralSum(val, kcut, kappa[-1] >= kcut)


def compare_explicit_formula(grid, t, xi, data, direct_fn=None):
    """(direct, spectral, diff): smoothed moment vs the spectral sum.

    ``direct_fn`` lets tests inject a synthetic direct side.  The scan of
    diff against polylog growth is reported, never asserted.
    """
    from .mellin import smoothed_moment
    if direct_fn is None:
        direct = smoothed_moment(grid, t, xi)
    else:
        direct = float(direct_fn(t))
    spec = spectral_sum_I(t, xi, data).value
    return direct, spec, direct - spec


def j_transform(s, xi, data, x_max):
    """Truncated transform integral_1^{x_max} I(x;xi) x^{-s} dx.

    Returns (value, in_region): in_region is False when sigma is at or
    below 2 - (3/2) xi, where the untruncated transform need not
    converge (computed anyway, flagged).
    """
    sigma, t = _sigma_t(s)
    in_region = sigma > 2.0 - 1.5 * xi
    if not data:
        return 0.0 + 0.0j, in_region
    kmax = max(d.kappa for d in data)

    def f(x):
        return np.array([spectral_sum_I(v, xi, data).value for v in x])

    val = integrate_mellin(f, 1.0, x_max, complex(sigma, t),
                           osc_freq=abs(t) + kmax)
    return val, in_region


# -- dyadic smooth partition of unity ----------------------------------

class DyadicPartition:
    """Smooth pieces rho_1..rho_J summing to 1 on [1, 2^(J-1) X].

    rho_1 = 1 on [1, X] and ramps down on [X, 2X]; rho_2 plateaus on
    [2X, 4X] and ramps down on [4X, 6X]; for j >= 3 the up-ramp of rho_j
    is the down-ramp of rho_{j-1} ([2^(j-1) X, 1.5 * 2^(j-1) X]) and its
    own down-ramp is [2^j X, 1.5 * 2^j X].
    """

    def __init__(self, X, J):
        if X < 1 or J < 2:
            raise ValueError("require X >= 1 and J >= 2")
        self.X = float(X)
        self.J = int(J)
        # ramp_k = handover interval between rho_k and rho_{k+1}
        self._ramps = [(self.X, 2.0 * self.X)]
        for k in range(2, J + 1):
            lo = 2.0 ** k * self.X
            self._ramps.append((lo, 1.5 * lo))

    def support(self, j):
        if j == 1:
            return (1.0, self._ramps[0][1])
        return (self._ramps[j - 2][0], self._ramps[j - 1][1])

    def piece(self, j, x):
        x = np.asarray(x, dtype=float)
        if j == 1:
            lo, hi = self._ramps[0]
            down = 1.0 - smooth_step((x - lo) / (hi - lo))
            return np.where(x < 1.0, 0.0, np.where(x <= lo, 1.0, down))
        ulo, uhi = self._ramps[j - 2]
        dlo, dhi = self._ramps[j - 1]
        up = smooth_step((x - ulo) / (uhi - ulo))
        down = 1.0 - smooth_step((x - dlo) / (dhi - dlo))
        return np.where(x <= ulo, 0.0,
                        np.where(x < uhi, up,
                                 np.where(x <= dlo, 1.0, down)))

    @property
    def pieces(self):
        return [lambda x, j=j: self.piece(j, x)
                for j in range(1, self.J + 1)]

    def partition_sum(self, x):
        x = np.asarray(x, dtype=float)
        return sum(self.piece(j, x) for j in range(1, self.J + 1))

    def covered_range(self):
        """Interval on which the pieces provably sum to 1."""
        return (1.0, 2.0 ** self.J * self.X)

    def derivative_bound(self, j, r, n_samples=20001):
        """c_r with max|rho_j^(r)| <= c_r (2^j X)^-r, finite differences."""
        lo, hi = self.support(j)
        pad = 0.02 * (hi - lo)
        x = np.linspace(lo - pad, hi + pad, n_samples)
        y = self.piece(j, x)
        h = x[1] - x[0]
        for _ in range(r):
            y = np.gradient(y, h)
        return float(np.max(np.abs(y)) * (2.0 ** j * self.X) ** r)


def build_partition(X, J):
    return DyadicPartition(X, J)


def default_partition_x(t, xi, delta=0.05):
    """Configuration default X = t^(1/(1-xi) - delta) for experiments."""
    return t ** (1.0 / (1.0 - xi) - delta)


# -- short-interval and partial sums -----------------------------------

def short_interval_sum(K, G, data):
    """Sum of alpha_j H_j^3 over kappa_j in [K-G, K+G]."""
    if K <= 0 or G <= 0:
        raise ValueError("require K > 0 and G > 0")
    return float(sum(d.alpha_h3 for d in data
                     if K - G <= d.kappa <= K + G))


def partial_sum_scan(data, T_list):
    """Rows (T, S(T), S/T^2, S/(T^2 log T), ..., S/(T^2 log^3 T))."""
    T_list = list(T_list)
    if any(b <= a for a, b in zip(T_list, T_list[1:])):
        raise ValueError("T_list must be increasing")
    kappa = np.array([d.kappa for d in data])
    alpha = np.array([d.alpha_h3 for d in data])
    rows = []
    for T in T_list:
        S = float(np.sum(alpha[kappa <= T]))
        ratios = [S / T ** 2 if T > 0 else math.nan]
        for C in (1, 2, 3):
            denom = T ** 2 * math.log(T) ** C if T > 1 else math.nan
            ratios.append(S / denom if denom and not math.isnan(denom)
                          else math.nan)
        rows.append((T, S, *ratios))
    return rows
