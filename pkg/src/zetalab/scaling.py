"""Mean-square scans and growth-exponent fits.

Asymptotic theorem exponents cannot be confirmed at desk scale; every
fit row carries a `non-asymptotic desk scale` caveat and the slope
comparison is a regression tripwire, not a mathematical claim.
"""

import math
from dataclasses import dataclass

import numpy as np

from .quad import cumulative_cells, prefix_lookup

DESK_SCALE_FLAG = "non-asymptotic desk scale"

# Theorem exponents used as comparison targets.
def z2_theoretical(sigma):
    """Mean-square exponent (15 - 12 sigma)/5 for the zeta transform."""
    return (15.0 - 12.0 * sigma) / 5.0


def k_theoretical(sigma):
    """Mean-square exponent (13 - 6 sigma)/3 for the E2-pair transform."""
    return (13.0 - 6.0 * sigma) / 3.0


TRIPWIRE_MARGIN = 0.75  # engineering regression guard, not doctrine


@dataclass
class ScanSeries:
    """Mean-square values of one transform along increasing T."""

    quantity: str
    sigma: float
    T_values: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        self.T_values = np.asarray(self.T_values, dtype=float)
        self.values = np.asarray(self.values, dtype=float)
        if self.T_values.size != self.values.size:
            raise ValueError("length mismatch")
        if np.any(self.values < 0):
            raise ValueError("values must be nonnegative")


@dataclass(frozen=True)
class ExponentFit:
    """Log-log slope of a scan next to the theorem exponent."""

    quantity: str
    sigma: float
    slope: float
    intercept: float
    r2: float
    theoretical: float


def meansq_scan(evaluator, sigma, T_list, X, t_step=0.05, t_lo=1.0):
    """integral_{t_lo}^T |evaluator(sigma, t, X)|^2 dt for each T.

    Pointwise values are computed once on the union t-grid and reused
    across nested T (prefix quadrature), so scans are linear in the grid.
    """
    T_list = sorted(float(T) for T in T_list)
    if T_list[0] <= t_lo:
        raise ValueError(f"T values must exceed {t_lo}")
    T_max = T_list[-1]
    n = int(math.ceil((T_max - t_lo) / t_step))
    ts = t_lo + np.arange(n + 1) * ((T_max - t_lo) / n)
    vals = np.array([abs(evaluator(sigma, t, X)) ** 2 for t in ts])
    prefix = cumulative_cells(vals, ts[1] - ts[0])
    out = np.array([prefix_lookup(prefix, t_lo, ts[1] - ts[0], T)
                    for T in T_list])
    label = getattr(evaluator, "label", getattr(evaluator, "__name__",
                                                "evaluator"))
    return ScanSeries(label, float(sigma), np.array(T_list), out)


def fit_exponent(series, theoretical):
    """OLS of log(value) on log(T); requires >= 4 strictly positive points."""
    if series.T_values.size < 4:
        raise ValueError("need at least 4 points")
    if np.any(series.values <= 0):
        raise ValueError("degenerate series: nonpositive values")
    x = np.log(series.T_values)
    y = np.log(series.values)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(np.sum((y - y.mean()) ** 2))
    r2 = 1.0 if ss_tot == 0 else max(0.0, 1.0 - float(np.sum(resid ** 2))
                                     / ss_tot)
    return ExponentFit(series.quantity, series.sigma, float(slope),
                       float(intercept), min(r2, 1.0), float(theoretical))


def theorem_table(fits):
    """Rows (quantity, sigma, slope, theoretical, caveat), grouped."""
    header = ("quantity", "sigma", "slope", "intercept", "r2",
              "theoretical", "caveat")
    rows = [header]
    for fit in sorted(fits, key=lambda f: (f.quantity, f.sigma)):
        rows.append((fit.quantity, fit.sigma, fit.slope, fit.intercept,
                     fit.r2, fit.theoretical, DESK_SCALE_FLAG))
    return rows


def format_table(rows):
    """Human-readable fixed-width rendering of theorem_table rows."""
    text = []
    for row in rows:
        cells = [f"{c:.6g}" if isinstance(c, float) else str(c)
                 for c in row]
        text.append("  ".join(f"{c:>14}" if i else f"{c:<12}"
                              for i, c in enumerate(cells)))
    return "\n".join(text) + "\n"
