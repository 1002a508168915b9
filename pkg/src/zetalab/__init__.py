"""Numerical laboratory for the fourth power moment of the Riemann zeta
function on the critical line: error-term extraction, modified Mellin
transforms, Gaussian-smoothed local moments, spectral comparison sums,
and growth-exponent fitting."""

__version__ = "0.1.0"

from .config import RunConfig, load_config
from .errors import (BudgetError, CoverageError, DomainError,
                     IllConditionedError, PoleError, SpectralParseError,
                     ZetalabError)
from .grid import CriticalSample, ZetaGrid, build_grid, grid_cache_name
from .mellin import (MellinPoint, SmoothBump, f_k, k_direct, k_lower,
                     k_via_e2sq, lemma1_pair, make_bump, smoothed_moment,
                     window_decay, z2_truncated)
from .moments import (ErrorTermSeries, MomentPolynomial, e2,
                      e2_fourth_moment, e2_mean_square, fit_p4,
                      fourth_moment, p4_eval, q4_eval)
from .scaling import (ExponentFit, ScanSeries, fit_exponent, k_theoretical,
                      meansq_scan, theorem_table, z2_theoretical)
from .spectral import (DyadicPartition, SpectralDatum, build_partition,
                       bundled_sample_path, compare_explicit_formula,
                       j_transform, load_spectral, partial_sum_scan,
                       short_interval_sum, spectral_sum_I)
from .zeta import (euler_maclaurin_zeta, first_zero, riemann_siegel_z,
                   rs_theta, zeta_half, zeta_half_err, zeta_half_vec)
