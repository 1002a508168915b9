import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.errors import DomainError, PoleError
from zetalab.zeta import (T_CROSS, euler_maclaurin_zeta, first_zero,
                          riemann_siegel_z, rs_theta, zeta_half,
                          zeta_half_err, zeta_half_vec)

# Frozen extended-precision references (50-digit offline computation).
THETA_10 = -3.0670743962898952917
THETA_100 = 87.972165231787219625
ZETA_HALF_0 = -1.4603545088095868129
FIRST_ZERO = 14.13472514173469379


def test_theta_reference_values():
    assert abs(rs_theta(10.0) - THETA_10) <= 1e-10
    assert abs(rs_theta(100.0) - THETA_100) <= 1e-10


def test_theta_domain():
    with pytest.raises(DomainError):
        rs_theta(0.5)


@given(st.floats(min_value=10.0, max_value=1e6))
@settings(max_examples=200, deadline=None)
def test_theta_tail_positive_and_bounded(t):
    """The correction beyond the elementary main part is a positive,
    decreasing series; it is bounded by its first two terms plus slack."""
    main = t / 2.0 * math.log(t / (2.0 * math.pi)) - t / 2.0 - math.pi / 8.0
    tail = rs_theta(t) - main
    bound = (1.0 / (48.0 * t) + 7.0 / (5760.0 * t ** 3)
             + 31.0 / (80640.0 * t ** 5) + 127.0 / (430080.0 * t ** 7))
    # slack for cancellation: theta and its main part are huge while the
    # tail is tiny, so allow a few ulps of the large quantities
    slack = 1e-12 + 8e-16 * abs(rs_theta(t))
    assert -slack < tail <= bound + slack


def test_em_zeta_at_two():
    assert abs(euler_maclaurin_zeta(2.0 + 0j) - math.pi ** 2 / 6) < 1e-13


def test_em_zeta_pole():
    with pytest.raises(PoleError):
        euler_maclaurin_zeta(1.0 + 0j)


def test_em_zeta_real_axis():
    # zeta(3) = 1.2020569031595942854...
    assert abs(euler_maclaurin_zeta(3.0 + 0j) - 1.2020569031595942854) < 1e-13


def test_zeta_half_origin():
    assert abs(zeta_half(0.0) - ZETA_HALF_0) <= 1e-10


def test_first_zero():
    rho = first_zero()
    assert abs(rho - FIRST_ZERO) < 1e-9
    assert abs(riemann_siegel_z(rho)) < 1e-6


@given(st.floats(min_value=0.1, max_value=5000.0))
@settings(max_examples=100, deadline=None)
def test_schwarz_reflection(t):
    assert zeta_half(-t) == np.conj(zeta_half(t))


def test_vec_matches_scalar():
    ts = np.array([0.0, 5.0, 50.0, T_CROSS - 1, T_CROSS + 1, 1000.0])
    vec = zeta_half_vec(ts)
    for i, t in enumerate(ts):
        # scalar and vector paths pick Euler-Maclaurin term counts
        # independently; agreement is to rounding, not bit-for-bit
        assert abs(vec[i] - zeta_half(float(t))) < 1e-12


def test_cross_method_agreement_sample():
    rng = np.random.default_rng(7)
    ts = rng.uniform(260.0, 2000.0, size=25)
    for t in ts:
        em = euler_maclaurin_zeta(complex(0.5, t),
                                  n_terms=max(64, int(3 * t) + 64),
                                  tail_order=12)
        assert abs(zeta_half(float(t)) - em) < 1e-9


def test_err_model_monotone_pieces():
    assert zeta_half_err(10.0) == 1e-12
    assert zeta_half_err(300.0) > 1e-12
    assert np.all(np.isfinite(zeta_half_err(np.array([0.0, 1.0, 1e6]))))


def test_rs_vs_em_near_crossover():
    # Force both code paths at the same heights and compare.
    for t in (251.0, 300.0, 400.0):
        em = euler_maclaurin_zeta(complex(0.5, t),
                                  n_terms=max(64, int(3 * t) + 64),
                                  tail_order=12)
        z_rs = riemann_siegel_z(t)
        assert abs(abs(z_rs) - abs(em)) < 1e-9
