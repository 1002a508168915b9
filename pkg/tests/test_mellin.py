import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.mellin import (PiecewiseConstant, k_direct, k_lower,
                            k_via_e2sq, lemma1_pair, make_bump,
                            smooth_step, smoothed_moment, window_decay,
                            z2_truncated)


@given(st.floats(min_value=1e-6, max_value=1.0 - 1e-6))
@settings(max_examples=200, deadline=None)
def test_smooth_step_partition(v):
    s = smooth_step(v)
    assert 0.0 <= s <= 1.0
    assert s + smooth_step(1.0 - v) == pytest.approx(1.0, abs=1e-15)


def test_bump_shape():
    b = make_bump(10.0, 15.0)
    assert b(10.0) == 1.0 and b(30.0) == 1.0  # plateau [K, 2K']
    assert b(4.9) == 0.0 and b(37.6) == 0.0   # outside (K/2, 5K'/2)
    assert 0.0 < b(7.0) < 1.0


def test_bump_validation():
    with pytest.raises(ValueError):
        make_bump(10.0, 10.0)
    with pytest.raises(ValueError):
        make_bump(10.0, 25.0)


def test_bump_derivative_bounds():
    b = make_bump(10.0, 15.0)
    for r in (1, 2):
        bound = b.derivative_bound(r)
        assert np.isfinite(bound) and bound > 0
        # scale-invariant bound: |b^(r)| <= C_r / K^r with modest C_r
        assert bound * 10.0 ** r < 1e4


def test_z2_truncated_tail(grid210):
    p_lo = z2_truncated(grid210, (2.5, 10.0), 100.0)
    p_hi = z2_truncated(grid210, (2.5, 10.0), 200.0)
    assert p_lo.tail_est > p_hi.tail_est > 0
    assert p_lo.tail_rigorous and p_hi.tail_rigorous
    # the truncated values differ by less than the coarser tail bound
    assert abs(p_lo.value - p_hi.value) <= p_lo.tail_est
    # on the critical strip the bound is heuristic only
    assert not z2_truncated(grid210, (0.75, 10.0), 100.0).tail_rigorous


def test_window_decay_validation():
    b = make_bump(10.0, 15.0)
    with pytest.raises(ValueError):
        window_decay(b, 1.0, (2.0, 5.0), r=5)


def test_window_decay_in_phase_offset():
    """The windowed kernel integral decays rapidly in |v - t|."""
    b = make_bump(10.0, 15.0)
    near = window_decay(b, (0.0, 0.0), (2.0, 0.0))
    far = window_decay(b, (0.0, 40.0), (2.0, 0.0))
    farther = window_decay(b, (0.0, 120.0), (2.0, 0.0))
    assert far < 0.05 * near
    assert farther < far


def test_k_identity_spot(grid210, series, poly):
    s = (2.0, 10.0)
    kd = k_direct(grid210, series, poly, s, 200.0)
    kv, _ = k_via_e2sq(series, s, 200.0)
    assert abs(kd - kv) / (1 + abs(kd)) < 1e-6


def test_k_lower_relation_spot(grid210, series, poly):
    s, X = (2.5, -20.0), 200.0
    sc = complex(*s)
    kd = k_direct(grid210, series, poly, s, X)
    kl = k_lower(series, s, X)
    e2_1 = float(series.at(np.array([1.0]))[0])
    e2_X = float(series.at(np.array([X]))[0])
    lhs = 0.5 * sc * kl
    rhs = kd + 0.5 * e2_1 ** 2 - 0.5 * e2_X ** 2 * X ** (-sc)
    assert abs(lhs - rhs) < 1e-6


def test_smoothed_moment_positive(grid210):
    v = smoothed_moment(grid210, 100.0, 0.5)
    assert v > 0


def test_smoothed_moment_constant_injection(grid210):
    v = smoothed_moment(grid210, 100.0, 0.5, integrand=lambda u: 1.0 + 0 * u)
    assert v == pytest.approx(1.0, abs=1e-10)


def test_piecewise_constant_transform_matches_quadrature():
    g = PiecewiseConstant((1.0, 2.0, 4.0), (1.0, 0.5))
    s = complex(2.0, 3.0)
    from zetalab.quad import integrate_mellin
    # quadrature segment-by-segment so panels never straddle a jump
    quad = (integrate_mellin(lambda x: 1.0 + 0 * x, 1.0, 2.0, s)
            + integrate_mellin(lambda x: 0.5 + 0 * x, 2.0, 4.0, s))
    assert abs(g.transform(2.0, 3.0) - quad) < 1e-10


def test_lemma1_closed_form():
    g = PiecewiseConstant((1.0, 2.0), (0.25,))
    lhs, rhs = lemma1_pair(g, 1.0, 2.0, 3.0, T=40.0)
    assert rhs == pytest.approx(2.0 * math.pi * 15.0 / 1024.0, rel=1e-12)
    assert lhs <= rhs * (1 + 1e-6)
    assert lhs > 0


@given(st.integers(min_value=0, max_value=10 ** 9))
@settings(max_examples=15, deadline=None)
def test_lemma1_randomized(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(1, 4))
    breaks = np.concatenate(([1.0], 1.0 + np.cumsum(rng.uniform(0.2, 2.0, n))))
    values = rng.uniform(-1.0, 1.0, n)
    sigma = float(rng.uniform(1.0, 3.0))
    g = PiecewiseConstant(tuple(breaks), tuple(values))
    lhs, rhs = lemma1_pair(g, breaks[0], breaks[-1], sigma,
                           T=float(rng.uniform(5.0, 30.0)))
    assert lhs <= rhs * (1 + 1e-6)
