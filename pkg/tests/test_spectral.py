import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zetalab.errors import SpectralParseError
from zetalab.spectral import (DyadicPartition, build_partition,
                              compare_explicit_formula,
                              default_partition_x, j_transform,
                              load_spectral, partial_sum_scan,
                              short_interval_sum, spectral_sum_I,
                              SpectralDatum)


def test_bundled_sample(spectral_data):
    kappas = [d.kappa for d in spectral_data]
    assert kappas == sorted(kappas)
    assert all(d.alpha_h3 > 0 for d in spectral_data)
    assert len(spectral_data) > 1000


def test_load_rejects_bad_header(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("kappa,weight\n9.5,1.0\n")
    with pytest.raises(SpectralParseError):
        load_spectral(p)


def test_load_reports_line_numbers(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("kappa,alpha_h3\n9.5,1.0\nnot,numeric\n")
    with pytest.raises(SpectralParseError) as exc:
        load_spectral(p)
    assert exc.value.line == 3


def test_load_rejects_unsorted(tmp_path):
    p = tmp_path / "bad.csv"
    p.write_text("kappa,alpha_h3\n9.5,1.0\n8.0,1.0\n")
    with pytest.raises(SpectralParseError):
        load_spectral(p)


def test_single_term_hand_expansion():
    kappa, a = 13.78, 2.5
    t, xi = 40.0, 0.5
    datum = [SpectralDatum(kappa, a)]
    expected = (math.pi / math.sqrt(2 * t) * a / math.sqrt(kappa)
                * math.sin(kappa * math.log(kappa / (4 * math.e * t)))
                * math.exp(-0.25 * (t ** (xi - 1) * kappa) ** 2))
    got = spectral_sum_I(t, xi, datum)
    assert got.value == pytest.approx(expected, abs=1e-12)


def test_truncation_cut_stable(spectral_data):
    base = spectral_sum_I(60.0, 0.5, spectral_data, cut=1e-16).value
    tight = spectral_sum_I(60.0, 0.5, spectral_data, cut=1e-20).value
    assert abs(base - tight) <= 1e-12 * (1 + abs(base))


def test_xi_domain():
    with pytest.raises(ValueError):
        spectral_sum_I(10.0, 0.4, [])
    with pytest.raises(ValueError):
        spectral_sum_I(-1.0, 0.5, [])


def test_compare_explicit_formula(grid210, spectral_data):
    direct, spec, diff = compare_explicit_formula(
        grid210, 100.0, 0.5, spectral_data)
    assert np.isfinite(direct) and np.isfinite(spec)
    assert diff == direct - spec


def test_j_transform_region_flag(spectral_data):
    _, ok = j_transform((2.0, 0.0), 0.5, spectral_data[:50], 20.0)
    assert ok  # 2 > 2 - 0.75
    _, bad = j_transform((1.2, 0.0), 0.5, spectral_data[:50], 20.0)
    assert not bad  # 1.2 <= 1.25


def test_partition_of_unity():
    part = build_partition(8.0, 5)
    lo, hi = part.covered_range()
    x = np.linspace(lo, hi, 10001)
    dev = np.abs(part.partition_sum(x) - 1.0)
    assert float(dev.max()) <= 1e-12


def test_partition_supports_nested():
    part = DyadicPartition(8.0, 4)
    for j in range(1, 5):
        lo, hi = part.support(j)
        assert lo < hi
        x = np.array([lo - 1e-9, hi + 1e-9])
        assert np.all(part.piece(j, x) == 0.0)


def test_partition_derivative_bounds():
    part = DyadicPartition(8.0, 4)
    for j in range(1, 5):
        for r in (1, 2):
            c = part.derivative_bound(j, r)
            assert np.isfinite(c) and c > 0


def test_default_partition_x():
    x = default_partition_x(50.0, 0.5)
    assert x == pytest.approx(50.0 ** (2.0 - 0.05))


def test_short_interval_sum(spectral_data):
    s_narrow = short_interval_sum(60.0, 1.0, spectral_data)
    s_wide = short_interval_sum(60.0, 5.0, spectral_data)
    assert 0 <= s_narrow <= s_wide


def test_partial_sum_scan(spectral_data):
    rows = partial_sum_scan(spectral_data, [20.0, 40.0, 80.0])
    assert len(rows) == 3
    for T, S, *scaled in rows:
        assert S > 0
        assert all(np.isfinite(v) for v in scaled)
    # partial sums grow with T
    assert rows[0][1] < rows[1][1] < rows[2][1]
