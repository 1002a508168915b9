import math

import numpy as np
import pytest

from zetalab_plots.render import (FigureSpec, SchemaError, build_axes,
                                  main, read_csv, render)

E2_CSV = """\
# config echo line
# p4_coeffs: 1,2,3,4,0.05066059182116889
T,e2
1,0.5
2,-0.25
4,0.125
8,-0.0625
"""

SCAN_CSV = """\
quantity,sigma,T,value
Z2,2,10,100.5
Z2,2,20,402.25
Z2,2,40,1610.3
Z2,2,80,6434.7
"""

FIT_CSV = """\
quantity,sigma,slope,intercept,r2,theoretical
Z2,2,2.0012345678901234,0.30103,0.9999,0.6
"""

SPECTRAL_CSV = """\
t,xi,direct,spectral,diff
50,0.5,12.5,11.0,1.5
60,0.5,13.1,14.0,-0.9
70,0.5,12.9,12.6,0.3
"""


@pytest.fixture
def csvs(tmp_path):
    paths = {}
    for name, text in (("e2.csv", E2_CSV), ("scan.csv", SCAN_CSV),
                       ("fit.csv", FIT_CSV), ("spec.csv", SPECTRAL_CSV)):
        p = tmp_path / name
        p.write_text(text)
        paths[name] = str(p)
    return paths


def _line_by_gid(ax, prefix):
    for line in ax.get_lines():
        gid = line.get_gid() or ""
        if gid.startswith(prefix):
            return line
    raise AssertionError(f"no line with gid prefix {prefix!r}")


def test_trace_roundtrip(csvs, tmp_path):
    out = str(tmp_path / "e2.png")
    spec = FigureSpec((csvs["e2.csv"],), "trace", out)
    ax = build_axes(spec)
    xy = _line_by_gid(ax, "data").get_xydata()
    assert np.array_equal(xy[:, 0], [1, 2, 4, 8])
    assert np.array_equal(xy[:, 1], [0.5, -0.25, 0.125, -0.0625])
    assert render(spec) == out
    assert (tmp_path / "e2.png").stat().st_size > 0


def test_residual_roundtrip(csvs, tmp_path):
    spec = FigureSpec((csvs["spec.csv"],), "residual",
                      str(tmp_path / "r.png"))
    ax = build_axes(spec)
    xy = _line_by_gid(ax, "data").get_xydata()
    assert np.array_equal(xy[:, 0], [50, 60, 70])
    assert np.array_equal(xy[:, 1], [1.5, -0.9, 0.3])


def test_loglog_roundtrip_and_guides(csvs, tmp_path):
    spec = FigureSpec((csvs["scan.csv"], csvs["fit.csv"]), "loglog",
                      str(tmp_path / "l.png"))
    ax = build_axes(spec)
    xy = _line_by_gid(ax, "data:Z2").get_xydata()
    assert np.array_equal(xy[:, 0], [10, 20, 40, 80])
    assert np.array_equal(xy[:, 1], [100.5, 402.25, 1610.3, 6434.7])
    # guide-line slopes are carried verbatim from the fit CSV
    fit_gid = _line_by_gid(ax, "fit:Z2").get_gid()
    assert float(fit_gid.rsplit("slope=", 1)[1]) == 2.0012345678901234
    theo_gid = _line_by_gid(ax, "theory:Z2").get_gid()
    assert float(theo_gid.rsplit("slope=", 1)[1]) == 0.6
    # and the drawn segments have those slopes in log-log space
    for prefix, slope in (("fit:Z2", 2.0012345678901234),
                          ("theory:Z2", 0.6)):
        seg = _line_by_gid(ax, prefix).get_xydata()
        drawn = ((math.log(seg[1, 1]) - math.log(seg[0, 1]))
                 / (math.log(seg[1, 0]) - math.log(seg[0, 0])))
        assert drawn == pytest.approx(slope, rel=1e-12)
    render(spec)
    assert (tmp_path / "l.png").stat().st_size > 0


def test_missing_column_named(csvs, tmp_path):
    bad = tmp_path / "bad.csv"
    bad.write_text("T,value\n1,2\n")
    with pytest.raises(SchemaError) as exc:
        render(FigureSpec((str(bad),), "trace", str(tmp_path / "x.png")))
    assert "e2" in str(exc.value)


def test_missing_fit_row(csvs, tmp_path):
    lone = tmp_path / "fit2.csv"
    lone.write_text("quantity,sigma,slope,intercept,r2,theoretical\n"
                    "K,1.5,2,0,1,1\n")
    with pytest.raises(SchemaError) as exc:
        render(FigureSpec((csvs["scan.csv"], str(lone)), "loglog",
                          str(tmp_path / "x.png")))
    assert "Z2" in str(exc.value)


def test_spec_validation(csvs):
    with pytest.raises(ValueError):
        FigureSpec((csvs["e2.csv"],), "pie", "x.png")
    with pytest.raises(ValueError):
        FigureSpec((csvs["e2.csv"],), "loglog", "x.png")


def test_missing_file():
    with pytest.raises(SchemaError):
        read_csv("/nonexistent/file.csv")


def test_cli(csvs, tmp_path):
    out = str(tmp_path / "cli.png")
    assert main(["--kind", "trace", "--in", csvs["e2.csv"],
                 "--out", out]) == 0
    assert main(["--kind", "trace", "--in", csvs["scan.csv"],
                 "--out", out]) == 3  # schema mismatch
    assert main(["--kind", "loglog", "--in", csvs["scan.csv"],
                 "--out", out]) == 2  # loglog needs two CSVs


def test_cli_deterministic_output(csvs, tmp_path):
    a, b = str(tmp_path / "a.png"), str(tmp_path / "b.png")
    for out in (a, b):
        assert main(["--kind", "loglog", "--in", csvs["scan.csv"],
                     "--in", csvs["fit.csv"], "--out", out]) == 0
    assert (tmp_path / "a.png").read_bytes() == \
        (tmp_path / "b.png").read_bytes()
