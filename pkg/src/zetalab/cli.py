"""Command-line front door.

Subcommands: grid, scan <quantity>, report, spectral-check,
identity-check.  Every emitted file is UTF-8 CSV/text with a provenance
header (config echo + code version) and is byte-identical across reruns
and thread counts.

Exit codes: 0 success, 2 usage, 3 input/coverage, 4 numerical.
"""

import argparse
import math
import os
import sys

import numpy as np

from . import __version__
from .config import RunConfig, load_config
from .errors import (BudgetError, CoverageError, IllConditionedError,
                     SpectralParseError)
from .grid import ZetaGrid, build_grid, grid_cache_name
from .mellin import k_direct, k_via_e2sq, k_lower, smoothed_moment, \
    z2_truncated
from .moments import (ErrorTermSeries, MomentPolynomial, e2_mean_square,
                      fit_p4, fourth_moment, p4_eval)
from .scaling import (fit_exponent, format_table, k_theoretical,
                      meansq_scan, theorem_table, z2_theoretical)
from .spectral import bundled_sample_path, compare_explicit_formula, \
    load_spectral

SCAN_QUANTITIES = ("fourth-moment", "e2", "z2", "k", "smoothed",
                   "meansq-z2", "meansq-k", "identity-k")


def _provenance(cfg):
    lines = [f"# zetalab {__version__}"]
    lines += [f"# {line}" for line in cfg.echo()]
    return lines


def _write_csv(path, cfg, header, rows, extra_comments=()):
    os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        for line in _provenance(cfg):
            f.write(line + "\n")
        for line in extra_comments:
            f.write(line + "\n")
        f.write(header + "\n")
        for row in rows:
            f.write(",".join(format(v, ".17g") if isinstance(v, float)
                             else str(v) for v in row) + "\n")
    return path


def _grid_path(cfg):
    return os.path.join(cfg.outdir,
                        grid_cache_name(cfg.t_min, cfg.t_max, cfg.step))


def _get_grid(cfg, quiet=False):
    path = _grid_path(cfg)
    if os.path.exists(path):
        grid = ZetaGrid.load(path, err_budget=cfg.err_budget)
        n_expect = int(math.floor(
            (cfg.t_max - cfg.t_min) / cfg.step + 1e-9)) + 1
        if (len(grid) == n_expect and abs(grid.t_min - cfg.t_min) < 1e-12
                and abs(grid.step - cfg.step) < 1e-15):
            if not quiet:
                print(f"cache hit: {path}")
            return grid
        print(f"cache mismatch, rebuilding: {path}")
    grid = build_grid(cfg.t_min, cfg.t_max, cfg.step, cfg.err_budget,
                      threads=cfg.threads)
    os.makedirs(cfg.outdir, exist_ok=True)
    grid.save(path)
    print(f"built grid: {path} ({len(grid)} samples)")
    return grid


def _get_poly(cfg, grid):
    if cfg.poly_source != "fit":
        with open(cfg.poly_source, encoding="utf-8") as f:
            vals = [float(v) for line in f
                    for v in line.replace(",", " ").split()
                    if not line.startswith("#")]
        if len(vals) != 5:
            raise CoverageError(
                f"{cfg.poly_source}: expected 5 coefficients")
        return MomentPolynomial(tuple(vals))
    return fit_p4(grid, cfg.fit_lo, min(cfg.fit_hi, grid.t_max))


def _get_spectral(cfg):
    path = cfg.spectral_path or bundled_sample_path()
    return load_spectral(path)


def cmd_grid(cfg):
    _get_grid(cfg)
    return 0


def _scan_t_values(cfg):
    return list(cfg.t_list)


def cmd_scan(cfg, quantity):
    grid = _get_grid(cfg, quiet=True)
    X = cfg.truncation_x(max(cfg.t_list) if cfg.t_list else grid.t_max)
    out = os.path.join(cfg.outdir, f"{quantity}.csv")
    if quantity == "fourth-moment":
        rows = [(float(T), fourth_moment(grid, T)) for T in cfg.t_list]
        _write_csv(out, cfg, "T,value", rows)
    elif quantity == "e2":
        poly = _get_poly(cfg, grid)
        series = ErrorTermSeries.from_grid(grid, poly)
        comment = "# p4_coeffs: " + ",".join(
            format(c, ".17g") for c in poly.a)
        i = np.searchsorted(series.T_values, np.asarray(cfg.t_list))
        i = np.clip(i, 0, series.T_values.size - 1)
        rows = [(float(series.T_values[j]), float(series.e2_values[j]))
                for j in i]
        _write_csv(out, cfg, "T,e2", rows, extra_comments=[comment])
    elif quantity == "z2":
        rows = []
        for sigma in cfg.sigmas:
            for t in cfg.t_list:
                p = z2_truncated(grid, (sigma, t), X)
                rows.append((p.sigma, p.t, p.value.real, p.value.imag,
                             abs(p.value), p.X, p.tail_est))
        _write_csv(out, cfg, "sigma,t,re,im,abs,X,tail_est", rows)
    elif quantity == "k":
        poly = _get_poly(cfg, grid)
        series = ErrorTermSeries.from_grid(grid, poly)
        rows = []
        for sigma in cfg.k_sigmas:
            for t in cfg.t_list:
                v = k_direct(grid, series, poly, (sigma, t), X)
                rows.append((sigma, t, v.real, v.imag, abs(v), X, 0.0))
        _write_csv(out, cfg, "sigma,t,re,im,abs,X,tail_est", rows)
    elif quantity == "smoothed":
        rows = [(float(t), cfg.xi, smoothed_moment(grid, t, cfg.xi))
                for t in cfg.t_list]
        _write_csv(out, cfg, "t,xi,value", rows)
    elif quantity in ("meansq-z2", "meansq-k"):
        poly = None
        if quantity == "meansq-k":
            poly = _get_poly(cfg, grid)
            series = ErrorTermSeries.from_grid(grid, poly)

            def evaluator(sigma, t, Xv):
                return k_direct(grid, series, poly, (sigma, t), Xv)
            evaluator.label = "K"
            sigmas, theo = cfg.k_sigmas, k_theoretical
        else:
            def evaluator(sigma, t, Xv):
                return z2_truncated(grid, (sigma, t), Xv).value
            evaluator.label = "Z2"
            sigmas, theo = cfg.sigmas, z2_theoretical
        scan_rows, fit_rows = [], []
        for sigma in sigmas:
            series_ = meansq_scan(evaluator, sigma, cfg.t_list, X)
            fit = fit_exponent(series_, theo(sigma))
            scan_rows += [(series_.quantity, sigma, float(T), float(v))
                          for T, v in zip(series_.T_values, series_.values)]
            fit_rows.append((fit.quantity, fit.sigma, fit.slope,
                             fit.intercept, fit.r2, fit.theoretical))
        _write_csv(out, cfg, "quantity,sigma,T,value", scan_rows)
        _write_csv(os.path.join(cfg.outdir, f"fit_{quantity}.csv"), cfg,
                   "quantity,sigma,slope,intercept,r2,theoretical",
                   fit_rows)
    elif quantity == "identity-k":
        return cmd_identity_check(cfg)
    else:
        print(f"unknown scan quantity {quantity!r}; choose from "
              f"{', '.join(SCAN_QUANTITIES)}", file=sys.stderr)
        return 2
    print(f"wrote {out}")
    return 0


def cmd_identity_check(cfg):
    grid = _get_grid(cfg, quiet=True)
    poly = _get_poly(cfg, grid)
    series = ErrorTermSeries.from_grid(grid, poly)
    X = cfg.truncation_x(max(cfg.t_list) if cfg.t_list else grid.t_max)
    X = min(X, grid.t_max)
    rows = []
    for sigma in (1.5, 2.0, 2.5, 3.0):
        for t in (-50.0, -10.0, 0.0, 10.0, 50.0):
            kd = k_direct(grid, series, poly, (sigma, t), X)
            kv, _bnd = k_via_e2sq(series, (sigma, t), X)
            kl = k_lower(series, (sigma, t), X)
            e2_1 = float(series.at(np.array([1.0]))[0])
            e2_X = float(series.at(np.array([X]))[0])
            sc = complex(sigma, t)
            relation = abs(0.5 * sc * kl
                           - (kd + 0.5 * e2_1 ** 2
                              - 0.5 * e2_X ** 2 * X ** (-sc)))
            resid = abs(kd - kv)
            rows.append((sigma, t, X, kd.real, kd.imag, kv.real, kv.imag,
                         resid, resid / (1.0 + abs(kd)), relation))
    out = _write_csv(os.path.join(cfg.outdir, "identity-k.csv"), cfg,
                     "sigma,t,X,re_direct,im_direct,re_parts,im_parts,"
                     "resid,rel_resid,relation_resid", rows)
    print(f"wrote {out}")
    return 0


def cmd_spectral_check(cfg):
    grid = _get_grid(cfg, quiet=True)
    data = _get_spectral(cfg)
    rows = []
    for t in cfg.t_list:
        if t < cfg.scan_t0:
            continue
        direct, spec, diff = compare_explicit_formula(grid, t, cfg.xi, data)
        rows.append((float(t), cfg.xi, direct, spec, diff))
    if not rows:
        print("no t in t_list at or above scan_t0", file=sys.stderr)
        return 3
    out = _write_csv(os.path.join(cfg.outdir, "spectral-check.csv"), cfg,
                     "t,xi,direct,spectral,diff", rows)
    print(f"wrote {out}")
    return 0


def cmd_report(cfg):
    fit_files = [os.path.join(cfg.outdir, f"fit_meansq-{q}.csv")
                 for q in ("z2", "k")]
    present = [p for p in fit_files if os.path.exists(p)]
    if not present:
        print("missing required fit files: " + ", ".join(fit_files),
              file=sys.stderr)
        return 3
    from .scaling import ExponentFit
    fits = []
    for path in present:
        with open(path, encoding="utf-8") as f:
            for line in f:
                if line.startswith("#") or line.startswith("quantity"):
                    continue
                q, sigma, slope, intercept, r2, theo = line.strip().split(",")
                fits.append(ExponentFit(q, float(sigma), float(slope),
                                        float(intercept), float(r2),
                                        float(theo)))
    rows = theorem_table(fits)
    txt_path = os.path.join(cfg.outdir, "report.txt")
    with open(txt_path, "w", encoding="utf-8") as f:
        for line in _provenance(cfg):
            f.write(line + "\n")
        f.write(format_table(rows))
    _write_csv(os.path.join(cfg.outdir, "report.csv"), cfg,
               ",".join(rows[0]), rows[1:])
    print(f"wrote {txt_path}")
    return 0


def _parse_args(argv):
    parser = argparse.ArgumentParser(
        prog="zetalab",
        description="Numerical laboratory for fourth-moment Mellin "
                    "transforms on the critical line.")
    parser.add_argument("--config", help="key = value config file")
    parser.add_argument("--set", action="append", default=[],
                        metavar="KEY=VALUE", help="override a config key")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("grid")
    p_scan = sub.add_parser("scan")
    p_scan.add_argument("quantity")
    sub.add_parser("report")
    sub.add_parser("spectral-check")
    sub.add_parser("identity-check")
    return parser.parse_args(argv)


def main(argv=None):
    args = _parse_args(argv)
    overrides = []
    for item in args.set:
        if "=" not in item:
            print(f"--set expects KEY=VALUE, got {item!r}", file=sys.stderr)
            return 2
        k, v = item.split("=", 1)
        overrides.append((k.strip(), v.strip()))
    try:
        cfg = load_config(args.config, overrides)
    except (ValueError, OSError) as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return 2
    try:
        if args.command == "grid":
            return cmd_grid(cfg)
        if args.command == "scan":
            if args.quantity not in SCAN_QUANTITIES:
                print(f"unknown scan quantity {args.quantity!r}; choose "
                      f"from {', '.join(SCAN_QUANTITIES)}", file=sys.stderr)
                return 2
            return cmd_scan(cfg, args.quantity)
        if args.command == "identity-check":
            return cmd_identity_check(cfg)
        if args.command == "spectral-check":
            return cmd_spectral_check(cfg)
        if args.command == "report":
            return cmd_report(cfg)
    except (CoverageError, SpectralParseError, FileNotFoundError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 3
    except (BudgetError, IllConditionedError) as exc:
        print(f"numerical error: {exc}", file=sys.stderr)
        return 4
    return 2


if __name__ == "__main__":
    sys.exit(main())
