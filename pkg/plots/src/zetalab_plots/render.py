"""One-figure-per-invocation rendering of the zetalab CSV schemas.

Kinds:
  trace    -- y against x from any two named columns (e.g. T, e2).
  loglog   -- mean-square scan points (quantity,sigma,T,value) with the
              fitted power law and the theoretical-exponent guide line
              taken from the companion fit CSV
              (quantity,sigma,slope,intercept,r2,theoretical).
  residual -- a signed difference column against its abscissa (e.g. the
              t,xi,direct,spectral,diff comparison scan).

Values are plotted exactly as read; nothing is rescaled or resampled.
Guide lines carry the source slope verbatim in their gid so consumers
can recover it without refitting.
"""

import argparse
import csv
import math
import os
import sys
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402


class SchemaError(ValueError):
    """A CSV is missing a column or does not parse."""


def read_csv(path, required=()):
    """Read a header+rows CSV (``#`` comments skipped) into a dict of
    float column arrays; non-numeric columns stay as strings."""
    if not os.path.exists(path):
        raise SchemaError(f"{path}: file not found")
    with open(path, encoding="utf-8") as f:
        rows = [r for r in csv.reader(line for line in f
                                      if not line.startswith("#")) if r]
    if not rows:
        raise SchemaError(f"{path}: empty file")
    header, body = rows[0], rows[1:]
    missing = [c for c in required if c not in header]
    if missing:
        raise SchemaError(f"{path}: missing column(s) "
                          f"{', '.join(missing)}; found {', '.join(header)}")
    cols = {}
    for i, name in enumerate(header):
        raw = [r[i] for r in body]
        try:
            cols[name] = [float(v) for v in raw]
        except ValueError:
            cols[name] = raw
    return cols


@dataclass(frozen=True)
class FigureSpec:
    inputs: tuple            # one CSV path, or (scan, fit) for loglog
    kind: str                # trace | loglog | residual
    output: str
    x_col: str = ""
    y_col: str = ""
    xlabel: str = ""
    ylabel: str = ""

    def __post_init__(self):
        if self.kind not in ("trace", "loglog", "residual"):
            raise ValueError(f"unknown figure kind {self.kind!r}")
        if self.kind == "loglog" and len(self.inputs) != 2:
            raise ValueError("loglog needs (scan CSV, fit CSV)")
        if self.kind != "loglog" and len(self.inputs) != 1:
            raise ValueError(f"{self.kind} takes exactly one CSV")


def _save(fig, spec):
    fig.savefig(spec.output, dpi=120,
                metadata={"Software": "zetalab-plots"})
    plt.close(fig)
    return spec.output


def _render_trace(spec):
    x_col = spec.x_col or "T"
    y_col = spec.y_col or "e2"
    cols = read_csv(spec.inputs[0], required=(x_col, y_col))
    fig, ax = plt.subplots()
    ax.plot(cols[x_col], cols[y_col], marker=".", gid="data")
    ax.set_xlabel(spec.xlabel or x_col)
    ax.set_ylabel(spec.ylabel or y_col)
    return _save(fig, spec)


def _render_residual(spec):
    x_col = spec.x_col or "t"
    y_col = spec.y_col or "diff"
    cols = read_csv(spec.inputs[0], required=(x_col, y_col))
    fig, ax = plt.subplots()
    ax.plot(cols[x_col], cols[y_col], marker="o", linestyle="",
            gid="data")
    ax.axhline(0.0, color="gray", linewidth=0.8)
    ax.set_xlabel(spec.xlabel or x_col)
    ax.set_ylabel(spec.ylabel or y_col)
    return _save(fig, spec)


def _render_loglog(spec):
    scan = read_csv(spec.inputs[0],
                    required=("quantity", "sigma", "T", "value"))
    fits = read_csv(spec.inputs[1],
                    required=("quantity", "sigma", "slope", "intercept",
                              "r2", "theoretical"))
    fig, ax = plt.subplots()
    groups = sorted(set(zip(scan["quantity"],
                            (float(s) for s in scan["sigma"]))))
    for quantity, sigma in groups:
        sel = [i for i, (q, s) in enumerate(zip(scan["quantity"],
                                                scan["sigma"]))
               if q == quantity and float(s) == sigma]
        T = [scan["T"][i] for i in sel]
        val = [scan["value"][i] for i in sel]
        ax.loglog(T, val, marker="o", linestyle="",
                  gid=f"data:{quantity}:{sigma!r}",
                  label=f"{quantity} sigma={sigma:g}")
        match = [i for i, (q, s) in enumerate(zip(fits["quantity"],
                                                  fits["sigma"]))
                 if q == quantity and float(s) == sigma]
        if not match:
            raise SchemaError(
                f"{spec.inputs[1]}: no fit row for quantity={quantity} "
                f"sigma={sigma:g}")
        i = match[0]
        slope, intercept = fits["slope"][i], fits["intercept"][i]
        theo = fits["theoretical"][i]
        lo, hi = min(T), max(T)
        fit_y = [math.exp(intercept + slope * math.log(x)) for x in (lo, hi)]
        ax.loglog([lo, hi], fit_y, linestyle="-",
                  gid=f"fit:{quantity}:{sigma!r}:slope={slope!r}",
                  label=f"fit slope {slope:.3g}")
        anchor = math.exp(intercept + slope * math.log(lo))
        theo_y = [anchor, anchor * (hi / lo) ** theo]
        ax.loglog([lo, hi], theo_y, linestyle="--",
                  gid=f"theory:{quantity}:{sigma!r}:slope={theo!r}",
                  label=f"theoretical slope {theo:.3g}")
    ax.set_xlabel(spec.xlabel or "T")
    ax.set_ylabel(spec.ylabel or "mean square")
    ax.legend(fontsize=8)
    return _save(fig, spec)


def render(spec):
    """Render one figure; returns the output path."""
    if spec.kind == "trace":
        return _render_trace(spec)
    if spec.kind == "residual":
        return _render_residual(spec)
    return _render_loglog(spec)


def build_axes(spec):
    """Like render, but returns the populated Axes without saving;
    used by the round-trip extraction tests."""
    out = []
    real_save = _save

    def capture(fig, _spec):
        out.append(fig.axes[0])
        return _spec.output

    globals()["_save"] = capture
    try:
        render(spec)
    finally:
        globals()["_save"] = real_save
    return out[0]


def main(argv=None):
    parser = argparse.ArgumentParser(
        prog="zetalab-plot",
        description="Render a zetalab CSV into a figure.")
    parser.add_argument("--kind", required=True,
                        choices=("trace", "loglog", "residual"))
    parser.add_argument("--in", dest="inputs", action="append",
                        required=True, metavar="CSV",
                        help="input CSV (twice for loglog: scan then fit)")
    parser.add_argument("--out", required=True)
    parser.add_argument("--x-col", default="")
    parser.add_argument("--y-col", default="")
    parser.add_argument("--xlabel", default="")
    parser.add_argument("--ylabel", default="")
    args = parser.parse_args(argv)
    try:
        spec = FigureSpec(tuple(args.inputs), args.kind, args.out,
                          args.x_col, args.y_col, args.xlabel, args.ylabel)
        path = render(spec)
    except (SchemaError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3 if isinstance(exc, SchemaError) else 2
    print(f"wrote {path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
