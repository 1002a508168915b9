#!/usr/bin/env python3
"""End-to-end desk experiment.

Builds (or reuses) the zeta grid, fits the moment polynomial, and runs
every scan the CLI exposes, leaving the CSV pipeline in ``out/`` ready
for zetalab-plot.  Pass config overrides as KEY=VALUE arguments, e.g.

    python3 scripts/run_experiment.py t_max=120 x_fixed=100 outdir=out120
"""

import sys

from zetalab.cli import main

OVERRIDES = {
    "t_max": "210",
    "fit_lo": "10",
    "fit_hi": "200",
    "t_list": "10,20,40,80",
    "x_fixed": "200",
    "scan_t0": "50",
    "threads": "4",
}


def run():
    for arg in sys.argv[1:]:
        if "=" not in arg:
            print(f"expected KEY=VALUE, got {arg!r}", file=sys.stderr)
            return 2
        k, v = arg.split("=", 1)
        OVERRIDES[k] = v
    common = []
    for k, v in OVERRIDES.items():
        common += ["--set", f"{k}={v}"]
    steps = (["grid"], ["scan", "fourth-moment"], ["scan", "e2"],
             ["scan", "z2"], ["scan", "k"], ["scan", "smoothed"],
             ["scan", "meansq-z2"], ["scan", "meansq-k"],
             ["identity-check"], ["spectral-check"], ["report"])
    for step in steps:
        print(f"== zetalab {' '.join(step)}")
        code = main(common + step)
        if code != 0:
            print(f"step failed with exit code {code}", file=sys.stderr)
            return code
    outdir = OVERRIDES.get("outdir", "out")
    print(f"\nDone.  Figures, for example:\n"
          f"  zetalab-plot --kind trace --in {outdir}/e2.csv "
          f"--out {outdir}/e2.png\n"
          f"  zetalab-plot --kind loglog --in {outdir}/meansq-z2.csv "
          f"--in {outdir}/fit_meansq-z2.csv --out {outdir}/meansq-z2.png\n"
          f"  zetalab-plot --kind residual --in {outdir}/spectral-check.csv "
          f"--out {outdir}/spectral-check.png")
    return 0


if __name__ == "__main__":
    sys.exit(run())
