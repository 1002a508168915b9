#!/usr/bin/env python3
"""Generate the bundled illustrative spectral sample.

Produces a deterministic synthetic list of (kappa, alpha_h3) pairs with
a Weyl-law-like eigenvalue density (count up to K grows like K^2/12)
and positive weights whose partial sums grow quadratically, matching the
average-order normalization the spectral module expects.  The output is
an illustrative stand-in for a table of Maass cusp-form data, not a
computed eigenvalue list.

Writes src/zetalab/data/maass_sample.csv.  Rerunning reproduces the file
byte for byte.
"""

import os

import numpy as np

HERE = os.path.dirname(os.path.abspath(__file__))
OUT = os.path.join(HERE, os.pardir, "src", "zetalab", "data",
                   "maass_sample.csv")

KAPPA_MAX = 120.0
SEED = 20260826


def main():
    rng = np.random.default_rng(SEED)
    rows = []
    j = 1
    while True:
        # Mean spacing from the counting function N(K) ~ K^2/12; jitter
        # keeps the list irregular without ever reordering it.
        kappa = np.sqrt(12.0 * j + 30.0)
        kappa += rng.uniform(-0.2, 0.2) * 12.0 / (2.0 * kappa)
        if kappa > KAPPA_MAX:
            break
        # Positive weights, mean 12, heavy-ish tail.
        alpha_h3 = 12.0 * rng.gamma(shape=2.0, scale=0.5)
        rows.append((kappa, alpha_h3))
        j += 1
    os.makedirs(os.path.dirname(OUT), exist_ok=True)
    with open(OUT, "w", encoding="utf-8") as f:
        f.write("# illustrative synthetic spectral sample "
                "(deterministic, seed %d)\n" % SEED)
        f.write("kappa,alpha_h3\n")
        for kappa, alpha_h3 in rows:
            f.write("%.17g,%.17g\n" % (kappa, alpha_h3))
    print(f"wrote {os.path.normpath(OUT)} ({len(rows)} rows, "
          f"kappa <= {rows[-1][0]:.3f})")


if __name__ == "__main__":
    main()
