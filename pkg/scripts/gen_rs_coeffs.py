#!/usr/bin/env python3
"""Offline golden-file generator for the Riemann-Siegel remainder tables.

For Z(t) = 2 sum_{n<=N} n^{-1/2} cos(theta(t) - t log n) + R(t), the
remainder admits an asymptotic expansion

    R(t) = (-1)^(N-1) * a^(-1/2) * sum_j C_j(p) a^(-j),

with a = sqrt(t/(2 pi)), N = floor(a), p = a - N.  Rather than trusting
literature values for the C_j, this script extracts them numerically at
extended precision: for each Chebyshev node p we pick t = 2 pi (N+p)^2
over a ladder of N and solve for the expansion coefficients, then fits a
Chebyshev series in p for each j.  The result is frozen into
src/zetalab/_rs_coeffs.py.

Run time is a few minutes; this is a generator, not a runtime dependency.
"""

import time

import mpmath as mp
import numpy as np

mp.mp.dps = 50

N_LADDER = [6, 7, 8, 9, 10, 12, 14, 17, 20, 24, 29, 35, 42, 51, 62, 75]
N_COEFFS = 11          # fit C_0 .. C_10
CHEB_NODES = 36
CHEB_DEG = 30


def theta(t):
    return mp.siegeltheta(t)


def main_sum(t, N):
    th = theta(t)
    return 2 * mp.fsum(
        mp.cos(th - t * mp.log(n)) / mp.sqrt(n) for n in range(1, N + 1)
    )


def remainder_scaled(p, N):
    """G = (Z(t) - mainsum) * (-1)^(N-1) * sqrt(a) at t = 2 pi (N+p)^2."""
    a = mp.mpf(N) + p
    t = 2 * mp.pi * a * a
    z = mp.siegelz(t)
    r = z - main_sum(t, N)
    return r * (-1) ** (N - 1) * mp.sqrt(a)


def coeffs_at(p):
    """Solve the ladder system for C_0(p) .. C_{J-1}(p)."""
    rows, rhs = [], []
    for N in N_LADDER:
        a = mp.mpf(N) + p
        rows.append([a ** (-j) for j in range(N_COEFFS)])
        rhs.append(remainder_scaled(p, N))
    A = mp.matrix(rows)
    b = mp.matrix(rhs)
    x = mp.lu_solve(A.T * A, A.T * b)
    return [float(x[j]) for j in range(N_COEFFS)]


def psi(p):
    """C_0 closed form, used as a pipeline sanity check."""
    return mp.cos(2 * mp.pi * (p * p - p - mp.mpf(1) / 16)) / mp.cos(2 * mp.pi * p)


def main():
    t0 = time.time()
    k = np.arange(CHEB_NODES)
    nodes = 0.5 + 0.5 * np.cos(np.pi * (k + 0.5) / CHEB_NODES)  # in (0,1)
    table = np.empty((CHEB_NODES, N_COEFFS))
    for i, p in enumerate(nodes):
        table[i] = coeffs_at(mp.mpf(p))
        err0 = abs(table[i][0] - float(psi(mp.mpf(p))))
        print(f"p={p:.6f}  C0={table[i][0]: .12f}  |C0-Psi|={err0:.3e}  "
              f"[{time.time()-t0:.1f}s]")
        if err0 > 1e-11:
            raise RuntimeError("C0 disagrees with closed-form Psi; fit is broken")

    # Chebyshev fit on [0,1] for each coefficient function
    cheb = np.polynomial.chebyshev
    fits = []
    for j in range(N_COEFFS):
        c = cheb.chebfit(2 * nodes - 1, table[:, j], CHEB_DEG)
        resid = np.max(np.abs(cheb.chebval(2 * nodes - 1, c) - table[:, j]))
        print(f"C_{j}: max|C| ~ {np.max(np.abs(table[:, j])):.3e}, "
              f"cheb resid {resid:.3e}")
        fits.append(c)

    with open("src/zetalab/_rs_coeffs.py", "w") as f:
        f.write('"""Generated by scripts/gen_rs_coeffs.py; do not edit.\n\n'
                "Chebyshev coefficients (argument 2p-1 on p in [0,1]) of the\n"
                "Riemann-Siegel remainder functions C_0..C_%d.\n"
                '"""\n\nimport numpy as np\n\n' % (N_COEFFS - 1))
        f.write("RS_CHEB = np.array([\n")
        for c in fits:
            f.write("    [" + ", ".join(f"{v!r}" for v in c) + "],\n")
        f.write("])\n")
    print(f"wrote src/zetalab/_rs_coeffs.py in {time.time()-t0:.1f}s")


if __name__ == "__main__":
    main()
