"""Critical-line zeta evaluation.

Two routes are provided and cross-checked against each other:

* ``zeta_half``  -- fast path.  Above T_CROSS it uses the Riemann-Siegel
  main sum plus remainder functions C_0..C_10 (tables generated offline
  at extended precision, see scripts/gen_rs_coeffs.py); below T_CROSS it
  falls back to Euler-Maclaurin, which is cheap at small height.
* ``euler_maclaurin_zeta`` -- the slow oracle, valid for any s != 1.

The documented error model for the fast path is ERR_RS_C * t^(-3/4),
calibrated against the oracle (conservative: the implemented remainder
order converges much faster).
"""

import math

import numpy as np

from ._rs_coeffs import RS_CHEB
from .errors import DomainError, PoleError

TWO_PI = 2.0 * math.pi

# Riemann-Siegel / Euler-Maclaurin crossover.  The remainder tables were
# fitted on a = sqrt(t/2pi) >= 6, i.e. t >= 226; below that EM is cheap.
T_CROSS = 250.0

# Calibrated against the oracle (tests/test_zeta.py pins this down):
# |Z_rs(t) - Z(t)| <= ERR_RS_C * t^(-3/4) + ERR_RS_PHASE * t for t >= T_CROSS.
# The second term is double-precision phase rounding in cos(theta - t log n),
# which dominates above t ~ 1e5.
ERR_RS_C = 1e-8
ERR_RS_PHASE = 3e-14

# First even-index Bernoulli numbers B_2, B_4, ...
_BERNOULLI2 = np.array([
    1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730,
    7.0 / 6, -3617.0 / 510, 43867.0 / 798, -174611.0 / 330,
    854513.0 / 138, -236364091.0 / 2730, 8553103.0 / 6,
    -23749461029.0 / 870, 8615841276005.0 / 14322,
])

# theta(t) tail: all-positive series 1/(48t) + 7/(5760 t^3) + ...
_THETA_TAIL = [
    (1.0 / 48.0, 1), (7.0 / 5760.0, 3), (31.0 / 80640.0, 5),
    (127.0 / 430080.0, 7), (511.0 / 1216512.0, 9),
]


def rs_theta(t):
    """Riemann-Siegel phase theta(t), absolute error <= 1e-10 for t >= 10.

    Raises DomainError below t = 1 (use the Euler-Maclaurin path there).
    """
    t = float(t)
    if t < 1.0:
        raise DomainError(f"rs_theta requires t >= 1, got {t}")
    val = 0.5 * t * math.log(t / TWO_PI) - 0.5 * t - math.pi / 8.0
    for coef, power in _THETA_TAIL:
        val += coef / t ** power
    return val


def _rs_theta_vec(t):
    val = 0.5 * t * np.log(t / TWO_PI) - 0.5 * t - math.pi / 8.0
    for coef, power in _THETA_TAIL:
        val += coef / t ** power
    return val


def euler_maclaurin_zeta(s, n_terms=64, tail_order=10):
    """zeta(s) by Euler-Maclaurin summation.

    zeta(s) = sum_{n<N} n^-s + N^(1-s)/(s-1) + N^-s/2
              + sum_{k<=q} B_2k/(2k)! (s)_{2k-1} N^(-s-2k+1).

    The omitted tail is bounded by |first omitted term| * |s+2q+1|/(2 pi N
    - |s|); accuracy improves with n_terms as long as n_terms > |Im s|/3.
    """
    s = complex(s)
    if s == 1.0:
        raise PoleError("zeta has a pole at s = 1")
    N = int(n_terms)
    q = int(tail_order)
    if N < 2 or q < 1:
        raise DomainError("n_terms >= 2 and tail_order >= 1 required")
    n = np.arange(1, N)
    total = np.sum(n ** (-s)) + N ** (1.0 - s) / (s - 1.0) + 0.5 * N ** (-s)
    # Bernoulli tail: term_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(1-s-2k)
    poch = s
    fact = 2.0
    for k in range(1, q + 1):
        total += _BERNOULLI2[k - 1] / fact * poch * N ** (1.0 - s - 2 * k)
        if k < q:
            poch *= (s + 2 * k - 1) * (s + 2 * k)
            fact *= (2 * k + 1) * (2 * k + 2)
    return complex(total)


def _em_n_terms(t):
    """Default main-sum length for Euler-Maclaurin at height t."""
    return max(64, int(3.0 * abs(t)) + 16)


def _em_half_line_vec(t, n_terms=None, tail_order=10):
    """Vectorized zeta(1/2 + it) by Euler-Maclaurin, shared N across t."""
    t = np.asarray(t, dtype=float)
    N = n_terms if n_terms is not None else _em_n_terms(np.max(np.abs(t)))
    s_im = t.reshape(-1, 1)
    n = np.arange(1, N)
    logn = np.log(n)
    # n^(-1/2 - it) = n^(-1/2) * exp(-i t log n), accumulated in chunks
    out = np.zeros(t.size, dtype=complex)
    chunk = max(1, int(4e6) // max(1, N))
    for lo in range(0, t.size, chunk):
        hi = min(t.size, lo + chunk)
        phase = np.exp(-1j * s_im[lo:hi] * logn)
        out[lo:hi] = phase @ (n ** -0.5)
    s = 0.5 + 1j * t
    out += N ** (1.0 - s) / (s - 1.0) + 0.5 * N ** (-s)
    poch = s.copy()
    fact = 2.0
    for k in range(1, tail_order + 1):
        out += _BERNOULLI2[k - 1] / fact * poch * N ** (1.0 - s - 2 * k)
        if k < tail_order:
            poch = poch * (s + 2 * k - 1) * (s + 2 * k)
            fact *= (2 * k + 1) * (2 * k + 2)
    return out


def _rs_remainder(a, p, parity):
    """(-1)^(N-1) a^(-1/2) sum_j C_j(p) a^(-j), Horner in 1/a."""
    x = 2.0 * p - 1.0
    corr = np.polynomial.chebyshev.chebval(x, RS_CHEB[-1])
    for j in range(RS_CHEB.shape[0] - 2, -1, -1):
        corr = corr / a + np.polynomial.chebyshev.chebval(x, RS_CHEB[j])
    return parity * corr / np.sqrt(a)


def rs_z_vec(t):
    """Riemann-Siegel Z(t) for an array of heights t >= T_CROSS."""
    t = np.asarray(t, dtype=float)
    a = np.sqrt(t / TWO_PI)
    N = np.floor(a).astype(int)
    p = a - N
    theta = _rs_theta_vec(t)
    z = np.zeros(t.size, dtype=float)
    # group by main-sum length so each group is a single matrix product
    for Nv in np.unique(N):
        m = N == Nv
        n = np.arange(1, Nv + 1)
        z[m] = 2.0 * (np.cos(theta[m, None] - t[m, None] * np.log(n))
                      @ (n ** -0.5))
    parity = np.where(N % 2 == 1, 1.0, -1.0)  # (-1)^(N-1)
    return z + _rs_remainder(a, p, parity)


def riemann_siegel_z(t):
    """Z(t) with |Z(t)| = |zeta(1/2+it)|; uses the oracle below T_CROSS."""
    t = abs(float(t))
    if t >= T_CROSS:
        return float(rs_z_vec(np.array([t]))[0])
    z = euler_maclaurin_zeta(0.5 + 1j * t, _em_n_terms(t))
    theta = _theta_small(t) if t < 1.0 else rs_theta(t)
    return float((z * np.exp(1j * theta)).real)


def _theta_small(t):
    """theta(t) = arg Gamma(1/4 + it/2) - (t/2) log pi, for 0 <= t < 1."""
    import cmath
    # Lanczos g=7 approximation of Gamma(1/4 + it/2)
    z = 0.25 + 0.5j * t - 1
    c = [0.99999999999980993, 676.5203681218851, -1259.1392167224028,
         771.32342877765313, -176.61502916214059, 12.507343278686905,
         -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7]
    x = c[0]
    for i in range(1, 9):
        x += c[i] / (z + i)
    w = z + 7.5
    gamma = math.sqrt(2 * math.pi) * w ** (z + 0.5) * cmath.exp(-w) * x
    return cmath.phase(gamma) - 0.5 * t * math.log(math.pi)


def zeta_half(t):
    """zeta(1/2 + it) for real t; absolute error <= 1e-8 on [0, 1e6].

    Negative t is handled by Schwarz reflection.
    """
    t = float(t)
    if not math.isfinite(t):
        raise DomainError("t must be finite")
    if t < 0:
        return np.conj(zeta_half(-t))
    if t < T_CROSS:
        return euler_maclaurin_zeta(0.5 + 1j * t, _em_n_terms(t))
    z = float(rs_z_vec(np.array([t]))[0])
    return z * np.exp(-1j * rs_theta(t))


def zeta_half_vec(t):
    """Vectorized zeta(1/2 + it) for a nonnegative float array."""
    t = np.asarray(t, dtype=float)
    out = np.empty(t.size, dtype=complex)
    lo = t < T_CROSS
    if np.any(lo):
        out[lo] = _em_half_line_vec(t[lo])
    hi = ~lo
    if np.any(hi):
        out[hi] = rs_z_vec(t[hi]) * np.exp(-1j * _rs_theta_vec(t[hi]))
    return out


def zeta_half_err(t):
    """Documented absolute error bound of zeta_half at height t."""
    t = np.asarray(t, dtype=float)
    at = np.abs(t)
    at_hi = np.maximum(at, T_CROSS)
    return np.where(at < T_CROSS, 1e-12,
                    ERR_RS_C * at_hi ** -0.75 + ERR_RS_PHASE * at_hi)


def first_zero(lo=14.0, hi=14.2, tol=1e-12):
    """Bisect Z(t) on [lo, hi]; returns the abscissa of the sign change."""
    f_lo = riemann_siegel_z(lo)
    f_hi = riemann_siegel_z(hi)
    if f_lo * f_hi > 0:
        raise DomainError(f"Z does not change sign on [{lo}, {hi}]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        f_mid = riemann_siegel_z(mid)
        if f_lo * f_mid <= 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)
