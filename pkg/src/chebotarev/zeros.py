"""Zero-free-region constants and zero-counting bounds for zeta_L.

Two families of bounds on N_L(T), the number of nontrivial zeros of the
Dedekind zeta function with |Im rho| <= T, are implemented:

* alpha0(T): N_L(T) <= alpha0(T) log d_L, obtained by minimizing over
  eps > 0 a bound built from the explicit formula evaluated at
  1 + eps + iT.  Sharper for small T (T <= 1).

* alpha0_prime(T): the Hasanalizade-Shen-Wong counting bound
  |N_L(T) - P_L(T)| <= E_L(T) folded through the Minkowski inequality.
  Sharper for T >= 2.

The same counting data yields the window constants b1..b4 bounding
N_L(T+1) - N_L(T-1), the zero-density kernel Q(u,t) >= N_L(u) - N_L(t),
and the threshold pairs (omega0, t0) with
Q(u,t) < omega0 * (u n_L / pi) log(Delta_L u) for u >= t >= t0.

Everything here is a pure function of its arguments; the one-dimensional
eps-minimization allocates only local state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import DomainError, NumericError
from .invariants import FieldParams, MinkowskiRow

__all__ = [
    "ALPHA1",
    "ALPHA2",
    "ALPHA3",
    "R1",
    "R2",
    "EPS0_WINDOW",
    "ZeroFreeConstants",
    "c123",
    "alpha0",
    "alpha0_prime",
    "window_coeffs",
    "P_E_L",
    "Q_kernel",
    "Q_kernel_partial_u",
    "solve_omega0",
    "solve_t0",
]

# Counting constants of Hasanalizade-Shen-Wong:
# |N_L(T) - P_L(T)| <= alpha1 (log d_L + n_L log T) + alpha2 n_L + alpha3.
ALPHA1 = 0.228
ALPHA2 = 23.108
ALPHA3 = 4.520

# Zero-free regions: apart from at most one real zero beta_0, zeta_L does
# not vanish for Re s >= 1 - 1/(R1 n_L log(4 Delta_L)) when |Im s| <= 2,
# nor for Re s >= 1 - 1/(R2 n_L log(Delta_L |Im s|)) when |Im s| > 2.
R1 = 20.0
R2 = 12.2411

# eps minimizing c1(1,eps)(1 + log(1 + (2+eps)/3)/log 3), fixed once for
# the window constants b1..b4.
EPS0_WINDOW = 1.1814


@dataclass(frozen=True)
class ZeroFreeConstants:
    """Zero-free-region data, toggled by the presence of the exceptional
    real zero beta_0.

    a_beta0 multiplies the free term delta/a_beta0 of the smoothed bound
    (1 if beta_0 exists, else 2); alpha4 scales the low-lying region
    |s - 1| < 1/(alpha4 log d_L) that contains no zero other than beta_0
    (1.7 if beta_0 exists, else 2).
    """

    beta0_present: bool

    R1: float = R1
    R2: float = R2

    @property
    def alpha4(self) -> float:
        return 1.7 if self.beta0_present else 2.0

    @property
    def a_beta0(self) -> int:
        return 1 if self.beta0_present else 2


def c123(a: float, eps: float, T: float) -> tuple[float, float, float]:
    """Per-character coefficients of the zero-window count n_{chi,a}(T).

    n_{chi,a}(T) <= c1 log A(chi) + c2 n_E + c3 1(chi principal), with

        c1 = ((1+eps)^2 + a^2) / (2 eps),
        c2 = c1 log(2 + eps + |T|) + 2 c1 (1/eps + 539/268),
        c3 = 2 c1 ((1+eps)/sqrt((1+eps)^2+T^2) + eps/sqrt(eps^2+T^2)).
    """
    if a <= 0 or eps <= 0:
        raise DomainError(f"need a > 0 and eps > 0, got a={a}, eps={eps}")
    one = 1.0 + eps
    c1 = (one * one + a * a) / (2.0 * eps)
    c2 = c1 * math.log(2.0 + eps + abs(T)) + 2.0 * c1 * (1.0 / eps + 539.0 / 268.0)
    c3 = 2.0 * c1 * (one / math.hypot(one, T) + eps / math.hypot(eps, T))
    return c1, c2, c3


def _count_bound(T: float, eps: float, M: float, log_d0: float) -> float:
    """B(T, eps): per-log-d_L zero count after the Minkowski substitution.

    Summing the c123 bound over characters with window radius a = T and
    center 0 gives N_L(T) <= (c1 + c2 M + c3/log d0) log d_L.
    """
    c1, c2, c3 = c123(T, eps, 0.0)
    return c1 + c2 * M + c3 / log_d0


def _count_bound_vec(T: float, eps: np.ndarray, M: float, log_d0: float) -> np.ndarray:
    one = 1.0 + eps
    c1 = (one * one + T * T) / (2.0 * eps)
    c2 = c1 * np.log(2.0 + eps) + 2.0 * c1 * (1.0 / eps + 539.0 / 268.0)
    c3 = 4.0 * c1  # both square roots collapse at window center 0
    return c1 + c2 * M + c3 / log_d0


def _golden_min(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    invphi = (math.sqrt(5.0) - 1.0) / 2.0
    invphi2 = (3.0 - math.sqrt(5.0)) / 2.0
    a, b = lo, hi
    h = b - a
    c, d = a + invphi2 * h, a + invphi * h
    yc, yd = f(c), f(d)
    while h > tol * max(1.0, abs(a) + abs(b)):
        h *= invphi
        if yc < yd:
            b, d, yd = d, c, yc
            c = a + invphi2 * h
            yc = f(c)
        else:
            a, c, yc = c, d, yd
            d = a + invphi * h
            yd = f(d)
    return 0.5 * (a + b)


_EPS_LO, _EPS_HI = 1e-3, 50.0
_GRID_SIZE = 100_000


@lru_cache(maxsize=512)
def _alpha0_cached(T: float, M: float, log_d0: float) -> float:
    # Guarded 1-D minimization: B(T, .) is smooth and empirically unimodal
    # on [1e-3, 50]; the dense grid protects against that assumption
    # failing, golden-section refines the winner.
    eps = np.geomspace(_EPS_LO, _EPS_HI, _GRID_SIZE)
    vals = _count_bound_vec(T, eps, M, log_d0)
    if not np.all(np.isfinite(vals)):
        raise NumericError("zero-count bound overflowed during minimization")
    i = int(np.argmin(vals))
    lo = eps[max(0, i - 2)]
    hi = eps[min(len(eps) - 1, i + 2)]
    best = _golden_min(lambda e: _count_bound(T, e, M, log_d0), lo, hi)
    return min(float(vals[i]), _count_bound(T, best, M, log_d0))


def alpha0(T: float, row: MinkowskiRow) -> float:
    """min over eps > 0 of B(T, eps):  N_L(T) <= alpha0(T) log d_L."""
    if T <= 0:
        raise DomainError(f"T must be positive, got {T}")
    return _alpha0_cached(float(T), row.M, row.log_d0)


def alpha0_prime(T: float, row: MinkowskiRow) -> float:
    """Counting-theorem coefficient: N_L(T) <= alpha0_prime(T) log d_L.

    T/pi + alpha1 + M (T/pi log(T/(2 pi e)) + alpha1 log T + alpha2)
    + alpha3/log d_0, valid for T >= 1.
    """
    if T < 1:
        raise DomainError(f"T must be >= 1, got {T}")
    return (
        T / math.pi
        + ALPHA1
        + row.M
        * ((T / math.pi) * math.log(T / (2 * math.pi * math.e)) + ALPHA1 * math.log(T) + ALPHA2)
        + ALPHA3 / row.log_d0
    )


# published window constants, nominally the raw values below rounded at the
# fourth decimal (b3 was rounded to nearest where the others round up; kept
# verbatim)
_WINDOW_COEFFS = (8.0818, 27.8581, 4.8743, 9.3052)


def window_coeffs() -> tuple[float, float, float, float]:
    """Constants (b1, b2, b3, b4) of the unit-window zero count

        N_L(T+1) - N_L(T-1) <= b1 n_L log T + b2 n_L + b3 log d_L + b4

    for T >= 3, at eps = EPS0_WINDOW.  Derived for completeness; nothing
    downstream consumes them.  The stored values differ from a fresh
    evaluation of `window_coeffs_raw` by less than 1e-4.
    """
    return _WINDOW_COEFFS


def window_coeffs_raw() -> tuple[float, float, float, float]:
    """Unrounded recomputation of (b1, b2, b3, b4) from c123."""
    c1, _, _ = c123(1.0, EPS0_WINDOW, 0.0)
    _, _, c3_at3 = c123(1.0, EPS0_WINDOW, 3.0)
    b1 = 2 * c1 * (1 + math.log(1 + (2 + EPS0_WINDOW) / 3) / math.log(3))
    b2 = 4 * c1 * (1 / EPS0_WINDOW + 539.0 / 268.0)
    b3 = 2 * c1
    b4 = 2 * c3_at3
    return b1, b2, b3, b4


def P_E_L(T: float, field: FieldParams) -> tuple[float, float]:
    """Main term and error radius of the zero count:

        P_L(T) = (T/pi) (log d_L + n_L log(T/(2 pi e))),
        E_L(T) = alpha1 (log d_L + n_L log T) + alpha2 n_L + alpha3,

    so that |N_L(T) - P_L(T)| <= E_L(T) for T >= 1.
    """
    if T < 1:
        raise DomainError(f"T must be >= 1, got {T}")
    P = (T / math.pi) * (field.log_dL + field.n_L * math.log(T / (2 * math.pi * math.e)))
    E = ALPHA1 * (field.log_dL + field.n_L * math.log(T)) + ALPHA2 * field.n_L + ALPHA3
    return P, E


def Q_kernel(u: float, t: float, field: FieldParams) -> float:
    """Zero-density kernel Q(u, t) >= N_L(u) - N_L(t) for u >= t >= 1:

    (n u/pi) log(Delta u/(2 pi e)) - (n t/pi) log(Delta t/(2 pi e))
    + 2 alpha1 n log(Delta sqrt(ut)) + 2 alpha2 n + 2 alpha3.
    """
    if not (u >= t >= 1):
        raise DomainError(f"need u >= t >= 1, got u={u}, t={t}")
    n = field.n_L
    ld = field.log_delta_L
    l2pe = math.log(2 * math.pi * math.e)
    return (
        (n * u / math.pi) * (ld + math.log(u) - l2pe)
        - (n * t / math.pi) * (ld + math.log(t) - l2pe)
        + 2 * ALPHA1 * n * (ld + 0.5 * math.log(u * t))
        + 2 * ALPHA2 * n
        + 2 * ALPHA3
    )


def Q_kernel_partial_u(u: float, field: FieldParams) -> float:
    """dQ/du (u, t) = (n/pi) log(Delta u/(2 pi)) + alpha1 n / u."""
    n = field.n_L
    return (n / math.pi) * (field.log_delta_L + math.log(u) - math.log(2 * math.pi)) + ALPHA1 * n / u


def solve_omega0(t0: float) -> float:
    """Smallest kernel coefficient admissible at threshold t0:

        omega0 = (pi/t0) (2 alpha1 + (2 alpha2 + alpha3)/log(sqrt(3) t0)),

    strictly decreasing in t0 where log(sqrt(3) t0) > 0.
    """
    if t0 <= 1 / math.sqrt(3):
        raise DomainError(f"t0 must exceed 1/sqrt(3), got {t0}")
    return (math.pi / t0) * (2 * ALPHA1 + (2 * ALPHA2 + ALPHA3) / math.log(math.sqrt(3) * t0))


def solve_t0(omega0: float) -> float:
    """Invert solve_omega0: smallest t0 with Q(u,t) < omega0 (u n/pi) log(Delta u)
    for all u >= t >= t0.  Bisection on (1, 1e9]; the profile is strictly
    decreasing there."""
    if omega0 < 1:
        raise DomainError(f"omega0 must be >= 1, got {omega0}")
    lo, hi = 1.0, 1e9
    f = lambda t: solve_omega0(t) - omega0
    if not (f(lo) > 0 > f(hi)):
        raise NumericError(f"bisection bracket failed for omega0={omega0}")
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if f(mid) > 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)
