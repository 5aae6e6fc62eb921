"""Certified numerical evaluation on Re s > 1: the zeta function, Dirichlet
series of unit-disc completely multiplicative functions, Dirichlet
L-functions, and logarithmic derivatives.

Every result is a CertifiedValue: a complex value plus a rigorous radius
bounding the truncation error, derived from an explicit analytic tail
bound (never a heuristic).  Float round-off is NOT folded into the radius;
a separate terms * eps * magnitude estimate is reported alongside.

Routes:

* ``zeta``: Euler-Maclaurin summation.  Partial sum to N, the integral
  term N^(1-s)/(s-1), the half-term correction, and Bernoulli corrections
  B_2r; the remainder after the B_2K term is bounded by the classical
  Backlund estimate |next term| * |s+2K+1|/(sigma+2K+1).  A bare partial
  sum plus integral tail cannot reach small radii near sigma = 1 within
  any feasible N; the correction terms fix that while keeping the bound
  explicit.
* ``dirichlet_F``: Euler product over primes <= P via the prime-power log
  series.  f is defined by prime values, so direct summation over n would
  need a factorization per term; the product needs only the sieve.  The
  omitted log-mass over p > P is bounded through the explicit
  prime-counting inequality pi(u) < 1.25506 u / log u.
* ``log_derivative``: the weighted prime-power sum -sum Lambda(n) f(n)
  n^(-sigma) truncated at N, tail bounded by the exact integral of
  log(u) u^(-sigma).

All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import DomainError, PrecisionUnreachableError
from .multfunc import MultiplicativeFunction, character_fn
from .ntheory import PrimeTable

DELTA_MIN = 0.01  # floor on Re s - 1; truncation cost explodes below it

_EPS = 2.220446049250313e-16
_ZETA_N_CEILING = 1 << 22

# B_2, B_4, ..., B_30
_BERNOULLI_EVEN = [
    Fraction(1, 6), Fraction(-1, 30), Fraction(1, 42), Fraction(-1, 30),
    Fraction(5, 66), Fraction(-691, 2730), Fraction(7, 6), Fraction(-3617, 510),
    Fraction(43867, 798), Fraction(-174611, 330), Fraction(854513, 138),
    Fraction(-236364091, 2730), Fraction(8553103, 6), Fraction(-23749461029, 870),
    Fraction(8615841276005, 14322),
]
_B_OVER_FACT = [float(b) / math.factorial(2 * (i + 1)) for i, b in enumerate(_BERNOULLI_EVEN)]
_K_MAX = len(_BERNOULLI_EVEN) - 1  # keep one spare term for the remainder bound


@dataclass(frozen=True)
class CertifiedValue:
    """value with |true - value| <= radius from truncation alone.

    ``roundoff`` is the separate float round-off estimate
    (terms * machine eps * magnitude); it is documented, not certified.
    """

    value: complex
    radius: float
    roundoff: float = 0.0

    @property
    def abs_lower(self) -> float:
        return max(abs(self.value) - self.radius, 0.0)

    @property
    def abs_upper(self) -> float:
        return abs(self.value) + self.radius

    def log_abs(self) -> tuple[float, float]:
        """(log|value|, rigorous radius), requires radius < |value|."""
        a = abs(self.value)
        if self.radius >= a:
            raise PrecisionUnreachableError(
                f"radius {self.radius} swallows |value| {a}; cannot take log"
            )
        val = math.log(a)
        rad = max(val - math.log(a - self.radius), math.log(a + self.radius) - val)
        return val, rad


def _check_sigma(s: complex, name: str = "s") -> None:
    if s.real < 1.0 + DELTA_MIN:
        raise DomainError(
            f"Re {name} must be >= {1 + DELTA_MIN} (got {s.real}); "
            "the series are only evaluated on that closed half-plane"
        )


# ---------------------------------------------------------------------------
# zeta

def _em_tail_terms(s: complex, n: int, k: int) -> tuple[complex, float]:
    """(sum of B_2r corrections r <= k, Backlund remainder bound)."""
    total = 0j
    rising = s  # prod_{j=0}^{2r-2} (s+j), built incrementally
    n_pow = complex(n) ** (-s - 1)  # N^(-s-2r+1) at r = 1
    term = 0j
    for r in range(1, k + 2):
        term = _B_OVER_FACT[r - 1] * rising * n_pow
        if r <= k:
            total += term
        if r == k + 1:
            bound = abs(term) * abs(s + 2 * k + 1) / (s.real + 2 * k + 1)
            return total, bound
        rising = rising * (s + 2 * r - 1) * (s + 2 * r)
        n_pow /= n * n
    raise AssertionError("unreachable")


def _em_best_k(s: complex, n: int) -> tuple[int, float]:
    best_k, best_bound = 0, math.inf
    for k in range(_K_MAX + 1):
        _, bound = _em_tail_terms(s, n, k)
        if bound < best_bound:
            best_k, best_bound = k, bound
        elif bound > 10 * best_bound:
            break  # terms are growing; no point continuing
    return best_k, best_bound


def zeta(s: complex, target_radius: float = 1e-10) -> CertifiedValue:
    """zeta(s) on Re s > 1 with certified truncation radius <= target."""
    s = complex(s)
    _check_sigma(s)
    if s == 1:
        raise DomainError("zeta pole at s = 1")
    n = 16
    while n <= _ZETA_N_CEILING:
        k, bound = _em_best_k(s, n)
        if bound <= target_radius:
            ns = np.arange(1, n + 1, dtype=np.float64)
            partial = complex(np.sum(np.exp(-s * np.log(ns))))
            integral = complex(n) ** (1 - s) / (s - 1)
            half = -0.5 * complex(n) ** (-s)
            corrections, bound = _em_tail_terms(s, n, k)
            value = partial + integral + half + corrections
            roundoff = (n + k + 3) * _EPS * abs(value)
            return CertifiedValue(value, bound, roundoff)
        n *= 2
    raise PrecisionUnreachableError(
        f"zeta({s}) cannot reach radius {target_radius} within N = {_ZETA_N_CEILING}"
    )


def zeta_sigma_upper(sigma: float) -> float:
    """Cheap rigorous upper bound for zeta(sigma), any sigma > 1."""
    if sigma <= 1:
        raise DomainError("need sigma > 1")
    if sigma >= 1 + DELTA_MIN:
        cv = zeta(sigma, 1e-9)
        return cv.value.real + cv.radius
    return sigma / (sigma - 1)  # 1 + integral bound


# ---------------------------------------------------------------------------
# Euler products

_PRIME_COUNT_C = 1.25506  # pi(u) < C u / log u for all u > 1
_INNER_CUT = 1e-22


def _prime_tail_log(sigma: float, p_cut: float) -> float:
    """Bound on sum_{p > P} sum_{k>=1} p^(-k sigma) / k, the log-scale mass
    the truncated Euler product omits.  Partial summation against
    pi(u) < C u/log u gives sum_{p>P} p^(-a) <= C a P^(1-a) / ((a-1) log P);
    apply it at a = sigma (k = 1) and a = 2 sigma (the geometric k >= 2
    block)."""
    lp = math.log(p_cut)
    t1 = _PRIME_COUNT_C * sigma / ((sigma - 1.0) * lp) * p_cut ** (1.0 - sigma)
    t2 = (
        _PRIME_COUNT_C * 2.0 * sigma / ((2.0 * sigma - 1.0) * lp)
        * p_cut ** (1.0 - 2.0 * sigma)
        / (2.0 * (1.0 - 2.0 ** (-sigma)))
    )
    return t1 + t2


def dirichlet_F(
    f: MultiplicativeFunction,
    s: complex,
    target_radius: float | None,
    table: PrimeTable,
) -> CertifiedValue:
    """F(s) = sum f(n) n^(-s) for completely multiplicative unit-disc f,
    via exp(sum_{p <= P} sum_k f(p)^k p^(-ks) / k).

    target_radius=None means best effort at P = table.limit, reporting the
    achieved radius.  Slow convergence near sigma = 1 is genuine: the
    omitted primes carry mass ~ P^(1-sigma)/((sigma-1) log P), so small
    radii may be unreachable; that raises PrecisionUnreachableError rather
    than returning an optimistic radius.
    """
    s = complex(s)
    _check_sigma(s)
    sigma = s.real
    limit = table.limit

    if target_radius is not None:
        # |F| <= zeta(sigma), so radius <= zeta_upper * expm1(tail)
        z_up = zeta_sigma_upper(sigma)
        p_cut = 64
        while p_cut < limit and z_up * math.expm1(_prime_tail_log(sigma, p_cut)) > target_radius:
            p_cut *= 2
        p_cut = min(p_cut, limit)
        if z_up * math.expm1(_prime_tail_log(sigma, p_cut)) > target_radius:
            raise PrecisionUnreachableError(
                f"Euler product at s={s}: radius {target_radius} unreachable with "
                f"primes up to {limit} (achievable ~ "
                f"{z_up * math.expm1(_prime_tail_log(sigma, limit)):.3g}); "
                "raise the sieve limit or the target"
            )
    else:
        p_cut = limit

    ps = table.primes_up_to(p_cut)
    fp = f.prime_values(ps, table)
    logp = np.log(ps)
    log_f = complex(np.sum(fp * np.exp(-s * logp)))
    n_terms = len(ps)

    dropped = 0.0
    fp_pow = fp
    k = 2
    while True:
        # primes with p^(k sigma) above the drop cut still matter at this k
        thresh = _INNER_CUT ** (-1.0 / (k * sigma))
        if thresh < 2:
            break
        m = int(np.searchsorted(ps, thresh, side="right"))
        if m == 0:
            break
        fp_pow = fp_pow[:m] * fp[:m]
        log_f += complex(np.sum(fp_pow * np.exp((-k * s) * logp[:m]))) / k
        n_terms += m
        if m < len(ps):
            # each dropped term is below the cut; count them explicitly
            dropped += (len(ps) - m) * _INNER_CUT
        if thresh > ps[-1] and k * math.log(2) * sigma > -math.log(_INNER_CUT):
            break
        k += 1

    tail = _prime_tail_log(sigma, float(p_cut)) + dropped
    value = complex(np.exp(log_f))
    radius = abs(value) * math.expm1(tail)
    roundoff = n_terms * _EPS * abs(value) * max(1.0, abs(log_f))
    return CertifiedValue(value, radius, roundoff)


def l_function(chi, s: complex, target_radius: float | None, table: PrimeTable) -> CertifiedValue:
    """L(s, chi) via the Euler product; for principal chi, exactly
    zeta(s) * prod_{p | q} (1 - p^(-s))."""
    s = complex(s)
    _check_sigma(s)
    if chi.is_principal:
        target = 1e-12 if target_radius is None else target_radius
        factor = 1 + 0j
        m = chi.modulus
        p = 2
        while p * p <= m:
            if m % p == 0:
                factor *= 1 - p ** (-s)
                while m % p == 0:
                    m //= p
            p += 1
        if m > 1:
            factor *= 1 - m ** (-s)
        zv = zeta(s, target / max(abs(factor), 1e-30))
        return CertifiedValue(
            zv.value * factor, zv.radius * abs(factor), zv.roundoff * abs(factor)
        )
    return dirichlet_F(character_fn(chi), s, target_radius, table)


# ---------------------------------------------------------------------------
# Logarithmic derivatives

def _logderiv_tail(sigma: float, n: int) -> float:
    """integral_N^inf log(u) u^(-sigma) du, bounding the omitted
    Lambda-weighted mass (Lambda(n) <= log n)."""
    a = sigma - 1.0
    return n ** (-a) * (math.log(n) / a + 1.0 / (a * a))


def log_derivative(
    f: MultiplicativeFunction,
    sigma: float,
    target_radius: float | None,
    table: PrimeTable,
) -> CertifiedValue:
    """F'(sigma)/F(sigma) = -sum_n Lambda(n) f(n) n^(-sigma), summed over
    prime powers <= N with the integral tail bound.  f = one gives
    zeta'/zeta.  target_radius=None means best effort at N = table.limit.
    """
    sigma = float(sigma)
    _check_sigma(complex(sigma), "sigma")
    limit = table.limit
    if target_radius is None:
        n_cut = limit
    else:
        n_cut = 1 << 10
        while n_cut < limit and _logderiv_tail(sigma, n_cut) > target_radius:
            n_cut *= 2
        n_cut = min(n_cut, limit)
        if _logderiv_tail(sigma, n_cut) > target_radius:
            raise PrecisionUnreachableError(
                f"log-derivative at sigma={sigma}: radius {target_radius} unreachable "
                f"with n <= {limit} (achievable ~ {_logderiv_tail(sigma, limit):.3g})"
            )

    ps = table.primes_up_to(n_cut)
    fp = f.prime_values(ps, table)
    logp = np.log(ps)
    total = complex(np.sum(logp * fp * np.exp(-sigma * logp)))
    n_terms = len(ps)
    fp_pow = fp
    k = 2
    while 2**k <= n_cut:
        m = int(np.searchsorted(ps, n_cut ** (1.0 / k), side="right"))
        if m == 0:
            break
        fp_pow = fp_pow[:m] * fp[:m]
        total += complex(np.sum(logp[:m] * fp_pow * np.exp((-sigma * k) * logp[:m])))
        n_terms += m
        k += 1
    value = -total
    return CertifiedValue(value, _logderiv_tail(sigma, n_cut), n_terms * _EPS * abs(value))
