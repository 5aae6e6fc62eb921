"""Mean values of unit-disc multiplicative functions and the diagnostics
connecting them to prime distances.

The mean (1/x) sum_{n <= x} f(n) is compared against two scales:

* the heuristic exp(-sum_{p <= x} (1 - f(p))/p), the Euler-product guess,
  sharp up to constants for non-negative f and, with the exponent damped
  by kappa = 0.3286, an upper-bound shape for real-valued f (kappa is
  stored exactly as printed; larger values are known to fail);
* the minimization bound (1 + M) e^(-M) + 1/sqrt(T) with
  M = min_{|t| <= 2T} sum_{p <= x} (1 - Re f(p) p^(-it)) / p.

None of the absolute constants in these bounds are asserted; diagnostics
return ratios, and scan helpers report the running maximum over seeded
families as the empirical constant.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .distance import HalaszGrid, halasz_M
from .errors import DomainError
from .multfunc import MultiplicativeFunction, random_function, values_up_to
from .ntheory import PrimeTable

HALL_KAPPA = 0.3286  # truncation of the sharp constant, as printed


@dataclass(frozen=True)
class MeanValueReport:
    f: str
    x: int
    T: float
    mean: complex
    heuristic: float
    M: float
    t_star: float
    halasz_rhs: float
    ratio_heuristic: float
    ratio_halasz: float


def mean_value(f: MultiplicativeFunction, x: int, table: PrimeTable) -> complex:
    """(1/x) sum_{n <= x} f(n), exact finite average; |result| <= 1 + eps."""
    if x < 1:
        raise DomainError(f"need x >= 1, got {x}")
    vals = values_up_to(f, x, table)
    return complex(vals[1:].sum() / x)


def _prime_deficit(f: MultiplicativeFunction, x: int, table: PrimeTable) -> float:
    """sum_{p <= x} (1 - Re f(p)) / p accumulated ascending-by-term size."""
    ps = table.primes_up_to(x)
    fv = f.prime_values_for(table)[: len(ps)]
    terms = (1.0 - fv.real) / ps
    return float(np.add.reduce(terms[::-1]))


def heuristic_value(
    f: MultiplicativeFunction, x: int, table: PrimeTable, allow_complex: bool = False
) -> float:
    """exp(-sum_{p <= x} (1 - f(p))/p).

    The display is real-valued; complex f is admitted only with
    allow_complex=True, in which case Re f(p) is used.
    """
    if not allow_complex and not f.is_real_on_primes(table, x):
        raise DomainError(
            "heuristic_value needs f real-valued on primes; pass allow_complex=True "
            "to use Re f(p)"
        )
    return math.exp(-_prime_deficit(f, x, table))


@dataclass(frozen=True)
class HallReport:
    f: str
    x: int
    kappa: float
    mean_abs: float
    damped_heuristic: float  # exp(-kappa sum (1 - f(p))/p)
    ratio: float


def hall_real_diagnostic(
    f: MultiplicativeFunction, x: int, table: PrimeTable
) -> HallReport:
    """|mean| / exp(-kappa sum_{p<=x} (1-f(p))/p) for real-valued f with
    -1 <= f(p) <= 1.  The implied constant is unknown; the ratio is
    reported, not asserted."""
    if not f.is_real_on_primes(table, x):
        raise DomainError("hall diagnostic needs f real-valued on primes")
    m = abs(mean_value(f, x, table))
    damped = math.exp(-HALL_KAPPA * _prime_deficit(f, x, table))
    return HallReport(f.label, x, HALL_KAPPA, m, damped, m / damped)


def hall_family_scan(
    count: int, x: int, seed: int, table: PrimeTable, mode: str = "real-signed"
) -> tuple[list[HallReport], float]:
    """Hall diagnostic over a seeded family of random real functions;
    returns (reports, max ratio) with the max as the empirical constant."""
    reports = []
    for i in range(count):
        f = random_function(seed + i, mode)
        reports.append(hall_real_diagnostic(f, x, table))
    return reports, max(r.ratio for r in reports)


def halasz_report(
    f: MultiplicativeFunction,
    x: int,
    T: float,
    table: PrimeTable,
    grid: HalaszGrid | None = None,
) -> MeanValueReport:
    """Assemble the mean, the heuristic, the minimization M(x, T) and the
    bound shape (1 + M) e^(-M) + 1/sqrt(T); ratios reported.  Only the
    bound's shape is meaningful (the absolute constant is not specified
    here); family scans track the running max ratio."""
    mean = mean_value(f, x, table)
    hm = halasz_M(f, x, T, table, grid)
    rhs = (1.0 + hm.value) * math.exp(-hm.value) + 1.0 / math.sqrt(T)
    heur = heuristic_value(f, x, table, allow_complex=True)
    return MeanValueReport(
        f=f.label,
        x=x,
        T=T,
        mean=mean,
        heuristic=heur,
        M=hm.value,
        t_star=hm.t_star,
        halasz_rhs=rhs,
        ratio_heuristic=abs(mean) / heur if heur > 0 else math.inf,
        ratio_halasz=abs(mean) / rhs,
    )


def progression_mean(
    f: MultiplicativeFunction, x: int, q: int, a: int, table: PrimeTable
) -> complex:
    """(q/x) sum_{n <= x, n = a mod q} f(n) for gcd(a, q) = 1."""
    if q < 1 or x < 1:
        raise DomainError("need q >= 1 and x >= 1")
    if q >= x:
        raise DomainError(f"need q < x, got q={q}, x={x}")
    if math.gcd(a, q) != 1:
        raise DomainError(f"progression needs gcd(a, q) = 1, got gcd({a}, {q})")
    vals = values_up_to(f, x, table)
    start = a % q
    if start == 0:  # only q = 1 reaches here
        start = q
    return complex(vals[start:: q].sum() * (q / x))
