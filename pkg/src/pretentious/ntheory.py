"""Prime sieving, factorization, classical arithmetic functions, and
Dirichlet convolution/deconvolution.

Two sieve modes back everything else:

* primes-only: a segmented byte sieve.  Scales to ``PRIMES_ONLY_CEILING``
  (the prime array itself is the memory bound); 1e8 is routine on a desk
  machine.
* spf: additionally stores the smallest prime factor of every n <= limit,
  making per-n factorization O(log n).  The int32 array caps this mode at
  ``SPF_CEILING``; 1e7 is the practical default.

All tables are immutable after construction and safe to share across
threads or processes; every operation here is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import CapacityError, DomainError, NonInvertibleError

PRIMES_ONLY_CEILING = 2_000_000_000
SPF_CEILING = 100_000_000

_SEGMENT_SIZE = 1 << 22


@dataclass(frozen=True, eq=False)
class PrimeTable:
    """Sieve artifact: ascending primes <= limit, plus (spf mode) the
    smallest-prime-factor array indexed by n (entries 0 and 1 are unused)."""

    limit: int
    primes: np.ndarray
    spf: np.ndarray | None = None

    def __post_init__(self):
        self.primes.setflags(write=False)
        if self.spf is not None:
            self.spf.setflags(write=False)

    @property
    def has_spf(self) -> bool:
        return self.spf is not None

    def check_capacity(self, n: int, what: str = "n") -> None:
        if n > self.limit:
            raise CapacityError(
                f"{what}={n} exceeds table limit {self.limit}; rebuild with a larger sieve"
            )

    def primes_up_to(self, x: int) -> np.ndarray:
        """View of the primes <= x (x <= limit)."""
        self.check_capacity(x, "x")
        k = int(np.searchsorted(self.primes, x, side="right"))
        return self.primes[:k]

    def prime_count(self, x: int | None = None) -> int:
        if x is None:
            return len(self.primes)
        return len(self.primes_up_to(x))


@dataclass(frozen=True)
class Factorization:
    """n = prod p^e with primes strictly ascending; n = 1 has no factors."""

    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def big_omega(self) -> int:
        """Number of prime factors counted with multiplicity."""
        return sum(e for _, e in self.factors)


def _simple_sieve(limit: int) -> np.ndarray:
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    for p in range(2, math.isqrt(limit) + 1):
        if is_p[p]:
            is_p[p * p:: p] = False
    return np.flatnonzero(is_p).astype(np.int64)


def _segmented_primes(limit: int) -> np.ndarray:
    root = math.isqrt(limit)
    base = _simple_sieve(root)
    if limit <= root:
        return base[base <= limit]
    out = [base]
    lo = root + 1
    while lo <= limit:
        hi = min(lo + _SEGMENT_SIZE - 1, limit)
        seg = np.ones(hi - lo + 1, dtype=bool)
        for p in base:
            p = int(p)
            start = ((lo + p - 1) // p) * p
            seg[start - lo:: p] = False
        out.append(np.flatnonzero(seg).astype(np.int64) + lo)
        lo = hi + 1
    return np.concatenate(out)


def _spf_sieve(limit: int) -> np.ndarray:
    spf = np.zeros(limit + 1, dtype=np.int32)
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == 0:
            block = spf[p * p:: p]
            block[block == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest.astype(np.int32)
    return spf


def build_prime_table(limit: int, mode: str = "primes") -> PrimeTable:
    """Sieve up to ``limit``.

    mode="primes": segmented sieve, primes only (limit <= PRIMES_ONLY_CEILING).
    mode="spf": also record smallest prime factors (limit <= SPF_CEILING).
    """
    if limit < 2:
        raise CapacityError(f"sieve limit must be >= 2, got {limit}")
    if mode == "primes":
        if limit > PRIMES_ONLY_CEILING:
            raise CapacityError(
                f"limit {limit} exceeds primes-only ceiling {PRIMES_ONLY_CEILING}"
            )
        return PrimeTable(limit=limit, primes=_segmented_primes(limit))
    if mode == "spf":
        if limit > SPF_CEILING:
            raise CapacityError(f"limit {limit} exceeds spf ceiling {SPF_CEILING}")
        spf = _spf_sieve(limit)
        ns = np.arange(limit + 1, dtype=np.int64)
        primes = ns[2:][spf[2:] == ns[2:]]
        return PrimeTable(limit=limit, primes=primes, spf=spf)
    raise DomainError(f"unknown sieve mode {mode!r}; use 'primes' or 'spf'")


def factorize(n: int, table: PrimeTable) -> Factorization:
    """Factor n using the table (spf walk when available, trial division
    over sieved primes otherwise)."""
    if n < 1:
        raise DomainError(f"cannot factor n={n}; need n >= 1")
    table.check_capacity(n)
    if n == 1:
        return Factorization(1, ())
    factors: list[tuple[int, int]] = []
    if table.spf is not None:
        m = n
        while m > 1:
            p = int(table.spf[m])
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
    else:
        m = n
        for p in table.primes:
            p = int(p)
            if p * p > m:
                break
            if m % p == 0:
                e = 0
                while m % p == 0:
                    m //= p
                    e += 1
                factors.append((p, e))
        if m > 1:
            factors.append((m, 1))
    return Factorization(n, tuple(factors))


def von_mangoldt(n: int, table: PrimeTable) -> float:
    """log p when n is a power of the prime p, else 0."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    fac = factorize(n, table)
    if len(fac.factors) == 1:
        return math.log(fac.factors[0][0])
    return 0.0


def divisor_count_k(n: int, k: int, table: PrimeTable) -> int:
    """Number of ordered k-tuples of positive integers with product n.

    Multiplicative with value binomial(e + k - 1, k - 1) at p^e."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    fac = factorize(n, table)
    out = 1
    for _, e in fac.factors:
        out *= math.comb(e + k - 1, k - 1)
    return out


def divisor_count_sieve(n_max: int, k: int = 2) -> np.ndarray:
    """d_k(n) for all n <= n_max as an int64 array indexed by n (entry 0 unused).

    Built by k-1 successive divisor-sum passes over the all-ones array."""
    if k < 1:
        raise DomainError(f"need k >= 1, got {k}")
    vals = np.ones(n_max + 1, dtype=np.int64)
    vals[0] = 0
    for _ in range(k - 1):
        nxt = np.zeros(n_max + 1, dtype=np.int64)
        for a in range(1, n_max + 1):
            nxt[a::a] += vals[1: n_max // a + 1]
        vals = nxt
    return vals


@lru_cache(maxsize=4)
def flat_divisor_pairs(n_max: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """All pairs (a, b) with a*b = n <= n_max, flattened and sorted by n.

    Returns (n, a, b) int64 arrays; within each n the a values ascend.
    Roughly n_max * log(n_max) entries, the workhorse for convolution sums."""
    counts = n_max // np.arange(1, n_max + 1, dtype=np.int64)
    a = np.repeat(np.arange(1, n_max + 1, dtype=np.int64), counts)
    ends = np.cumsum(counts)
    starts = ends - counts
    b = np.arange(ends[-1], dtype=np.int64) - np.repeat(starts, counts) + 1
    n = a * b
    order = np.argsort(n, kind="stable")
    n, a, b = n[order], a[order], b[order]
    for arr in (n, a, b):
        arr.setflags(write=False)
    return n, a, b


def dirichlet_convolve(f_values, g_values) -> np.ndarray:
    """(f * g)(n) = sum_{ab=n} f(a) g(b) for n <= N, inputs indexed 1..N
    (element i is the value at n = i + 1)."""
    f = np.asarray(f_values, dtype=np.complex128)
    g = np.asarray(g_values, dtype=np.complex128)
    if len(f) != len(g):
        raise DomainError("f and g must cover the same range 1..N")
    n_max = len(f)
    n, a, b = flat_divisor_pairs(n_max)
    w = f[a - 1] * g[b - 1]
    re = np.bincount(n - 1, weights=w.real, minlength=n_max)
    im = np.bincount(n - 1, weights=w.imag, minlength=n_max)
    return re + 1j * im


def dirichlet_deconvolve(d_values, g_values) -> np.ndarray:
    """Solve (g * h)(n) = d(n) for h on 1..N by the triangular recursion

        h(n) = d(n) - sum_{l | n, l < n} h(l) g(n/l),

    requiring g(1) = 1.  Inputs indexed 1..N as in dirichlet_convolve.
    Always computed over complex numbers; the float error budget is about
    N * eps per term.
    """
    d = np.asarray(d_values, dtype=np.complex128)
    g = np.asarray(g_values, dtype=np.complex128)
    if len(d) != len(g):
        raise DomainError("d and g must cover the same range 1..N")
    n_max = len(d)
    if n_max == 0:
        return np.zeros(0, dtype=np.complex128)
    if g[0] != 1:
        raise NonInvertibleError(f"g(1) must be 1 for deconvolution, got {g[0]}")
    n_flat, a_flat, _ = flat_divisor_pairs(n_max)
    offsets = np.searchsorted(n_flat, np.arange(1, n_max + 2))
    h = np.empty(n_max, dtype=np.complex128)
    h[0] = d[0]
    for n in range(2, n_max + 1):
        divs = a_flat[offsets[n - 1]: offsets[n]]
        proper = divs[:-1]  # all divisors ascend, the last one is n itself
        h[n - 1] = d[n - 1] - np.dot(h[proper - 1], g[n // proper - 1])
    return h
