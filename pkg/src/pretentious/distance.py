"""Norm machinery on sequences of unit-disc values indexed by prime powers.

Two weight schemes:

* sigma weights a_q = Lambda(q) / (q^sigma log q) = 1/(k p^(k sigma)) at
  q = p^k, summable with total mass log zeta(sigma);
* prime weights a_p = 1/p at primes p <= x (zero elsewhere), giving the
  finite distance D(f, g; x)^2 = sum_{p <= x} (1 - Re f(p) conj(g(p))) / p.

Numerically, 1 - Re(z conj(w)) is evaluated as

    |z - w|^2 / 2  +  (1 - |z|^2)/2  +  (1 - |w|^2)/2

which is an exact identity and keeps every term nonnegative in floats; for
structurally unimodular functions the defect terms are pinned to exact
zero, so D(f, f; x) = 0 exactly and the Halasz minimum hits an exact zero
when the twist lands on a grid point.

Summation order: terms are accumulated in descending-p order (smallest
terms first); that fixed order is the canonical one for reproducibility.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import CapacityError, DomainError
from .multfunc import MultiplicativeFunction, one
from .ntheory import PrimeTable
from .series import zeta_sigma_upper

_DISC_SLACK = 1e-12

DEFAULT_SIGMA_CUTOFF = 10**6


# ---------------------------------------------------------------------------
# eta and weights

def eta(z: complex, a: float) -> float:
    """sqrt(a (1 - Re z)) for z in the closed unit disc, a >= 0.

    Subadditive under multiplication of unimodular arguments (and, tested
    numerically, on the whole disc), which is what makes the norms below
    triangle inequalities.
    """
    if a < 0:
        raise DomainError(f"weight a must be >= 0, got {a}")
    z = complex(z)
    if abs(z) > 1.0 + _DISC_SLACK:
        raise DomainError(f"|z| = {abs(z)} is outside the closed unit disc")
    return math.sqrt(a * max(0.0, 1.0 - z.real))


@dataclass(frozen=True)
class WeightScheme:
    """Either sigma_weights(sigma) or prime_weights(x)."""

    kind: str  # "sigma" | "prime"
    sigma: float | None = None
    x: int | None = None

    def weight_pairs(self, table: PrimeTable, cutoff: int | None = None):
        """(prime powers q_j ascending, weights a_j) as float arrays."""
        if self.kind == "prime":
            ps = table.primes_up_to(self.x)
            return ps.astype(np.float64), 1.0 / ps
        if self.kind == "sigma":
            cut = min(cutoff or DEFAULT_SIGMA_CUTOFF, table.limit)
            qs, az = [], []
            k = 1
            while 2**k <= cut:
                ps = table.primes_up_to(min(cut, int(round(cut ** (1.0 / k))) + 1))
                qk = ps.astype(np.float64) ** k
                keep = qk <= cut
                if not keep.any():
                    break
                qk = qk[keep]
                qs.append(qk)
                az.append(1.0 / (k * qk**self.sigma))
                k += 1
            q = np.concatenate(qs)
            a = np.concatenate(az)
            order = np.argsort(q, kind="stable")
            return q[order], a[order]
        raise DomainError(f"unknown weight scheme {self.kind!r}")


def sigma_weights(sigma: float) -> WeightScheme:
    if sigma <= 1:
        raise DomainError(f"sigma weights need sigma > 1, got {sigma}")
    return WeightScheme("sigma", sigma=float(sigma))


def prime_weights(x: int) -> WeightScheme:
    if x < 2:
        raise DomainError(f"prime weights need x >= 2, got {x}")
    return WeightScheme("prime", x=int(x))


# ---------------------------------------------------------------------------
# internals

def _descending_sum(terms: np.ndarray) -> float:
    """Canonical accumulation: ascending-q term array summed from the
    large-q (small-term) end."""
    return float(np.add.reduce(terms[::-1]))


def _defect(values: np.ndarray, unimodular: bool) -> np.ndarray | float:
    """(1 - |z|^2)/2 per entry, exactly 0.0 for structurally unimodular
    functions; clamped at 0 against float excursions above the circle."""
    if unimodular:
        return 0.0
    d = 0.5 * (1.0 - (values.real**2 + values.imag**2))
    return np.maximum(d, 0.0)


def one_minus_re_product(zv: np.ndarray, wv: np.ndarray, z_uni: bool = False, w_uni: bool = False) -> np.ndarray:
    """1 - Re(z conj(w)) through the nonnegative split (see module doc)."""
    diff = zv - wv
    out = 0.5 * (diff.real**2 + diff.imag**2)
    if not z_uni:
        out = out + _defect(zv, False)
    if not w_uni:
        out = out + _defect(wv, False)
    return out


# ---------------------------------------------------------------------------
# distance and norms

@dataclass(frozen=True)
class DistanceResult:
    squared: float
    x: int
    terms: int

    @property
    def value(self) -> float:
        return math.sqrt(self.squared)


def distance(
    f: MultiplicativeFunction,
    g: MultiplicativeFunction,
    x: int,
    table: PrimeTable,
) -> DistanceResult:
    """D(f, g; x)^2 = sum_{p <= x} (1 - Re f(p) conj(g(p))) / p, exact
    finite sum over sieved primes, nonnegative by construction."""
    if x < 2:
        raise DomainError(f"need x >= 2, got {x}")
    table.check_capacity(x, "x")
    ps = table.primes_up_to(x)
    n = len(ps)
    fv = f.prime_values_for(table)[:n]
    gv = g.prime_values_for(table)[:n]
    num = one_minus_re_product(fv, gv, f.unimodular, g.unimodular)
    sq = _descending_sum(num / ps)
    return DistanceResult(squared=sq, x=x, terms=n)


@dataclass(frozen=True)
class NormResult:
    """sigma-norm of f: value = sqrt(squared); tail_bound bounds the mass
    the prime-power cutoff omitted from the SQUARED norm."""

    value: float
    squared: float
    tail_bound: float
    cutoff: int
    sigma: float


def sigma_norm(
    f: MultiplicativeFunction,
    sigma: float,
    table: PrimeTable,
    cutoff: int | None = None,
) -> NormResult:
    """Lambda-weighted norm: squared = sum over prime powers q = p^k <= cutoff
    of (1 - Re f(p)^k) / (k p^(k sigma)).

    The full sum equals log(zeta(sigma) / |F(sigma)|); the omitted mass is
    at most 2 sum_{q > cutoff} a_q = 2 (log zeta(sigma) - sum_{q <= cutoff} a_q),
    which is what tail_bound reports (with a certified upper log zeta).
    """
    if sigma <= 1:
        raise DomainError(f"sigma must be > 1, got {sigma}")
    cut = min(cutoff or DEFAULT_SIGMA_CUTOFF, table.limit)
    if cutoff is not None and cutoff > table.limit:
        raise CapacityError(f"cutoff {cutoff} exceeds table limit {table.limit}")
    ps = table.primes_up_to(cut)
    fv = f.prime_values_for(table)[: len(ps)]
    onev = np.ones(1, dtype=np.complex128)  # reused scalar "w = 1"

    squared = 0.0
    weight_mass = 0.0
    fpow = fv
    k = 1
    while 2**k <= cut:
        if k > 1:
            # primes with p^k <= cut; float root padded then trimmed exactly
            m = int(np.searchsorted(ps, int(cut ** (1.0 / k)) + 2, side="right"))
            while m > 0 and int(ps[m - 1]) ** k > cut:
                m -= 1
            if m == 0:
                break
            fpow = fpow[:m] * fv[:m]
        a = 1.0 / (k * ps[: len(fpow)].astype(np.float64) ** (k * sigma))
        num = one_minus_re_product(fpow, onev, f.unimodular, True)
        squared += _descending_sum(a * num)
        weight_mass += _descending_sum(a)
        k += 1

    log_zeta_up = math.log(zeta_sigma_upper(sigma))
    tail = 2.0 * max(0.0, log_zeta_up - weight_mass)
    return NormResult(
        value=math.sqrt(max(squared, 0.0)),
        squared=squared,
        tail_bound=tail,
        cutoff=cut,
        sigma=sigma,
    )


def norm_for_scheme(
    f: MultiplicativeFunction, scheme: WeightScheme, table: PrimeTable
) -> float:
    """||f|| under either weight scheme (prime-power sum, no tail)."""
    if scheme.kind == "prime":
        return distance(f, one(), scheme.x, table).value
    return sigma_norm(f, scheme.sigma, table).value


# ---------------------------------------------------------------------------
# Halasz minimization

@dataclass(frozen=True)
class HalaszGrid:
    """Resolution of the M(x, T) search: uniform grid spacing (default
    min(0.01, 1/log x)) plus golden-section refinement in the best cell."""

    spacing: float | None = None
    refine_steps: int = 80


@dataclass(frozen=True)
class HalaszMin:
    """Result of the constrained minimization min_{|t| <= 2T} D_f(t).

    value is an upper bound on the true minimum; the true minimum is at
    least value - slack, where slack = L h / 2 comes from the Lipschitz
    bound |D(t) - D(t')| <= |t - t'| sum_{p <= x} log(p)/p over one grid
    half-cell.
    """

    value: float
    t_star: float
    slack: float
    grid_spacing: float
    grid_points: int


def halasz_profile(
    f: MultiplicativeFunction, x: int, t: float, table: PrimeTable
) -> float:
    """One point of the minimization objective:
    D_f(t) = sum_{p <= x} (1 - Re f(p) p^(-it)) / p.  Same evaluation
    pipeline as the halasz_M grid."""
    ps = table.primes_up_to(x)
    n = len(ps)
    fv = f.prime_values_for(table)[:n]
    logp = np.log(ps)
    w = np.exp(1j * (t * logp))
    diff = fv - w
    terms = (0.5 * (diff.real**2 + diff.imag**2)) / ps
    dz = _defect(fv, f.unimodular)
    if not isinstance(dz, float):
        terms = terms + dz / ps
    return _descending_sum(terms)


_INVPHI = (math.sqrt(5.0) - 1.0) / 2.0


def halasz_M(
    f: MultiplicativeFunction,
    x: int,
    T: float,
    table: PrimeTable,
    grid: HalaszGrid | None = None,
) -> HalaszMin:
    """min over |t| <= 2T of sum_{p <= x} (1 - Re f(p) p^(-it)) / p.

    Global uniform grid (D is not unimodal), exact tie-break toward
    smallest |t| then smallest t, then golden-section refinement inside
    the winning cell; the reported minimum never exceeds any sampled grid
    value.
    """
    if T <= 0:
        raise DomainError(f"need T > 0, got {T}")
    grid = grid or HalaszGrid()
    h = grid.spacing or min(0.01, 1.0 / math.log(x))
    ps = table.primes_up_to(x)
    n = len(ps)
    fv = f.prime_values_for(table)[:n]
    logp = np.log(ps)
    invp = 1.0 / ps
    dz = _defect(fv, f.unimodular)
    base = dz * invp if not isinstance(dz, float) else None

    def d_of(t: float) -> float:
        w = np.exp(1j * (t * logp))  # identical pipeline to archimedean values
        diff = fv - w
        terms = (0.5 * (diff.real**2 + diff.imag**2)) * invp
        if base is not None:
            terms = terms + base
        return _descending_sum(terms)

    half = int(math.floor(2.0 * T / h + 1e-12))
    ts = (np.arange(-half, half + 1)) * h
    vals = np.array([d_of(float(t)) for t in ts])

    vmin = vals.min()
    cands = np.flatnonzero(vals == vmin)
    best_i = min(cands, key=lambda i: (abs(ts[i]), ts[i]))
    t_best = float(ts[best_i])
    m_best = float(vals[best_i])

    lip = _descending_sum(logp * invp)
    slack = lip * h / 2.0
    if grid.refine_steps <= 0:
        return HalaszMin(m_best, t_best, slack, h, len(ts))

    # golden-section inside the winning cell, clipped to |t| <= 2T
    lo = max(-2.0 * T, t_best - h)
    hi = min(2.0 * T, t_best + h)
    a, b = lo, hi
    c = b - _INVPHI * (b - a)
    d = a + _INVPHI * (b - a)
    fc, fd = d_of(c), d_of(d)
    for _ in range(grid.refine_steps):
        if fc <= fd:
            b, d, fd = d, c, fc
            c = b - _INVPHI * (b - a)
            fc = d_of(c)
        else:
            a, c, fc = c, d, fd
            d = a + _INVPHI * (b - a)
            fd = d_of(d)
        if b - a < 1e-12:
            break
    for t_ref, v_ref in ((c, fc), (d, fd)):
        if v_ref < m_best:
            m_best, t_best = float(v_ref), float(t_ref)

    return HalaszMin(
        value=m_best,
        t_star=t_best,
        slack=slack,
        grid_spacing=h,
        grid_points=len(ts),
    )
