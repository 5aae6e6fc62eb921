"""Character-sum machinery: partial-sum maxima, divisor-type sums d_chi
and their twisted variants, the deconvolution d = d_chi * h, and the
empirical lower-bound scans for distances between characters.

Key computational devices:

* Partial sums of a nonprincipal character are periodic with a zero full
  period, so the maximum of |sum_{n <= N} chi(n)| over all N is attained
  within one period.
* sum_{n <= x} d_{chi,t}(n) with d_{chi,t}(n) = sum_{ab=n} chi(a) a^(it)
  conj(chi(b)) b^(-it) splits along the hyperbola ab <= x:

      sum = Z + conj(Z) - |S(sqrt(x))|^2,
      Z   = sum_{a <= sqrt(x)} chi(a) a^(it) conj(S(x/a)),

  where S(v) = sum_{n <= v} chi(n) n^(it).  The O(x log x) pair-by-pair
  double loop survives as the independent test oracle.
* h is the multiplicative function with d = d_chi * h; its values come
  from the triangular deconvolution.  An exact verification path runs the
  whole computation in Z[x]/(x^m - 1) (m the character order), with
  coefficient vectors packed into Python integers base 2^64 so ring
  multiplication is one big-int multiply mod 2^(64 m) - 1.  Exactness is
  audited by decoding coefficients and checking they stay far below the
  packing headroom.
* Distance scans over many characters reduce to residue-class sums:
  sum_{p <= x} (1 - Re chi(p) p^(it))/p depends on chi only through the
  value table mod q, so per modulus one bincount of 1/p (and of p^(it)/p
  for twisted scans) serves every character at once.

Scans emit deterministically ordered rows (modulus, character exponents,
x); the implied absolute constants are outputs, never asserted.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .characters import DirichletCharacter, build_character_group
from .distance import one_minus_re_product
from .errors import DomainError
from .multfunc import MultiplicativeFunction
from .ntheory import (
    PrimeTable,
    dirichlet_deconvolve,
    divisor_count_sieve,
    flat_divisor_pairs,
)

# ---------------------------------------------------------------------------
# Partial-sum maxima

@dataclass(frozen=True)
class CharSumProfile:
    q: int
    chi: str
    max_abs: float
    argmax_N: int
    pv_bound: float  # sqrt(q) log q
    ratio: float


def pv_profile(chi: DirichletCharacter) -> CharSumProfile:
    """Exact maximum of |sum_{n <= N} chi(n)| over one period (which is the
    global maximum: the full-period sum vanishes for nonprincipal chi)."""
    if chi.is_principal:
        raise DomainError("partial sums of the principal character grow linearly")
    q = chi.modulus
    arr = chi.value_table[np.arange(1, q + 1) % q]
    cs = np.cumsum(arr)
    a = np.abs(cs)
    i = int(np.argmax(a))
    bound = math.sqrt(q) * math.log(q)
    return CharSumProfile(q, chi.label, float(a[i]), i + 1, bound, float(a[i]) / bound)


def pv_scan(q_max: int, primitive_only: bool = True) -> list[CharSumProfile]:
    """Profiles for every nonprincipal (by default primitive) character of
    modulus q <= q_max, vectorized per modulus: one phase matrix covers all
    characters of the modulus at once."""
    out: list[CharSumProfile] = []
    for q in range(3, q_max + 1):
        group = build_character_group(q)
        chis = [
            chi for chi in group.characters()
            if not chi.is_principal and (chi.is_primitive or not primitive_only)
        ]
        if not chis:
            continue
        dlog = group.dlog_matrix.astype(np.float64)
        unit = group.dlog_matrix[:, 0] >= 0
        weights = np.array(
            [[e / d for e, d in zip(c.exponents, group.orders)] for c in chis]
        )
        phases = dlog @ weights.T
        vals = np.exp(2j * np.pi * phases)
        vals[~unit, :] = 0
        arr = vals[np.arange(1, q + 1) % q, :]
        a = np.abs(np.cumsum(arr, axis=0))
        idx = np.argmax(a, axis=0)
        bound = math.sqrt(q) * math.log(q)
        for j, chi in enumerate(chis):
            m = float(a[idx[j], j])
            out.append(CharSumProfile(q, chi.label, m, int(idx[j]) + 1, bound, m / bound))
    return out


def twisted_partial_max(
    chi: DirichletCharacter, x: int, t: float
) -> tuple[float, int, float]:
    """(max_N |sum_{n<=N} chi(n) n^(it)| for N <= x, argmax N, ratio against
    sqrt(q) log(q) (1 + |t| log x))."""
    if chi.is_principal:
        raise DomainError("partial sums of the principal character grow linearly")
    q = chi.modulus
    ns = np.arange(1, x + 1)
    vals = chi.value_table[ns % q]
    if t != 0.0:
        vals = vals * np.exp(1j * (t * np.log(ns)))
    a = np.abs(np.cumsum(vals))
    i = int(np.argmax(a))
    denom = math.sqrt(q) * math.log(q) * (1.0 + abs(t) * math.log(x))
    return float(a[i]), i + 1, float(a[i]) / denom


# ---------------------------------------------------------------------------
# d_chi sums

def d_chi_sum(
    chi: DirichletCharacter, x: int, t: float = 0.0, table: PrimeTable | None = None
) -> complex:
    """sum_{n <= x} d_{chi,t}(n) by the hyperbola split (see module doc).

    The result is real for every t (the (a,b) <-> (b,a) symmetry pairs each
    term with its conjugate); the split returns it with imaginary part
    exactly zero.  Memory is O(x) complex for the prefix sums.
    """
    if x < 1:
        raise DomainError(f"need x >= 1, got {x}")
    if table is not None:
        table.check_capacity(x, "x")
    q = max(chi.modulus, 1)
    ns = np.arange(1, x + 1)
    vals = chi.value_table[ns % q].copy()
    if t != 0.0:
        vals *= np.exp(1j * (t * np.log(ns)))
    prefix = np.concatenate(([0j], np.cumsum(vals)))
    s = math.isqrt(x)
    a = np.arange(1, s + 1)
    z = complex(np.sum(vals[:s] * np.conj(prefix[x // a])))
    corner = complex(prefix[s])
    return z + z.conjugate() - corner * corner.conjugate()


def d_chi_bound_ratio(
    chi: DirichletCharacter, x: int, t: float = 0.0, table: PrimeTable | None = None
) -> float:
    """|sum_{n<=x} d_{chi,t}(n)| divided by the analytic bound shape
    sqrt(qx) log(q) (1+|t| log x) + q log^2(q) (1+|t| log x)^2.  Diagnostic
    for primitive nonprincipal chi (q >= 3)."""
    q = chi.modulus
    if q < 3:
        raise DomainError("bound ratio needs a nonprincipal modulus q >= 3")
    s = abs(d_chi_sum(chi, x, t, table))
    tw = 1.0 + abs(t) * math.log(x)
    denom = math.sqrt(q * x) * math.log(q) * tw + q * math.log(q) ** 2 * tw**2
    return s / denom


def d_chi_values(chi: DirichletCharacter, n_max: int) -> np.ndarray:
    """d_chi(n) = sum_{ab=n} chi(a) conj(chi(b)) for n = 1..n_max (compact
    indexing: entry i is the value at n = i+1), via the flat divisor-pair
    table."""
    n, a, b = flat_divisor_pairs(n_max)
    q = max(chi.modulus, 1)
    tab = chi.value_table
    w = tab[a % q] * np.conj(tab[b % q])
    re = np.bincount(n - 1, weights=w.real, minlength=n_max)
    im = np.bincount(n - 1, weights=w.imag, minlength=n_max)
    return re + 1j * im


def h_sequence(chi: DirichletCharacter, n_max: int, table: PrimeTable) -> np.ndarray:
    """h(1..n_max) with d = d_chi * h, by triangular deconvolution (compact
    indexing).  h is multiplicative with h(p) = 2 - 2 Re chi(p) and
    |h(n)| <= d_4(n)."""
    table.check_capacity(n_max, "n_max")
    d2 = divisor_count_sieve(n_max, 2)[1:].astype(np.complex128)
    return dirichlet_deconvolve(d2, d_chi_values(chi, n_max))


# ---------------------------------------------------------------------------
# Exact verification in Z[x]/(x^m - 1)

_SLOT_BITS = 64
_COEFF_AUDIT_LIMIT = 1 << 40  # far below the 2^63 packing headroom


class _CycRing:
    """Z[zeta_m] elements as vectors in Z[x]/(x^m - 1), packed base 2^64
    into a single Python integer mod 2^(64 m) - 1; multiplication is one
    big-int multiply and the cyclic wrap is the modular reduction.

    Sound as long as true coefficients stay below 2^63 in absolute value;
    callers audit decoded coefficients against _COEFF_AUDIT_LIMIT.
    """

    def __init__(self, m: int):
        self.m = m
        self.bits = _SLOT_BITS * m
        self.modulus = (1 << self.bits) - 1

    def root(self, k: int) -> int:
        return 1 << (_SLOT_BITS * (k % self.m))

    def mul(self, a: int, b: int) -> int:
        # 2^bits = 1 (mod M), so reduction is a shift-fold, no division
        v = a * b
        v = (v >> self.bits) + (v & self.modulus)
        while v >= self.modulus:
            v = (v >> self.bits) + (v & self.modulus)
            if v == self.modulus:
                return 0
        return v

    def canon(self, a: int) -> int:
        return a % self.modulus

    def decode(self, v: int) -> list[int]:
        v %= self.modulus
        mask = (1 << _SLOT_BITS) - 1
        digits = [(v >> (_SLOT_BITS * i)) & mask for i in range(self.m)]
        for _ in range(4):
            carry = 0
            for i in range(self.m):
                d = digits[i] + carry
                carry = 0
                if d >= 1 << (_SLOT_BITS - 1):
                    d -= 1 << _SLOT_BITS
                    carry = 1
                elif d < -(1 << (_SLOT_BITS - 1)):
                    d += 1 << _SLOT_BITS
                    carry = -1
                digits[i] = d
            if carry == 0:
                break
            digits[0] += carry  # x^m = 1 wraps the top carry around
        return digits

    def to_complex(self, v: int) -> complex:
        coeffs = self.decode(v)
        return complex(
            sum(c * np.exp(2j * np.pi * k / self.m) for k, c in enumerate(coeffs))
        )


@dataclass(frozen=True)
class ExactHReport:
    q: int
    chi: str
    n_max: int
    identity_ok: bool       # (d_chi * h)(n) = d(n) exactly for all n <= n_max
    prime_formula_ok: bool  # h(p) = 2 - 2 Re chi(p) exactly at all primes
    d4_bound_ok: bool       # |h(n)| <= d_4(n) numerically
    max_abs_ratio: float    # max |h(n)| / d_4(n)
    max_coeff: int          # packing-soundness audit


def verify_h_exact(chi: DirichletCharacter, n_max: int, table: PrimeTable) -> ExactHReport:
    """Run the whole d = d_chi * h computation in exact root-of-unity
    arithmetic and check the three structural identities."""
    table.check_capacity(n_max, "n_max")
    m = chi.order
    ring = _CycRing(m)
    q = max(chi.modulus, 1)
    chi_exp = chi.phase_numerators  # zeta_m exponent per residue, -1 for zero

    spf = table.spf
    if spf is None:
        local = _small_spf(n_max)
        spf = local

    # d_chi at prime powers: zero when p | q, else sum of roots e(2i - j)
    g_pp: dict[int, int] = {}
    h_pp: dict[int, int] = {}
    for p in map(int, table.primes_up_to(n_max)):
        e = int(chi_exp[p % q])
        pk, j = p, 1
        gs = [1]  # g(p^0) = 1
        while pk <= n_max:
            if e < 0:
                g = 0
            else:
                g = sum(ring.root(e * (2 * i - j)) for i in range(j + 1)) % ring.modulus
            g_pp[pk] = g
            gs.append(g)
            # h(p^j) = d(p^j) - sum_{i=1..j} g(p^i) h(p^(j-i)),  d(p^j) = j+1
            hv = j + 1
            for i in range(1, j + 1):
                prev = h_pp[pk // p**i] if i < j else 1
                hv -= ring.mul(gs[i], prev)
            h_pp[pk] = ring.canon(hv)
            pk *= p
            j += 1

    # multiplicative sieve for full value lists
    g_all = [0] * (n_max + 1)
    h_all = [0] * (n_max + 1)
    g_all[1] = h_all[1] = 1
    for n in range(2, n_max + 1):
        p = int(spf[n])
        pe, rest = p, n // p
        while rest % p == 0:
            rest //= p
            pe *= p
        if rest == 1:
            g_all[n] = g_pp[pe]
            h_all[n] = h_pp[pe]
        else:
            g_all[n] = ring.mul(g_all[rest], g_pp[pe])
            h_all[n] = ring.mul(h_all[rest], h_pp[pe])

    # packing-soundness audit BEFORE the convolution: g coefficients are
    # provably <= d(n) <= 64, so products stay below 2^63 whenever the h
    # coefficients clear the audit limit
    coeff_mat = np.zeros((n_max + 1, m), dtype=np.int64)
    for n in range(1, n_max + 1):
        coeff_mat[n] = ring.decode(h_all[n])
    max_coeff = int(np.abs(coeff_mat).max())
    if max_coeff >= _COEFF_AUDIT_LIMIT:
        raise ArithmeticError(
            f"exact-ring coefficients reached {max_coeff}; packing headroom audit failed"
        )

    # |h(n)| <= d_4(n), numerically from the decoded coefficients
    d4 = divisor_count_sieve(n_max, 4)
    roots = np.exp(2j * np.pi * np.arange(m) / m)
    abs_h = np.abs(coeff_mat[1:] @ roots)
    ratios = abs_h / d4[1:]
    max_ratio = float(ratios.max())
    d4_ok = bool(np.all(abs_h <= d4[1:] + 1e-6))

    # identity (d_chi * h)(n) = d(n), every n
    d2 = divisor_count_sieve(n_max, 2)
    n_flat, a_flat, b_flat = flat_divisor_pairs(n_max)
    conv = [0] * (n_max + 1)
    mul = ring.mul
    for nn, a, b in zip(n_flat.tolist(), a_flat.tolist(), b_flat.tolist()):
        conv[nn] += mul(h_all[a], g_all[b])
    identity_ok = all(
        conv[n] % ring.modulus == int(d2[n]) for n in range(1, n_max + 1)
    )

    # h(p) = 2 - 2 Re chi(p) = 2 - chi(p) - conj(chi)(p), exactly
    prime_formula_ok = True
    for p in map(int, table.primes_up_to(n_max)):
        e = int(chi_exp[p % q])
        rhs = 2 if e < 0 else ring.canon(2 - ring.root(e) - ring.root(-e))
        if h_all[p] != rhs:
            prime_formula_ok = False
            break
    return ExactHReport(
        q=chi.modulus,
        chi=chi.label,
        n_max=n_max,
        identity_ok=identity_ok,
        prime_formula_ok=prime_formula_ok,
        d4_bound_ok=d4_ok,
        max_abs_ratio=max_ratio,
        max_coeff=max_coeff,
    )


def _small_spf(n_max: int) -> np.ndarray:
    spf = np.zeros(n_max + 1, dtype=np.int64)
    for p in range(2, math.isqrt(n_max) + 1):
        if spf[p] == 0:
            blk = spf[p * p:: p]
            blk[blk == 0] = p
    rest = np.flatnonzero(spf == 0)
    rest = rest[rest >= 2]
    spf[rest] = rest
    return spf


# ---------------------------------------------------------------------------
# Distance lower-bound scans

@dataclass(frozen=True)
class ScanRow:
    q: int
    chi: str
    x: int
    distance_squared: float
    bound_value: float  # (1/2) log(log x / log(q (1+|t|))), the c = 1 reference
    implied_c: float    # (log(q (1+|t|)) / log x) exp(2 D^2), tightness output


def _residue_invp_sums(
    q: int, ps: np.ndarray, cut_idx: list[int], t: float
) -> tuple[np.ndarray, np.ndarray | None]:
    """Residue-class prime sums per x cutoff: R[r, j] = sum 1/p and (for
    t != 0) C[r, j] = sum p^(it)/p over p <= x_j with p = r mod q.
    Segments accumulate, so downstream distance values are exactly
    non-decreasing in j."""
    pmod = (ps % q).astype(np.int64)
    invp = 1.0 / ps
    nx = len(cut_idx)
    R = np.zeros((q, nx))
    C = np.zeros((q, nx), dtype=np.complex128) if t != 0.0 else None
    if t != 0.0:
        tw = np.exp(1j * (t * np.log(ps))) * invp
    lo = 0
    for j, hi in enumerate(cut_idx):
        seg_r = np.bincount(pmod[lo:hi], weights=invp[lo:hi], minlength=q)
        R[:, j] = (R[:, j - 1] if j else 0) + seg_r
        if C is not None:
            cre = np.bincount(pmod[lo:hi], weights=tw[lo:hi].real, minlength=q)
            cim = np.bincount(pmod[lo:hi], weights=tw[lo:hi].imag, minlength=q)
            C[:, j] = (C[:, j - 1] if j else 0) + (cre + 1j * cim)
        lo = hi
    return R, C


def prop6_scan(
    q_values,
    x_values,
    table: PrimeTable,
    t: float = 0.0,
) -> list[ScanRow]:
    """D(1, chi n^(it); x)^2 for every primitive nonprincipal chi with
    modulus in q_values and every x in x_values with x >= q, plus the
    implied tightness constant.  t = 0 is the untwisted scan; the twisted
    variant replaces log q by log(q (1+|t|)) in the bound shape.

    The minimum implied_c over a scan is the empirically feasible absolute
    constant at this scale; it is reported, never asserted.
    """
    x_values = sorted(int(x) for x in x_values)
    if not x_values:
        raise DomainError("need at least one x value")
    table.check_capacity(x_values[-1], "x")
    ps = table.primes_up_to(x_values[-1]).astype(np.float64)
    cut_idx = [int(np.searchsorted(ps, x, side="right")) for x in x_values]
    rows: list[ScanRow] = []
    for q in sorted(int(q) for q in q_values):
        if q < 3:
            continue
        group = build_character_group(q)
        chis = [
            c for c in group.characters() if not c.is_principal and c.is_primitive
        ]
        if not chis:
            continue
        R, C = _residue_invp_sums(q, ps, cut_idx, t)
        qt = math.log(q * (1.0 + abs(t)))
        for chi in chis:
            tab = chi.value_table
            w = np.maximum(0.0, 1.0 - tab.real)  # 1 - Re chi(r), clamped >= 0
            if C is None:
                d2s = w @ R
            else:
                d2s = np.sum(R, axis=0) - (tab @ C).real
            for j, x in enumerate(x_values):
                if x < q:
                    continue
                d2 = float(d2s[j])
                rows.append(
                    ScanRow(
                        q=q,
                        chi=chi.label,
                        x=x,
                        distance_squared=d2,
                        bound_value=0.5 * math.log(math.log(x) / qt),
                        implied_c=qt / math.log(x) * math.exp(2.0 * d2),
                    )
                )
    return rows


def min_implied_c(rows: list[ScanRow]) -> float:
    return min(r.implied_c for r in rows)


def fn_char_distance_sq(
    f_values: np.ndarray, psi: DirichletCharacter, y: int, table: PrimeTable
) -> float:
    """D(f, psi; y)^2 with f given as its values at the primes <= y."""
    ps = table.primes_up_to(y)
    zv = np.asarray(f_values)[: len(ps)]
    wv = psi.value_table[ps % max(psi.modulus, 1)]
    num = one_minus_re_product(zv, wv)
    return float(np.add.reduce((num / ps)[::-1]))


def char_pair_distance_sq(
    chi: DirichletCharacter, psi: DirichletCharacter, y: int, table: PrimeTable
) -> float:
    """D(chi, psi; y)^2 = sum_{p <= y} (1 - Re chi(p) conj(psi(p))) / p."""
    ps = table.primes_up_to(y)
    zv = chi.value_table[ps % max(chi.modulus, 1)]
    return fn_char_distance_sq(zv, psi, y, table)


def pair_distance_rows(
    f: MultiplicativeFunction,
    q_max: int,
    x_values,
    c_ref: float,
    table: PrimeTable,
    max_pairs: int = 40,
) -> list[dict]:
    """Diagnostic for the two-character form: D(f,chi;x)^2 + D(f,psi;x)^2
    against (1/8) log(c log x / (2 log Q)) with Q the conductor bound and
    c taken from a first-part scan.  Reported, not asserted."""
    chis = []
    for q in range(3, q_max + 1):
        for chi in build_character_group(q).characters():
            if not chi.is_principal and chi.is_primitive:
                chis.append(chi)
    pairs = []
    for i in range(len(chis)):
        for j in range(i + 1, len(chis)):
            pairs.append((chis[i], chis[j]))
            if len(pairs) >= max_pairs:
                break
        if len(pairs) >= max_pairs:
            break
    x_values = sorted(int(x) for x in x_values)
    fv = f.prime_values(table.primes_up_to(x_values[-1]), table)
    rows = []
    log_q = math.log(q_max)
    for chi, psi in pairs:
        for x in x_values:
            if x < q_max:
                continue
            lhs = (
                fn_char_distance_sq(fv, chi, x, table)
                + fn_char_distance_sq(fv, psi, x, table)
            )
            rhs = 0.125 * math.log(c_ref * math.log(x) / (2.0 * log_q))
            rows.append(
                {
                    "chi": chi.label,
                    "psi": psi.label,
                    "x": x,
                    "lhs": lhs,
                    "rhs_ref": rhs,
                    "c_ref": c_ref,
                }
            )
    return rows


# ---------------------------------------------------------------------------
# Lemma-shape distance scans (diagnostic only: o(1) terms make strict
# verification impossible at desk scale)

@dataclass(frozen=True)
class LemmaRow:
    lemma: int
    params: str
    lhs: float
    loglogy: float
    ratio: float
    main_coeff: float


def _primitive_chars_up_to(q_max: int, include_trivial: bool = False):
    if include_trivial:
        yield build_character_group(1).principal
    for q in range(3, q_max + 1):
        for chi in build_character_group(q).characters():
            if not chi.is_principal and chi.is_primitive:
                yield chi


def lemma_distance_scan(
    lemma: int,
    y: int,
    table: PrimeTable,
    *,
    order_g: int = 3,
    chi_q_max: int = 60,
    cond_max: int | None = None,
    top_j: int = 8,
    chi: DirichletCharacter | None = None,
    max_rows: int = 60,
) -> list[LemmaRow]:
    """Empirical distance scans shaped like the three lower-bound lemmas.

    lemma=3: primitive chi of odd order g against opposite-parity primitive
    xi of small conductor; main-term coefficient 1 - (g/pi) sin(pi/g).
    lemma=4: g-tuples with trivial chi-product and nontrivial xi-product,
    built as uniform tuples (chi,...,chi) x (xi,...,xi) with chi^g trivial
    and xi^g not; coefficient 1/g.
    lemma=5: distances from a fixed chi to every primitive character of
    conductor <= cond_max, ranked ascending; j-th coefficient 1 - 1/sqrt(j).

    Rows carry lhs / loglog(y) next to the coefficient; no pass/fail.
    """
    table.check_capacity(y, "y")
    lly = math.log(math.log(y))
    rows: list[LemmaRow] = []
    if cond_max is None:
        cond_max = max(4, int(math.log(y) ** 2))

    if lemma == 3:
        if order_g < 3 or order_g % 2 == 0:
            raise DomainError("lemma 3 needs odd order g >= 3")
        coeff = 1.0 - order_g / math.pi * math.sin(math.pi / order_g)
        chis = [c for c in _primitive_chars_up_to(chi_q_max) if c.order == order_g]
        xis = [c for c in _primitive_chars_up_to(cond_max)]
        if not chis or not xis:
            raise DomainError("empty character family for lemma 3 scan")
        for c in chis:
            for xi in xis:
                if c.parity * xi.parity != -1:
                    continue
                d2 = char_pair_distance_sq(c, xi, y, table)
                rows.append(
                    LemmaRow(3, f"chi={c.label};xi={xi.label};g={order_g}",
                             d2, lly, d2 / lly, coeff)
                )
                if len(rows) >= max_rows:
                    return rows
        if not rows:
            raise DomainError("no opposite-parity pairs in the lemma 3 family")
        return rows

    if lemma == 4:
        g = order_g
        if g < 2:
            raise DomainError("lemma 4 needs g >= 2")
        coeff = 1.0 / g
        chis = [c for c in _primitive_chars_up_to(chi_q_max) if c.order == g]
        # xi^g nontrivial <=> order of xi does not divide g
        xis = [xi for xi in _primitive_chars_up_to(cond_max) if g % xi.order != 0]
        if not chis or not xis:
            raise DomainError("empty character family for lemma 4 scan")
        for c in chis:
            for xi in xis:
                d2 = g * char_pair_distance_sq(c, xi, y, table)
                rows.append(
                    LemmaRow(4, f"chi={c.label};xi={xi.label};g={g}",
                             d2, lly, d2 / lly, coeff)
                )
                if len(rows) >= max_rows:
                    return rows
        return rows

    if lemma == 5:
        if chi is None:
            raise DomainError("lemma 5 scan needs the reference character chi")
        psis = [p for p in _primitive_chars_up_to(cond_max) if p != chi]
        if not psis:
            raise DomainError("no primitive characters below the conductor bound")
        dists = sorted(
            (char_pair_distance_sq(chi, p, y, table), p.label) for p in psis
        )
        for j, (d2, lab) in enumerate(dists[:top_j], start=1):
            coeff = 1.0 - 1.0 / math.sqrt(j)
            rows.append(
                LemmaRow(5, f"chi={chi.label};psi={lab};j={j}", d2, lly, d2 / lly, coeff)
            )
        return rows

    raise DomainError(f"lemma must be 3, 4 or 5, got {lemma}")
