import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretentious.errors import CapacityError, DomainError, NonInvertibleError
from pretentious.ntheory import (
    build_prime_table,
    dirichlet_convolve,
    dirichlet_deconvolve,
    divisor_count_k,
    divisor_count_sieve,
    factorize,
    flat_divisor_pairs,
    von_mangoldt,
)


# -- independent oracles ------------------------------------------------------

def trial_division_primes(limit):
    out = []
    for n in range(2, limit + 1):
        if all(n % p for p in out if p * p <= n):
            out.append(n)
    return out


def lambda_oracle(n):
    """von Mangoldt by brute factor search."""
    for p in range(2, n + 1):
        if n % p == 0:
            m = n
            while m % p == 0:
                m //= p
            return math.log(p) if m == 1 else 0.0
    return 0.0


# -- sieve ---------------------------------------------------------------------

def test_primes_to_ten():
    t = build_prime_table(10)
    assert t.primes.tolist() == [2, 3, 5, 7]


def test_limit_below_minimum_rejected():
    with pytest.raises(CapacityError):
        build_prime_table(1)


def test_prime_count_1e6(table_1e6):
    assert len(table_1e6.primes) == 78498


def test_sieve_cross_check_small():
    t = build_prime_table(10**4, mode="spf")
    oracle = trial_division_primes(10**4)
    assert t.primes.tolist() == oracle
    lam = sum(von_mangoldt(n, t) for n in range(1, 2001))
    lam_oracle = sum(lambda_oracle(n) for n in range(1, 2001))
    assert abs(lam - lam_oracle) < 1e-9


def test_sieve_modes_agree():
    a = build_prime_table(10**5, mode="primes")
    b = build_prime_table(10**5, mode="spf")
    assert np.array_equal(a.primes, b.primes)


def test_segmented_boundaries():
    # limits straddling the segment size must not drop or duplicate primes
    for limit in (11, 97, 6_000_000):
        t = build_prime_table(limit)
        assert int(t.primes[-1]) <= limit
        assert np.all(np.diff(t.primes) > 0)
    t = build_prime_table(6_000_000)
    assert len(t.primes) == 412849  # pi(6e6), cross-checked against spf mode
    s = build_prime_table(6_000_000, mode="spf")
    assert np.array_equal(t.primes, s.primes)


def test_spf_invariants(table_1e5_spf):
    spf = table_1e5_spf.spf
    for n in (4, 12, 97, 99991, 2 * 49999):
        p = int(spf[n])
        assert n % p == 0
        assert all(n % r for r in range(2, p))


# -- factorization -------------------------------------------------------------

def test_factorize_examples(table_1e5_spf):
    assert factorize(12, table_1e5_spf).factors == ((2, 2), (3, 1))
    assert factorize(12, table_1e5_spf).big_omega == 3
    assert factorize(1, table_1e5_spf).factors == ()
    assert factorize(1, table_1e5_spf).big_omega == 0
    assert factorize(97, table_1e5_spf).factors == ((97, 1),)


def test_factorize_capacity(table_1e5_spf):
    with pytest.raises(CapacityError):
        factorize(10**5 + 1, table_1e5_spf)


def test_factorize_primes_only_mode(table_1e6):
    assert factorize(999983, table_1e6).factors == ((999983, 1),)
    assert factorize(2**10 * 3**4, table_1e6).factors == ((2, 10), (3, 4))


@given(st.integers(min_value=1, max_value=10**5))
@settings(max_examples=300, deadline=None)
def test_factorize_roundtrip(n):
    t = _shared_spf()
    fac = factorize(n, t)
    assert math.prod(p**e for p, e in fac.factors) == n
    assert all(e >= 1 for _, e in fac.factors)
    ps = [p for p, _ in fac.factors]
    assert ps == sorted(ps)


_SPF_CACHE = {}


def _shared_spf():
    if "t" not in _SPF_CACHE:
        _SPF_CACHE["t"] = build_prime_table(10**5, mode="spf")
    return _SPF_CACHE["t"]


def test_von_mangoldt_examples(table_1e5_spf):
    assert von_mangoldt(8, table_1e5_spf) == pytest.approx(math.log(2))
    assert von_mangoldt(6, table_1e5_spf) == 0.0
    assert von_mangoldt(5, table_1e5_spf) == pytest.approx(math.log(5))
    assert von_mangoldt(1, table_1e5_spf) == 0.0


def test_divisor_count_examples(table_1e5_spf):
    assert divisor_count_k(6, 2, table_1e5_spf) == 4
    assert divisor_count_k(1, 4, table_1e5_spf) == 1
    assert divisor_count_k(8, 4, table_1e5_spf) == 20


def test_divisor_count_k4_enumeration_oracle(table_1e5_spf):
    # ordered 4-tuples with product n, counted by brute force
    def oracle(n):
        cnt = 0
        for a in range(1, n + 1):
            if n % a:
                continue
            for b in range(1, n // a + 1):
                if (n // a) % b:
                    continue
                m = n // (a * b)
                for c in range(1, m + 1):
                    if m % c == 0:
                        cnt += 1
        return cnt

    for n in (1, 2, 8, 12, 30, 64, 97):
        assert divisor_count_k(n, 4, table_1e5_spf) == oracle(n)


def test_divisor_count_sieve_matches_pointwise(table_1e5_spf):
    d2 = divisor_count_sieve(500, 2)
    d4 = divisor_count_sieve(500, 4)
    for n in range(1, 501):
        assert d2[n] == divisor_count_k(n, 2, table_1e5_spf)
        assert d4[n] == divisor_count_k(n, 4, table_1e5_spf)


def test_flat_divisor_pairs_structure():
    n, a, b = flat_divisor_pairs(60)
    assert np.all(a * b == n)
    d2 = divisor_count_sieve(60, 2)
    counts = np.bincount(n, minlength=61)
    assert np.array_equal(counts[1:], d2[1:])


# -- convolution / deconvolution ------------------------------------------------

def test_deconvolve_identity():
    rng = np.random.default_rng(1)
    g = rng.standard_normal(64) + 1j * rng.standard_normal(64)
    g[0] = 1.0
    h = dirichlet_deconvolve(g, g)
    want = np.zeros(64, dtype=complex)
    want[0] = 1.0
    assert np.allclose(h, want, atol=1e-12)


def test_deconvolve_all_ones_from_d2():
    d2 = divisor_count_sieve(200, 2)[1:].astype(complex)
    h = dirichlet_deconvolve(d2, np.ones(200, dtype=complex))
    assert np.allclose(h, 1.0, atol=1e-12)


def test_deconvolve_chi4_prime_values(table_1e5_spf):
    # d = d2, g = d_chi for the nonprincipal character mod 4
    from pretentious.characters import parse_character
    from pretentious.charsums import d_chi_values

    chi = parse_character("4:1")
    n_max = 50
    d2 = divisor_count_sieve(n_max, 2)[1:].astype(complex)
    h = dirichlet_deconvolve(d2, d_chi_values(chi, n_max))
    assert h[2 - 1] == pytest.approx(2.0)  # h(p) = 2 - 2 Re chi(p), chi(2) = 0
    assert h[3 - 1] == pytest.approx(4.0)  # chi(3) = -1


def test_deconvolve_requires_unit():
    with pytest.raises(NonInvertibleError):
        dirichlet_deconvolve(np.ones(4), np.full(4, 2.0))


def test_convolution_roundtrip_random():
    rng = np.random.default_rng(7)
    n = 2000
    for trial in range(3):
        g = rng.random(n) * np.exp(2j * np.pi * rng.random(n))
        g[0] = 1.0
        d = rng.standard_normal(n) + 1j * rng.standard_normal(n)
        h = dirichlet_deconvolve(d, g)
        back = dirichlet_convolve(g, h)
        assert np.allclose(back, d, atol=1e-12)


def test_convolution_roundtrip_integer_exact():
    rng = np.random.default_rng(11)
    n = 300
    g = rng.integers(-3, 4, n).astype(complex)
    g[0] = 1.0
    d = rng.integers(-9, 10, n).astype(complex)
    h = dirichlet_deconvolve(d, g)
    back = dirichlet_convolve(g, h)
    assert np.array_equal(back, d)  # integer lattice: exact


def _multiplicative_values(rng, n_max, table):
    """Random multiplicative sequence from random prime-power values."""
    vals = np.ones(n_max + 1, dtype=complex)
    vals[0] = 0
    for p in map(int, table.primes_up_to(n_max)):
        pk = p
        while pk <= n_max:
            v = rng.random() * np.exp(2j * np.pi * rng.random())
            for m in range(pk, n_max + 1, pk):
                if (m // pk) % p != 0:  # pk is the exact p-power in m
                    vals[m] *= v
            pk *= p
    return vals


def test_h_multiplicative_when_inputs_are(table_1e5_spf):
    rng = np.random.default_rng(3)
    n_max = 1000
    d = _multiplicative_values(rng, n_max, table_1e5_spf)
    g = _multiplicative_values(rng, n_max, table_1e5_spf)
    h = dirichlet_deconvolve(d[1:], g[1:])
    for m in (2, 3, 4, 5, 9, 25, 31):
        for n in range(2, n_max // m):
            if math.gcd(m, n) == 1:
                assert abs(h[m * n - 1] - h[m - 1] * h[n - 1]) < 1e-9
