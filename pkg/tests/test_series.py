import math

import mpmath as mp
import numpy as np
import pytest

from pretentious.characters import parse_character
from pretentious.errors import DomainError, PrecisionUnreachableError
from pretentious.multfunc import archimedean, character_fn, liouville, one, random_function
from pretentious.series import (
    dirichlet_F,
    l_function,
    log_derivative,
    zeta,
)

mp.mp.dps = 30


# -- zeta -----------------------------------------------------------------------

def test_zeta_closed_forms():
    assert zeta(2.0, 1e-12).value.real == pytest.approx(math.pi**2 / 6, abs=1e-12)
    assert zeta(4.0, 1e-12).value.real == pytest.approx(math.pi**4 / 90, abs=1e-12)


def test_zeta_against_brute_force_summation():
    # independent oracle: raw partial sums to 1e8 terms, remainder bracketed
    # by the integral bounds: sum_{n>N} n^-s lies in [int_{N+1}, int_N]
    n_cut = 10**8
    sigma = 1.5
    total = 0.0
    for lo in range(1, n_cut + 1, 10**7):
        hi = min(lo + 10**7 - 1, n_cut)
        ns = np.arange(lo, hi + 1, dtype=np.float64)
        total += float(np.sum(ns**-sigma))
    tail_hi = n_cut ** (1 - sigma) / (sigma - 1)
    tail_lo = (n_cut + 1) ** (1 - sigma) / (sigma - 1)
    cv = zeta(sigma, 1e-12)
    assert total + tail_lo - 1e-9 <= cv.value.real <= total + tail_hi + 1e-9


def test_zeta_complex_against_mpmath():
    for s in (2 + 3j, 1.1 + 10j, 1.5 - 7j, 3 + 0.5j, 1.01 + 20j):
        cv = zeta(s, 1e-12)
        ref = complex(mp.zeta(s))
        assert abs(cv.value - ref) <= cv.radius + 1e-12


def test_zeta_radius_honest_for_loose_targets():
    # ask for a loose radius and confirm the certificate still encloses
    for target in (1e-3, 1e-6, 1e-10):
        cv = zeta(1.2 + 5j, target)
        assert cv.radius <= target
        assert abs(cv.value - complex(mp.zeta(1.2 + 5j))) <= cv.radius + 1e-13


def test_zeta_domain_floor():
    with pytest.raises(DomainError):
        zeta(1.005, 1e-6)


def test_zeta_precision_unreachable():
    with pytest.raises(PrecisionUnreachableError):
        zeta(1.01 + 1j, 1e-250)


# -- Dirichlet series -------------------------------------------------------------

def test_dirichlet_F_one_matches_zeta(table_1e6):
    for sigma in (1.1, 1.5, 2.0, 3.0):
        for t in (0.0, 1.0, 10.0):
            s = complex(sigma, t)
            cv = dirichlet_F(one(), s, None, table_1e6)
            zv = zeta(s, 1e-12)
            assert abs(cv.value - zv.value) <= cv.radius + zv.radius, s


def test_dirichlet_F_liouville_closed_form(table_1e6):
    cv = dirichlet_F(liouville(), 2.0, 1e-6, table_1e6)
    assert cv.value.real == pytest.approx(math.pi**2 / 15, abs=cv.radius + 1e-9)
    assert abs(cv.value.imag) <= cv.radius


def test_dirichlet_F_archimedean_reindexes(table_1e6):
    # f(n) = n^(it) shifts the argument: F(s) = zeta(s - it)
    for t in (1.0, -2.5):
        cv = dirichlet_F(archimedean(t), 2.0, 1e-6, table_1e6)
        zv = zeta(complex(2.0, -t), 1e-10)
        assert abs(cv.value - zv.value) <= cv.radius + zv.radius


def test_dirichlet_F_target_unreachable(table_1e6):
    with pytest.raises(PrecisionUnreachableError):
        dirichlet_F(one(), 1.1, 1e-8, table_1e6)


def test_certified_honesty_higher_precision(table_1e6):
    # re-evaluate at 10x tighter target: values agree within the looser radius
    for s in (2.0, 1.5 + 1j, 3.0 + 10j):
        lo = dirichlet_F(liouville(), s, 1e-4, table_1e6)
        hi = dirichlet_F(liouville(), s, 1e-5, table_1e6)
        assert abs(lo.value - hi.value) <= lo.radius


def test_conjugation_symmetry(table_1e6):
    f = liouville()  # real prime values
    s = 1.7 + 2j
    a = dirichlet_F(f, s, None, table_1e6)
    b = dirichlet_F(f, s.conjugate(), None, table_1e6)
    assert abs(a.value.conjugate() - b.value) <= a.radius + b.radius


# -- L-functions -------------------------------------------------------------------

def test_l_principal_euler_factor(table_1e6):
    cv = l_function(parse_character("2"), 2.0, 1e-10, table_1e6)
    assert cv.value.real == pytest.approx(math.pi**2 / 8, abs=1e-9)


def test_l_chi4_catalan(table_1e6):
    # independent oracle: alternating series sum (-1)^k / (2k+1)^2 with the
    # alternating-series remainder bound
    k = np.arange(0, 2 * 10**6)
    catalan = float(np.sum((-1.0) ** (k % 2) / (2 * k + 1) ** 2))
    rem = 1.0 / (4 * 10**6 + 1) ** 2
    cv = l_function(parse_character("4:1"), 2.0, 1e-6, table_1e6)
    assert abs(cv.value.real - catalan) <= cv.radius + rem
    assert abs(cv.value.imag) <= cv.radius


def test_l_function_against_hurwitz_oracle(table_1e6):
    # L(s, chi) = q^-s sum_a chi(a) hurwitz_zeta(s, a/q)
    chi = parse_character("5:1")
    for s in (2.0, 1.5 + 1j):
        ref = complex(
            mp.mpc(5) ** (-s)
            * mp.fsum(
                [complex(chi(a)) * mp.zeta(s, mp.mpf(a) / 5) for a in range(1, 5)]
            )
        )
        cv = l_function(chi, s, None, table_1e6)
        assert abs(cv.value - ref) <= cv.radius + 1e-12


def test_l_real_character_real_values(table_1e6):
    chi = parse_character("12:1,1")  # real (order 2)
    cv = l_function(chi, 1.8, None, table_1e6)
    assert abs(cv.value.imag) <= cv.radius + 1e-12


# -- logarithmic derivatives --------------------------------------------------------

def test_log_derivative_zeta(table_1e6):
    cv = log_derivative(one(), 2.0, None, table_1e6)
    ref = complex(mp.zeta(2, derivative=1) / mp.zeta(2))
    assert abs(cv.value - ref) <= cv.radius + 1e-12
    assert cv.value.real == pytest.approx(-0.5700, abs=2e-4)


def test_log_derivative_liouville_identity(table_1e6):
    # log F = log zeta(2s) - log zeta(s), so F'/F = 2 zp/z(2s) - zp/z(s)
    sigma = 2.0
    cv = log_derivative(liouville(), sigma, None, table_1e6)
    ref = complex(
        2 * mp.zeta(2 * sigma, derivative=1) / mp.zeta(2 * sigma)
        - mp.zeta(sigma, derivative=1) / mp.zeta(sigma)
    )
    assert abs(cv.value - ref) <= cv.radius + 1e-12


def test_log_derivative_direct_lambda_oracle(table_1e6_spf):
    # independent route: factorization-backed Lambda array summed directly
    from pretentious.ntheory import von_mangoldt

    sigma = 2.0
    n_cut = 20000
    direct = -sum(
        von_mangoldt(n, table_1e6_spf) * n ** (-sigma) for n in range(2, n_cut + 1)
    )
    tail = n_cut ** (1 - sigma) * (math.log(n_cut) / (sigma - 1) + (sigma - 1) ** -2)
    cv = log_derivative(one(), sigma, None, table_1e6_spf)
    assert abs(cv.value.real - direct) <= cv.radius + tail


def test_log_derivative_domination(table_1e6):
    # |F'/F| <= -zeta'/zeta termwise for unit-disc f
    dz = log_derivative(one(), 1.5, None, table_1e6)
    for seed in range(3):
        f = random_function(seed, "unimodular")
        dF = log_derivative(f, 1.5, None, table_1e6)
        assert abs(dF.value) <= -dz.value.real + dz.radius + dF.radius


def test_log_derivative_unreachable(table_1e6):
    with pytest.raises(PrecisionUnreachableError):
        log_derivative(one(), 1.5, 1e-9, table_1e6)
