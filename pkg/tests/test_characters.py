import math
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretentious.characters import (
    UnitValue,
    build_character_group,
    character_invariants,
    characters_mod,
    evaluate_character,
    multiply_characters,
    parse_character,
    primitive_characters,
    primitive_inducing,
)
from pretentious.errors import CapacityError, DomainError


# -- independent oracle: conductor by the divisor-scan definition ---------------

def conductor_by_definition(chi):
    """Smallest f | q with chi trivial on units = 1 mod f (ascending scan)."""
    q = chi.modulus
    for f in sorted(d for d in range(1, q + 1) if q % d == 0):
        if all(
            chi.value(n).frac == 0
            for n in range(1, q + 1)
            if math.gcd(n, q) == 1 and n % f == 1 % f
        ):
            return f
    return q


# -- group structure -------------------------------------------------------------

def test_group_shapes():
    assert build_character_group(4).orders == (2,)
    assert build_character_group(8).orders == (2, 2)
    g15 = build_character_group(15)
    assert sorted(g15.orders) == [2, 4]
    assert g15.phi == 8
    assert build_character_group(1).phi == 1


def test_group_generator_recomposition():
    for q in (4, 8, 15, 16, 21, 45, 100):
        g = build_character_group(q)
        for a in range(1, q):
            if math.gcd(a, q) != 1:
                continue
            x = g.dlog(a)
            val = 1
            idx = 0
            for gen, d in zip(g.generators, g.orders):
                val = val * pow(gen, x[idx], q) % q
                idx += 1
            assert val == a % q


def test_group_ceiling():
    with pytest.raises(CapacityError):
        build_character_group(10**6 + 1)
    with pytest.raises(DomainError):
        build_character_group(0)


def test_duality_count():
    for q in (1, 2, 3, 4, 8, 12, 24, 45, 144, 200):
        assert len(list(characters_mod(q))) == build_character_group(q).phi


# -- evaluation -------------------------------------------------------------------

def test_evaluate_examples():
    chi4 = parse_character("4:1")
    assert evaluate_character(chi4, 3).frac == Fraction(1, 2)
    assert chi4(3) == -1
    assert chi4(2) == 0
    principal = parse_character("12")
    for n in (1, 5, 7, 11):
        assert principal(n) == 1
    assert principal(4) == 0


def test_orthogonality_q_up_to_200():
    for q in range(1, 201):
        for chi in characters_mod(q):
            s = chi.value_table.sum()
            want = chi.group.phi if chi.is_principal else 0.0
            assert abs(s - want) < 1e-8, (q, chi.label)


def test_complete_multiplicativity_sampled():
    rng = np.random.default_rng(0)
    for q in (7, 12, 16, 45, 101, 243, 500):
        group = build_character_group(q)
        chis = list(group.characters())
        for chi in chis[:: max(1, len(chis) // 6)]:
            tab = chi.value_table
            m = rng.integers(1, 10**9, 10**4)
            n = rng.integers(1, 10**9, 10**4)
            lhs = tab[(m * n) % q]
            rhs = tab[m % q] * tab[n % q]
            assert np.max(np.abs(lhs - rhs)) < 1e-12


def test_zero_iff_common_factor():
    for q in (12, 45):
        for chi in characters_mod(q):
            tab = chi.value_table
            for n in range(q):
                if math.gcd(n, q) > 1:
                    assert tab[n] == 0
                else:
                    assert abs(abs(tab[n]) - 1) < 1e-12


# -- invariants -------------------------------------------------------------------

def test_invariants_examples():
    principal12 = parse_character("12")
    assert character_invariants(principal12) == (1, 1, 1)
    chi4 = parse_character("4:1")
    assert character_invariants(chi4) == (4, 2, -1)
    # mod 8 lift of the mod 4 character
    chi8 = build_character_group(8).character((1, 0))
    assert chi8.conductor == 4


def test_conductor_matches_definition_up_to_200():
    for q in range(1, 201):
        for chi in characters_mod(q):
            assert chi.conductor == conductor_by_definition(chi), (q, chi.label)


def test_order_matches_power_search():
    for q in (5, 8, 9, 16, 21, 40):
        for chi in characters_mod(q):
            k = 1
            acc = chi
            while not acc.is_principal:
                acc = multiply_characters(acc, chi)
                k += 1
                assert k <= chi.group.phi
            assert chi.order == k


def test_parity_is_value_at_minus_one():
    for q in (3, 4, 5, 8, 12, 35):
        for chi in characters_mod(q):
            assert chi.parity == round(chi(q - 1).real) if q > 2 else 1


# -- products and induction --------------------------------------------------------

def test_product_with_conjugate_is_principal():
    for lab in ("4:1", "5:1", "7:2", "45:1,3"):
        chi = parse_character(lab)
        assert multiply_characters(chi, chi.conjugate()).is_principal


def test_mod4_squared_principal():
    chi = parse_character("4:1")
    assert multiply_characters(chi, chi).is_principal


def test_mod3_times_mod4():
    prod = multiply_characters(parse_character("3:1"), parse_character("4:1"))
    assert prod.modulus == 12
    assert prod.conductor == 12
    assert prod.order == 2
    vals = [round(prod(n).real) for n in (1, 5, 7, 11)]
    assert vals == [1, -1, -1, 1]


def test_product_values_pointwise():
    chi = parse_character("5:1")
    psi = parse_character("8:1,1")
    prod = multiply_characters(chi, psi)
    assert prod.modulus == 40
    for n in range(1, 41):
        if math.gcd(n, 40) == 1:
            assert abs(prod(n) - chi(n) * psi(n)) < 1e-12


def test_primitive_inducing_examples():
    chi4 = parse_character("4:1")
    assert primitive_inducing(chi4) is chi4  # already primitive
    principal = parse_character("12")
    triv = primitive_inducing(principal)
    assert triv.modulus == 1
    chi8 = build_character_group(8).character((1, 0))
    ind = primitive_inducing(chi8)
    assert ind.modulus == 4
    for n in range(1, 8):
        if math.gcd(n, 8) == 1:
            assert ind.value(n).frac == chi8.value(n).frac  # exact, not float


def test_primitive_inducing_exact_agreement_sampled():
    for q in (12, 24, 45, 72):
        for chi in characters_mod(q):
            ind = primitive_inducing(chi)
            for n in range(1, q + 1):
                if math.gcd(n, q) == 1:
                    assert ind.value(n).frac == chi.value(n).frac


def test_primitive_characters_filter():
    prim8 = list(primitive_characters(8))
    assert {c.label for c in prim8} == {"8:0,1", "8:1,1"}
    assert all(c.conductor == 8 for c in prim8)


# -- parsing and exact values -------------------------------------------------------

def test_parse_character_errors():
    with pytest.raises(DomainError):
        parse_character("12:1")  # needs 2 exponents
    chi = parse_character("12:1,1")
    assert chi.label == "12:1,1"


def test_unit_value_axis_snapping():
    g5 = build_character_group(5)
    chi = g5.character((1,))  # order 4: values hit +-i exactly
    vals = {n: chi(n) for n in range(1, 5)}
    assert set(vals.values()) <= {1, -1, 1j, -1j}


@given(
    st.integers(min_value=0, max_value=40),
    st.integers(min_value=1, max_value=41),
    st.integers(min_value=0, max_value=40),
    st.integers(min_value=1, max_value=41),
)
@settings(max_examples=200, deadline=None)
def test_unit_value_product(a1, b1, a2, b2):
    u = UnitValue(Fraction(a1 % b1, b1))
    v = UnitValue(Fraction(a2 % b2, b2))
    w = u * v
    assert abs(w.to_complex() - u.to_complex() * v.to_complex()) < 1e-12
    assert 0 <= w.frac < 1
    assert abs(u.conjugate().to_complex() - u.to_complex().conjugate()) < 1e-12
