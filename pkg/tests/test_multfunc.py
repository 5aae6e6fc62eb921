import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pretentious.characters import parse_character
from pretentious.errors import DomainError
from pretentious.multfunc import (
    archimedean,
    character_fn,
    conjugate,
    evaluate,
    liouville,
    make_function,
    one,
    parse_function,
    product,
    random_function,
    table_function,
    twisted_character,
    values_up_to,
)


def test_archetype_examples(table_1e5_spf):
    assert evaluate(one(), 12345, table_1e5_spf) == 1
    assert evaluate(liouville(), 12, table_1e5_spf) == -1  # Omega(12) = 3
    a = archimedean(1.0)
    assert evaluate(a, 2, table_1e5_spf) == pytest.approx(np.exp(1j * math.log(2)))


def test_value_at_one_is_one(table_1e5_spf):
    for f in (one(), liouville(), archimedean(2.5), character_fn(parse_character("4:1"))):
        assert evaluate(f, 1, table_1e5_spf) == 1


def test_liouville_square_is_one(table_1e5_spf):
    ff = product(liouville(), liouville())
    for n in (2, 12, 360, 9973):
        assert evaluate(ff, n, table_1e5_spf) == pytest.approx(1.0)


def test_twisted_character_t0_equals_character(table_1e5_spf):
    chi = parse_character("4:1")
    tw = twisted_character(chi, 0.0)
    assert evaluate(tw, 3, table_1e5_spf) == pytest.approx(-1.0)


def test_complete_multiplicativity_random_pairs(table_1e6_spf):
    rng = np.random.default_rng(5)
    fs = [
        archimedean(0.7),
        character_fn(parse_character("7:1")),
        random_function(9, "unimodular"),
        product(liouville(), archimedean(-1.2)),
    ]
    for f in fs:
        for _ in range(60):
            m = int(rng.integers(2, 1000))
            n = int(rng.integers(2, 1000))
            lhs = evaluate(f, m * n, table_1e6_spf)
            rhs = evaluate(f, m, table_1e6_spf) * evaluate(f, n, table_1e6_spf)
            assert abs(lhs - rhs) < 1e-12


def test_archimedean_matches_closed_form(table_1e6_spf):
    t = 1.0
    f = archimedean(t)
    rng = np.random.default_rng(2)
    for n in map(int, rng.integers(2, 10**6, 50)):
        assert abs(evaluate(f, n, table_1e6_spf) - np.exp(1j * t * math.log(n))) < 1e-12


def test_conjugate_structure(table_1e5_spf):
    f = random_function(13, "unimodular")
    g = conjugate(f)
    ps = table_1e5_spf.primes[:100]
    assert np.array_equal(
        g.prime_values(ps, table_1e5_spf),
        np.conj(f.prime_values(ps, table_1e5_spf)),
    )


def test_random_modes(table_1e5_spf):
    t = table_1e5_spf
    uni = random_function(42, "unimodular").prime_values_for(t)
    assert np.allclose(np.abs(uni), 1.0)
    real = random_function(42, "real-signed").prime_values_for(t)
    assert np.all(real.imag == 0) and real.real.min() >= -1 and real.real.max() <= 1
    non = random_function(42, "nonneg").prime_values_for(t)
    assert np.all(non.imag == 0) and non.real.min() >= 0 and non.real.max() <= 1


def test_random_determinism(table_1e5_spf):
    a = random_function(7, "unimodular").prime_values_for(table_1e5_spf)
    b = random_function(7, "unimodular").prime_values_for(table_1e5_spf)
    assert np.array_equal(a, b)
    c = random_function(8, "unimodular").prime_values_for(table_1e5_spf)
    assert not np.array_equal(a, c)


def test_random_mode_validation():
    with pytest.raises(DomainError):
        random_function(1, "gaussian")


def test_table_function_disc_enforced():
    with pytest.raises(DomainError):
        table_function({2: 1.5})
    f = table_function({2: 0.5, 3: -1.0})
    assert not f.unimodular


def test_table_function_missing_prime(table_1e5_spf):
    f = table_function({2: 0.5})
    with pytest.raises(DomainError):
        evaluate(f, 6, table_1e5_spf)


def test_values_up_to_matches_scalar(table_1e5_spf):
    for f in (liouville(), archimedean(0.5), character_fn(parse_character("5:1"))):
        vals = values_up_to(f, 300, table_1e5_spf)
        for n in range(1, 301):
            assert abs(vals[n] - evaluate(f, n, table_1e5_spf)) < 1e-12


def test_parse_function_roundtrip():
    assert parse_function("one").kind == "one"
    assert parse_function("liouville").kind == "liouville"
    f = parse_function("nit:1.5")
    assert f.kind == "archimedean" and f.params["t"] == 1.5
    g = parse_function("chi:4:1")
    assert g.kind == "character" and g.params["chi"].label == "4:1"
    h = parse_function("chit:8:1,1:2.0")
    assert h.kind == "twisted" and h.params["t"] == 2.0
    r = parse_function("rand:nonneg:7")
    assert r.kind == "random" and r.params["seed"] == 7
    with pytest.raises(DomainError):
        parse_function("wavelet:3")


def test_make_function_dispatch():
    assert make_function("one").label == "one"
    assert make_function("archimedean", t=2.0).params["t"] == 2.0
    with pytest.raises(DomainError):
        make_function("unknown")


@given(st.integers(min_value=2, max_value=500), st.integers(min_value=2, max_value=200))
@settings(max_examples=150, deadline=None)
def test_liouville_is_sign_of_omega(m, n):
    t = _table()
    from pretentious.ntheory import factorize

    val = evaluate(liouville(), m * n, t)
    omega = factorize(m * n, t).big_omega
    assert val == pytest.approx((-1.0) ** omega)


_T = {}


def _table():
    if "t" not in _T:
        from pretentious.ntheory import build_prime_table

        _T["t"] = build_prime_table(10**5, mode="spf")
    return _T["t"]
