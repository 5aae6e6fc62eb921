"""Dirichlet characters mod q with exact root-of-unity values.

(Z/qZ)* is decomposed by CRT into cyclic blocks: one per odd prime power,
generated by its smallest primitive root, and the split <-1> x <5> for
2^k with k >= 3.  A character is an integer exponent vector against that
fixed generator list, so products, conjugates, orders and conductors are
exact integer arithmetic; values become floating complex only at the
numerical boundary.

Characters are addressed externally as "q:e1,e2,..." (exponents against
the generator list in block order: the 2-block first when present, then
odd prime powers ascending).  A bare "q" means the principal character.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import product as _iproduct

import numpy as np

from .errors import CapacityError, DomainError

GROUP_MODULUS_CEILING = 10**6


# ---------------------------------------------------------------------------
# Exact values

@dataclass(frozen=True)
class UnitValue:
    """Zero, or the exact root of unity e^(2*pi*i*frac) with 0 <= frac < 1."""

    frac: Fraction | None

    @property
    def is_zero(self) -> bool:
        return self.frac is None

    def to_complex(self) -> complex:
        if self.frac is None:
            return 0j
        if self.frac == 0:
            return 1 + 0j
        if 2 * self.frac == 1:
            return -1 + 0j
        if 4 * self.frac == 1:
            return 1j
        if 4 * self.frac == 3:
            return -1j
        theta = 2.0 * math.pi * float(self.frac)
        return complex(math.cos(theta), math.sin(theta))

    def conjugate(self) -> "UnitValue":
        if self.frac is None or self.frac == 0:
            return self
        return UnitValue((-self.frac) % 1)

    def __mul__(self, other: "UnitValue") -> "UnitValue":
        if self.frac is None or other.frac is None:
            return UnitValue(None)
        return UnitValue((self.frac + other.frac) % 1)


UNIT_ONE = UnitValue(Fraction(0))
UNIT_ZERO = UnitValue(None)


# ---------------------------------------------------------------------------
# Group structure

def _factorize_small(q: int) -> list[tuple[int, int]]:
    out = []
    m = q
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return out


def _smallest_primitive_root(p: int, k: int) -> int:
    """Smallest generator of the cyclic group (Z/p^k Z)*, p odd."""
    pk = p**k
    phi = pk // p * (p - 1)
    phi_primes = [f for f, _ in _factorize_small(phi)]
    g = 2
    while True:
        if g % p != 0 and all(pow(g, phi // f, pk) != 1 for f in phi_primes):
            return g
        g += 1


@dataclass(frozen=True, eq=False)
class _Block:
    """One CRT factor (Z/p^k Z)* as a product of cyclic groups.

    For odd p this is a single cyclic factor; for 2^k with k >= 3 it is
    <-1> x <5> (orders 2 and 2^(k-2)).  dlog maps each residue mod p^k to
    its exponent vector, with -1 rows marking non-units.
    """

    prime: int
    power: int
    modulus: int
    local_gens: tuple[int, ...]
    orders: tuple[int, ...]
    dlog: np.ndarray  # shape (modulus, len(orders)), int32

    def __post_init__(self):
        self.dlog.setflags(write=False)


def _build_block(p: int, k: int) -> _Block | None:
    pk = p**k
    if p == 2:
        if k == 1:
            return None
        if k == 2:
            dlog = np.full((4, 1), -1, dtype=np.int32)
            dlog[1, 0] = 0
            dlog[3, 0] = 1
            return _Block(2, 2, 4, (3,), (2,), dlog)
        half = pk >> 2
        dlog = np.full((pk, 2), -1, dtype=np.int32)
        r = 1
        for j in range(half):
            dlog[r] = (0, j)
            dlog[pk - r] = (1, j)
            r = (r * 5) % pk
        return _Block(2, k, pk, (pk - 1, 5), (2, half), dlog)
    g = _smallest_primitive_root(p, k)
    phi = pk // p * (p - 1)
    dlog = np.full((pk, 1), -1, dtype=np.int32)
    r = 1
    for j in range(phi):
        dlog[r, 0] = j
        r = (r * g) % pk
    return _Block(p, k, pk, (g,), (phi,), dlog)


def _crt_lift(residue: int, block_mod: int, q: int) -> int:
    """x with x = residue (mod block_mod) and x = 1 (mod q/block_mod)."""
    other = q // block_mod
    if other == 1:
        return residue % q
    inv = pow(block_mod, -1, other)
    return (residue + block_mod * ((inv * (1 - residue)) % other)) % q


@dataclass(frozen=True, eq=False)
class CharacterGroup:
    """The dual-ready description of (Z/qZ)*: cyclic components with
    CRT-lifted generators, and discrete logs for every unit."""

    modulus: int
    blocks: tuple[_Block, ...]
    generators: tuple[int, ...]
    orders: tuple[int, ...]

    @property
    def phi(self) -> int:
        return math.prod(self.orders) if self.orders else 1

    @property
    def n_components(self) -> int:
        return len(self.orders)

    def dlog(self, a: int) -> tuple[int, ...]:
        """Exponent vector of the unit a against the generator list."""
        a = a % self.modulus if self.modulus > 1 else 0
        out: list[int] = []
        for blk in self.blocks:
            row = blk.dlog[a % blk.modulus]
            if row[0] < 0:
                raise DomainError(f"{a} is not a unit mod {self.modulus}")
            out.extend(int(v) for v in row)
        return tuple(out)

    def is_unit(self, a: int) -> bool:
        return math.gcd(a, self.modulus) == 1

    @cached_property
    def dlog_matrix(self) -> np.ndarray:
        """(q, n_components) int32 matrix of dlog vectors; -1 rows mark
        non-units.  Built lazily; used by vectorized value tables."""
        q = self.modulus
        if self.n_components == 0:
            return np.zeros((max(q, 1), 0), dtype=np.int32)
        cols = []
        ns = np.arange(q, dtype=np.int64)
        # gcd against the full modulus: blocks with trivial unit groups
        # (2^1) carry no dlog column but still constrain coprimality
        unit = np.gcd(ns, q) == 1
        for blk in self.blocks:
            cols.append(blk.dlog[ns % blk.modulus])
        mat = np.concatenate(cols, axis=1)
        mat[~unit] = -1
        mat.setflags(write=False)
        return mat

    def character(self, exponents) -> "DirichletCharacter":
        exps = tuple(int(e) % d for e, d in zip(exponents, self.orders, strict=True))
        return DirichletCharacter(self, exps)

    @property
    def principal(self) -> "DirichletCharacter":
        return DirichletCharacter(self, (0,) * self.n_components)

    def characters(self):
        """All phi(q) characters, exponent vectors in lexicographic order."""
        for exps in _iproduct(*(range(d) for d in self.orders)):
            yield DirichletCharacter(self, exps)


@lru_cache(maxsize=256)
def build_character_group(q: int) -> CharacterGroup:
    """Structure of (Z/qZ)* with deterministic generators: smallest
    primitive root per odd prime power, (-1, 5) for 2^k with k >= 3."""
    if q < 1:
        raise DomainError(f"modulus must be >= 1, got {q}")
    if q > GROUP_MODULUS_CEILING:
        raise CapacityError(
            f"modulus {q} exceeds ceiling {GROUP_MODULUS_CEILING} (dlog table memory)"
        )
    blocks = []
    for p, k in _factorize_small(q):
        blk = _build_block(p, k)
        if blk is not None:
            blocks.append(blk)
    gens: list[int] = []
    orders: list[int] = []
    for blk in blocks:
        for g_loc, d in zip(blk.local_gens, blk.orders):
            gens.append(_crt_lift(g_loc, blk.modulus, q))
            orders.append(d)
    return CharacterGroup(q, tuple(blocks), tuple(gens), tuple(orders))


# ---------------------------------------------------------------------------
# Characters

@dataclass(frozen=True, eq=False)
class DirichletCharacter:
    group: CharacterGroup
    exponents: tuple[int, ...]

    @property
    def modulus(self) -> int:
        return self.group.modulus

    @property
    def label(self) -> str:
        return f"{self.modulus}:{','.join(str(e) for e in self.exponents)}"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, DirichletCharacter)
            and self.modulus == other.modulus
            and self.exponents == other.exponents
        )

    def __hash__(self) -> int:
        return hash((self.modulus, self.exponents))

    def __repr__(self) -> str:
        return f"DirichletCharacter({self.label!r})"

    # -- exact evaluation

    def value(self, n: int) -> UnitValue:
        """Exact value at n: zero when gcd(n, q) > 1, else the root of
        unity e^(2*pi*i * sum_i e_i x_i / d_i) with x = dlog(n)."""
        q = self.modulus
        if q == 1:
            return UNIT_ONE
        n %= q
        if math.gcd(n, q) != 1:
            return UNIT_ZERO
        x = self.group.dlog(n)
        frac = Fraction(0)
        for e, xi, d in zip(self.exponents, x, self.group.orders):
            frac += Fraction(e * xi, d)
        return UnitValue(frac % 1)

    def __call__(self, n: int) -> complex:
        return self.value(n).to_complex()

    @cached_property
    def order(self) -> int:
        out = 1
        for e, d in zip(self.exponents, self.group.orders):
            out = math.lcm(out, d // math.gcd(d, e))
        return out

    @cached_property
    def conductor(self) -> int:
        """Smallest f | q such that the character factors through (Z/fZ)*.

        Computed exactly from the component orders: on an odd block p^k a
        component of order t contributes p^(1 + v_p(t)) (or 1 when t = 1);
        on the 2-block, e1 of order 2^a on <5> forces 2^(a+2), else the
        <-1> part alone contributes 4 or 1.
        """
        cond = 1
        idx = 0
        for blk in self.blocks_exponents():
            p, exps, orders = blk
            if p == 2 and len(exps) == 2:
                e0, e1 = exps
                if e1 != 0:
                    t = orders[1] // math.gcd(orders[1], e1)
                    cond *= 4 * t
                elif e0 != 0:
                    cond *= 4
            else:
                (e,), (d,) = exps, orders
                t = d // math.gcd(d, e)
                if t > 1:
                    cond *= p ** (1 + _valuation(t, p))
            idx += len(exps)
        return cond

    def blocks_exponents(self):
        """Yield (prime, exponent-slice, order-slice) per CRT block."""
        idx = 0
        for blk in self.group.blocks:
            k = len(blk.orders)
            yield blk.prime, self.exponents[idx: idx + k], blk.orders
            idx += k

    @cached_property
    def is_primitive(self) -> bool:
        return self.conductor == self.modulus

    @cached_property
    def is_principal(self) -> bool:
        return all(e == 0 for e in self.exponents)

    @cached_property
    def parity(self) -> int:
        """chi(-1), i.e. +1 for even characters and -1 for odd ones."""
        if self.modulus <= 2:
            return 1
        v = self.value(self.modulus - 1)
        return 1 if v.frac == 0 else -1

    def conjugate(self) -> "DirichletCharacter":
        exps = tuple((-e) % d for e, d in zip(self.exponents, self.group.orders))
        return DirichletCharacter(self.group, exps)

    # -- vectorized evaluation

    @cached_property
    def phase_numerators(self) -> np.ndarray:
        """Integer k(n) with chi(n) = zeta_m^k(n), m = order; -1 marks zeros.
        Indexed by residue n mod q."""
        q, m = self.modulus, self.order
        if self.group.n_components == 0:
            k = np.zeros(max(q, 1), dtype=np.int64)
            if q > 1:  # phi(q) = 1 but non-units still map to zero
                gcds = np.gcd(np.arange(q, dtype=np.int64), q)
                k[gcds != 1] = -1
            k.setflags(write=False)
            return k
        mat = self.group.dlog_matrix
        coeffs = []
        for e, d in zip(self.exponents, self.group.orders):
            num = m * e
            assert num % d == 0
            coeffs.append(num // d)
        coeffs = np.asarray(coeffs, dtype=np.int64)
        k = (mat.astype(np.int64) @ coeffs) % m
        k[mat[:, 0] < 0] = -1
        k.setflags(write=False)
        return k

    @cached_property
    def value_table(self) -> np.ndarray:
        """chi(n) for n = 0..q-1 as complex128 (the periodic value table)."""
        k = self.phase_numerators
        m = self.order
        roots = np.exp(2j * np.pi * np.arange(m) / m)
        # snap the axis roots (1, -1, +-i) exact so low-order characters
        # stay exactly real/imaginary in float arithmetic
        re, im = roots.real.copy(), roots.imag.copy()
        re[np.abs(re) < 1e-15] = 0.0
        im[np.abs(im) < 1e-15] = 0.0
        re[np.abs(re - 1) < 1e-15] = 1.0
        re[np.abs(re + 1) < 1e-15] = -1.0
        im[np.abs(im - 1) < 1e-15] = 1.0
        im[np.abs(im + 1) < 1e-15] = -1.0
        roots = re + 1j * im
        tab = np.where(k >= 0, roots[np.maximum(k, 0)], 0)
        tab.setflags(write=False)
        return tab

    def values_at(self, ns: np.ndarray) -> np.ndarray:
        """chi at an integer array, via the periodic table."""
        return self.value_table[np.asarray(ns) % max(self.modulus, 1)]


def _valuation(t: int, p: int) -> int:
    v = 0
    while t % p == 0:
        t //= p
        v += 1
    return v


# ---------------------------------------------------------------------------
# Spec operations

def evaluate_character(chi: DirichletCharacter, n: int) -> UnitValue:
    return chi.value(n)


def character_invariants(chi: DirichletCharacter) -> tuple[int, int, int]:
    """(conductor, order, parity chi(-1))."""
    return chi.conductor, chi.order, chi.parity


def multiply_characters(
    chi: DirichletCharacter, psi: DirichletCharacter
) -> DirichletCharacter:
    """The character mod lcm(q1, q2) agreeing with chi(n) psi(n) on units."""
    lcm = math.lcm(chi.modulus, psi.modulus)
    if lcm > GROUP_MODULUS_CEILING:
        raise CapacityError(f"lcm of moduli {lcm} exceeds ceiling {GROUP_MODULUS_CEILING}")
    group = build_character_group(lcm)
    exps = []
    for g, d in zip(group.generators, group.orders):
        v = chi.value(g) * psi.value(g)
        num = v.frac * d
        assert num.denominator == 1, "product value order must divide component order"
        exps.append(int(num) % d)
    return DirichletCharacter(group, tuple(exps))


def primitive_inducing(chi: DirichletCharacter) -> DirichletCharacter:
    """The unique primitive character mod conductor(chi) inducing chi."""
    f = chi.conductor
    if f == chi.modulus:
        return chi
    group = build_character_group(f)
    q = chi.modulus
    exps = []
    for g, d in zip(group.generators, group.orders):
        n = g
        while math.gcd(n, q) != 1:  # lift to a unit mod q in the same class mod f
            n += f
        v = chi.value(n)
        num = v.frac * d
        assert num.denominator == 1
        exps.append(int(num) % d)
    return DirichletCharacter(group, tuple(exps))


def characters_mod(q: int):
    """All characters mod q (exponent vectors in lexicographic order)."""
    return build_character_group(q).characters()


def primitive_characters(q: int, include_principal: bool = False):
    """Primitive characters mod q; the trivial character only for q = 1."""
    for chi in characters_mod(q):
        if chi.is_principal and not (include_principal and q == 1):
            continue
        if chi.is_primitive:
            yield chi


def parse_character(spec: str) -> DirichletCharacter:
    """Parse "q:e1,e2,..." (or bare "q" for the principal character)."""
    spec = spec.strip()
    if ":" not in spec:
        q = int(spec)
        return build_character_group(q).principal
    q_str, exp_str = spec.split(":", 1)
    q = int(q_str)
    group = build_character_group(q)
    if exp_str.strip() == "":
        exps: tuple[int, ...] = ()
    else:
        exps = tuple(int(tok) for tok in exp_str.split(","))
    if len(exps) != group.n_components:
        raise DomainError(
            f"character mod {q} needs {group.n_components} exponents, got {len(exps)}"
        )
    return group.character(exps)
