"""Unit-disc-valued completely multiplicative functions.

A function is determined by its values at primes; evaluation anywhere else
goes through factorization.  Archetypes: the constant 1, the Liouville
function (-1)^Omega(n), the archimedean twist n^(i t), Dirichlet
characters, twisted characters chi(n) n^(i t), pointwise products,
conjugates, explicit prime-value tables, and seeded random prime values.

Vectorized prime values are the hot path (distance sums, Euler products,
minimization grids); they are memoized per (function, table) pair, so
repeated sweeps against the same sieve are cheap.  Instances are immutable
and the memo is idempotent, so sharing across threads is safe.

CLI syntax: ``one``, ``liouville``, ``nit:<t>``, ``chi:<q>:<e1,e2,...>``,
``chit:<q>:<e...>:<t>``, ``rand:<mode>:<seed>`` with mode one of
``unimodular``, ``real-signed``, ``nonneg``.
"""

from __future__ import annotations

import numpy as np

from .characters import DirichletCharacter, parse_character
from .errors import DomainError
from .ntheory import PrimeTable, factorize

_RANDOM_MODES = ("unimodular", "real-signed", "nonneg")
_DISC_TOLERANCE = 1e-12


class MultiplicativeFunction:
    """Completely multiplicative f with |f(p)| <= 1 at every prime.

    ``unimodular`` is the structural flag |f(p)| = 1 for all primes the
    function will be evaluated at; numeric code uses it to pin the defect
    1 - |f(p)|^2 to exactly zero.
    """

    __slots__ = ("kind", "params", "unimodular", "label", "_table_cache", "_point_cache")

    def __init__(self, kind: str, params: dict, unimodular: bool, label: str):
        self.kind = kind
        self.params = params
        self.unimodular = unimodular
        self.label = label
        self._table_cache: dict[PrimeTable, np.ndarray] = {}
        self._point_cache: dict[int, complex] = {}

    def __repr__(self) -> str:
        return f"MultiplicativeFunction({self.label!r})"

    # -- prime values, vectorized

    def prime_values(self, primes: np.ndarray, table: PrimeTable | None = None) -> np.ndarray:
        """f at an ascending array of primes, as complex128."""
        primes = np.asarray(primes, dtype=np.int64)
        k = self.kind
        if k == "one":
            return np.ones(len(primes), dtype=np.complex128)
        if k == "liouville":
            return np.full(len(primes), -1.0 + 0j)
        if k == "archimedean":
            # keep this exp pipeline identical to the minimization grid's
            # p^(it) so that matching t gives bitwise-equal values
            return np.exp(1j * (self.params["t"] * np.log(primes)))
        if k == "character":
            chi: DirichletCharacter = self.params["chi"]
            return chi.values_at(primes)
        if k == "twisted":
            chi = self.params["chi"]
            t = self.params["t"]
            return chi.values_at(primes) * np.exp(1j * (t * np.log(primes)))
        if k == "product":
            f, g = self.params["f"], self.params["g"]
            return f.prime_values(primes, table) * g.prime_values(primes, table)
        if k == "conjugate":
            return np.conj(self.params["f"].prime_values(primes, table))
        if k == "table":
            mapping = self.params["values"]
            try:
                return np.array([mapping[int(p)] for p in primes], dtype=np.complex128)
            except KeyError as exc:
                raise DomainError(f"table function has no value at prime {exc}") from exc
        if k == "random":
            if table is None:
                raise DomainError("random functions need a prime table to draw values")
            full = self.prime_values_for(table)
            idx = np.searchsorted(table.primes, primes)
            if idx.size and (idx.max() >= len(table.primes) or not np.array_equal(table.primes[idx], primes)):
                raise DomainError("requested primes outside the backing table")
            return full[idx]
        raise DomainError(f"unknown function kind {self.kind!r}")

    def prime_values_for(self, table: PrimeTable) -> np.ndarray:
        """f at every prime of the table, memoized per table."""
        cached = self._table_cache.get(table)
        if cached is not None:
            return cached
        if self.kind == "random":
            vals = self._draw_random(len(table.primes))
        else:
            vals = self.prime_values(table.primes, table)
        vals.setflags(write=False)
        self._table_cache[table] = vals
        return vals

    def _draw_random(self, count: int) -> np.ndarray:
        # one stream per seed: a longer table just extends the same draw
        rng = np.random.default_rng(self.params["seed"])
        u = rng.random(count)
        mode = self.params["mode"]
        if mode == "unimodular":
            return np.exp(2j * np.pi * u)
        if mode == "real-signed":
            return (2.0 * u - 1.0).astype(np.complex128)
        if mode == "nonneg":
            return u.astype(np.complex128)
        raise DomainError(f"unknown random mode {mode!r}")

    # -- pointwise

    def prime_value(self, p: int, table: PrimeTable) -> complex:
        v = self._point_cache.get(p)
        if v is None:
            v = complex(self.prime_values(np.array([p], dtype=np.int64), table)[0])
            self._point_cache[p] = v
        return v

    def is_real_on_primes(self, table: PrimeTable, x: int | None = None) -> bool:
        ps = table.primes if x is None else table.primes_up_to(x)
        vals = self.prime_values_for(table)[: len(ps)]
        return bool(np.all(vals.imag == 0.0))


# ---------------------------------------------------------------------------
# Constructors

def one() -> MultiplicativeFunction:
    return MultiplicativeFunction("one", {}, True, "one")


def liouville() -> MultiplicativeFunction:
    return MultiplicativeFunction("liouville", {}, True, "liouville")


def archimedean(t: float) -> MultiplicativeFunction:
    t = float(t)
    return MultiplicativeFunction("archimedean", {"t": t}, True, f"nit:{t!r}")


def character_fn(chi: DirichletCharacter) -> MultiplicativeFunction:
    # zeros at p | q mean the function is not unimodular unless q = 1
    return MultiplicativeFunction(
        "character", {"chi": chi}, chi.modulus == 1, f"chi:{chi.label}"
    )


def twisted_character(chi: DirichletCharacter, t: float) -> MultiplicativeFunction:
    t = float(t)
    return MultiplicativeFunction(
        "twisted", {"chi": chi, "t": t}, chi.modulus == 1, f"chit:{chi.label}:{t!r}"
    )


def product(f: MultiplicativeFunction, g: MultiplicativeFunction) -> MultiplicativeFunction:
    return MultiplicativeFunction(
        "product", {"f": f, "g": g}, f.unimodular and g.unimodular,
        f"prod({f.label},{g.label})",
    )


def conjugate(f: MultiplicativeFunction) -> MultiplicativeFunction:
    return MultiplicativeFunction("conjugate", {"f": f}, f.unimodular, f"conj({f.label})")


def table_function(values: dict[int, complex], unimodular: bool | None = None) -> MultiplicativeFunction:
    vals = {int(p): complex(v) for p, v in values.items()}
    for p, v in vals.items():
        if abs(v) > 1.0 + _DISC_TOLERANCE:
            raise DomainError(f"|f({p})| = {abs(v)} leaves the closed unit disc")
    if unimodular is None:
        unimodular = all(abs(abs(v) - 1.0) <= _DISC_TOLERANCE for v in vals.values())
    return MultiplicativeFunction("table", {"values": vals}, unimodular, "table")


def random_function(seed: int, mode: str, table: PrimeTable | None = None) -> MultiplicativeFunction:
    """i.i.d. prime values: uniform on the circle, on [-1,1], or on [0,1].

    Deterministic given the seed; the same seed yields the same values for
    any table (a longer table extends the same stream).  ``table`` is
    accepted for interface symmetry and may be None.
    """
    if mode not in _RANDOM_MODES:
        raise DomainError(f"mode must be one of {_RANDOM_MODES}, got {mode!r}")
    f = MultiplicativeFunction(
        "random", {"seed": int(seed), "mode": mode}, mode == "unimodular",
        f"rand:{mode}:{int(seed)}",
    )
    if table is not None:
        f.prime_values_for(table)
    return f


_KIND_BUILDERS = {
    "one": lambda **kw: one(),
    "liouville": lambda **kw: liouville(),
    "archimedean": lambda **kw: archimedean(kw["t"]),
    "character": lambda **kw: character_fn(kw["chi"]),
    "twisted_character": lambda **kw: twisted_character(kw["chi"], kw["t"]),
    "product": lambda **kw: product(kw["f"], kw["g"]),
    "conjugate": lambda **kw: conjugate(kw["f"]),
    "table": lambda **kw: table_function(kw["values"]),
    "random": lambda **kw: random_function(kw["seed"], kw["mode"], kw.get("table")),
}


def make_function(kind: str, **params) -> MultiplicativeFunction:
    """Generic constructor dispatching on the kind name."""
    try:
        builder = _KIND_BUILDERS[kind]
    except KeyError:
        raise DomainError(f"unknown function kind {kind!r}") from None
    return builder(**params)


def parse_function(spec: str) -> MultiplicativeFunction:
    """Parse the CLI function syntax (see module docstring)."""
    spec = spec.strip()
    if spec == "one":
        return one()
    if spec == "liouville":
        return liouville()
    if spec.startswith("nit:"):
        return archimedean(float(spec[4:]))
    if spec.startswith("chit:"):
        body = spec[5:]
        char_part, _, t_part = body.rpartition(":")
        return twisted_character(parse_character(char_part), float(t_part))
    if spec.startswith("chi:"):
        return character_fn(parse_character(spec[4:]))
    if spec.startswith("rand:"):
        parts = spec.split(":")
        if len(parts) != 3:
            raise DomainError(f"bad random function spec {spec!r}")
        return random_function(int(parts[2]), parts[1])
    raise DomainError(f"cannot parse function spec {spec!r}")


# ---------------------------------------------------------------------------
# Evaluation

def evaluate(f: MultiplicativeFunction, n: int, table: PrimeTable) -> complex:
    """f(n) as the product of f(p)^e over the factorization of n."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    fac = factorize(n, table)
    out = 1 + 0j
    for p, e in fac.factors:
        out *= f.prime_value(p, table) ** e
    return out


def values_up_to(f: MultiplicativeFunction, n_max: int, table: PrimeTable) -> np.ndarray:
    """f(n) for all n <= n_max as a 1-based complex array (entry 0 is 0).

    Sieve-style batch evaluation: one slice multiply per prime power,
    about n_max * loglog(n_max) element operations total.  Needs only the
    primes <= n_max, not the spf array.  Memory: 16 bytes per n.
    """
    table.check_capacity(n_max, "n_max")
    vals = np.ones(n_max + 1, dtype=np.complex128)
    vals[0] = 0
    ps = table.primes_up_to(n_max)
    fp = f.prime_values(ps, table)
    for p, v in zip(ps, fp):
        p = int(p)
        pk = p
        while pk <= n_max:
            vals[pk::pk] *= v
            pk *= p
    return vals
