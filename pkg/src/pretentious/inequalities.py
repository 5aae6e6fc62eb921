"""Verifiers for the triangle-inequality family on Re s > 1: the two
product-series inequalities, their zeta specializations, the classical
3-4-1 bound, the Dirichlet L-function triangle, and the logarithmic
derivative variants.

Each check returns an InequalityReport with a signed margin (oriented so
margin >= 0 means the inequality holds) and an error budget summing the
certified radii propagated through the formula.  Verdicts are three
valued: near-equality points (t -> 0, f = g = 1, ...) must come out
"indeterminate" rather than spuriously failing, so

    holds          margin >  budget
    fails          margin < -budget
    indeterminate  |margin| <= budget.

Square roots of certified nonnegative quantities are taken on intervals:
a value within budget of zero is clamped at zero and the clamp recorded.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

from .characters import DirichletCharacter, multiply_characters, primitive_inducing
from .errors import DomainError
from .multfunc import MultiplicativeFunction, character_fn, one, product
from .ntheory import PrimeTable
from .series import CertifiedValue, dirichlet_F, l_function, log_derivative, zeta

VERDICT_HOLDS = "holds"
VERDICT_FAILS = "fails"
VERDICT_INDETERMINATE = "indeterminate"


@dataclass(frozen=True)
class InequalityReport:
    name: str
    params: dict = field(compare=False)
    lhs: float
    rhs: float
    margin: float
    error_budget: float
    verdict: str
    notes: str = ""


def _verdict(margin: float, budget: float) -> str:
    if margin > budget:
        return VERDICT_HOLDS
    if margin < -budget:
        return VERDICT_FAILS
    return VERDICT_INDETERMINATE


def make_report(
    name: str, params: dict, lhs: float, rhs: float, budget: float, notes: str = ""
) -> InequalityReport:
    margin = lhs - rhs
    return InequalityReport(
        name=name,
        params=params,
        lhs=lhs,
        rhs=rhs,
        margin=margin,
        error_budget=budget,
        verdict=_verdict(margin, budget),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# interval helpers on (value, radius) pairs

def _sqrt_nonneg(value: float, radius: float) -> tuple[float, float, bool]:
    """sqrt on the interval [value - radius, value + radius] intersected
    with [0, inf).  Returns (midpoint, half-width, clamped?)."""
    lo = max(value - radius, 0.0)
    hi = max(value + radius, 0.0)
    slo, shi = math.sqrt(lo), math.sqrt(hi)
    return 0.5 * (slo + shi), 0.5 * (shi - slo), value - radius < 0


@lru_cache(maxsize=65536)
def _zeta_cached(s: complex, target: float) -> CertifiedValue:
    return zeta(s, target)


def _log_abs(cv: CertifiedValue) -> tuple[float, float]:
    return cv.log_abs()


# ---------------------------------------------------------------------------
# the two product-series inequalities

def check_prop1(
    f: MultiplicativeFunction,
    g: MultiplicativeFunction,
    sigma: float,
    table: PrimeTable,
    target_radius: float | None = None,
) -> tuple[InequalityReport, InequalityReport]:
    """The two triangle inequalities for F, G, and the product series
    F (x) G at real sigma > 1:

        sqrt(log zeta/|F|) + sqrt(log zeta/|G|) >= sqrt(log zeta/|F(x)G|)
        sqrt(log|zeta F|)  + sqrt(log|zeta G|)  >= sqrt(log zeta/|F(x)G|)
    """
    sigma = float(sigma)
    zv = _zeta_cached(complex(sigma), 1e-12)
    lz, rz = _log_abs(zv)
    Fv = dirichlet_F(f, sigma, target_radius, table)
    Gv = dirichlet_F(g, sigma, target_radius, table)
    FGv = dirichlet_F(product(f, g), sigma, target_radius, table)
    lF, rF = _log_abs(Fv)
    lG, rG = _log_abs(Gv)
    lFG, rFG = _log_abs(FGv)

    s_rhs, r_rhs, cl_rhs = _sqrt_nonneg(lz - lFG, rz + rFG)
    params = {"f": f.label, "g": g.label, "sigma": sigma}

    sF, rsF, c1 = _sqrt_nonneg(lz - lF, rz + rF)
    sG, rsG, c2 = _sqrt_nonneg(lz - lG, rz + rG)
    rep1 = make_report(
        "prop1-1", params, sF + sG, s_rhs, rsF + rsG + r_rhs,
        notes="clamped" if (c1 or c2 or cl_rhs) else "",
    )

    sF2, rsF2, c3 = _sqrt_nonneg(lz + lF, rz + rF)
    sG2, rsG2, c4 = _sqrt_nonneg(lz + lG, rz + rG)
    rep2 = make_report(
        "prop1-2", params, sF2 + sG2, s_rhs, rsF2 + rsG2 + r_rhs,
        notes="clamped" if (c3 or c4 or cl_rhs) else "",
    )
    return rep1, rep2


# ---------------------------------------------------------------------------
# zeta specialization

def check_cor2(
    sigma: float, t1: float, t2: float, target_radius: float = 1e-8
) -> tuple[InequalityReport, InequalityReport]:
    """The zeta specialization (f, g archimedean twists):

        sqrt(log zeta(s)/|zeta(s+it1)|) + sqrt(log zeta(s)/|zeta(s+it2)|)
            >= sqrt(log zeta(s)/|zeta(s+i(t1+t2))|)

    and the companion with log|zeta(s) zeta(s+it_j)| on the left.
    """
    sigma, t1, t2 = float(sigma), float(t1), float(t2)
    lz, rz = _log_abs(_zeta_cached(complex(sigma), target_radius))
    l1, r1 = _log_abs(_zeta_cached(complex(sigma, t1), target_radius))
    l2, r2 = _log_abs(_zeta_cached(complex(sigma, t2), target_radius))
    l12, r12 = _log_abs(_zeta_cached(complex(sigma, t1 + t2), target_radius))

    s_rhs, r_rhs, cl = _sqrt_nonneg(lz - l12, rz + r12)
    params = {"sigma": sigma, "t1": t1, "t2": t2}

    sa, ra, ca = _sqrt_nonneg(lz - l1, rz + r1)
    sb, rb, cb = _sqrt_nonneg(lz - l2, rz + r2)
    rep1 = make_report(
        "cor2-1", params, sa + sb, s_rhs, ra + rb + r_rhs,
        notes="clamped" if (ca or cb or cl) else "",
    )

    sa2, ra2, ca2 = _sqrt_nonneg(lz + l1, rz + r1)
    sb2, rb2, cb2 = _sqrt_nonneg(lz + l2, rz + r2)
    rep2 = make_report(
        "cor2-2", params, sa2 + sb2, s_rhs, ra2 + rb2 + r_rhs,
        notes="clamped" if (ca2 or cb2 or cl) else "",
    )
    return rep1, rep2


def check_341(sigma: float, t: float, target_radius: float = 1e-8) -> InequalityReport:
    """The classical 3-4-1 inequality on log scale:

        3 log zeta(s) + 4 log|zeta(s+it)| + log|zeta(s+2it)| >= 0,

    algebraically the square of the second check_cor2 inequality at
    t1 = t2 = t; the numerically verified gap to that squared form is
    stored in params["consistency_gap"] (compare against 10x the combined
    budgets).
    """
    sigma, t = float(sigma), float(t)
    lz, rz = _log_abs(_zeta_cached(complex(sigma), target_radius))
    l1, r1 = _log_abs(_zeta_cached(complex(sigma, t), target_radius))
    l2, r2 = _log_abs(_zeta_cached(complex(sigma, 2 * t), target_radius))
    lhs = 3.0 * lz + 4.0 * l1 + l2
    budget = 3.0 * rz + 4.0 * r1 + r2

    rep2 = check_cor2(sigma, t, t, target_radius)[1]
    # lhs^2 - rhs^2 of the pre-squared form equals the 3-4-1 expression
    squared_form = rep2.lhs**2 - rep2.rhs**2
    gap = abs(lhs - squared_form)
    # budget for the gap: certified radii through the squaring, plus the
    # documented float round-off floor (radii at real sigma sit far below
    # machine epsilon, so roundoff dominates near-equality gaps)
    squared_budget = 2.0 * (rep2.lhs + rep2.rhs) * rep2.error_budget
    roundoff = 64.0 * 2.220446049250313e-16 * (1.0 + abs(lhs) + abs(squared_form))
    params = {
        "sigma": sigma,
        "t": t,
        "consistency_gap": gap,
        "consistency_tol": 10.0 * (budget + squared_budget) + roundoff,
    }
    return make_report("three-four-one", params, lhs, 0.0, budget)


# ---------------------------------------------------------------------------
# Dirichlet L-functions

def check_lfun_triangle(
    chi: DirichletCharacter,
    psi: DirichletCharacter,
    sigma: float,
    t1: float,
    t2: float,
    table: PrimeTable,
    target_radius: float | None = None,
    primitive_product: bool = False,
) -> InequalityReport:
    """Triangle inequality for L-functions of twisted characters:

        sqrt(log zeta(s)/|L(s+it1, chi)|) + sqrt(log zeta(s)/|L(s+it2, psi)|)
            >= sqrt(log zeta(s)/|L(s+i(t1+t2), chi psi)|).

    chi psi is evaluated as the (possibly imprimitive) product character
    mod lcm of the moduli; primitive_product=True replaces it by the
    primitive character inducing it.
    """
    sigma, t1, t2 = float(sigma), float(t1), float(t2)
    prod_chi = multiply_characters(chi, psi)
    if primitive_product:
        prod_chi = primitive_inducing(prod_chi)
    lz, rz = _log_abs(_zeta_cached(complex(sigma), 1e-12))
    lA, rA = _log_abs(l_function(chi, complex(sigma, t1), target_radius, table))
    lB, rB = _log_abs(l_function(psi, complex(sigma, t2), target_radius, table))
    lC, rC = _log_abs(l_function(prod_chi, complex(sigma, t1 + t2), target_radius, table))

    sa, ra, ca = _sqrt_nonneg(lz - lA, rz + rA)
    sb, rb, cb = _sqrt_nonneg(lz - lB, rz + rB)
    sc, rc, cc = _sqrt_nonneg(lz - lC, rz + rC)
    params = {
        "chi": chi.label,
        "psi": psi.label,
        "product": prod_chi.label,
        "sigma": sigma,
        "t1": t1,
        "t2": t2,
    }
    return make_report(
        "lfun-triangle", params, sa + sb, sc, ra + rb + rc,
        notes="clamped" if (ca or cb or cc) else "",
    )


# ---------------------------------------------------------------------------
# logarithmic derivative forms

def check_derivative_ineq(
    f: MultiplicativeFunction,
    sigma: float,
    sign: int,
    table: PrimeTable,
    target_radius: float | None = None,
) -> tuple[InequalityReport, InequalityReport]:
    """Main report: 3 zp/z(sigma) +- 4 Re(F'/F)(sigma) + Re((FxF)'/(FxF))(sigma) <= 0.

    Companion report, the pre-squaring triangle form:

        2 sqrt(+-Re(F'/F) - zp/z) >= sqrt(Re((FxF)'/(FxF)) - zp/z).

    Both arguments are nonnegative up to budget (termwise domination by
    -zp/z); clamps are recorded.
    """
    if sign not in (-1, 1):
        raise DomainError(f"sign must be +1 or -1, got {sign}")
    sigma = float(sigma)
    dz = log_derivative(one(), sigma, target_radius, table)
    dF = log_derivative(f, sigma, target_radius, table)
    dFF = log_derivative(product(f, f), sigma, target_radius, table)

    value = 3.0 * dz.value.real + sign * 4.0 * dF.value.real + dFF.value.real
    budget = 3.0 * dz.radius + 4.0 * dF.radius + dFF.radius
    params = {"f": f.label, "sigma": sigma, "sign": sign}
    # oriented so margin >= 0 means the (<= 0) inequality holds
    main = make_report("deriv-sum", params, 0.0, value, budget)

    sa, ra, ca = _sqrt_nonneg(
        sign * dF.value.real - dz.value.real, dF.radius + dz.radius
    )
    sc, rc, cc = _sqrt_nonneg(
        dFF.value.real - dz.value.real, dFF.radius + dz.radius
    )
    companion = make_report(
        "deriv-triangle", params, 2.0 * sa, sc, 2.0 * ra + rc,
        notes="clamped" if (ca or cc) else "",
    )
    return main, companion
