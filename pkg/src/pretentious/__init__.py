"""Distance machinery for unit-disc multiplicative functions.

Weighted norms tied to zeta, the prime-weighted distance between
completely multiplicative functions, certified Dirichlet-series
evaluation on Re s > 1, triangle-inequality verifiers for zeta and
Dirichlet L-functions, mean-value diagnostics, and character-sum scans.
"""

__version__ = "0.1.0"

from .characters import (
    CharacterGroup,
    DirichletCharacter,
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
from .distance import (
    DistanceResult,
    HalaszGrid,
    HalaszMin,
    NormResult,
    WeightScheme,
    distance,
    eta,
    halasz_M,
    halasz_profile,
    norm_for_scheme,
    prime_weights,
    sigma_norm,
    sigma_weights,
)
from .errors import (
    CapacityError,
    DomainError,
    NonInvertibleError,
    PrecisionUnreachableError,
    PretentiousError,
)
from .halasz import (
    HALL_KAPPA,
    HallReport,
    MeanValueReport,
    hall_family_scan,
    hall_real_diagnostic,
    halasz_report,
    heuristic_value,
    mean_value,
    progression_mean,
)
from .inequalities import (
    InequalityReport,
    check_341,
    check_cor2,
    check_derivative_ineq,
    check_lfun_triangle,
    check_prop1,
)
from .multfunc import (
    MultiplicativeFunction,
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
from .ntheory import (
    Factorization,
    PrimeTable,
    build_prime_table,
    dirichlet_convolve,
    dirichlet_deconvolve,
    divisor_count_k,
    divisor_count_sieve,
    factorize,
    von_mangoldt,
)
from .series import (
    CertifiedValue,
    dirichlet_F,
    l_function,
    log_derivative,
    zeta,
)
from .charsums import (
    CharSumProfile,
    ExactHReport,
    LemmaRow,
    ScanRow,
    d_chi_sum,
    d_chi_values,
    h_sequence,
    lemma_distance_scan,
    min_implied_c,
    prop6_scan,
    pv_profile,
    pv_scan,
    verify_h_exact,
)
