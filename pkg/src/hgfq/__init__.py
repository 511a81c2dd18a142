"""Character sums and hypergeometric series over finite fields, with
point counts on the curves y^l = (x-1)(x^2+lambda) and a verification
sweep tying the two together."""

from .characters import (
    Character,
    UnityOrZero,
    character_of_order,
    delta_char,
    parse_character,
    quadratic_character,
    sqrt_character,
    trivial_character,
)
from .charsums import (
    CyclotomicSum,
    binomial,
    binomial_exact,
    g_sum,
    g_sum_c,
    gauss_sum,
    jacobi_sum,
)
from .curves import (
    CurveSpec,
    PointCount,
    brute_force_count,
    character_sum_count,
    cornacchia_3,
    count_points,
    genus,
    good_reduction,
    hasse_weil_bound,
    model_is_squarefree,
    reduce_lambda,
    weierstrass_count_l3,
)
from .errors import (
    BadReductionError,
    CongruenceError,
    FieldMismatchError,
    FieldTooLargeError,
    HgfqError,
    LogOfZeroError,
    NoRepresentationError,
    NotPrimeError,
    OddPrimeRequiredError,
    OrderNotDividingError,
    UnsupportedInfinityCountError,
    ZeroArgumentError,
)
from .field import DEFAULT_Q_CAP, Field, FieldElement, is_prime, make_field
from .hgf import (
    SeriesSpec,
    evans_F,
    evans_F_star,
    gaussian_hgf,
    greene_transform_check,
    hgf_2f1,
    series_value,
)
from .report import VerificationReport, build_report, summarize
from .verifier import (
    SweepConfig,
    sweep,
    verify_2f1_specials,
    verify_2f1_trace,
    verify_3f2_at_4,
    verify_charsum_lemmas,
    verify_corollary_c3,
    verify_corollary_chi4,
    verify_corollary_lcm,
    verify_lambda_third,
    verify_main_square,
    verify_mccarthy,
    verify_ono,
)

__version__ = "0.1.0"

__all__ = [
    "BadReductionError",
    "Character",
    "CongruenceError",
    "CurveSpec",
    "CyclotomicSum",
    "DEFAULT_Q_CAP",
    "Field",
    "FieldElement",
    "FieldMismatchError",
    "FieldTooLargeError",
    "HgfqError",
    "LogOfZeroError",
    "NoRepresentationError",
    "NotPrimeError",
    "OddPrimeRequiredError",
    "OrderNotDividingError",
    "PointCount",
    "SeriesSpec",
    "SweepConfig",
    "UnityOrZero",
    "UnsupportedInfinityCountError",
    "VerificationReport",
    "ZeroArgumentError",
    "binomial",
    "binomial_exact",
    "brute_force_count",
    "build_report",
    "character_of_order",
    "character_sum_count",
    "cornacchia_3",
    "count_points",
    "delta_char",
    "evans_F",
    "evans_F_star",
    "g_sum",
    "g_sum_c",
    "gauss_sum",
    "gaussian_hgf",
    "genus",
    "good_reduction",
    "greene_transform_check",
    "hasse_weil_bound",
    "hgf_2f1",
    "is_prime",
    "jacobi_sum",
    "make_field",
    "model_is_squarefree",
    "parse_character",
    "quadratic_character",
    "reduce_lambda",
    "series_value",
    "sqrt_character",
    "summarize",
    "sweep",
    "trivial_character",
    "verify_2f1_specials",
    "verify_2f1_trace",
    "verify_3f2_at_4",
    "verify_charsum_lemmas",
    "verify_corollary_c3",
    "verify_corollary_chi4",
    "verify_corollary_lcm",
    "verify_lambda_third",
    "verify_main_square",
    "verify_mccarthy",
    "verify_ono",
    "weierstrass_count_l3",
]
