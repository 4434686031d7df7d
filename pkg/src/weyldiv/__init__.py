"""Exact spectral counting for tensor products of positive operators,
zeta-coefficient asymptotic expansions, and remainder-exponent fitting."""

from .counting import (
    DEFAULT_BUDGET,
    CountResult,
    ProductSpec,
    count,
    count_hyperbola2,
    count_naive,
    count_recursive,
    dirichlet_divisor,
)
from .errors import (
    AmbiguousMultiplicityError,
    BudgetExceededError,
    DivergenceError,
    DominanceError,
    HypothesisViolationError,
    InsufficientDataError,
    PoleError,
    PoleOrderMismatchError,
    SpecFileError,
    UnsupportedVariantError,
    WeylDivError,
)
from .expansions import (
    BCoefficients,
    ExpansionTerm,
    TermExpansion,
    dominant_remainder_expansion,
    eigenvalue_from_counting,
    full_expansion,
    hermite_expansion,
    leading_term,
    weyl_coefficient_radial,
)
from .remainders import (
    FitResult,
    GridSpec,
    RemainderRow,
    RemainderTable,
    evaluate_remainder,
    fit_exponent,
    geometric_grid,
)
from .sequences import (
    AffinePower,
    Explicit,
    PowerLaw,
    SequenceSpec,
    WeylData,
    dirichlet_series,
    factor_count,
    kth_value,
    weyl_data,
)
from .specfile import (
    dump_product_spec,
    load_product_spec,
    product_from_obj,
    product_to_obj,
)
from .zeta import (
    LaurentCoefficients,
    PartialSumResult,
    euler_maclaurin_partial,
    euler_mascheroni,
    hurwitz_zeta,
    laurent_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "AffinePower",
    "AmbiguousMultiplicityError",
    "BCoefficients",
    "BudgetExceededError",
    "CountResult",
    "DEFAULT_BUDGET",
    "DivergenceError",
    "DominanceError",
    "Explicit",
    "ExpansionTerm",
    "FitResult",
    "GridSpec",
    "HypothesisViolationError",
    "InsufficientDataError",
    "LaurentCoefficients",
    "PartialSumResult",
    "PoleError",
    "PoleOrderMismatchError",
    "PowerLaw",
    "ProductSpec",
    "RemainderRow",
    "RemainderTable",
    "SequenceSpec",
    "SpecFileError",
    "TermExpansion",
    "UnsupportedVariantError",
    "WeylData",
    "WeylDivError",
    "count",
    "count_hyperbola2",
    "count_naive",
    "count_recursive",
    "dirichlet_divisor",
    "dirichlet_series",
    "dominant_remainder_expansion",
    "dump_product_spec",
    "eigenvalue_from_counting",
    "euler_maclaurin_partial",
    "euler_mascheroni",
    "evaluate_remainder",
    "factor_count",
    "fit_exponent",
    "full_expansion",
    "geometric_grid",
    "hermite_expansion",
    "hurwitz_zeta",
    "kth_value",
    "laurent_coefficients",
    "leading_term",
    "load_product_spec",
    "product_from_obj",
    "product_to_obj",
    "weyl_coefficient_radial",
    "weyl_data",
]
