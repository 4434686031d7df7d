"""Exception hierarchy shared across the package."""


class WeylDivError(Exception):
    """Base class for all weyldiv errors."""


class PoleError(WeylDivError):
    """Evaluation requested exactly at a pole (e.g. zeta at s = 1)."""


class DivergenceError(WeylDivError):
    """Dirichlet series evaluated at or below its abscissa of convergence."""


class BudgetExceededError(WeylDivError):
    """Estimated enumeration volume exceeds the configured budget."""


class UnsupportedVariantError(WeylDivError):
    """Operation not defined for this sequence variant."""


class AmbiguousMultiplicityError(WeylDivError):
    """Growth exponents nearly but not exactly tied; multiplicity is unsafe to infer."""


class DominanceError(WeylDivError):
    """No strictly dominating factor where one is required."""


class HypothesisViolationError(WeylDivError):
    """Input violates a structural hypothesis (e.g. exponents not strictly increasing)."""


class PoleOrderMismatchError(WeylDivError):
    """Pole-cancelled product still diverges: declared pole order is too small."""


class InsufficientDataError(WeylDivError):
    """Not enough usable rows for a regression."""


class SpecFileError(WeylDivError):
    """Malformed JSON product-spec file; the message names the offending key."""
