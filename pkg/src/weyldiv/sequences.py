"""Factor eigenvalue sequences and their per-factor counting functions.

Three sequence models are supported:

* ``AffinePower``   -- values (c*(k-1) + b)**beta for k = 1, 2, ...
* ``PowerLaw``      -- values (k/A)**(1/alpha), so the counting function is
  exactly floor(A * lam**alpha)
* ``Explicit``      -- a finite nondecreasing list of positive values

Counting is inclusive (values <= lam are counted).  When all parameters of an
``AffinePower`` are integers the sequence values are exact integers and all
boundary comparisons are done in exact integer arithmetic; otherwise a
boundary value within relative tolerance ``BOUNDARY_RTOL`` (compared in log
space) counts as <=.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .errors import DivergenceError, PoleError, UnsupportedVariantError
from . import zeta

# Relative log-space tolerance for float boundary comparisons.
BOUNDARY_RTOL = 1e-12


@dataclass(frozen=True)
class AffinePower:
    """Sequence (c*(k-1) + b)**beta, k >= 1, with c, b, beta > 0."""

    c: float
    b: float
    beta: float

    def __post_init__(self):
        if not (self.c > 0 and self.b > 0 and self.beta > 0):
            raise ValueError("AffinePower parameters must be strictly positive")

    @property
    def integer_exact(self) -> bool:
        """True when c, b and beta are integers, so values are exact ints."""
        return (
            float(self.c).is_integer()
            and float(self.b).is_integer()
            and float(self.beta).is_integer()
        )

    def value_int(self, k: int) -> int:
        """Exact integer value of the k-th term; only valid when integer_exact."""
        return (int(self.c) * (k - 1) + int(self.b)) ** int(self.beta)


@dataclass(frozen=True)
class PowerLaw:
    """Sequence (k/big_a)**(1/alpha); counting function floor(big_a * lam**alpha)."""

    big_a: float
    alpha: float

    def __post_init__(self):
        if not (self.big_a > 0 and self.alpha > 0):
            raise ValueError("PowerLaw parameters must be strictly positive")


@dataclass(frozen=True)
class Explicit:
    """A finite nondecreasing tuple of positive values."""

    values: tuple[float, ...]

    def __post_init__(self):
        vals = tuple(float(v) for v in self.values)
        if not vals:
            raise ValueError("Explicit sequence must be nonempty")
        if any(v <= 0 for v in vals):
            raise ValueError("Explicit values must be strictly positive")
        if any(a > b for a, b in zip(vals, vals[1:])):
            raise ValueError("Explicit values must be nondecreasing")
        object.__setattr__(self, "values", vals)


SequenceSpec = AffinePower | PowerLaw | Explicit


@dataclass(frozen=True)
class WeylData:
    """Leading-order counting model N(lam) ~ big_a * lam**alpha + O(lam**tau)."""

    big_a: float
    alpha: float
    remainder_exponent: float | None = None

    def __post_init__(self):
        if not (self.big_a > 0 and self.alpha > 0):
            raise ValueError("WeylData requires big_a > 0 and alpha > 0")
        if self.remainder_exponent is not None and self.remainder_exponent >= self.alpha:
            raise ValueError("remainder exponent must be below alpha")


def _affine_count_int(c: int, b: int, beta: int, bound) -> int:
    """Largest k with (c*(k-1)+b)**beta <= bound, exactly.

    ``bound`` may be an int or a float; int-vs-float comparison is exact in
    Python.  The float root estimate is corrected against the exact integer
    inequality, so boundary values are classified exactly.
    """
    if bound < b**beta:
        return 0
    if beta == 1:
        # c*(k-1)+b <= bound  <=>  k <= (floor(bound)-b)/c + 1
        return (math.floor(bound) - b) // c + 1
    k = int((bound ** (1.0 / beta) - b) / c) + 1
    if k < 1:
        k = 1
    while (c * k + b) ** beta <= bound:  # value of index k+1
        k += 1
    while k >= 1 and (c * (k - 1) + b) ** beta > bound:
        k -= 1
    return k


def _affine_count_log(c: float, b: float, beta: float, log_bound: float, tol: float) -> int:
    """Largest k with beta*log(c*(k-1)+b) <= log_bound + tol."""
    limit = log_bound + tol
    if beta * math.log(b) > limit:
        return 0
    base_max = math.exp(limit / beta)
    k = int((base_max - b) / c) + 1
    if k < 1:
        k = 1
    while beta * math.log(c * k + b) <= limit:
        k += 1
    while k >= 1 and beta * math.log(c * (k - 1) + b) > limit:
        k -= 1
    return k


def factor_count(spec: SequenceSpec, lam: float) -> int:
    """Number of sequence values <= lam (inclusive counting)."""
    if lam <= 0:
        raise ValueError("lam must be positive")
    if isinstance(spec, AffinePower):
        if spec.integer_exact:
            return _affine_count_int(int(spec.c), int(spec.b), int(spec.beta), lam)
        tol = BOUNDARY_RTOL * abs(math.log(lam))
        return _affine_count_log(spec.c, spec.b, spec.beta, math.log(lam), tol)
    if isinstance(spec, PowerLaw):
        x = spec.big_a * lam**spec.alpha
        n = math.floor(x)
        # a boundary hit that rounded just below the next integer counts as <=
        if (n + 1) - x <= BOUNDARY_RTOL * max(1.0, x):
            n += 1
        return n
    return bisect.bisect_right(spec.values, lam)


def kth_value(spec: SequenceSpec, k: int) -> float:
    """The k-th sequence value (k >= 1)."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if isinstance(spec, AffinePower):
        return (spec.c * (k - 1) + spec.b) ** spec.beta
    if isinstance(spec, PowerLaw):
        return (k / spec.big_a) ** (1.0 / spec.alpha)
    if k > len(spec.values):
        raise IndexError(f"k={k} out of range for explicit sequence of length {len(spec.values)}")
    return spec.values[k - 1]


def abscissa(spec: SequenceSpec) -> float:
    """Abscissa of convergence of the Dirichlet series sum(value**-z).

    -inf for Explicit sequences (finite sums converge everywhere).
    """
    if isinstance(spec, AffinePower):
        return 1.0 / spec.beta
    if isinstance(spec, PowerLaw):
        return spec.alpha
    return -math.inf


def dirichlet_series(spec: SequenceSpec, z: float) -> float:
    """sum_k (k-th value)**(-z), for z above the abscissa of convergence.

    AffinePower reduces to the closed form c**(-beta*z) * zeta(beta*z; b/c);
    PowerLaw reduces to big_a**(z/alpha) * zeta(z/alpha), evaluated by
    Euler-Maclaurin summation; Explicit sums directly (any z).
    """
    if isinstance(spec, Explicit):
        return math.fsum(v ** (-z) for v in spec.values)
    a = abscissa(spec)
    if isinstance(spec, AffinePower):
        s = spec.beta * z
        if s == 1.0:
            raise PoleError(f"dirichlet series of {spec} has a pole at z={z}")
        if z <= a:
            raise DivergenceError(f"series diverges for z={z} <= abscissa {a}")
        return spec.c ** (-s) * zeta.hurwitz_zeta(s, spec.b / spec.c)
    if z <= a:
        raise DivergenceError(f"series diverges for z={z} <= abscissa {a}")
    s = z / spec.alpha
    return spec.big_a**s * zeta.hurwitz_zeta(s, 1.0)


def dirichlet_series_continued(spec: SequenceSpec, z: float) -> float:
    """Meromorphic continuation of the factor Dirichlet series.

    Same closed forms as :func:`dirichlet_series` but valid on the whole real
    line except the pole (beta*z = 1 for AffinePower, z = alpha for PowerLaw).
    Needed by the Laurent-coefficient extraction, whose stencils sample below
    the abscissa.
    """
    if isinstance(spec, Explicit):
        return math.fsum(v ** (-z) for v in spec.values)
    if isinstance(spec, AffinePower):
        s = spec.beta * z
        if s == 1.0:
            raise PoleError(f"dirichlet series of {spec} has a pole at z={z}")
        return spec.c ** (-s) * zeta.hurwitz_zeta(s, spec.b / spec.c)
    s = z / spec.alpha
    if s == 1.0:
        raise PoleError(f"dirichlet series of {spec} has a pole at z={z}")
    return spec.big_a**s * zeta.hurwitz_zeta(s, 1.0)


def weyl_data(spec: SequenceSpec) -> WeylData:
    """Leading counting coefficient and growth exponent of the factor.

    AffinePower: N(lam) = lam**(1/beta)/c + O(1); PowerLaw: N(lam) =
    big_a*lam**alpha + O(1).  Explicit sequences have no asymptotic model.
    """
    if isinstance(spec, AffinePower):
        return WeylData(1.0 / spec.c, 1.0 / spec.beta, 0.0)
    if isinstance(spec, PowerLaw):
        return WeylData(spec.big_a, spec.alpha, 0.0)
    raise UnsupportedVariantError("Explicit sequences have no Weyl data")
