"""Exact counting of tensor-product spectra.

Counts tuples (k_1, ..., k_p) whose factor-value product is <= lam, by three
interchangeable algorithms (naive depth-first enumeration, recursion over the
last factor with a closed-form base, and the two-factor hyperbola split) plus
the classical O(sqrt(lam)) divisor-sum fast path.

Two arithmetic modes exist.  ``integer_exact`` (available when every factor
is an integer-parameter AffinePower) forms all products as Python ints and
compares them exactly against floor(lam); results are exact for any lam.
``float_log`` compares sum_j beta_j*log(base_j) <= log(lam) + tol with
tol = BOUNDARY_RTOL * |log lam|, so boundary values within that relative
tolerance count as <=.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

from .errors import BudgetExceededError, UnsupportedVariantError
from .sequences import (
    BOUNDARY_RTOL,
    AffinePower,
    Explicit,
    PowerLaw,
    SequenceSpec,
    _affine_count_int,
    _affine_count_log,
    factor_count,
    kth_value,
    weyl_data,
)

DEFAULT_BUDGET = 10**9
_COUNT_LIMIT = 2**63  # counts are contractually 64-bit

MODE_INTEGER_EXACT = "integer_exact"
MODE_FLOAT_LOG = "float_log"
_MODES = (MODE_INTEGER_EXACT, MODE_FLOAT_LOG, "auto")


@dataclass(frozen=True)
class ProductSpec:
    """A tensor product of factor sequences plus the arithmetic mode.

    mode "auto" resolves to integer_exact when every factor allows it.
    Factor order never affects counts.
    """

    factors: tuple[SequenceSpec, ...]
    arithmetic_mode: str = "auto"

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(self.factors))
        if not self.factors:
            raise ValueError("ProductSpec needs at least one factor")
        if self.arithmetic_mode not in _MODES:
            raise ValueError(f"unknown arithmetic mode {self.arithmetic_mode!r}")
        if self.arithmetic_mode == MODE_INTEGER_EXACT and not self._integer_eligible():
            raise ValueError("integer_exact mode requires all-integer AffinePower factors")

    def _integer_eligible(self) -> bool:
        return all(isinstance(f, AffinePower) and f.integer_exact for f in self.factors)

    @property
    def resolved_mode(self) -> str:
        if self.arithmetic_mode == "auto":
            return MODE_INTEGER_EXACT if self._integer_eligible() else MODE_FLOAT_LOG
        return self.arithmetic_mode


@dataclass(frozen=True)
class CountResult:
    lam: float
    count: int
    method: str
    mode: str

    def __post_init__(self):
        if self.count < 0:
            raise ValueError("count must be nonnegative")


def _check64(count: int) -> int:
    if count >= _COUNT_LIMIT:
        raise OverflowError("count does not fit in 64 bits")
    return count


def _growth_alpha(spec: SequenceSpec) -> float:
    # Explicit sequences are finite, i.e. O(lam**0)
    if isinstance(spec, Explicit):
        return 0.0
    return weyl_data(spec).alpha


def _sorted_factors(factors):
    """Fastest-growing count innermost (last); pure performance choice."""
    return sorted(factors, key=_growth_alpha)


def _int_triples(factors):
    return [(int(f.c), int(f.b), int(f.beta)) for f in factors]


def _estimate_volume(factors, lam: float) -> int:
    """Upper bound on the naive enumeration volume, in given factor order."""
    est = 1
    prefix = 1.0
    for f in factors:
        bound = lam / prefix
        n = factor_count(f, bound) if bound > 0 else 0
        est *= max(n, 1)  # a zero here does not prove the count is zero
        prefix *= kth_value(f, 1)
    return est


# ---------------------------------------------------------------------------
# naive depth-first enumeration


def _naive_int(triples, L: int) -> int:
    p = len(triples)
    minrest = [1] * (p + 1)
    for j in range(p - 1, -1, -1):
        c, b, beta = triples[j]
        minrest[j] = minrest[j + 1] * b**beta

    def rec(j: int, bound: int) -> int:
        # bound = L // (product of values chosen before level j)
        c, b, beta = triples[j]
        n = 0
        if j == p - 1:
            if beta == 1:
                v = b
                while v <= bound:
                    n += 1
                    v += c
            else:
                k = 1
                v = b**beta
                while v <= bound:
                    n += 1
                    k += 1
                    v = (c * (k - 1) + b) ** beta
            return n
        vb = bound // minrest[j + 1]
        if beta == 1:
            v = b
            while v <= vb:
                n += rec(j + 1, bound // v)
                v += c
        else:
            k = 1
            v = b**beta
            while v <= vb:
                n += rec(j + 1, bound // v)
                k += 1
                v = (c * (k - 1) + b) ** beta
        return n

    return rec(0, L)


def _log_value(spec: SequenceSpec, k: int) -> float:
    if isinstance(spec, AffinePower):
        return spec.beta * math.log(spec.c * (k - 1) + spec.b)
    if isinstance(spec, PowerLaw):
        return (math.log(k) - math.log(spec.big_a)) / spec.alpha
    return math.log(spec.values[k - 1])


def _max_index(spec: SequenceSpec) -> float:
    return len(spec.values) if isinstance(spec, Explicit) else math.inf


def _naive_float(factors, log_lam: float, tol: float) -> int:
    p = len(factors)
    minrest = [0.0] * (p + 1)
    for j in range(p - 1, -1, -1):
        minrest[j] = minrest[j + 1] + _log_value(factors[j], 1)

    def rec(j: int, rem: float) -> int:
        # rem = log_lam - sum of chosen log values
        spec = factors[j]
        kmax = _max_index(spec)
        n = 0
        k = 1
        if j == p - 1:
            while k <= kmax and _log_value(spec, k) <= rem + tol:
                n += 1
                k += 1
            return n
        mr = minrest[j + 1]
        while k <= kmax:
            lv = _log_value(spec, k)
            if lv + mr > rem + tol:
                break
            n += rec(j + 1, rem - lv)
            k += 1
        return n

    return rec(0, log_lam)


def count_naive(spec: ProductSpec, lam: float, budget: int | None = None) -> CountResult:
    """Exact count by depth-first enumeration with early pruning.

    Raises BudgetExceededError when the estimated enumeration volume exceeds
    the budget (default 1e9); count_recursive has no such limit.
    """
    if lam <= 0:
        raise ValueError("lam must be positive")
    budget = DEFAULT_BUDGET if budget is None else budget
    if _estimate_volume(spec.factors, lam) > budget:
        raise BudgetExceededError(
            f"estimated enumeration volume exceeds budget {budget}; use count_recursive"
        )
    mode = spec.resolved_mode
    order = _sorted_factors(spec.factors)
    if mode == MODE_INTEGER_EXACT:
        n = _naive_int(_int_triples(order), math.floor(lam))
    else:
        n = _naive_float(order, math.log(lam), BOUNDARY_RTOL * abs(math.log(lam)))
    return CountResult(lam, _check64(n), "naive", mode)


# ---------------------------------------------------------------------------
# recursion over the outer factors, closed-form innermost count


def _rec_int(triples, L: int) -> int:
    p = len(triples)
    if p == 1:
        c, b, beta = triples[0]
        return _affine_count_int(c, b, beta, L)
    minrest = [1] * (p + 1)
    for j in range(p - 1, -1, -1):
        c, b, beta = triples[j]
        minrest[j] = minrest[j + 1] * b**beta

    ci, bi, bei = triples[-1]

    def rec(j: int, bound: int) -> int:
        c, b, beta = triples[j]
        total = 0
        vb = bound // minrest[j + 1]
        if j == p - 2:
            # innermost sum inlined; the base count is a closed form
            if beta == 1 and bei == 1:
                v = b
                while v <= vb:
                    total += (bound // v - bi) // ci + 1
                    v += c
                return total
            if beta == 1:
                v = b
                while v <= vb:
                    total += _affine_count_int(ci, bi, bei, bound // v)
                    v += c
                return total
            k = 1
            v = b**beta
            while v <= vb:
                total += _affine_count_int(ci, bi, bei, bound // v)
                k += 1
                v = (c * (k - 1) + b) ** beta
            return total
        if beta == 1:
            v = b
            while v <= vb:
                total += rec(j + 1, bound // v)
                v += c
        else:
            k = 1
            v = b**beta
            while v <= vb:
                total += rec(j + 1, bound // v)
                k += 1
                v = (c * (k - 1) + b) ** beta
        return total

    return rec(0, L)


def _count_log(spec: SequenceSpec, rem: float, tol: float) -> int:
    """Number of factor values with log(value) <= rem + tol."""
    if isinstance(spec, AffinePower):
        return _affine_count_log(spec.c, spec.b, spec.beta, rem, tol)
    if isinstance(spec, PowerLaw):
        return math.floor(spec.big_a * math.exp(spec.alpha * (rem + tol)))
    return bisect.bisect_right(spec.values, math.exp(rem + tol))


def _rec_float(factors, log_lam: float, tol: float) -> int:
    p = len(factors)
    if p == 1:
        return _count_log(factors[0], log_lam, tol)
    minrest = [0.0] * (p + 1)
    for j in range(p - 1, -1, -1):
        minrest[j] = minrest[j + 1] + _log_value(factors[j], 1)

    def rec(j: int, rem: float) -> int:
        if j == p - 1:
            return _count_log(factors[j], rem, tol)
        spec = factors[j]
        kmax = _max_index(spec)
        mr = minrest[j + 1]
        total = 0
        k = 1
        while k <= kmax:
            lv = _log_value(spec, k)
            if lv + mr > rem + tol:
                break
            total += rec(j + 1, rem - lv)
            k += 1
        return total

    return rec(0, log_lam)


def count_recursive(spec: ProductSpec, lam: float) -> CountResult:
    """Exact count via N(lam) = sum over outer-factor values v of N'(lam/v).

    The factor with the fastest-growing count is evaluated innermost by its
    closed form.  Agrees with count_naive everywhere; no enumeration budget.
    """
    if lam <= 0:
        raise ValueError("lam must be positive")
    mode = spec.resolved_mode
    order = _sorted_factors(spec.factors)
    if mode == MODE_INTEGER_EXACT:
        n = _rec_int(_int_triples(order), math.floor(lam))
    else:
        n = _rec_float(order, math.log(lam), BOUNDARY_RTOL * abs(math.log(lam)))
    return CountResult(lam, _check64(n), "recursive", mode)


# ---------------------------------------------------------------------------
# two-factor hyperbola split


def count_hyperbola2(f1: SequenceSpec, f2: SequenceSpec, lam: float) -> CountResult:
    """Exact two-factor count by the hyperbola split at lam**(1/(b1+b2)).

    Counts pairs with value1*value2 <= lam as sum over small value1 of the
    matching value2 count, plus the symmetric sum, minus the double-counted
    rectangle.  Both factors must be AffinePower.
    """
    if lam <= 0:
        raise ValueError("lam must be positive")
    if not (isinstance(f1, AffinePower) and isinstance(f2, AffinePower)):
        raise UnsupportedVariantError("hyperbola counting requires AffinePower factors")
    s = f1.beta + f2.beta
    if f1.integer_exact and f2.integer_exact:
        L = math.floor(lam)
        t1 = (int(f1.c), int(f1.b), int(f1.beta))
        t2 = (int(f2.c), int(f2.b), int(f2.beta))
        # base <= lam**(1/s)  <=>  base**s <= L, checked exactly in integers
        n1 = _affine_count_int(t1[0], t1[1], int(s), L)
        n2 = _affine_count_int(t2[0], t2[1], int(s), L)
        total = -n1 * n2
        for (c, b, beta), m, (ci, bi, bei) in ((t1, n1, t2), (t2, n2, t1)):
            for k in range(1, m + 1):
                v = (c * (k - 1) + b) ** beta
                total += _affine_count_int(ci, bi, bei, L // v)
        return CountResult(lam, _check64(total), "hyperbola2", MODE_INTEGER_EXACT)

    log_lam = math.log(lam)
    tol = BOUNDARY_RTOL * abs(log_lam)
    split = log_lam / s  # log of the base-value threshold
    n1 = _affine_count_log(f1.c, f1.b, 1.0, split, tol / f1.beta)
    n2 = _affine_count_log(f2.c, f2.b, 1.0, split, tol / f2.beta)
    total = -n1 * n2
    for f, m, other in ((f1, n1, f2), (f2, n2, f1)):
        for k in range(1, m + 1):
            lv = f.beta * math.log(f.c * (k - 1) + f.b)
            total += _affine_count_log(other.c, other.b, other.beta, log_lam - lv, tol)
    return CountResult(lam, _check64(total), "hyperbola2", MODE_FLOAT_LOG)


def dirichlet_divisor(lam: float) -> CountResult:
    """Divisor summatory function D(lam) = sum_{n<=lam} d(n), in O(sqrt(lam)).

    Equals the tensor count for two identity factors (c=b=beta=1).
    """
    if lam < 1:
        raise ValueError("lam must be >= 1")
    L = math.floor(lam)
    s = math.isqrt(L)
    total = 2 * sum(L // n for n in range(1, s + 1)) - s * s
    return CountResult(lam, _check64(total), "dirichlet", MODE_INTEGER_EXACT)


def is_double_identity(spec: ProductSpec) -> bool:
    """True when the product is exactly two identity AffinePower factors."""
    return len(spec.factors) == 2 and all(
        isinstance(f, AffinePower) and (f.c, f.b, f.beta) == (1, 1, 1) for f in spec.factors
    )


def count(spec: ProductSpec, lam: float, method: str = "recursive", budget: int | None = None) -> CountResult:
    """Dispatch to one of the counting methods by name."""
    if method == "naive":
        return count_naive(spec, lam, budget)
    if method == "recursive":
        return count_recursive(spec, lam)
    if method in ("hyperbola", "hyperbola2"):
        if len(spec.factors) != 2:
            raise UnsupportedVariantError("hyperbola counting needs exactly two factors")
        return count_hyperbola2(spec.factors[0], spec.factors[1], lam)
    if method == "dirichlet":
        if not is_double_identity(spec):
            raise UnsupportedVariantError("dirichlet fast path needs two identity factors")
        return dirichlet_divisor(lam)
    raise ValueError(f"unknown counting method {method!r}")
