"""Asymptotic expansions of tensor-product counting functions.

Builds, from per-factor counting models N_j(lam) ~ A_j * lam**alpha_j:

* the leading term A * lam**alpha * (alpha log lam)**(nu-1) / (nu-1)! when
  nu factors share the maximal growth exponent alpha,
* the sharp single-term expansion A_l * lam**alpha_l + O(lam**eta) when one
  factor strictly dominates,
* the full log-polynomial expansion with coefficients B_q read off the
  Taylor data of the pole-cancelled Dirichlet-series product,
* the multi-term expansion sum_j A_j lam**(1/beta_j) for products of affine
  sequences with strictly increasing exponents (absorbing terms at or below
  the error order), and
* the phase-space leading coefficient for radial model symbols plus the
  inversion of a counting law into eigenvalue growth.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import (
    AmbiguousMultiplicityError,
    DominanceError,
    HypothesisViolationError,
)
from .sequences import (
    Explicit,
    SequenceSpec,
    dirichlet_series,
    weyl_data,
)
from .zeta import LaurentCoefficients, hurwitz_zeta, laurent_coefficients

_ALPHA_TIE_RTOL = 1e-12


@dataclass(frozen=True)
class ExpansionTerm:
    """coefficient * lam**power * (log lam)**log_power."""

    coefficient: float
    power: float
    log_power: int = 0

    def __post_init__(self):
        if not math.isfinite(self.coefficient) or self.coefficient == 0.0:
            raise ValueError("term coefficient must be finite and nonzero")
        if self.log_power < 0:
            raise ValueError("log power must be nonnegative")

    def evaluate(self, lam: float) -> float:
        return self.coefficient * lam**self.power * math.log(lam) ** self.log_power


@dataclass(frozen=True)
class TermExpansion:
    """Sum of terms plus a remainder order O(lam**e * log**q lam).

    error_log_power may be -1, meaning the remainder is o(lam**e) with no log
    factor resolved (the one-term leading asymptotics).  Terms are kept sorted
    by decreasing (power, log_power) and must strictly dominate the error.
    """

    terms: tuple[ExpansionTerm, ...]
    error_exponent: float
    error_log_power: int = 0

    def __post_init__(self):
        terms = tuple(
            sorted(self.terms, key=lambda t: (t.power, t.log_power), reverse=True)
        )
        object.__setattr__(self, "terms", terms)
        if self.error_log_power < -1:
            raise ValueError("error log power must be >= -1")
        for t in terms:
            if t.power < self.error_exponent or (
                t.power == self.error_exponent and t.log_power <= self.error_log_power
            ):
                raise ValueError(f"term {t} does not dominate the error order")

    def evaluate(self, lam: float) -> float:
        if lam <= 0:
            raise ValueError("lam must be positive")
        return math.fsum(t.evaluate(lam) for t in self.terms)


@dataclass(frozen=True)
class BCoefficients:
    """Coefficients B_1..B_nu of the log-polynomial expansion at exponent alpha."""

    alpha: float
    nu: int
    b: tuple[float, ...]

    def __post_init__(self):
        if len(self.b) != self.nu:
            raise ValueError("need exactly nu coefficients")
        if self.b[-1] == 0.0:
            raise ValueError("top coefficient of an order-nu pole cannot vanish")


def _terms(pairs, error_exponent, error_log_power=0) -> TermExpansion:
    kept = tuple(
        ExpansionTerm(c, p, q) for c, p, q in pairs if c != 0.0
    )
    return TermExpansion(kept, error_exponent, error_log_power)


def _split_by_max_alpha(specs):
    """(alpha, maximal indices, weyl data) with exact-tie grouping.

    Exponents equal as floats are grouped; exponents within relative 1e-12 of
    the maximum but not equal to it are refused, since guessing the pole order
    either way corrupts the expansion.
    """
    wds = [weyl_data(s) for s in specs]
    alpha = max(w.alpha for w in wds)
    maximal = [j for j, w in enumerate(wds) if w.alpha == alpha]
    for j, w in enumerate(wds):
        if w.alpha != alpha and abs(w.alpha - alpha) <= _ALPHA_TIE_RTOL * max(1.0, alpha):
            raise AmbiguousMultiplicityError(
                f"factor {j} growth exponent {w.alpha} is within 1e-12 of the maximum "
                f"{alpha} but not equal to it"
            )
    return alpha, maximal, wds


def leading_term(specs: list[SequenceSpec]) -> TermExpansion:
    """One-term asymptotics A * alpha**(nu-1)/(nu-1)! * lam**alpha * log**(nu-1) lam.

    A is the product of the maximal factors' leading coefficients times the
    non-maximal factors' Dirichlet series evaluated at alpha.
    """
    alpha, maximal, wds = _split_by_max_alpha(specs)
    nu = len(maximal)
    a = 1.0
    for j, spec in enumerate(specs):
        a *= wds[j].big_a if j in maximal else dirichlet_series(spec, alpha)
    coeff = a * alpha ** (nu - 1) / math.factorial(nu - 1)
    return _terms([(coeff, alpha, nu - 1)], alpha, nu - 2)


def _growth_exponent(spec) -> float:
    return 0.0 if isinstance(spec, Explicit) else weyl_data(spec).alpha


def dominant_remainder_expansion(
    specs: list[SequenceSpec], l: int, eta: float | None = None
) -> TermExpansion:
    """A_l * lam**alpha_l + O(lam**max(eta, tau)) when factor l strictly dominates.

    l is a 0-based index; tau is the largest growth exponent among the other
    factors and eta the remainder exponent of factor l (from its Weyl data,
    or overridden by the caller when a sharper bound is known).
    """
    if not 0 <= l < len(specs):
        raise ValueError("dominant index out of range")
    wd_l = weyl_data(specs[l])
    alpha_l = wd_l.alpha
    others = [(j, s) for j, s in enumerate(specs) if j != l]
    tau = max((_growth_exponent(s) for _, s in others), default=0.0)
    if tau >= alpha_l or any(
        abs(_growth_exponent(s) - alpha_l) <= _ALPHA_TIE_RTOL * max(1.0, alpha_l)
        for _, s in others
    ):
        raise DominanceError(f"factor {l} does not strictly dominate the others")
    if eta is None:
        eta = wd_l.remainder_exponent if wd_l.remainder_exponent is not None else 0.0
    if eta >= alpha_l:
        raise ValueError("remainder exponent eta must be below alpha_l")
    a = wd_l.big_a
    for _, s in others:
        a *= dirichlet_series(s, alpha_l)
    return _terms([(a, alpha_l, 0)], max(eta, tau))


def full_expansion(specs: list[SequenceSpec]) -> tuple[BCoefficients, TermExpansion]:
    """Log-polynomial expansion lam**alpha * sum_q C_q log**q lam + O(lam**eta).

    The B_q are Taylor data of the pole-cancelled Dirichlet-series product:
    B_q = T_{nu-q}.  They convert to the C_q via the exact identity

        (d/dz)^m (lam**z / z) |_alpha
            = lam**alpha * sum_i C(m,i) (log lam)**i (-1)**(m-i) (m-i)! alpha**-(m-i+1).

    The paper-level remainder is existence-only (some eta < alpha); the
    reported eta is the conservative midpoint between alpha and the largest
    non-maximal growth exponent, and is not claimed sharp.
    """
    alpha, maximal, wds = _split_by_max_alpha(specs)
    nu = len(maximal)
    lc: LaurentCoefficients = laurent_coefficients(specs, alpha, nu, order=nu)
    b = tuple(lc.coeffs[nu - q] for q in range(1, nu + 1))

    log_coeffs = [0.0] * nu  # C_i multiplies lam**alpha * log**i lam
    for q in range(1, nu + 1):
        m = q - 1
        for i in range(m + 1):
            log_coeffs[i] += (
                b[q - 1]
                / math.factorial(m)
                * math.comb(m, i)
                * (-1.0) ** (m - i)
                * math.factorial(m - i)
                * alpha ** -(m - i + 1)
            )
    tau = max((wds[j].alpha for j in range(len(specs)) if j not in maximal), default=0.0)
    eta = 0.5 * (alpha + tau)
    expansion = _terms([(c, alpha, i) for i, c in enumerate(log_coeffs)], eta)
    return BCoefficients(alpha, nu, b), expansion


def hermite_expansion(c, b, beta) -> TermExpansion:
    """Multi-term expansion sum_j A_j lam**(1/beta_j) + O(lam**((p-1)/sum beta)).

    Factors are affine sequences (c_j*(k-1)+b_j)**beta_j with strictly
    increasing beta.  A term is kept only when its order strictly beats the
    error, i.e. (p-1)*beta_j < sum(beta); at equality it is absorbed.

        A_j = c_j**-1 * prod_{v != j} c_v**(-beta_v/beta_j)
                                * zeta(beta_v/beta_j; b_v/c_v)
    """
    c, b, beta = list(map(float, c)), list(map(float, b)), list(map(float, beta))
    p = len(beta)
    if not (len(c) == len(b) == p and p >= 1):
        raise ValueError("c, b, beta must have equal positive length")
    if any(x <= 0 for x in c + b + beta):
        raise ValueError("all parameters must be strictly positive")
    if any(beta[j] >= beta[j + 1] for j in range(p - 1)):
        raise HypothesisViolationError("exponents beta must be strictly increasing")
    total = sum(beta)
    error_exponent = (p - 1) / total
    pairs = []
    for j in range(p):
        if (p - 1) * beta[j] >= total:
            continue  # absorbed by the error term (equality included)
        a = 1.0 / c[j]
        for v in range(p):
            if v == j:
                continue
            ratio = beta[v] / beta[j]
            assert ratio != 1.0
            a *= c[v] ** (-ratio) * hurwitz_zeta(ratio, b[v] / c[v])
        pairs.append((a, 1.0 / beta[j], 0))
    return _terms(pairs, error_exponent)


def weyl_coefficient_radial(n: int, m: float, kappa: float) -> float:
    """Leading Weyl coefficient of the radial model symbol kappa*|z|**m on R^2n.

    (2 pi)**-n times the volume of the region kappa*|z|**m <= 1, a ball of
    radius kappa**(-1/m) in dimension 2n with vol(B_2n) = pi**n / n!.
    """
    if n < 1 or m <= 0 or kappa <= 0:
        raise ValueError("need n >= 1, m > 0, kappa > 0")
    return (2.0 * math.pi) ** (-n) * math.pi**n / math.factorial(n) * kappa ** (-2.0 * n / m)


def eigenvalue_from_counting(r: float, alpha: float, s: float, k: int) -> float:
    """k-th eigenvalue growth for a counting law N(mu) ~ r * mu**alpha * log**s mu.

    Inverting the law gives mu_k ~ (alpha**s / r)**(1/alpha) * k**(1/alpha)
    * (log k)**(-s/alpha).  Requires k >= 2 when s > 0.
    """
    if r <= 0 or alpha <= 0 or s < 0:
        raise ValueError("need r > 0, alpha > 0, s >= 0")
    if k < 1:
        raise ValueError("k must be >= 1")
    if s > 0 and k < 2:
        raise ValueError("k must be >= 2 when s > 0 (log k would vanish)")
    value = (alpha**s / r) ** (1.0 / alpha) * k ** (1.0 / alpha)
    if s > 0:
        value *= math.log(k) ** (-s / alpha)
    return value
