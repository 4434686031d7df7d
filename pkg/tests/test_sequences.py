import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from weyldiv import (
    AffinePower,
    DivergenceError,
    Explicit,
    PoleError,
    PowerLaw,
    UnsupportedVariantError,
    dirichlet_series,
    factor_count,
    hurwitz_zeta,
    kth_value,
    weyl_data,
)
from conftest import factor_values_upto


class TestFactorCount:
    def test_affine_examples(self):
        assert factor_count(AffinePower(2, 3, 1), 10) == 4  # values 3,5,7,9
        assert factor_count(AffinePower(1, 1, 1), 7.5) == 7
        # squares 1,4,9 <= 10, by brute enumeration
        sq = AffinePower(1, 1, 2)
        assert factor_count(sq, 10) == len(factor_values_upto(sq, 10)) == 3

    def test_power_law(self):
        assert factor_count(PowerLaw(2.0, 1.0), 2.0) == 4
        assert factor_count(PowerLaw(3.0, 0.7), 1.0) == 3

    def test_explicit(self):
        spec = Explicit((0.5, 1.0, 1.0, 4.0))
        assert factor_count(spec, 1.0) == 3
        assert factor_count(spec, 0.4) == 0
        assert factor_count(spec, 100.0) == 4

    def test_below_first_value(self):
        assert factor_count(AffinePower(2, 3, 2), 8.99) == 0

    def test_rejects_nonpositive_lam(self):
        with pytest.raises(ValueError):
            factor_count(AffinePower(1, 1, 1), 0.0)

    def test_float_boundary_counts_inclusively(self):
        spec = AffinePower(1.5, 2.5, 1.0)
        for k in range(1, 50):
            lam = 1.5 * (k - 1) + 2.5
            assert factor_count(spec, lam) == k

    @settings(max_examples=60, deadline=None)
    @given(
        st.floats(min_value=0.1, max_value=10_000),
        st.floats(min_value=0.1, max_value=10_000),
        st.sampled_from([(1, 1, 1), (2, 3, 1), (1, 1, 2), (3, 2, 3)]),
    )
    def test_monotone_in_lam(self, x, y, params):
        lo, hi = min(x, y), max(x, y)
        spec = AffinePower(*params)
        assert factor_count(spec, lo) <= factor_count(spec, hi)

    def test_closed_form_matches_enumeration(self):
        rng = random.Random(2024)
        for _ in range(25):
            if rng.random() < 0.5:
                spec = AffinePower(rng.randint(1, 5), rng.randint(1, 5), rng.randint(1, 3))
            else:
                spec = AffinePower(
                    rng.uniform(0.3, 4.0), rng.uniform(0.3, 4.0), rng.uniform(0.4, 3.0)
                )
            lam = rng.uniform(1.0, 1e4)
            assert factor_count(spec, lam) == len(factor_values_upto(spec, lam))


class TestKthValue:
    def test_examples(self):
        assert kth_value(AffinePower(2, 3, 2), 3) == 49
        assert kth_value(AffinePower(1, 1, 1), 5) == 5
        assert kth_value(PowerLaw(2.0, 1.0), 4) == pytest.approx(2.0)

    def test_explicit_out_of_range(self):
        with pytest.raises(IndexError):
            kth_value(Explicit((1.0, 2.0)), 3)

    def test_round_trip_counts_index(self):
        specs = [
            AffinePower(2, 3, 2),
            AffinePower(1, 1, 1),
            AffinePower(1.7, 0.4, 2.3),
            PowerLaw(3.0, 0.7),
        ]
        for spec in specs:
            for k in [1, 2, 3, 17, 100, 4096, 10_000]:
                assert factor_count(spec, kth_value(spec, k)) == k

    def test_round_trip_with_duplicates(self):
        spec = Explicit((1.0, 2.0, 2.0, 2.0, 5.0))
        # counting is multiplicity-inclusive: the index of the last equal value
        assert factor_count(spec, kth_value(spec, 2)) == 4
        assert factor_count(spec, kth_value(spec, 5)) == 5


class TestDirichletSeries:
    def test_basel(self):
        assert dirichlet_series(AffinePower(1, 1, 2), 1.0) == pytest.approx(
            math.pi**2 / 6, abs=1e-12
        )
        assert dirichlet_series(AffinePower(1, 1, 1), 2.0) == pytest.approx(
            math.pi**2 / 6, abs=1e-12
        )

    def test_affine_closed_form_vs_partial_sum(self):
        # sum_{k>=0} (2k+3)^-2 bracketed by partial sum plus integral tail bounds
        value = dirichlet_series(AffinePower(2, 3, 1), 2.0)
        assert value == pytest.approx(0.25 * hurwitz_zeta(2.0, 1.5), abs=1e-14)
        n = 200_000
        partial = math.fsum((2 * k + 3) ** -2.0 for k in range(n))
        lower = partial + 1.0 / (2 * (2 * n + 3))
        upper = partial + 1.0 / (2 * (2 * n + 1))
        assert lower - 1e-12 <= value <= upper + 1e-12

    def test_consistency_random_z(self):
        rng = random.Random(99)
        for _ in range(20):
            c = rng.uniform(0.5, 3.0)
            b = rng.uniform(0.5, 3.0)
            beta = rng.uniform(0.5, 2.5)
            spec = AffinePower(c, b, beta)
            z = rng.uniform(1.2 / beta, 3.0 / beta)
            n = 100_000
            partial = math.fsum(
                (c * k + b) ** (-beta * z) for k in range(n)
            )
            s = beta * z
            # integral tail bounds for the decreasing summand
            lower = partial + (c * n + b) ** (1 - s) / (c * (s - 1))
            upper = partial + (c * (n - 1) + b) ** (1 - s) / (c * (s - 1))
            value = dirichlet_series(spec, z)
            assert lower - 1e-10 <= value <= upper + 1e-10

    def test_explicit_any_z(self):
        spec = Explicit((2.0, 4.0))
        assert dirichlet_series(spec, -1.0) == pytest.approx(6.0)

    def test_divergence_and_pole(self):
        with pytest.raises(PoleError):
            dirichlet_series(AffinePower(1, 1, 2), 0.5)
        with pytest.raises(DivergenceError):
            dirichlet_series(AffinePower(1, 1, 2), 0.3)
        with pytest.raises(DivergenceError):
            dirichlet_series(PowerLaw(1.0, 1.0), 0.9)


class TestWeylData:
    def test_examples(self):
        wd = weyl_data(AffinePower(1, 1, 1))
        assert (wd.big_a, wd.alpha, wd.remainder_exponent) == (1.0, 1.0, 0.0)
        wd = weyl_data(AffinePower(1, 1, 2))
        assert (wd.big_a, wd.alpha) == (1.0, 0.5)
        wd = weyl_data(PowerLaw(3.0, 0.7))
        assert (wd.big_a, wd.alpha) == (3.0, 0.7)

    def test_explicit_unsupported(self):
        with pytest.raises(UnsupportedVariantError):
            weyl_data(Explicit((1.0,)))


class TestSpecValidation:
    def test_positivity(self):
        with pytest.raises(ValueError):
            AffinePower(0, 1, 1)
        with pytest.raises(ValueError):
            PowerLaw(1.0, 0.0)
        with pytest.raises(ValueError):
            Explicit(())
        with pytest.raises(ValueError):
            Explicit((2.0, 1.0))
        with pytest.raises(ValueError):
            Explicit((0.0, 1.0))

    def test_integer_exact_flag(self):
        assert AffinePower(2, 3, 1).integer_exact
        assert AffinePower(2.0, 3.0, 2.0).integer_exact
        assert not AffinePower(1.5, 1, 1).integer_exact
        assert not AffinePower(1, 1, 0.5).integer_exact
