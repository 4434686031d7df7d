import math
import random

import numpy as np
import pytest

from weyldiv import (
    AffinePower,
    PoleError,
    PoleOrderMismatchError,
    PowerLaw,
    euler_maclaurin_partial,
    euler_mascheroni,
    hurwitz_zeta,
    laurent_coefficients,
)
from weyldiv.zeta import _em_once

ZETA_HALF = -1.4603545088095868  # frozen: two EM parameterizations agree below


class TestHurwitzZeta:
    def test_known_values(self):
        assert hurwitz_zeta(2.0) == pytest.approx(math.pi**2 / 6, abs=1e-12)
        assert hurwitz_zeta(4.0) == pytest.approx(math.pi**4 / 90, abs=1e-12)
        assert hurwitz_zeta(0.0) == pytest.approx(-0.5, abs=1e-12)
        assert hurwitz_zeta(-1.0) == pytest.approx(-1.0 / 12, abs=1e-12)

    def test_half_shift_example(self):
        assert hurwitz_zeta(2.0, 0.5) == pytest.approx(math.pi**2 / 2, abs=1e-12)

    def test_zeta_half_two_parameterizations(self):
        v1, _ = _em_once(0.5, 1.0, 12, 15)
        v2, _ = _em_once(0.5, 1.0, 24, 17)
        assert abs(v1 - v2) < 1e-12
        assert hurwitz_zeta(0.5) == pytest.approx(v1, abs=1e-12)
        assert hurwitz_zeta(0.5) == pytest.approx(ZETA_HALF, abs=1e-12)

    def test_recurrence_randomized(self):
        rng = random.Random(7)
        for _ in range(100):
            s = rng.uniform(-5.0, 20.0)
            if abs(s - 1.0) < 1e-3:
                continue
            a = rng.uniform(0.2, 5.0)
            lhs = hurwitz_zeta(s, a) - hurwitz_zeta(s, a + 1.0)
            rhs = a**-s
            scale = max(1.0, abs(rhs), abs(hurwitz_zeta(s, a)))
            assert abs(lhs - rhs) <= 1e-11 * scale

    def test_half_shift_randomized(self):
        rng = random.Random(11)
        for _ in range(50):
            s = rng.uniform(-5.0, 20.0)
            if abs(s - 1.0) < 1e-3:
                continue
            lhs = hurwitz_zeta(s, 0.5)
            rhs = (2.0**s - 1.0) * hurwitz_zeta(s, 1.0)
            assert abs(lhs - rhs) <= 1e-11 * max(1.0, abs(rhs))

    def test_matches_direct_summation(self):
        # 1e7 explicit terms plus the integral tail, for s > 1
        for s, a in [(1.5, 1.0), (2.0, 1.3), (3.7, 0.6)]:
            K = 10**7
            direct = float(np.power(np.arange(K, dtype=float) + a, -s).sum())
            direct += (K + a) ** (1.0 - s) / (s - 1.0) + 0.5 * (K + a) ** (-s)
            assert hurwitz_zeta(s, a) == pytest.approx(direct, abs=1e-9)

    def test_pole_and_domain_errors(self):
        with pytest.raises(PoleError):
            hurwitz_zeta(1.0, 1.0)
        with pytest.raises(ValueError):
            hurwitz_zeta(2.0, 0.0)
        with pytest.raises(ValueError):
            hurwitz_zeta(2.0, -1.0)


class TestEulerMaclaurinPartial:
    def test_finite_sum_example(self):
        r = euler_maclaurin_partial(2.0, 1.0, 10)
        assert r.partial_sum == pytest.approx(
            math.fsum(1.0 / k**2 for k in range(1, 12)), abs=1e-15
        )
        assert abs(r.residual) <= r.bound_constant * 10.0**-2.0 + 1e-15

    def test_single_term(self):
        assert euler_maclaurin_partial(2.0, 1.0, 0).partial_sum == 1.0

    def test_residual_rate_s_half(self):
        # residual ~ (X+a)^-s / 2, so residual * sqrt(X) -> 1/2
        consts = []
        for X in [1e2, 1e4, 1e6]:
            r = euler_maclaurin_partial(0.5, 1.0, X)
            consts.append(abs(r.residual) * math.sqrt(X))
        for c in consts:
            assert 0.4 <= c <= 0.6
        assert abs(consts[-1] - 0.5) < 1e-3

    def test_pole(self):
        with pytest.raises(PoleError):
            euler_maclaurin_partial(1.0, 1.0, 10)
        with pytest.raises(ValueError):
            euler_maclaurin_partial(-0.5, 1.0, 10)


class TestEulerMascheroni:
    def test_against_numpy(self):
        assert abs(euler_mascheroni() - np.euler_gamma) < 1e-10

    def test_against_laurent_route(self):
        lc = laurent_coefficients([AffinePower(1, 1, 1)] * 2, 1.0, 2)
        assert abs(lc.coeffs[1] / 2.0 - euler_mascheroni()) < 1e-10


class TestLaurentCoefficients:
    def test_double_identity(self):
        lc = laurent_coefficients([AffinePower(1, 1, 1)] * 2, 1.0, 2)
        assert lc.coeffs[0] == pytest.approx(1.0, abs=1e-8)
        assert lc.coeffs[1] == pytest.approx(2.0 * euler_mascheroni(), abs=1e-8)
        assert len(lc.coeffs) == 3
        assert all(e < 1e-6 for e in lc.error_estimate[:2])

    def test_single_identity_residue(self):
        lc = laurent_coefficients([AffinePower(1, 1, 1)], 1.0, 1)
        assert lc.coeffs[0] == pytest.approx(1.0, abs=1e-10)

    def test_identity_times_squares_residue(self):
        lc = laurent_coefficients([AffinePower(1, 1, 1), AffinePower(1, 1, 2)], 1.0, 1)
        assert lc.coeffs[0] == pytest.approx(math.pi**2 / 6, abs=1e-8)

    @pytest.mark.parametrize("beta", [1.0, 2.0, 3.0, 0.5])
    def test_residue_of_single_affine(self, beta):
        lc = laurent_coefficients([AffinePower(1, 1, beta)], 1.0 / beta, 1)
        assert lc.coeffs[0] == pytest.approx(1.0 / beta, abs=1e-8)

    def test_pole_order_mismatch_detected(self):
        with pytest.raises(PoleOrderMismatchError):
            laurent_coefficients([AffinePower(1, 1, 1)] * 2, 1.0, 1)

    def test_stencil_hits_companion_pole(self):
        # companion PowerLaw pole placed exactly on the 1 - h0/4 stencil node
        alpha2 = 1.0 - 1e-2 / 4
        with pytest.raises(PoleError):
            laurent_coefficients(
                [AffinePower(1, 1, 1), PowerLaw(1.0, alpha2)], 1.0, 1
            )

    def test_order_validation(self):
        with pytest.raises(ValueError):
            laurent_coefficients([AffinePower(1, 1, 1)], 1.0, 0)
        with pytest.raises(ValueError):
            laurent_coefficients([AffinePower(1, 1, 1)], 1.0, 1, order=2)
