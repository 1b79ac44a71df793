import math
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qaw.errors import DivergenceError, ParameterError, UnsupportedModeError
from qaw.qseries import HyperSpec, classical_hyp, phi, pochhammer, q_pochhammer

small_fractions = st.builds(
    F, st.integers(-8, 8), st.integers(1, 8)
)


class TestQPochhammer:
    def test_empty_product(self):
        assert q_pochhammer(F(5), F(1, 2), 0) == 1

    def test_zero_base(self):
        assert q_pochhammer(F(0), F(1, 2), 7) == 1

    def test_two_factors(self):
        assert q_pochhammer(F(2), F(3), 2) == 5

    @given(small_fractions, small_fractions, st.integers(0, 6), st.integers(0, 6))
    @settings(max_examples=60)
    def test_multiplicativity(self, a, q, m, n):
        # (a;q)_{m+n} = (a;q)_m (a q^m; q)_n
        assert q_pochhammer(a, q, m + n) == q_pochhammer(a, q, m) * q_pochhammer(
            a * q ** m, q, n
        )

    def test_infinite_exact_mode_rejected(self):
        with pytest.raises(UnsupportedModeError):
            q_pochhammer(F(1, 3), F(1, 2), math.inf)

    def test_infinite_requires_contracting_q(self):
        with pytest.raises(ParameterError):
            q_pochhammer(0.5, 1.5, math.inf)

    def test_infinite_numeric_value(self):
        # Euler function at q = 1/2, cross-checked against a long partial product
        val = q_pochhammer(0.5, 0.5, math.inf)
        ref = 1.0
        for k in range(200):
            ref *= 1 - 0.5 ** (k + 1)
        assert abs(val - ref) < 1e-13


class TestPhi:
    def test_z_zero(self):
        spec = HyperSpec((F(1, 2),), (F(1, 3),), F(1, 2), F(0))
        assert phi(spec, 10) == 1

    def test_terminating_two_term_sum_exact(self):
        # 2-phi-1(q^-1, a b q^2; a q | q; q x) at q=1/2, a=1/3, b=3/4, x=1
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        spec = HyperSpec((q ** -1, a * b * q ** 2), (a * q,), q, q * 1)
        assert phi(spec, 12) == F(-1, 8)

    def test_terminating_value_stable_under_larger_trunc(self):
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        spec = HyperSpec((q ** -3, a * b * q ** 4), (a * q,), q, q * F(2, 3))
        assert phi(spec, 4) == phi(spec, 40)

    def test_exact_nonterminating_rejected(self):
        spec = HyperSpec((F(1, 3),), (F(1, 5),), F(1, 2), F(1, 4))
        with pytest.raises(UnsupportedModeError):
            phi(spec, 20)

    def test_one_phi_one_against_doubled_truncation(self):
        # third q-Bessel value via an independent direct summation
        q, a, x = 0.25, 0.25, 0.5
        spec = HyperSpec((0.0,), (a * q,), q, q * x)
        v1 = phi(spec, 40, 1e-10)
        total, term = 1.0, 1.0
        for k in range(80):
            term *= -(q ** k) * q * x / ((1 - q ** (k + 1)) * (1 - a * q * q ** k))
            total += term
        assert abs(v1 - total) < 1e-10

    def test_balancing_factor_exponent_one_phi_one(self):
        # for 1-phi-1 the factor is (-1)^k q^C(k,2) exactly (exponent 1)
        q, bq = F(1, 3), F(1, 4)
        spec = HyperSpec((q ** -2,), (bq,), q, F(1, 5))
        total = F(0)
        for k in range(3):
            num = q_pochhammer(q ** -2, q, k)
            den = q_pochhammer(q, q, k) * q_pochhammer(bq, q, k)
            total += num / den * (-1) ** k * q ** (k * (k - 1) // 2) * F(1, 5) ** k
        assert phi(spec, 10) == total

    def test_divergence_detected(self):
        # r > s + 1 makes the balancing factor blow up for |q| < 1
        spec = HyperSpec((0.5, 0.5), (), 0.5, 2.0)
        with pytest.raises(DivergenceError):
            phi(spec, 60)

    def test_denominator_guard(self):
        q = F(1, 2)
        spec = HyperSpec((q ** -4,), (q ** -2,), q, F(1, 3))
        with pytest.raises(ParameterError):
            phi(spec, 10)


class TestClassicalHyp:
    def test_zero_argument(self):
        assert classical_hyp((), (F(3, 2),), F(0), 10) == 1

    def test_terminating_two_term(self):
        c, d, z = F(2, 3), F(5, 4), F(1, 2)
        assert classical_hyp((F(-1), c), (d,), z, 10) == 1 - c * z / d

    def test_cos_via_0f1(self):
        x = math.pi / 2
        val = classical_hyp((), (0.5,), -x * x / 4.0, 60)
        assert abs(val - math.cos(x)) < 1e-12

    def test_exact_nonterminating_rejected(self):
        with pytest.raises(UnsupportedModeError):
            classical_hyp((F(1, 2),), (F(1, 3),), F(1, 4), 10)

    def test_denominator_pochhammer_zero(self):
        with pytest.raises(ParameterError):
            classical_hyp((F(-5),), (F(-2),), F(1, 2), 10)

    @given(st.integers(0, 6), small_fractions)
    @settings(max_examples=30)
    def test_pochhammer_rising_factorial(self, n, a):
        expect = F(1)
        for k in range(n):
            expect *= a + k
        assert pochhammer(a, n) == expect
