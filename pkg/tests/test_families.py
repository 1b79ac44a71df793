import math
from fractions import Fraction as F

import pytest

from qaw.errors import ParameterError
from qaw.families import (
    jacobi_classical,
    jacobi_eval_recurrence,
    laguerre_classical,
    little_q_jacobi,
    little_q_jacobi_eigenvalue,
    minus1_jacobi,
    minus1_jacobi_eigenvalue,
    orthogonality_rhs,
    orthogonality_sum,
    q_laguerre,
    q_laguerre_eigenvalue,
)
from qaw.opalgebra import (
    little_q_jacobi_operator,
    minus1_jacobi_operator,
    qlaguerre_operator,
)
from qaw.qseries import pochhammer

LQJ = [(F(1, 2), F(1, 3), F(3, 4)), (F(1, 3), F(2, 5), F(5, 8)), (F(2, 5), F(3, 7), F(21, 25))]
M1 = [(F(1, 2), F(3, 2)), (F(1, 4), F(2, 3)), (F(3), F(5, 2))]
QL = [(F(1, 2), F(1, 3)), (F(1, 3), F(1, 4)), (F(2, 5), F(2, 7))]


class TestLittleQJacobi:
    def test_degree_zero_is_one(self):
        p = little_q_jacobi(0, F(1, 2), F(1, 3), F(3, 4))
        assert p.coeffs == p.coeffs.one()

    def test_n1_coefficients(self):
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        p = little_q_jacobi(1, q, a, b)
        slope = (1 - q ** -1) * (1 - a * b * q ** 2) / ((1 - a * q) * (1 - q)) * q
        assert p.coeffs[0] == 1 and p.coeffs.degree() == 1
        assert p.coeffs[1] == slope
        assert p(F(1)) == F(-1, 8)

    @pytest.mark.parametrize("q,a,b", LQJ)
    def test_eigenchecks_exact(self, q, a, b):
        op = little_q_jacobi_operator(q, a, b)
        for n in range(13):
            p = little_q_jacobi(n, q, a, b).coeffs
            assert op(p) == p.scale(little_q_jacobi_eigenvalue(n, q, a, b))

    def test_degree_bookkeeping(self):
        for n in range(8):
            p = little_q_jacobi(n, F(1, 2), F(1, 3), F(3, 4))
            assert p.coeffs.min_degree == 0
            assert p.coeffs.degree() == n
            assert p(F(0)) == 1

    def test_json_shape(self):
        d = little_q_jacobi(2, F(1, 2), F(1, 3), F(3, 4)).to_json_dict()
        assert d["family"] == "little_q_jacobi"
        assert all(len(row) == 3 for row in d["coeffs"])


class TestQLaguerre:
    def test_degree_zero(self):
        assert q_laguerre(0, F(1, 2), F(1, 3)).coeffs == q_laguerre(0, F(1, 2), F(1, 3)).coeffs.one()

    @pytest.mark.parametrize("q,a", QL)
    def test_eigenchecks_exact(self, q, a):
        op = qlaguerre_operator(q, a)
        for n in range(13):
            p = q_laguerre(n, q, a).coeffs
            assert op(p) == p.scale(q_laguerre_eigenvalue(n, q, a))

    def test_recurrence_exact(self):
        q, a = F(1, 2), F(1, 3)
        for n in range(1, 11):
            lm = q_laguerre(n - 1, q, a).coeffs
            l0 = q_laguerre(n, q, a).coeffs
            lp = q_laguerre(n + 1, q, a).coeffs
            lhs = l0.scale(-a * q ** (2 * n + 1)).shift(1)
            rhs = (
                lp.scale(1 - q ** (n + 1))
                - l0.scale((1 - q ** (n + 1)) + q * (1 - a * q ** n))
                + lm.scale(q * (1 - a * q ** n))
            )
            assert lhs == rhs

    def test_value_at_zero(self):
        from qaw.qseries import q_pochhammer

        q, a = F(1, 2), F(1, 3)
        for n in range(6):
            expect = q_pochhammer(a * q, q, n) / q_pochhammer(q, q, n)
            assert q_laguerre(n, q, a)(F(0)) == expect


class TestMinus1Jacobi:
    def test_degree_zero(self):
        p = minus1_jacobi(0, F(1, 2), F(3, 2))
        assert p.coeffs == p.coeffs.one()

    def test_n1_slope(self):
        alpha, beta = F(1, 2), F(3, 2)
        p = minus1_jacobi(1, alpha, beta)
        assert p.coeffs[1] == -(alpha + beta + 2) / (alpha + 1)

    @pytest.mark.parametrize("alpha,beta", M1)
    def test_eigenchecks_exact(self, alpha, beta):
        op = minus1_jacobi_operator(alpha, beta)
        for n in range(13):
            p = minus1_jacobi(n, alpha, beta).coeffs
            assert op(p) == p.scale(minus1_jacobi_eigenvalue(n, alpha, beta))

    def test_piecewise_eigenvalues(self):
        alpha, beta = F(1, 2), F(3, 2)
        assert minus1_jacobi_eigenvalue(2, alpha, beta) == -2
        assert minus1_jacobi_eigenvalue(3, alpha, beta) == alpha + beta + 4

    @pytest.mark.parametrize("alpha,beta", M1)
    def test_parity_structure(self, alpha, beta):
        # even part is a series in x^2; odd part is x times a series in x^2
        for n in range(9):
            p = minus1_jacobi(n, alpha, beta).coeffs
            even, odd = p.even_part(), p.odd_part()
            assert all(d % 2 == 0 for d, _ in even.items())
            assert all(d % 2 == 1 for d, _ in odd.items())

    def test_alpha_minus_one_rejected(self):
        with pytest.raises(ParameterError):
            minus1_jacobi(2, F(-1), F(1, 2))


class TestClassicalFamilies:
    def test_jacobi_p0(self):
        assert jacobi_classical(0, F(1, 3), F(2, 5)).coeffs.one() == jacobi_classical(
            0, F(1, 3), F(2, 5)
        ).coeffs

    def test_legendre_p1(self):
        p = jacobi_classical(1, F(0), F(0))
        assert p.coeffs == p.coeffs.x()

    @pytest.mark.parametrize("n", range(7))
    def test_jacobi_value_at_one(self, n):
        alpha, beta = F(1, 3), F(2, 5)
        p = jacobi_classical(n, alpha, beta)
        assert p(F(1)) == pochhammer(alpha + 1, n) / math.factorial(n)

    def test_jacobi_recurrence_eval_matches_exact(self):
        alpha, beta = F(1, 4), F(3, 5)
        for n in (0, 1, 2, 5, 9):
            exact = float(jacobi_classical(n, alpha, beta)(F(3, 10)))
            rec = jacobi_eval_recurrence(n, 0.25, 0.6, 0.3)
            assert abs(exact - rec) < 1e-12

    def test_laguerre_l0_l1(self):
        alpha = F(2, 3)
        assert laguerre_classical(0, alpha).coeffs == laguerre_classical(0, alpha).coeffs.one()
        l1 = laguerre_classical(1, alpha)
        assert l1.coeffs[0] == alpha + 1 and l1.coeffs[1] == -1


class TestOrthogonality:
    def test_offdiagonal_vanishes(self):
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        val, tail = orthogonality_sum(0, 1, q, a, b)
        assert abs(val) < 1e-12 + tail

    def test_diagonal_n0_matches_closed_form(self):
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        val, tail = orthogonality_sum(0, 0, q, a, b)
        assert abs(val - float(orthogonality_rhs(0, q, a, b))) < 1e-12 + tail

    def test_diagonal_n2(self):
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        val, tail = orthogonality_sum(2, 2, q, a, b)
        assert abs(val - float(orthogonality_rhs(2, q, a, b))) < 1e-10 + tail

    def test_all_pairs_up_to_six(self):
        q, a, b = F(1, 2), F(1, 3), F(3, 4)
        for m in range(7):
            for n in range(m, 7):
                val, tail = orthogonality_sum(m, n, q, a, b)
                ref = float(orthogonality_rhs(n, q, a, b)) if m == n else 0.0
                assert abs(val - ref) < 1e-10 + tail

    def test_range_check(self):
        with pytest.raises(ParameterError):
            orthogonality_sum(0, 0, F(1, 2), F(5), F(3, 4))
