import math
from fractions import Fraction as F

import pytest

from qaw.errors import ParameterError
from qaw.limits import (
    LimitCase,
    SExp,
    case_bessoula,
    diagram_commutativity,
    little_q_jacobi_scaled,
    one_minus_sexp,
    phi_sexp,
    qshifted_limit_check,
    registered_cases,
    run_limit,
    sexp_pochhammer,
)


class TestSExpPlumbing:
    def test_one_minus_sexp_near_zero(self):
        # 1 - e^t for tiny t keeps full relative precision
        t = 1e-12
        assert abs(one_minus_sexp(1, t) + t) < 1e-24
        assert one_minus_sexp(-1, 0.0) == 2.0

    def test_sexp_pochhammer_one_factor(self):
        # (-e^{eps a}; -e^eps)_1 = 1 + e^{eps a}
        eps, a = 0.01, 0.7
        got = sexp_pochhammer(SExp(-1, eps * a), SExp(-1, eps), 1)
        assert abs(got - (1 + math.exp(eps * a))) < 1e-15

    def test_phi_sexp_exact_termination(self):
        # numerator q^-n kills every term beyond k = n, exactly in floats
        eps, n = 0.05, 3
        q = SExp(-1, eps)
        num = [SExp(1 if n % 2 == 0 else -1, -n * eps)]
        v1 = phi_sexp(num, [SExp(1, 0.3)], q, 0.4, n + 1)
        v2 = phi_sexp(num, [SExp(1, 0.3)], q, 0.4, 50)
        assert v1 == v2

    def test_scaled_little_q_jacobi_matches_exact_evaluation(self):
        from qaw.families import little_q_jacobi

        q, a, b, n = F(1, 3), F(1, 4), F(1, 5), 6
        for x in (0.2, 1.0):
            exact = float(little_q_jacobi(n, q, a, b)(F(x) * q ** n))
            stable = little_q_jacobi_scaled(n, x, float(a), float(b), float(q))
            assert abs(exact - stable) < 1e-13


@pytest.fixture(scope="module")
def reports():
    return {cid: run_limit(c) for cid, c in registered_cases().items()}


class TestRegisteredCases:

    def test_all_pass(self, reports):
        for cid, rep in reports.items():
            assert rep.passed, f"{cid}: errors={rep.errors}"

    def test_strict_decrease(self, reports):
        for cid, rep in reports.items():
            assert rep.strictly_decreasing, cid

    def test_exact_target_cases_hit_tight_tolerance(self, reports):
        for cid in ("lqjacobi_to_minus1jacobi", "lag2", "qlaguerre_to_laguerre"):
            assert reports[cid].errors[-1] < 1e-8

    def test_first_order_rates(self, reports):
        # eps-halving paths with O(eps) convergence double their accuracy per step
        for cid in ("bessoula", "qlaguerre_to_laguerre", "qbessel3_classical"):
            assert abs(reports[cid].estimated_rate - 1.0) < 0.35, cid

    def test_report_serializes(self, reports):
        import json

        for rep in reports.values():
            json.dumps(rep.to_json_dict())

    def test_bessoula_cas_target(self, reports):
        assert reports["bessoula_cas"].errors[-1] < 1e-8

    def test_alpha_override(self):
        rep = run_limit(case_bessoula(0.75))
        assert rep.passed


class TestQShifted:
    def test_n0_trivial(self):
        rep = qshifted_limit_check(0.7, 0)
        assert rep.passed
        assert rep.errors[-1] == 0.0

    def test_n1_first_limit_value(self):
        # floor(1/2) = 0: (-e^{eps a}; -e^eps)_1 -> 2 with no eps scaling
        eps = 1e-8
        got = sexp_pochhammer(SExp(-1, eps * 0.7), SExp(-1, eps), 1)
        assert abs(got - 2.0) < 1e-7

    @pytest.mark.parametrize("n", range(9))
    def test_passes_through_n8(self, n):
        rep = qshifted_limit_check(0.7, n)
        assert rep.passed

    def test_alpha_variation(self):
        assert qshifted_limit_check(1.3, 5).passed

    def test_bounds_enforced(self):
        with pytest.raises(ParameterError):
            qshifted_limit_check(0.7, 13)


class TestHarness:
    def test_short_path_rejected(self):
        case = LimitCase(
            case_id="x",
            path=[1, 2],
            eval_points=[0.5],
            source=lambda p, x: 0.0,
            target=lambda x: 0.0,
            tolerance=1.0,
        )
        with pytest.raises(ParameterError):
            run_limit(case)

    def test_nonmonotone_fails(self):
        case = LimitCase(
            case_id="x",
            path=[1, 2, 3],
            eval_points=[0.5],
            source=lambda p, x: 0.1 if p == 2 else 0.01,
            target=lambda x: 0.0,
            tolerance=1.0,
        )
        assert not run_limit(case).passed


class TestDiagram:
    def test_both_routes_commute(self):
        d = diagram_commutativity()
        assert d["passed"]
        errs_a = d["route_polynomial_errors"]
        errs_b = d["route_qbessel_errors"]
        assert all(errs_a[i + 1] < errs_a[i] for i in range(len(errs_a) - 1))
        assert all(errs_b[i + 1] < errs_b[i] for i in range(len(errs_b) - 1))
        assert d["route_gap"][-1] < 1e-4
