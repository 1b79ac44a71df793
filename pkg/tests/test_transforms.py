import math

import numpy as np
import pytest

from qaw.errors import AccuracyError, ParameterError
from qaw.transforms import (
    TransformSpec,
    forward,
    inverse,
    minus1_kernel_pair_diagnostic,
    normalization_residuals,
    roundtrip_residual,
)

GAUSS = lambda x: math.exp(-0.5 * x * x)
LAMS = np.linspace(0.0, 4.0, 9)


class TestSpecValidation:
    def test_bad_kind(self):
        with pytest.raises(ParameterError):
            TransformSpec("mellin", 0.5)

    def test_bad_alpha(self):
        with pytest.raises(ParameterError):
            TransformSpec("hankel", -1.5)

    def test_bad_domain(self):
        with pytest.raises(ParameterError):
            TransformSpec("hankel", 0.5, R=-1.0)


class TestHankel:
    def test_gaussian_self_reciprocal(self):
        spec = TransformSpec("hankel", 0.5)
        vals = forward(spec, GAUSS, LAMS)
        assert np.max(np.abs(vals - np.exp(-0.5 * LAMS ** 2))) < 1e-8

    def test_zero_function(self):
        spec = TransformSpec("hankel", 0.5)
        assert np.max(np.abs(forward(spec, lambda x: 0.0, LAMS))) == 0.0

    def test_linearity(self):
        spec = TransformSpec("hankel", 0.75)
        f = lambda x: math.exp(-0.5 * x * x)
        g = lambda x: x * x * math.exp(-x * x)
        combo = lambda x: 2.0 * f(x) - 3.0 * g(x)
        lhs = forward(spec, combo, LAMS)
        rhs = 2.0 * forward(spec, f, LAMS) - 3.0 * forward(spec, g, LAMS)
        assert np.max(np.abs(lhs - rhs)) < 1e-9

    def test_roundtrip(self):
        spec = TransformSpec("hankel", 0.5)
        assert roundtrip_residual(spec, GAUSS, [0.3, 1.0, 2.2]) < 1e-8

    def test_inverse_of_gaussian_transform(self):
        spec = TransformSpec("hankel", 0.5)
        xs = [0.4, 1.1]
        vals = inverse(spec, lambda lam: math.exp(-0.5 * lam * lam), xs)
        assert np.max(np.abs(vals - [GAUSS(x) for x in xs])) < 1e-8

    def test_non_convergence_raises(self):
        spec = TransformSpec("hankel", 0.5, tolerance=1e-16, panels=2, max_panels=4)
        with pytest.raises(AccuracyError):
            forward(spec, GAUSS, LAMS)


class TestDunkl:
    def test_roundtrip_on_odd_function(self):
        spec = TransformSpec("dunkl", 0.3)
        f = lambda x: x * math.exp(-0.5 * x * x)
        assert roundtrip_residual(spec, f, [0.25, 0.8, 1.7]) < 1e-7

    def test_roundtrip_on_generic_function(self):
        spec = TransformSpec("dunkl", 0.5)
        f = lambda x: (1.0 + x) * math.exp(-x * x)
        assert roundtrip_residual(spec, f, [-1.2, 0.4, 1.5]) < 1e-7

    def test_even_input_matches_hankel(self):
        f = lambda x: math.exp(-x * x)
        v_dunkl = forward(TransformSpec("dunkl", 0.5), f, LAMS)
        v_hankel = forward(TransformSpec("hankel", 0.5), f, LAMS)
        assert np.max(np.abs(np.real(v_dunkl) - v_hankel)) < 1e-8
        assert np.max(np.abs(np.imag(v_dunkl))) < 1e-10


class TestMinus1:
    def test_roundtrip_even_function(self):
        spec = TransformSpec("minus1", -0.5)
        f = lambda x: math.exp(-x * x)
        assert roundtrip_residual(spec, f, [0.3, 1.1, 2.0]) < 1e-7

    def test_even_reduction_to_hankel(self):
        f = lambda x: math.exp(-x * x)
        v1 = forward(TransformSpec("minus1", 0.5), f, LAMS)
        v2 = forward(TransformSpec("hankel", 0.5), f, LAMS)
        assert np.max(np.abs(np.real(v1) - v2)) < 1e-8

    def test_reference_kernel_pair_reflects_odd_input(self):
        diag = minus1_kernel_pair_diagnostic(0.5)
        assert diag["residual_vs_reflected_f"] < 1e-8
        assert diag["residual_vs_f"] > 0.1


class TestNormalizationDecision:
    def test_rejected_constant_is_visibly_wrong(self):
        res = normalization_residuals(0.5)
        assert res["2^alpha"] < 1e-8
        assert res["2^(alpha+1/2)"] > 0.1
