"""
Schwarz 函数生成器与类参数。
"""

from __future__ import annotations

import numpy as np
import pytest

from pyschlicht.core.schwarz import (
    BlaschkeGenerator,
    ClassParameter,
    ConstantGenerator,
    PolynomialGenerator,
    generator_from_descriptor,
    lambda_value,
)
from pyschlicht.core.series import integrate
from pyschlicht.shared.errors import ParameterOutOfRange

POINTS = np.array([0.0, 0.3, -0.2 + 0.5j, 0.6j, -0.7 - 0.1j])


# --- class parameter ---------------------------------------------------------

class TestClassParameter:
    @pytest.mark.parametrize("lam", [1e-6, 0.25, 0.5, 1.0])
    def test_accepts_range(self, lam):
        assert lambda_value(lam) == lam

    @pytest.mark.parametrize("lam", [0.0, -0.5, 1.5, float("nan")])
    def test_rejects_out_of_range(self, lam):
        with pytest.raises(ParameterOutOfRange, match="lambda"):
            ClassParameter(lam)

    def test_of_passthrough(self):
        p = ClassParameter(0.5)
        assert ClassParameter.of(p) is p
        assert float(p) == 0.5


# --- generators --------------------------------------------------------------

class TestConstantGenerator:
    def test_value_and_antiderivative(self):
        g = ConstantGenerator(0.5j)
        assert g(0.3) == 0.5j
        assert g.antiderivative(2.0) == pytest.approx(1.0j)
        assert not g.in_b1()

    def test_rejects_large_constant(self):
        with pytest.raises(ParameterOutOfRange):
            ConstantGenerator(1.01)

    def test_rotation(self):
        g = ConstantGenerator(1.0).rotated(np.pi / 4)
        assert g.c == pytest.approx(1j)


class TestPolynomialGenerator:
    def test_auto_normalized(self):
        g = PolynomialGenerator([0, 0, 3.0])
        assert g.scale == pytest.approx(3.0)
        assert g.sampled_sup <= 1.0 + 1e-9
        assert g.in_b1()

    def test_explicit_scale_too_small_rejected(self):
        with pytest.raises(ParameterOutOfRange, match="not a Schwarz function"):
            PolynomialGenerator([0.5, 0.5, 0.5], scale=1.0)

    def test_antiderivative_matches_series(self):
        g = PolynomialGenerator([0.1, -0.2j, 0.3])
        anti = integrate(g.series(5))
        np.testing.assert_allclose(g.antiderivative(POINTS), anti(POINTS), atol=1e-14)

    def test_rotation_formula(self):
        g = PolynomialGenerator([0.2, 0.3j, -0.1])
        theta = 0.7
        rot = g.rotated(theta)
        expected = np.exp(2j * theta) * g(np.exp(1j * theta) * POINTS)
        np.testing.assert_allclose(rot(POINTS), expected, atol=1e-14)


class TestBlaschkeGenerator:
    def test_unimodular_on_circle(self):
        g = BlaschkeGenerator([0.5, -0.3j], phase=0.4)
        circle = np.exp(1j * np.linspace(0, 2 * np.pi, 50))
        np.testing.assert_allclose(np.abs(g(circle)), 1.0, atol=1e-12)

    def test_zeros_must_be_inside(self):
        with pytest.raises(ParameterOutOfRange):
            BlaschkeGenerator([1.0])

    def test_series_matches_value(self):
        g = BlaschkeGenerator([0.5, -0.3j], phase=0.4)
        z = POINTS * 0.5
        np.testing.assert_allclose(g.series(60)(z), g(z), atol=1e-12)

    def test_antiderivative_quadrature(self):
        g = BlaschkeGenerator([0.4 + 0.2j])
        anti = integrate(g.series(80))
        np.testing.assert_allclose(g.antiderivative(POINTS), anti(POINTS), atol=1e-9)

    def test_tail_bound_dominates(self):
        g = BlaschkeGenerator([0.6, 0.2j])
        coeffs = np.abs(g.series(400).coeffs)
        for start in (5, 20, 60):
            assert g.coefficient_tail_bound(start) >= coeffs[start:].sum()

    def test_rotation_formula(self):
        g = BlaschkeGenerator([0.3, -0.2 + 0.1j], phase=0.2)
        theta = -1.1
        expected = np.exp(2j * theta) * g(np.exp(1j * theta) * POINTS)
        np.testing.assert_allclose(g.rotated(theta)(POINTS), expected, atol=1e-13)

    def test_zeros_at_origin_are_polynomial(self):
        assert BlaschkeGenerator([0.0, 0.0]).polynomial_degree == 2
        assert BlaschkeGenerator([0.1]).polynomial_degree is None


# --- descriptors -------------------------------------------------------------

class TestDescriptors:
    @pytest.mark.parametrize(
        "gen",
        [
            ConstantGenerator(0.25 - 0.5j),
            PolynomialGenerator([0, 0, 1, 1j]),
            BlaschkeGenerator([0.2, 0.1j], phase=1.0),
        ],
    )
    def test_rebuild(self, gen):
        rebuilt = generator_from_descriptor(gen.to_descriptor())
        np.testing.assert_allclose(rebuilt(POINTS), gen(POINTS), atol=1e-15)

    def test_unknown_kind(self):
        with pytest.raises(ParameterOutOfRange, match="unknown"):
            generator_from_descriptor({"kind": "spline"})
