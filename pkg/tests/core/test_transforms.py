"""
保持 U(λ) 的变换、系数滤波、凸组合与 n 次根变换。
"""

from __future__ import annotations

import math

import numpy as np
import pytest

from pyschlicht.core import catalog
import pyschlicht.core.transforms as transforms_module
from pyschlicht.core.analytic_map import AnalyticMap, from_characterization, u_eval
from pyschlicht.core.schwarz import BlaschkeGenerator, ConstantGenerator, PolynomialGenerator
from pyschlicht.core.transforms import (
    Conjugate,
    Cosine,
    Dilate,
    EvenSqueeze,
    MobiusShift,
    NthRoot,
    OmittedValue,
    RealPart,
    Rotate,
    Sine,
    SymmetrizeN,
    apply_pipeline,
    apply_transform,
    basic_transform,
    coefficient_filter,
    continued_root,
    convex_combine,
    mobius_shift,
    nth_root_transform,
    omitted_value_transform,
    region_variability_map,
    symmetrize_n,
    transform_from_dict,
)
from pyschlicht.shared.errors import (
    BranchBase,
    NonvanishingViolated,
    ParameterOutOfRange,
    UOperatorChanged,
    ValueAttained,
    WeightConstraint,
)

Z = np.array([0.1, 0.4j, -0.3 + 0.5j, 0.7 - 0.2j, -0.85])


def _blaschke_map(order: int = 24):
    return from_characterization(0.1 - 0.2j, 0.8, BlaschkeGenerator([0.5, -0.2j], phase=0.3), order)


# --- transform kinds ---------------------------------------------------------

class TestTransformKinds:
    def test_rotate_normalizes_angle(self):
        assert Rotate(2 * math.pi + 0.5).theta == pytest.approx(0.5)

    def test_from_dict(self):
        assert transform_from_dict({"tag": "SymmetrizeN", "n": 3}) == SymmetrizeN(3)
        assert transform_from_dict({"tag": "OmittedValue", "c": [-1.0, 0.0]}) == OmittedValue(-1.0)
        assert transform_from_dict({"tag": "EvenSqueeze"}) == EvenSqueeze()

    def test_to_dict_complex(self):
        assert OmittedValue(-1 + 2j).to_dict() == {"tag": "OmittedValue", "c": [-1.0, 2.0]}

    def test_unknown_tag(self):
        with pytest.raises(ParameterOutOfRange, match="unknown transform"):
            transform_from_dict({"tag": "Shear"})

    def test_bad_params(self):
        with pytest.raises(ParameterOutOfRange, match="bad parameters"):
            transform_from_dict({"tag": "Rotate", "phi": 1.0})

    @pytest.mark.parametrize(
        "factory",
        [lambda: Dilate(1.5), lambda: Dilate(0.0), lambda: SymmetrizeN(1),
         lambda: NthRoot(1), lambda: OmittedValue(0)],
    )
    def test_parameter_ranges(self, factory):
        with pytest.raises(ParameterOutOfRange):
            factory()


# --- rotation / conjugation / dilation --------------------------------------

class TestBasicTransforms:
    def test_rotate_koebe(self):
        theta = 0.9
        g = basic_transform(catalog.koebe(), Rotate(theta))
        np.testing.assert_allclose(u_eval(g, Z), -(Z * np.exp(1j * theta)) ** 2, atol=1e-12)

    @pytest.mark.parametrize("make", [_blaschke_map, lambda: catalog.g1(order=24)])
    def test_rotate_u_identity(self, make):
        f = make()
        theta = -2.1
        g = basic_transform(f, Rotate(theta))
        np.testing.assert_allclose(u_eval(g, Z), u_eval(f, Z * np.exp(1j * theta)), atol=1e-9)
        assert g.a2 == pytest.approx(f.a2 * np.exp(1j * theta))

    @pytest.mark.parametrize("make", [catalog.f1, _blaschke_map, lambda: catalog.g1(order=24)])
    def test_conjugate_u_identity(self, make):
        f = make()
        g = basic_transform(f, Conjugate())
        np.testing.assert_allclose(u_eval(g, Z), np.conj(u_eval(f, np.conj(Z))), atol=1e-9)

    @pytest.mark.parametrize("make", [catalog.koebe, _blaschke_map])
    def test_dilate_u_identity(self, make):
        f = make()
        g = basic_transform(f, Dilate(0.5))
        np.testing.assert_allclose(u_eval(g, Z), u_eval(f, 0.5 * Z), atol=1e-10)

    def test_rejects_other_kinds(self):
        with pytest.raises(ParameterOutOfRange):
            basic_transform(catalog.koebe(), EvenSqueeze())

    def test_polynomial_lineage(self):
        g = basic_transform(catalog.koebe(), Rotate(1.0))
        assert g.lineage["transform"]["tag"] == "Rotate"
        assert g.lineage["source"]["name"] == "koebe"


# --- omitted value -----------------------------------------------------------

class TestOmittedValue:
    def test_koebe_omits_minus_one(self):
        g = omitted_value_transform(catalog.koebe(), -1.0)
        np.testing.assert_allclose(g.polynomial_coefficients, [1, -1, 1], atol=1e-15)
        np.testing.assert_allclose(u_eval(g, Z), u_eval(catalog.koebe(), Z), atol=1e-12)

    def test_attained_value(self):
        with pytest.raises(ValueAttained):
            omitted_value_transform(catalog.koebe(), 0.1)

    def test_pointwise_source(self):
        f = _blaschke_map()
        g = omitted_value_transform(f, 10.0)
        np.testing.assert_allclose(u_eval(g, Z), u_eval(f, Z), atol=1e-10)

    def test_changed_u_raises(self, monkeypatch):
        f = catalog.koebe()

        def drifting_u(g, z):
            u = u_eval(g, z)
            return u if g is f else np.asarray(u) + 1e-6

        monkeypatch.setattr(transforms_module, "u_eval", drifting_u)
        with pytest.raises(UOperatorChanged) as info:
            omitted_value_transform(f, -1.0)
        assert info.value.max_diff == pytest.approx(1e-6, rel=1e-3)
        assert info.value.max_diff > info.value.tol

    def test_mobius_shift(self):
        f = from_characterization(0.2, 0.5, ConstantGenerator(0.5), order=16)
        g = mobius_shift(f, 0.3)
        # z/F = z/f + (a₂+μ)z
        np.testing.assert_allclose(g.polynomial_coefficients, [1, 0.3, 0.25], atol=1e-14)
        np.testing.assert_allclose(u_eval(g, Z), u_eval(f, Z), atol=1e-12)

    def test_mobius_shift_dispatch(self):
        f = from_characterization(0.2, 0.5, ConstantGenerator(0.5), order=16)
        g = apply_transform(f, MobiusShift(-0.1), lam=0.5)
        # z/F 的一次项变成 μ, 于是 F 的 a₂ = −μ
        assert g.a2 == pytest.approx(0.1)


# --- coefficient-level constructions -----------------------------------------

class TestSymmetrize:
    def test_koebe_square(self):
        g = symmetrize_n(catalog.koebe(), 2)
        np.testing.assert_allclose(g.polynomial_coefficients, [1, 0, 1], atol=1e-15)
        z = 0.3 + 0.2j
        assert g(z) == pytest.approx(z / (1 + z * z))

    def test_pointwise_average(self):
        f = _blaschke_map()
        g = symmetrize_n(f, 3)
        roots = np.exp(2j * np.pi * np.arange(3) / 3)
        expected = sum(np.asarray(u_eval(f, w * Z)) for w in roots) / 3
        np.testing.assert_allclose(u_eval(g, Z), expected, atol=1e-10)
        s = g.series(12)
        assert all(abs(s[k]) < 1e-15 for k in range(13) if k % 3)


class TestCoefficientFilter:
    def test_even_squeeze_koebe(self):
        g = coefficient_filter(catalog.koebe(), EvenSqueeze())
        np.testing.assert_allclose(g.polynomial_coefficients, [1, 1], atol=1e-15)
        z = -0.4 + 0.1j
        assert g(z) == pytest.approx(z / (1 + z))

    def test_even_squeeze_pointwise(self):
        f = _blaschke_map(order=48)
        g = coefficient_filter(f, EvenSqueeze())
        np.testing.assert_allclose(g.series(10).coeffs, f.series(20).coeffs[::2], atol=1e-14)
        z = 0.3 - 0.1j
        assert g.q(z) == pytest.approx(g.series(20)(z), abs=1e-10)
        assert g.dq(1e-8) == pytest.approx(g.series(20).derivative()(1e-8), abs=1e-10)

    def test_cosine_on_polynomial(self):
        g = coefficient_filter(catalog.f1(), Cosine(0.4))
        np.testing.assert_allclose(
            g.polynomial_coefficients, [1, 0.5 * np.cos(0.4), 0, np.cos(1.2) / 3], atol=1e-15
        )

    def test_cosine_pointwise(self):
        f = _blaschke_map()
        g = coefficient_filter(f, Cosine(0.4))
        np.testing.assert_allclose(
            g.series(10).coeffs, f.series(10).coeffs * np.cos(0.4 * np.arange(11)), atol=1e-14
        )

    def test_cosine_zero_in_disk(self):
        # 1 − z − z²/2 在 z = √3 − 1 处为零
        with pytest.raises(NonvanishingViolated):
            coefficient_filter(catalog.koebe(), Cosine(math.pi / 3))

    def test_sine(self):
        g = coefficient_filter(catalog.f1(), Sine(0.3))
        np.testing.assert_allclose(
            g.polynomial_coefficients, [1, 0.5 * np.sin(0.3), 0, np.sin(0.9) / 3], atol=1e-15
        )
        with pytest.raises(NonvanishingViolated):
            coefficient_filter(catalog.koebe(), Sine(math.pi / 2))

    def test_real_part(self):
        rotated = basic_transform(catalog.f1(), Rotate(0.5))
        g = coefficient_filter(rotated, RealPart())
        np.testing.assert_allclose(
            g.u_series(6).coeffs[3], -(2.0 / 3.0) * np.cos(1.5), atol=1e-14
        )


class TestConvexCombine:
    def test_polynomial_members(self):
        psi = convex_combine([catalog.koebe(), catalog.identity()], [0.5, 0.5], [1.0, 1.0])
        np.testing.assert_allclose(psi.polynomial_coefficients, [1, -1, 0.5], atol=1e-15)
        np.testing.assert_allclose(u_eval(psi, Z), -0.5 * Z ** 2, atol=1e-12)

    def test_pointwise_members(self):
        f = _blaschke_map()
        psi = convex_combine([catalog.identity(), f], [0.5, 0.5], [1.0, 1.0])
        expected = 0.5 * np.asarray(u_eval(f, Z))
        np.testing.assert_allclose(u_eval(psi, Z), expected, atol=1e-10)

    def test_weight_constraint(self):
        with pytest.raises(WeightConstraint, match="mu_k\\*lambda_k"):
            convex_combine([catalog.koebe(), catalog.identity()], [0.5, 0.5], [1.0, 0.5])

    def test_mu_must_sum_to_one(self):
        with pytest.raises(WeightConstraint, match="normalized"):
            convex_combine([catalog.koebe(), catalog.identity()], [1.0, 0.5], [0.5, 1.0])

    def test_length_mismatch(self):
        with pytest.raises(WeightConstraint):
            convex_combine([catalog.koebe()], [0.5, 0.5], [1.0, 1.0])

    def test_non_member_input(self):
        with pytest.raises(ParameterOutOfRange, match="not a member"):
            convex_combine([catalog.koebe(), catalog.identity()], [0.0, 1.0], [0.5, 1.0])


# --- n-th root ---------------------------------------------------------------

class TestNthRoot:
    def test_continued_root(self):
        w = np.array([0.5, -0.9, 0.5j])
        np.testing.assert_allclose(continued_root(lambda t: 1.0 + t, w, 2), np.sqrt(1.0 + w), atol=1e-14)

    def test_series_matches_values(self):
        g = nth_root_transform(catalog.f1(), 2)
        z = np.array([0.2, 0.3j, -0.25 + 0.1j])
        np.testing.assert_allclose(g.series(40)(z), g.q(z), atol=1e-12)
        assert g.series(10)[1] == 0

    def test_zero_blocks_branch(self):
        f = from_characterization(2.5, 1.0, ConstantGenerator(1.0), order=16)
        with pytest.raises(BranchBase):
            nth_root_transform(f, 2)

    def test_pole_of_q_blocks_branch(self):
        with pytest.raises(BranchBase):
            nth_root_transform(AnalyticMap.rational([0, 1, -2], [1]), 2)

    def test_dispatch(self):
        g = apply_transform(catalog.f1(), NthRoot(2))
        assert g.lineage is None
        assert g.describe()["transform"]["tag"] == "NthRoot"


# --- region variability / pipelines ------------------------------------------

class TestRegionAndPipeline:
    @pytest.mark.parametrize("lam", [0.25, 0.5, 0.75])
    def test_region_map_of_f_lambda(self, lam):
        g = region_variability_map(catalog.f_lambda(lam), lam)
        # z/G = (1 + z)²
        np.testing.assert_allclose(g.polynomial_coefficients, [1, 2, 1], atol=1e-14)

    def test_region_map_scales_u(self):
        f = from_characterization(0.4, 0.5, PolynomialGenerator([0.3, 0.2j]), order=16)
        g = region_variability_map(f, 0.5)
        np.testing.assert_allclose(u_eval(g, Z), np.asarray(u_eval(f, Z)) / 0.5, atol=1e-12)

    def test_pipeline(self):
        g = apply_pipeline(catalog.koebe(), [Rotate(math.pi), EvenSqueeze()])
        np.testing.assert_allclose(g.polynomial_coefficients, [1, 1], atol=1e-14)
        assert g.lineage["transform"]["tag"] == "EvenSqueeze"
