"""
蜗线几何: 参数式 / 隐式方程、二次方程包含判定、β₁、q_ψ 最小模、从属检验与 Fekete 极值族。
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pyschlicht.core import catalog
from pyschlicht.core.analytic_map import AnalyticMap
from pyschlicht.core.bounds import extremal_theta_bound
from pyschlicht.core.limacon import (
    FIGURE_LIMACON_PAIRS,
    Limacon,
    beta1_closed_form,
    beta1_details,
    extremal_family_member,
    growth_bound,
    growth_bound_check,
    implicit_residual,
    parametric_point,
    preimage_modulus,
    q_min_modulus,
    quadratic_roots,
    region_contains,
    region_hypothesis_holds,
    subordination_check,
    target_curve_point,
    unit_circle_intersection_numeric,
)
from pyschlicht.core.membership import fekete_check
from pyschlicht.shared.errors import (
    DegenerateQuadratic,
    DomainError,
    HypothesisUnchecked,
    ParameterOutOfRange,
)

LAMBDAS = (0.25, 0.5, 0.75, 1.0)


# --- curve -------------------------------------------------------------------

class TestCurve:
    def test_vertex(self):
        assert parametric_point(Limacon(1.0, 2.0), 0.0) == pytest.approx((3.0, 0.0))

    @pytest.mark.parametrize("lam,l", FIGURE_LIMACON_PAIRS)
    def test_alpha_pi(self, lam, l):
        x, y = parametric_point(Limacon(lam, l), math.pi)
        assert x == pytest.approx(lam - l)
        assert y == pytest.approx(0.0, abs=1e-15)

    def test_rotation_by_pi(self):
        x0, y0 = parametric_point(Limacon(0.5, 1.0), 0.7)
        x1, y1 = parametric_point(Limacon(0.5, 1.0, math.pi), 0.7)
        assert (x1, y1) == pytest.approx((-x0, -y0))

    def test_implicit_examples(self):
        assert implicit_residual(Limacon(1.0, 2.0), 3.0, 0.0) == pytest.approx(0.0)
        assert implicit_residual(Limacon(0.5, 1.0), 0.0, 0.0) == pytest.approx(-0.1875)

    def test_random_points_on_implicit_curve(self):
        rng = np.random.default_rng(11)
        for _ in range(10_000 // 500):
            lam = float(rng.uniform(0.01, 1.0))
            l = float(rng.uniform(1.0 - lam, 1.0 + lam))
            beta = float(rng.uniform(-math.pi, math.pi))
            c = Limacon(lam, l, beta)
            alpha = rng.uniform(0.0, 2.0 * math.pi, 500)
            x, y = parametric_point(c, alpha)
            assert np.max(np.abs(implicit_residual(c, x, y))) <= 1e-9

    @given(
        st.floats(0.01, 1.0),
        st.floats(0.0, 1.0),
        st.floats(-math.pi, math.pi),
        st.floats(0.0, 2.0 * math.pi),
    )
    def test_parametric_point_satisfies_implicit_equation(self, lam, s, beta, alpha):
        c = Limacon(lam, 1.0 - lam + 2.0 * lam * s, beta)
        x, y = parametric_point(c, alpha)
        assert abs(implicit_residual(c, x, y)) <= 1e-9

    def test_l_range(self):
        with pytest.raises(ParameterOutOfRange, match="outside"):
            Limacon(0.5, 1.6)

    def test_target_curve(self):
        assert target_curve_point(1.0, 0.0) == pytest.approx((4.0, 0.0))
        x, y = target_curve_point(0.5, math.pi)
        assert (x, y) == pytest.approx((0.0, 0.0), abs=1e-15)


# --- containment -------------------------------------------------------------

class TestContainment:
    def test_origin(self):
        assert region_contains(Limacon(0.5, 1.0), 0.0)

    def test_boundary_points_are_excluded(self):
        c = Limacon(1.0, 2.0)
        assert not region_contains(c, 3.0)
        assert not region_contains(c, -1.0)

    @pytest.mark.parametrize("lam,l", FIGURE_LIMACON_PAIRS)
    def test_interior_points(self, lam, l):
        c = Limacon(lam, l, 0.3)
        u = 0.99 * np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False))
        w = (l * u + lam * u * u) * np.exp(0.3j)
        assert all(region_contains(c, complex(p)) for p in w)

    @pytest.mark.parametrize("lam,l", [p for p in FIGURE_LIMACON_PAIRS if p[1] >= 2 * p[0]])
    def test_curve_points_without_inner_loop(self, lam, l):
        c = Limacon(lam, l)
        u = np.exp(1j * np.linspace(0.0, 2.0 * math.pi, 64, endpoint=False))
        w = l * u + lam * u * u
        assert not any(region_contains(c, complex(p)) for p in w)

    def test_quadratic_roots(self):
        u1, u2 = quadratic_roots(2.0, 1.0, 3.0)
        assert sorted([u1.real, u2.real]) == pytest.approx([-3.0, 1.0])

    def test_degenerate(self):
        with pytest.raises(DegenerateQuadratic):
            quadratic_roots(1.0, 0.0, 0.5)
        assert preimage_modulus(2.0, 0.0, 1.0) == pytest.approx(0.5)


# --- β₁ ----------------------------------------------------------------------

class TestBeta1:
    @pytest.mark.parametrize("lam", [0.1, 0.25, 0.5, 0.75, 1.0])
    def test_endpoints(self, lam):
        assert beta1_closed_form(lam, 1.0 + lam) == 0.0
        if lam < 1.0:
            assert beta1_closed_form(lam, 1.0 - lam) == math.pi

    @pytest.mark.parametrize("l", [0.3, 1.0, 1.7])
    def test_lambda_one(self, l):
        assert beta1_closed_form(1.0, l) == 0.0

    def test_example_value(self):
        x = ((1 - 0.0625) ** 2 - 0.5625 * 1.0625) / (2 * 0.25 * 0.5625)
        assert beta1_closed_form(0.25, 0.75) == pytest.approx(math.acos(-x))
        assert beta1_details(0.5, 0.5).beta1 == pytest.approx(math.pi)

    def test_domain(self):
        with pytest.raises(DomainError):
            beta1_closed_form(0.5, 2.0)

    def test_numeric_matches_closed_form(self):
        for lam in np.linspace(0.05, 1.0, 20):
            for k in range(20):
                l = 1.0 - lam + 2.0 * lam * (k + 0.5) / 20.0
                numeric = unit_circle_intersection_numeric(Limacon(float(lam), float(l)))
                assert numeric.beta1 == pytest.approx(beta1_closed_form(float(lam), float(l)), abs=1e-8)

    def test_numeric_interior_root(self):
        # λ = 1/2, l = 1: cos α* = −1/4, 交点 x = −0.6875
        hit = unit_circle_intersection_numeric(Limacon(0.5, 1.0))
        assert math.cos(hit.alpha) == pytest.approx(-0.25, abs=1e-12)
        assert abs(hit.point) == pytest.approx(1.0, abs=1e-12)
        assert hit.point.real == pytest.approx(-0.6875, abs=1e-12)
        assert hit.beta1 == pytest.approx(math.acos(0.6875), abs=1e-10)

    def test_numeric_tangent_endpoints(self):
        assert unit_circle_intersection_numeric(Limacon(0.5, 0.5)).beta1 == pytest.approx(math.pi)
        assert unit_circle_intersection_numeric(Limacon(0.5, 1.5)).beta1 == pytest.approx(0.0, abs=1e-12)


# --- q_ψ ---------------------------------------------------------------------

class TestQMinModulus:
    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_minimum_at_minus_psi(self, lam):
        for psi in np.linspace(-math.pi, math.pi, 64, endpoint=False):
            value, tau = q_min_modulus(lam, float(psi))
            assert value == pytest.approx(1.0, abs=1e-9)
            assert abs(np.angle(np.exp(1j * (tau + psi)))) <= 1e-6

    def test_examples(self):
        value, tau = q_min_modulus(0.5, math.pi / 2)
        assert value == pytest.approx(1.0, abs=1e-9)
        assert tau == pytest.approx(-math.pi / 2, abs=1e-6)

    def test_lambda_zero(self):
        value, _ = q_min_modulus(0.0, 0.3)
        assert value == pytest.approx(1.0)

    def test_sample_floor(self):
        with pytest.raises(ParameterOutOfRange):
            q_min_modulus(0.5, 0.0, m=1024)


# --- subordination / growth --------------------------------------------------

class TestSubordination:
    def test_koebe_all_variants(self):
        for variant in ("plain", "a2_shifted", "lambda_shifted"):
            report = subordination_check(catalog.koebe(), 1.0, variant=variant)
            assert report.holds, variant
            assert report.hypothesis_verified

    def test_koebe_preimage_is_radius(self):
        report = subordination_check(catalog.koebe(), 1.0, r=0.9)
        assert report.worst_preimage == pytest.approx(0.9, abs=1e-12)

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_identity(self, lam):
        assert subordination_check(catalog.identity(), lam, variant="plain")
        assert subordination_check(catalog.identity(), lam, variant="a2_shifted")

    @pytest.mark.parametrize("lam", [0.5, 0.75, 1.0])
    def test_identity_shifted(self, lam):
        assert subordination_check(catalog.identity(), lam, variant="lambda_shifted")

    def test_identity_shifted_hypothesis_fails_below_half(self):
        # λ − (1−λ)z 在 z = 1/3 处为零
        report = subordination_check(catalog.identity(), 0.25, variant="lambda_shifted")
        assert not report.hypothesis_verified

    def test_non_member_fails(self):
        f = AnalyticMap.from_pre_schwarzian_polynomial([1.0, -2.5, 1.0])
        report = subordination_check(f, 1.0)
        assert not report.holds
        assert report.worst_preimage > 1.0
        assert report.to_dict()["holds"] is False

    def test_region_hypothesis(self):
        # z/f − (1−λ)(1+z) = 1/2 − z², 在 |z| = 1/√2 处为零
        f = AnalyticMap.from_pre_schwarzian_polynomial([1.0, 0.5, -1.0])
        assert region_hypothesis_holds(f, 0.5) is False
        with pytest.raises(HypothesisUnchecked):
            subordination_check(f, 0.5, variant="lambda_shifted", strict=True)
        assert not subordination_check(f, 0.5, variant="lambda_shifted").hypothesis_verified
        assert subordination_check(f, 0.5, variant="lambda_shifted", hypothesis=True).hypothesis_verified

    def test_argument_checks(self):
        with pytest.raises(ParameterOutOfRange):
            subordination_check(catalog.koebe(), 1.0, m=100)
        with pytest.raises(ParameterOutOfRange):
            subordination_check(catalog.koebe(), 1.0, r=1.0)
        with pytest.raises(ParameterOutOfRange, match="variant"):
            subordination_check(catalog.koebe(), 1.0, variant="thm99")  # type: ignore[arg-type]

    def test_growth(self):
        assert growth_bound(1.0, 0.5) == pytest.approx(1.25)
        assert abs(growth_bound_check(catalog.koebe(), 1.0, 0.5)) <= 1e-9
        assert growth_bound_check(catalog.identity(), 0.5, 0.5) < 0
        assert growth_bound_check(catalog.f1(), 1.0, 0.9) < 0


# --- extremal family ---------------------------------------------------------

class TestExtremalFamily:
    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_attainment(self, lam):
        f = catalog.extremal(lam, 0.0)
        assert abs(f.a2) == pytest.approx(1.0 + lam, abs=1e-12)
        assert fekete_check(f) == pytest.approx(lam, abs=1e-12)
        assert extremal_theta_bound(1.0 + lam, lam) == -1.0

    @pytest.mark.parametrize("lam", LAMBDAS)
    def test_cosine_condition_matches_zero_count(self, lam):
        for a2 in np.linspace(0.0, 1.0 + lam, 9):
            bound = extremal_theta_bound(float(a2), lam)
            for theta in np.linspace(0.0, math.pi, 13):
                if abs(math.cos(theta) - bound) < 0.1:
                    continue
                candidate = extremal_family_member(lam, float(a2), float(theta), order=8)
                assert candidate.consistent, (lam, a2, theta)

    def test_fekete_equals_lambda(self):
        candidate = extremal_family_member(0.5, 1.0, math.pi, order=8)
        assert candidate.admissible
        assert fekete_check(candidate.f) == pytest.approx(0.5, abs=1e-12)

    def test_negative_a2(self):
        with pytest.raises(DomainError):
            extremal_family_member(0.5, -0.1, 0.0)
