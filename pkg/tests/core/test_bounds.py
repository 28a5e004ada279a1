"""
数值界: Marx 型下界、Φ ≥ 1 的多项式证书、半径方程、尾和、Grunsky 包络与极值参数。
"""

from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from pyschlicht.core.bounds import (
    ALPHA_MAX,
    ALPHA_MIN,
    UNIVERSAL_U_RADIUS,
    PhiParameters,
    abc_check,
    alpha_grid,
    alpha_to_a2,
    area_inequality_sum,
    conjecture_bound,
    equality_case_contraction_radius,
    extremal_theta_bound,
    extremal_theta_details,
    grunsky_radius_check,
    m_lower_bound,
    marx_alpha,
    phi_grid_minimum,
    phi_value,
    radius_lhs,
    schwarz_pick_integral_bound,
    solve_radius,
    tail_sum,
)
from pyschlicht.core.series import TruncatedSeries
from pyschlicht.shared.errors import BracketFailure, DomainError, ParameterOutOfRange

R0 = 0.778387


class TestMarx:
    def test_endpoints(self):
        assert marx_alpha(2.0) == pytest.approx(0.5, abs=1e-12)
        assert marx_alpha(0.0) == pytest.approx(2.0 / 3.0, abs=1e-12)

    def test_decreasing(self):
        values = np.array([marx_alpha(float(x)) for x in np.linspace(0.0, 2.0, 1000)])
        assert np.all(np.diff(values) < 0)

    @given(st.floats(0.0, 2.0), st.floats(0.0, 2.0))
    def test_order_reversing(self, x, y):
        lo, hi = min(x, y), max(x, y)
        assert marx_alpha(lo) >= marx_alpha(hi)

    @pytest.mark.parametrize("alpha", [0.5, 0.55, 0.6, 0.65, 2.0 / 3.0])
    def test_inverse(self, alpha):
        assert marx_alpha(alpha_to_a2(alpha)) == pytest.approx(alpha, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            marx_alpha(2.5)
        with pytest.raises(DomainError):
            alpha_to_a2(0.0)


class TestPhiCertificate:
    def test_abc_nonnegative(self):
        report = abc_check(1e-4)
        assert report.ok
        assert report.points == alpha_grid(1e-4).size
        assert min(report.min_A, report.min_B, report.min_C) >= -1e-12

    def test_vanishing_at_left_end(self):
        p = PhiParameters.build(0.5)
        assert p.m == pytest.approx(1.0)
        assert p.A == pytest.approx(0.0, abs=1e-12)
        assert p.B == pytest.approx(0.0, abs=1e-12)
        assert p.C == pytest.approx(0.0, abs=1e-12)

    def test_phi_at_least_one(self):
        best, alpha, t = phi_grid_minimum(1e-2, 1e3)
        assert best >= 1.0 - 1e-9
        assert ALPHA_MIN <= alpha <= ALPHA_MAX
        assert 0.0 <= t <= 1e3

    def test_phi_matches_abc_form(self):
        p = PhiParameters.build(0.6)
        t = np.linspace(0.0, 50.0, 101)
        lhs = phi_value(p, t) - 1.0
        rhs = (p.A * t * t + p.B * t + p.C) / ((1 - p.alpha) ** 2 * (p.alpha ** 2 + t) ** 3)
        np.testing.assert_allclose(lhs, rhs, atol=1e-12)

    @pytest.mark.parametrize("alpha", [0.5, 0.6, 2.0 / 3.0])
    def test_large_t_asymptote(self, alpha):
        p = PhiParameters.build(alpha)
        t = 1e6
        assert (phi_value(p, t) - 1.0) * t == pytest.approx(p.A / (1 - alpha) ** 2, rel=1e-4, abs=1e-6)

    def test_m_lower_bound(self):
        assert m_lower_bound(0.5, 2.0) == pytest.approx(1.0)

    def test_argument_checks(self):
        with pytest.raises(DomainError):
            PhiParameters.build(0.7)
        with pytest.raises(ParameterOutOfRange):
            phi_value(PhiParameters.build(0.6), -1.0)
        with pytest.raises(ParameterOutOfRange):
            alpha_grid(0.0)

    def test_grid_contains_endpoints(self):
        grid = alpha_grid(1e-2)
        assert grid[0] == ALPHA_MIN
        assert grid[-1] == ALPHA_MAX
        assert np.max(np.diff(grid)) <= 1e-2 + 1e-15


class TestRadius:
    def test_root(self):
        r0 = solve_radius()
        assert r0 == pytest.approx(R0, abs=5e-6)
        assert abs(radius_lhs(r0)) < 1e-9

    def test_universal_radius_inside_root(self):
        assert UNIVERSAL_U_RADIUS == pytest.approx(math.sqrt(0.5))
        assert UNIVERSAL_U_RADIUS < solve_radius()

    def test_root_is_where_tail_sum_is_one(self):
        assert tail_sum(solve_radius()) == pytest.approx(1.0, abs=1e-8)

    def test_bad_bracket(self):
        with pytest.raises(BracketFailure) as info:
            solve_radius(bracket=(0.1, 0.4))
        assert info.value.bracket == (0.1, 0.4)
        assert info.value.values[0] < 0 and info.value.values[1] < 0

    def test_argument_checks(self):
        with pytest.raises(ParameterOutOfRange):
            solve_radius(tol=0.0)
        with pytest.raises(ParameterOutOfRange):
            solve_radius(bracket=(0.9, 0.5))
        with pytest.raises(ParameterOutOfRange):
            radius_lhs(1.0)


class TestTailSum:
    @pytest.mark.parametrize("r", [0.3, 0.5, 0.7, R0])
    def test_closed_form_matches_partial(self, r):
        assert abs(tail_sum(r) - tail_sum(r, "partial", 2000)) <= 1e-10

    def test_value(self):
        assert tail_sum(0.5) == pytest.approx(0.040885, abs=1e-5)

    def test_leading_term(self):
        assert tail_sum(1e-2) == pytest.approx(1e-8 / 3.0, rel=1e-3)

    def test_argument_checks(self):
        with pytest.raises(ParameterOutOfRange):
            tail_sum(0.5, "partial", 1)
        with pytest.raises(ParameterOutOfRange):
            tail_sum(0.5, "series")  # type: ignore[arg-type]


class TestGrunsky:
    def test_area_sum_koebe(self):
        assert area_inequality_sum(TruncatedSeries([1.0, -2.0, 1.0])) == pytest.approx(1.0)

    def test_envelope(self):
        report = grunsky_radius_check([1.0, 0.0, 0.0, 0.0, 0.5], 0.5)
        assert report.area_sum == pytest.approx(0.75)
        assert report.area_ok
        assert report.s_value == pytest.approx(0.125)
        assert report.envelope == pytest.approx(math.sqrt(0.75 * tail_sum(0.5)))
        assert report.holds
        assert report.to_dict()["holds"] is True

    def test_envelope_below_one_inside_radius(self):
        rng = np.random.default_rng(5)
        for _ in range(20):
            b = np.zeros(16, dtype=complex)
            b[0] = 1.0
            b[2:] = rng.normal(size=14) + 1j * rng.normal(size=14)
            b[2:] /= math.sqrt(area_inequality_sum(b)) * 1.01
            report = grunsky_radius_check(b, 0.77)
            assert report.area_ok
            assert report.holds
            assert report.s_value <= 1.0


class TestExtremalParameters:
    @pytest.mark.parametrize("lam", [0.25, 0.5, 0.75, 1.0])
    def test_theta_at_maximal_a2(self, lam):
        assert extremal_theta_bound(1.0 + lam, lam) == -1.0

    def test_unconstrained(self):
        details = extremal_theta_details(0.4, 0.5)
        assert details.value == 1.0
        assert not details.constrained

    def test_value(self):
        assert extremal_theta_bound(1.0, 0.5) == pytest.approx(-0.6875)

    def test_checks(self):
        with pytest.raises(DomainError):
            extremal_theta_bound(1.6, 0.5)
        with pytest.raises(ParameterOutOfRange):
            extremal_theta_bound(1.0, 0.0)

    def test_conjecture_bound(self):
        assert conjecture_bound(3, 0.5) == pytest.approx(1.75)
        assert conjecture_bound(4, 1.0) == 4.0
        assert conjecture_bound(1, 0.0) == 1.0
        with pytest.raises(ParameterOutOfRange):
            conjecture_bound(0, 0.5)


class TestEqualityCase:
    def test_schwarz_pick_at_zero(self):
        assert schwarz_pick_integral_bound(0.0) == 0.5

    def test_series_matches_closed_form(self):
        x = 2e-5
        series = 0.5 + 2.0 * x / 3.0 - x * x / 4.0
        assert schwarz_pick_integral_bound(x) == pytest.approx(series, abs=1e-8)

    def test_below_one(self):
        values = [schwarz_pick_integral_bound(a) for a in np.linspace(0.0, 0.999, 50)]
        assert all(0.5 <= v < 1.0 for v in values)
        assert np.all(np.diff(values) > 0)

    def test_contraction_radius(self):
        assert equality_case_contraction_radius(1.0, 0.0) == pytest.approx(0.75)
        assert equality_case_contraction_radius(0.5, 0.9j) < 1.0
        with pytest.raises(DomainError):
            equality_case_contraction_radius(0.5, 1.0)
