"""
截断幂级数: 倒数 / 对数 / 指数 / n 次根 / zⁿ 抽取 / 求值。
"""

from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pyschlicht.core.series import (
    TruncatedSeries,
    compose_zpow,
    evaluate,
    exp_series,
    integrate,
    log_series,
    mul,
    nth_root,
    polynomial,
    power,
    reciprocal,
)
from pyschlicht.shared.errors import BranchBase, NearZeroConstantTerm, ParameterOutOfRange

small = st.floats(min_value=-0.5, max_value=0.5, allow_nan=False, allow_infinity=False)
unit_series = st.lists(st.tuples(small, small), min_size=1, max_size=8).map(
    lambda pairs: TruncatedSeries([1.0] + [complex(a, b) for a, b in pairs], order=12)
)


# --- construction ------------------------------------------------------------

class TestConstruction:
    def test_pads_to_order(self):
        s = TruncatedSeries([1, 2], order=4)
        assert s.order == 4
        assert s.coeffs.tolist() == [1, 2, 0, 0, 0]

    def test_truncates_to_order(self):
        assert TruncatedSeries([1, 2, 3, 4], order=1).coeffs.tolist() == [1, 2]

    def test_coefficients_are_read_only(self):
        s = TruncatedSeries([1, 2, 3])
        with pytest.raises(ValueError):
            s.coeffs[0] = 5

    def test_rejects_non_finite(self):
        with pytest.raises(ParameterOutOfRange, match="finite"):
            TruncatedSeries([1.0, float("nan")])

    def test_rejects_negative_order(self):
        with pytest.raises(ParameterOutOfRange):
            TruncatedSeries([1.0], order=-1)

    def test_index_past_order_is_zero(self):
        s = TruncatedSeries([1, 2])
        assert s[1] == 2
        assert s[7] == 0

    def test_monomial_and_identity(self):
        assert TruncatedSeries.identity(3).coeffs.tolist() == [0, 1, 0, 0]
        assert TruncatedSeries.monomial(2, 3.0, 2)[2] == 3.0
        assert TruncatedSeries.monomial(5, 3.0, 2).degree() == 0

    def test_polynomial_keeps_degree(self):
        assert polynomial([1, 0, 0, 0, 2], order=2).order == 4


# --- arithmetic --------------------------------------------------------------

class TestArithmetic:
    def test_mul_truncates_to_smaller_order(self):
        a = TruncatedSeries([1, 1], order=5)
        b = TruncatedSeries([1, -1], order=3)
        prod = mul(a, b)
        assert prod.order == 3
        assert prod.allclose(TruncatedSeries([1, 0, -1, 0]))

    def test_add_scalar_touches_constant_only(self):
        s = TruncatedSeries([1, 2]) + 3
        assert s.coeffs.tolist() == [4, 2]

    def test_subtract(self):
        s = TruncatedSeries([1, 2, 3]) - TruncatedSeries([1, 2, 3])
        assert s.degree() == 0 and s[0] == 0

    def test_shift_up_and_derivative(self):
        s = TruncatedSeries([1, 2, 3]).shift_up(2)
        assert s.coeffs.tolist() == [0, 0, 1, 2, 3]
        assert s.derivative().coeffs.tolist() == [0, 2, 6, 12]

    def test_integrate_zero_constant(self):
        s = integrate(TruncatedSeries([1, 2, 3]))
        np.testing.assert_allclose(s.coeffs, [0, 1, 1, 1])

    def test_mask_multiples(self):
        s = TruncatedSeries(np.arange(7)).mask_multiples(3)
        assert s.coeffs.tolist() == [0, 0, 0, 3, 0, 0, 6]


# --- reciprocal --------------------------------------------------------------

class TestReciprocal:
    def test_geometric_series(self):
        inv = reciprocal(TruncatedSeries([1, -1], order=10))
        np.testing.assert_allclose(inv.coeffs, np.ones(11))

    def test_koebe_quotient(self):
        # 1/(1−z)² = Σ (k+1) z^k
        inv = reciprocal(TruncatedSeries([1, -2, 1], order=8))
        np.testing.assert_allclose(inv.coeffs.real, np.arange(1, 10))

    def test_near_zero_constant(self):
        with pytest.raises(NearZeroConstantTerm):
            reciprocal(TruncatedSeries([1e-14, 1.0]))

    @settings(max_examples=40, deadline=None)
    @given(unit_series)
    def test_product_is_one(self, a):
        prod = mul(a, reciprocal(a))
        assert prod.allclose(TruncatedSeries.constant(1.0, prod.order), atol=1e-9)


# --- log / exp / roots -------------------------------------------------------

class TestLogExpRoots:
    @settings(max_examples=40, deadline=None)
    @given(unit_series)
    def test_exp_inverts_log(self, a):
        assert exp_series(log_series(a)).allclose(a, atol=1e-9)

    @settings(max_examples=40, deadline=None)
    @given(unit_series, st.integers(min_value=2, max_value=6))
    def test_root_to_the_n(self, a, n):
        root = nth_root(a, n)
        acc = root
        for _ in range(n - 1):
            acc = mul(acc, root)
        assert acc.allclose(a, atol=1e-8)

    def test_square_root_of_square(self):
        a = TruncatedSeries([1, 0.3, -0.2], order=10)
        assert nth_root(mul(a, a), 2).allclose(a, atol=1e-12)

    def test_power_matches_reciprocal(self):
        a = TruncatedSeries([1, -0.4, 0.1], order=10)
        assert power(a, -1.0).allclose(reciprocal(a), atol=1e-12)

    def test_root_needs_unit_constant(self):
        with pytest.raises(BranchBase, match="constant term 1"):
            nth_root(TruncatedSeries([2.0, 1.0]), 2)

    def test_root_degree_range(self):
        with pytest.raises(ParameterOutOfRange):
            nth_root(TruncatedSeries([1.0, 1.0]), 1)


# --- zⁿ / evaluation ---------------------------------------------------------

class TestComposeAndEvaluate:
    def test_substitute(self):
        s = compose_zpow(TruncatedSeries([1, 2, 3]), 2, "substitute")
        assert s.order == 5
        assert s.coeffs.tolist() == [1, 0, 2, 0, 3, 0]

    def test_decimate(self):
        s = compose_zpow(TruncatedSeries(np.arange(7)), 3, "decimate")
        assert s.coeffs.tolist() == [0, 3, 6]

    def test_unknown_mode(self):
        with pytest.raises(ParameterOutOfRange, match="mode"):
            compose_zpow(TruncatedSeries([1]), 2, "bogus")  # type: ignore[arg-type]

    def test_evaluate_matches_polyval(self):
        coeffs = np.array([1, 2 - 1j, 0.5, -0.25j])
        z = np.array([0.1, 0.3j, -0.5 + 0.2j])
        expected = np.polynomial.polynomial.polyval(z, coeffs)
        np.testing.assert_allclose(evaluate(TruncatedSeries(coeffs), z), expected, atol=1e-15)

    def test_evaluate_scalar_returns_complex(self):
        value = TruncatedSeries([1, 1])(0.5)
        assert isinstance(value, complex)
        assert value == pytest.approx(1.5)
