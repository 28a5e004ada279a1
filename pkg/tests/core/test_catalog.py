"""
具名函数目录
"""

import numpy as np
import pytest

from pyschlicht.core import catalog
from pyschlicht.core.analytic_map import taylor_coefficients
from pyschlicht.core.membership import sup_u_on_circle
from pyschlicht.shared.errors import ParameterOutOfRange, SpecFileError


class TestCatalogLookup:
    def test_names(self):
        for name in ("identity", "koebe", "f1", "g1", "f_lambda", "extremal", "one_plus_z_plus_z2"):
            assert name in catalog.CATALOG
        for n in catalog.NTH_ROOT_DEGREES:
            assert f"nth_root_source_{n}" in catalog.CATALOG
            assert f"nth_root_counterexample_{n}" in catalog.CATALOG

    def test_unknown_name(self):
        with pytest.raises(SpecFileError, match="unknown builtin"):
            catalog.builtin("cardioid")

    def test_bad_parameters(self):
        with pytest.raises(SpecFileError, match="bad parameters"):
            catalog.builtin("koebe", lam=0.5)

    def test_parametrized_entries(self):
        f = catalog.builtin("f_lambda", lam=0.5, order=16)
        assert f.a2 == pytest.approx(-1.5)
        g = catalog.builtin("extremal", lam=0.5, phi=np.pi / 2)
        assert abs(g.a2) == pytest.approx(1.5)

    def test_l_member(self):
        assert catalog.l_member("one_minus_z").a2 == pytest.approx(1.0)
        with pytest.raises(SpecFileError, match="set L"):
            catalog.l_member("two_z")

    def test_names_carry_through(self):
        assert catalog.g1().name == "g1"
        assert catalog.nth_root_counterexample(3).name == "nth_root_counterexample_3"


class TestCatalogFunctions:
    def test_koebe_coefficients(self):
        a = taylor_coefficients(catalog.koebe(order=8), 6)
        np.testing.assert_allclose(a, [1, 2, 3, 4, 5, 6], atol=1e-12)

    def test_f_lambda_pre_schwarzian(self):
        z = np.array([0.3, -0.5j, 0.2 + 0.7j])
        f = catalog.f_lambda(0.25)
        np.testing.assert_allclose(f.q(z), (1 + 0.25 * z) * (1 + z), atol=1e-14)

    def test_nth_root_degree(self):
        with pytest.raises(ParameterOutOfRange):
            catalog.nth_root_source(1)

    def test_f1_is_second_source(self):
        z = np.array([0.4, 0.1 - 0.6j])
        np.testing.assert_allclose(catalog.nth_root_source(2).q(z), catalog.f1().q(z), atol=1e-15)

    @pytest.mark.parametrize(
        "name", [n for n, e in catalog.CATALOG.items() if e.member_lambda is not None]
    )
    def test_member_lambda_bounds_u(self, name):
        entry = catalog.CATALOG[name]
        assert sup_u_on_circle(entry.factory(), 0.9) <= entry.member_lambda + 1e-12

    def test_catalog_members(self):
        names = {f.name for f in catalog.catalog_members(2.0 / 3.0)}
        assert "f1" in names
        assert "koebe" not in names
        assert "g1" not in names
        assert "koebe" in {f.name for f in catalog.catalog_members(1.0)}
