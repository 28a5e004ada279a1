"""
函数规格文件的校验与构造
"""

import json

import numpy as np
import pytest

from pyschlicht.cli.spec_file import (
    BuiltinSpec,
    CharacterizationSpec,
    RationalSpec,
    build_map,
    load_spec,
    parse_spec,
)
from pyschlicht.core import catalog
from pyschlicht.core.analytic_map import u_eval
from pyschlicht.shared.errors import SpecFileError


class TestParseSpec:
    def test_kinds(self):
        assert isinstance(parse_spec({"kind": "rational", "num": [0, 1], "den": [1, -1]}), RationalSpec)
        spec = parse_spec({"kind": "characterization", "a2": {"re": 1, "im": 0}, "lambda": 0.5,
                           "omega": {"kind": "constant", "c": 0.5}})
        assert isinstance(spec, CharacterizationSpec)
        assert spec.lam == 0.5
        assert isinstance(parse_spec({"kind": "builtin", "name": "koebe"}), BuiltinSpec)

    @pytest.mark.parametrize(
        "data",
        [
            {"kind": "rational", "num": [], "den": [1]},
            {"kind": "rational", "num": [0, 1], "den": ["x"]},
            {"kind": "builtin", "name": "koebe", "extra": 1},
            {"kind": "characterization", "a2": 1, "lambda": 0, "omega": {}},
            {"kind": "builtin", "name": "koebe", "transforms": [{"tag": "Dilate"}]},
        ],
    )
    def test_rejects(self, data):
        with pytest.raises(SpecFileError):
            parse_spec(data)

    def test_load_spec(self, tmp_path):
        path = tmp_path / "spec.json"
        path.write_text(json.dumps({"kind": "builtin", "name": "f1"}), encoding="utf-8")
        assert load_spec(path).name == "f1"
        path.write_text("[", encoding="utf-8")
        with pytest.raises(SpecFileError, match="malformed JSON"):
            load_spec(path)


class TestBuildMap:
    def test_rational_matches_catalog(self):
        f = build_map(parse_spec({"kind": "rational", "num": [0, 1], "den": [1, -2, 1]}), order=24)
        z = np.array([0.3, 0.5j, -0.6 + 0.2j])
        np.testing.assert_allclose(u_eval(f, z), u_eval(catalog.koebe(order=24), z), atol=1e-12)

    def test_transform_pipeline(self):
        spec = parse_spec({"kind": "builtin", "name": "koebe",
                           "transforms": [{"tag": "Rotate", "theta": 0.5}, {"tag": "Conjugate"}]})
        f = build_map(spec, order=16)
        assert f.a2 == pytest.approx(2.0 * np.exp(-0.5j))

    def test_characterization(self):
        spec = parse_spec({"kind": "characterization", "a2": [1.0, 0.0], "lambda": 0.5,
                           "omega": {"kind": "blaschke", "zeros": [[0.2, 0.1]], "phase": 0.3}})
        f = build_map(spec, order=24)
        assert f.a2 == pytest.approx(1.0)

    def test_builtin_bad_params(self):
        with pytest.raises(SpecFileError):
            build_map(parse_spec({"kind": "builtin", "name": "f_lambda", "params": {"lam": 2.0}}))
