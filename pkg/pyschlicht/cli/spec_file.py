"""
函数规格文件 (JSON)

三种形式, 都可以附带 ``"transforms": [...]``:

    {"kind": "rational", "num": [[re, im], ...], "den": [[re, im], ...]}
    {"kind": "characterization", "a2": [re, im], "lambda": 0.5, "omega": {...}}
    {"kind": "builtin", "name": "koebe", "params": {"lam": 0.5}}

omega 与 :func:`pyschlicht.core.schwarz.generator_from_descriptor` 的格式一致。
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator

from ..core.analytic_map import AnalyticMap, from_characterization
from ..core.catalog import CATALOG, builtin
from ..core.schwarz import generator_from_descriptor
from ..core.transforms import TransformKind, apply_pipeline, transform_from_dict
from ..shared.errors import SchlichtError, SpecFileError
from ..shared.utils import complex_from_json

ComplexLike = Union[float, List[float], Dict[str, float]]


def _complex(value: Any) -> complex:
    try:
        return complex_from_json(value)
    except ValueError as exc:
        raise ValueError(str(exc)) from exc


class _SpecBase(BaseModel):
    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    transforms: List[Dict[str, Any]] = Field(default_factory=list)

    @field_validator("transforms")
    @classmethod
    def _check_transforms(cls, value: List[Dict[str, Any]]) -> List[Dict[str, Any]]:
        for item in value:
            transform_from_dict(item)
        return value

    def transform_kinds(self) -> List[TransformKind]:
        return [transform_from_dict(item) for item in self.transforms]


class RationalSpec(_SpecBase):
    kind: Literal["rational"]
    num: List[ComplexLike]
    den: List[ComplexLike]

    @field_validator("num", "den")
    @classmethod
    def _check_coeffs(cls, value: List[ComplexLike]) -> List[ComplexLike]:
        if not value:
            raise ValueError("coefficient list must not be empty")
        for c in value:
            _complex(c)
        return value


class CharacterizationSpec(_SpecBase):
    kind: Literal["characterization"]
    a2: ComplexLike
    lam: float = Field(alias="lambda", gt=0.0, le=1.0)
    omega: Dict[str, Any]

    @field_validator("a2")
    @classmethod
    def _check_a2(cls, value: ComplexLike) -> ComplexLike:
        _complex(value)
        return value


class BuiltinSpec(_SpecBase):
    kind: Literal["builtin"]
    name: str
    params: Dict[str, Any] = Field(default_factory=dict)

    @field_validator("name")
    @classmethod
    def _check_name(cls, value: str) -> str:
        if value not in CATALOG:
            raise ValueError(f"unknown builtin {value!r}; known: {', '.join(sorted(CATALOG))}")
        return value


class FunctionSpecFile(BaseModel):
    """规格文件的顶层包装, 按 kind 分派"""
    spec: Union[RationalSpec, CharacterizationSpec, BuiltinSpec] = Field(discriminator="kind")


def parse_spec(data: Any) -> Union[RationalSpec, CharacterizationSpec, BuiltinSpec]:
    """
    校验一个已解析的 JSON 对象

    Raises:
        SpecFileError: 结构不合法
    """
    if not isinstance(data, dict):
        raise SpecFileError("function spec must be a JSON object")
    try:
        return FunctionSpecFile.model_validate({"spec": data}).spec
    except ValidationError as exc:
        raise SpecFileError(f"invalid function spec: {exc}") from exc


def load_spec(path: Union[str, Path]) -> Union[RationalSpec, CharacterizationSpec, BuiltinSpec]:
    """
    读取并校验规格文件

    Raises:
        SpecFileError: JSON 语法错误或结构不合法
        OSError: 文件不可读
    """
    text = Path(path).read_text(encoding="utf-8")
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecFileError(f"{path}: malformed JSON ({exc})") from exc
    return parse_spec(data)


def build_map(spec: Union[RationalSpec, CharacterizationSpec, BuiltinSpec],
              order: Optional[int] = None) -> AnalyticMap:
    """按规格构造映射并依次应用 transforms"""
    try:
        if isinstance(spec, RationalSpec):
            f = AnalyticMap.rational([_complex(c) for c in spec.num], [_complex(c) for c in spec.den], order)
        elif isinstance(spec, CharacterizationSpec):
            f = from_characterization(_complex(spec.a2), spec.lam, generator_from_descriptor(spec.omega), order)
        else:
            f = builtin(spec.name, order=order, **spec.params)
    except SpecFileError:
        raise
    except (SchlichtError, ValueError) as exc:
        raise SpecFileError(f"cannot build map: {exc}") from exc
    kinds = spec.transform_kinds()
    if not kinds:
        return f
    lam = spec.lam if isinstance(spec, CharacterizationSpec) else None
    return apply_pipeline(f, kinds, lam)


__all__ = [
    "RationalSpec",
    "CharacterizationSpec",
    "BuiltinSpec",
    "FunctionSpecFile",
    "parse_spec",
    "load_spec",
    "build_map",
]
