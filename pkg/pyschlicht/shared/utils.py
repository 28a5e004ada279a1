"""
工具函数模块

复数 <-> JSON 的互转、17 位有效数字的浮点格式化、种子混合。
"""

import hashlib
import json
import math
from typing import Any, Iterable, List, Sequence, Union

import numpy as np

# 17 位有效数字可以无损往返 IEEE double
FLOAT_DIGITS = 17

Number = Union[int, float, complex, np.number]


def complex_to_json(value: Number) -> List[float]:
    """复数 -> ``[re, im]``"""
    c = complex(value)
    return [float(c.real), float(c.imag)]


def complex_from_json(value: Any) -> complex:
    """
    ``[re, im]`` / 实数 / ``{"re":..,"im":..}`` -> complex

    非法输入抛 ``ValueError``。
    """
    if isinstance(value, bool):
        raise ValueError(f"Not a complex number: {value!r}")
    if isinstance(value, (int, float)):
        return complex(float(value), 0.0)
    if isinstance(value, dict) and {"re", "im"} <= set(value):
        return complex(float(value["re"]), float(value["im"]))
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    raise ValueError(f"Not a complex number: {value!r}")


def complex_list_to_json(values: Iterable[Number]) -> List[List[float]]:
    return [complex_to_json(v) for v in values]


def format_float(value: float) -> str:
    """按 17 位有效数字格式化 (round-trip safe)"""
    if math.isnan(value) or math.isinf(value):
        return repr(float(value))
    return f"{float(value):.{FLOAT_DIGITS}g}"


def to_jsonable(obj: Any) -> Any:
    """
    递归把 numpy 标量 / 复数 / tuple 转成可 JSON 序列化的对象

    复数 -> [re, im]; numpy 数组 -> list。
    """
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [to_jsonable(v) for v in obj]
    if isinstance(obj, np.ndarray):
        return [to_jsonable(v) for v in obj.tolist()]
    if isinstance(obj, (complex, np.complexfloating)):
        return complex_to_json(obj)
    if isinstance(obj, (np.bool_,)):
        return bool(obj)
    if isinstance(obj, np.integer):
        return int(obj)
    if isinstance(obj, np.floating):
        return float(obj)
    return obj


def dumps_canonical(obj: Any) -> str:
    """
    规范化 JSON: 键排序、无多余空白、浮点用 repr (17 位以内最短往返表示)

    相同输入得到相同字节, fuzz 的 JSONL 回放依赖这一点。
    """
    return json.dumps(to_jsonable(obj), sort_keys=True, separators=(",", ":"),
                      ensure_ascii=False, allow_nan=True)


def mix_seed(seed: int, index: int) -> int:
    """
    由 (seed, index) 派生子种子

    用 SHA-256 而不是简单异或, 避免相邻 seed 的子流互相重叠。
    """
    digest = hashlib.sha256(f"{int(seed)}:{int(index)}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "little")


def linspace_angles(m: int) -> np.ndarray:
    """[0, 2π) 上 m 个等距角度"""
    return 2.0 * np.pi * np.arange(m) / m


def max_abs_diff(a: Sequence[Number], b: Sequence[Number]) -> float:
    aa = np.asarray(a, dtype=complex)
    bb = np.asarray(b, dtype=complex)
    if aa.size == 0 and bb.size == 0:
        return 0.0
    return float(np.max(np.abs(aa - bb)))


__all__ = [
    "FLOAT_DIGITS",
    "complex_to_json",
    "complex_from_json",
    "complex_list_to_json",
    "format_float",
    "to_jsonable",
    "dumps_canonical",
    "mix_seed",
    "linspace_angles",
    "max_abs_diff",
]
