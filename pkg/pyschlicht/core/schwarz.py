"""
Schwarz 函数生成器 - 单位圆盘上 |ω| ≤ 1 的解析函数

三种具体形式:
- 常数 ω ≡ c, |c| ≤ 1;
- 归一化多项式 ω = P/s, s 为 P 在单位圆上的 sup 范数 (采样得到);
- 有限 Blaschke 积 ω = e^{iφ} ∏ (z − a_k)/(1 − ā_k z)。

构造时在 |z| = 1 − 10⁻³ 上取 4096 个点检查 sup|ω| ≤ 1 + 10⁻⁹;
这是采样证据, 不是证明, 判定结果里会记成 "sampled"。
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, Optional, Sequence, Union

import numpy as np

from ..shared.env.constants import SCHWARZ_SAMPLE_COUNT, SCHWARZ_SAMPLE_EPS, SCHWARZ_SUP_SLACK
from ..shared.errors import ParameterOutOfRange
from ..shared.utils import complex_from_json, complex_list_to_json, complex_to_json, linspace_angles
from .series import TruncatedSeries, mul

ArrayLike = Union[complex, np.ndarray]

# Blaschke 积分的 Gauss–Legendre 节点数
QUADRATURE_NODES = 64

_GL_NODES, _GL_WEIGHTS = np.polynomial.legendre.leggauss(QUADRATURE_NODES)
# 映射到 [0, 1]
_GL_S = (_GL_NODES + 1.0) / 2.0
_GL_W = _GL_WEIGHTS / 2.0


# ============================================================================
# 类参数
# ============================================================================

@dataclass(frozen=True)
class ClassParameter:
    """类参数 λ, 0 < λ ≤ 1"""
    value: float

    def __post_init__(self):
        v = float(self.value)
        if not np.isfinite(v) or not (0.0 < v <= 1.0):
            raise ParameterOutOfRange(f"lambda must lie in (0, 1], got {self.value!r}", value=self.value)
        object.__setattr__(self, "value", v)

    @classmethod
    def of(cls, lam: Union[float, "ClassParameter"]) -> "ClassParameter":
        return lam if isinstance(lam, ClassParameter) else cls(float(lam))

    def __float__(self) -> float:
        return self.value


def lambda_value(lam: Union[float, ClassParameter]) -> float:
    """把 float 或 ClassParameter 统一成经过校验的 float"""
    return ClassParameter.of(lam).value


# ============================================================================
# 生成器
# ============================================================================

class SchwarzGenerator(ABC):
    """Schwarz 函数 ω 的抽象接口"""

    kind: str = "abstract"

    def __init__(self) -> None:
        self.sampled_sup: float = self._validate()

    # ------------------------------------------------------------------
    # 子类实现
    # ------------------------------------------------------------------

    @abstractmethod
    def value(self, z: ArrayLike) -> ArrayLike:
        """ω(z), 支持 numpy 数组"""

    @abstractmethod
    def antiderivative(self, z: ArrayLike) -> ArrayLike:
        """∫₀^z ω(t) dt"""

    @abstractmethod
    def series(self, order: int) -> TruncatedSeries:
        """ω 的 Taylor 级数, 截断到 order"""

    @abstractmethod
    def coefficient_tail_bound(self, start: int) -> float:
        """Σ_{k ≥ start} |ω_k| 的上界"""

    @abstractmethod
    def rotated(self, theta: float) -> "SchwarzGenerator":
        """e^{2iθ} ω(e^{iθ} z), 旋转 f 时 ω 的变换"""

    @abstractmethod
    def conjugated(self) -> "SchwarzGenerator":
        """conj(ω(conj z))"""

    @abstractmethod
    def to_descriptor(self) -> Dict[str, Any]:
        """JSON 描述, 与 :func:`generator_from_descriptor` 互逆"""

    # ------------------------------------------------------------------
    # 公共
    # ------------------------------------------------------------------

    def __call__(self, z: ArrayLike) -> ArrayLike:
        return self.value(z)

    @property
    def polynomial_degree(self) -> Optional[int]:
        """ω 为多项式时的次数, 否则 None"""
        return None

    @property
    def at_zero(self) -> complex:
        return complex(self.value(0j))

    def in_b1(self, tol: float = 1e-12) -> bool:
        """ω(0) = ω′(0) = 0"""
        s = self.series(2)
        return abs(s[0]) <= tol and abs(s[1]) <= tol

    def _validate(self) -> float:
        z = (1.0 - SCHWARZ_SAMPLE_EPS) * np.exp(1j * linspace_angles(SCHWARZ_SAMPLE_COUNT))
        sup = float(np.max(np.abs(self.value(z))))
        if not np.isfinite(sup) or sup > 1.0 + SCHWARZ_SUP_SLACK:
            raise ParameterOutOfRange(
                f"{self.kind} generator is not a Schwarz function: sampled sup |w| = {sup:.12g}",
                sampled_sup=sup,
            )
        return sup

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.to_descriptor()})"


class ConstantGenerator(SchwarzGenerator):
    """ω ≡ c"""

    kind = "constant"

    def __init__(self, c: complex) -> None:
        self.c = complex(c)
        if abs(self.c) > 1.0 + SCHWARZ_SUP_SLACK:
            raise ParameterOutOfRange(f"constant generator needs |c| <= 1, got |c|={abs(self.c):.12g}")
        super().__init__()

    def value(self, z: ArrayLike) -> ArrayLike:
        if np.ndim(z) == 0:
            return self.c
        return np.full(np.shape(z), self.c, dtype=complex)

    @property
    def polynomial_degree(self) -> Optional[int]:
        return 0

    def antiderivative(self, z: ArrayLike) -> ArrayLike:
        return self.c * np.asarray(z, dtype=complex) if np.ndim(z) else self.c * complex(z)

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries([self.c], order=order)

    def coefficient_tail_bound(self, start: int) -> float:
        return abs(self.c) if start <= 0 else 0.0

    def rotated(self, theta: float) -> "ConstantGenerator":
        return ConstantGenerator(self.c * np.exp(2j * theta))

    def conjugated(self) -> "ConstantGenerator":
        return ConstantGenerator(self.c.conjugate())

    def to_descriptor(self) -> Dict[str, Any]:
        return {"kind": self.kind, "c": complex_to_json(self.c)}


class PolynomialGenerator(SchwarzGenerator):
    """
    归一化多项式 ω = P/s

    Args:
        coeffs: P 的系数, 低次在前
        scale: 归一化因子; 省略时取 P 在单位圆上 8192 点采样的最大模
    """

    kind = "polynomial"

    def __init__(self, coeffs: Sequence[complex], scale: float | None = None) -> None:
        raw = np.asarray(list(coeffs), dtype=complex)
        if raw.size == 0:
            raw = np.zeros(1, dtype=complex)
        if scale is None:
            circle = np.exp(1j * linspace_angles(2 * SCHWARZ_SAMPLE_COUNT))
            scale = float(np.max(np.abs(np.polynomial.polynomial.polyval(circle, raw))))
            if scale == 0.0:
                scale = 1.0
        if not scale > 0.0:
            raise ParameterOutOfRange(f"polynomial scale must be positive, got {scale!r}")
        self.raw = raw
        self.scale = float(scale)
        self.coeffs = raw / self.scale
        self._integral = np.concatenate([[0.0], self.coeffs / np.arange(1, self.coeffs.size + 1)])
        super().__init__()

    def value(self, z: ArrayLike) -> ArrayLike:
        out = np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex), self.coeffs)
        return complex(out) if np.ndim(z) == 0 else out

    @property
    def polynomial_degree(self) -> Optional[int]:
        nz = np.nonzero(self.coeffs)[0]
        return int(nz[-1]) if nz.size else 0

    def antiderivative(self, z: ArrayLike) -> ArrayLike:
        out = np.polynomial.polynomial.polyval(np.asarray(z, dtype=complex), self._integral)
        return complex(out) if np.ndim(z) == 0 else out

    def series(self, order: int) -> TruncatedSeries:
        return TruncatedSeries(self.coeffs, order=order)

    def coefficient_tail_bound(self, start: int) -> float:
        return float(np.sum(np.abs(self.coeffs[max(start, 0):])))

    def rotated(self, theta: float) -> "PolynomialGenerator":
        k = np.arange(self.raw.size)
        return PolynomialGenerator(self.raw * np.exp(1j * (k + 2) * theta), scale=self.scale)

    def conjugated(self) -> "PolynomialGenerator":
        return PolynomialGenerator(np.conj(self.raw), scale=self.scale)

    def to_descriptor(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "coeffs": complex_list_to_json(self.raw),
            "scale": self.scale,
        }


class BlaschkeGenerator(SchwarzGenerator):
    """
    有限 Blaschke 积 e^{iφ} ∏ (z − a_k)/(1 − ā_k z)

    ∫₀^z ω 用 [0, z] 上的 Gauss–Legendre 求积; 被积函数在 |t| < 1/max|a_k|
    内解析, 64 个节点对 max|a_k| ≤ 0.99 已到 1e-9 量级。
    """

    kind = "blaschke"

    def __init__(self, zeros: Sequence[complex], phase: float = 0.0) -> None:
        self.zeros = np.asarray(list(zeros), dtype=complex)
        if np.any(np.abs(self.zeros) >= 1.0):
            raise ParameterOutOfRange("Blaschke zeros must lie in the open unit disk")
        self.phase = float(phase)
        self._unit = complex(np.exp(1j * self.phase))
        super().__init__()

    def value(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        out = np.full(zz.shape, self._unit, dtype=complex)
        for a in self.zeros:
            out = out * (zz - a) / (1.0 - np.conj(a) * zz)
        return complex(out) if np.ndim(z) == 0 else out

    @property
    def polynomial_degree(self) -> Optional[int]:
        # 零点全在原点时 ω = e^{iφ} z^n
        return int(self.zeros.size) if not np.any(self.zeros) else None

    def antiderivative(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        nodes = zz[..., None] * _GL_S
        out = zz * np.sum(self.value(nodes) * _GL_W, axis=-1)
        return complex(out) if np.ndim(z) == 0 else out

    def series(self, order: int) -> TruncatedSeries:
        acc = TruncatedSeries([self._unit], order=order)
        k = np.arange(1, order + 1)
        for a in self.zeros:
            ac = np.conj(a)
            factor = np.empty(order + 1, dtype=complex)
            factor[0] = -a
            # (z − a)Σ(āz)^k: 第 k 项 ā^{k−1}(1 − |a|²)
            factor[1:] = ac ** (k - 1) * (1.0 - abs(a) ** 2)
            acc = mul(acc, TruncatedSeries(factor))
        return acc

    def coefficient_tail_bound(self, start: int) -> float:
        """
        Cauchy 估计: ω 在 |z| < R = (1 + 1/s)/2 内解析 (s = max|a_k|),
        |ω_k| ≤ M R^{−k}, M = ∏ (R + |a|)/(1 − |a|R)。
        """
        start = max(start, 0)
        mods = np.abs(self.zeros)
        s = float(mods.max()) if mods.size else 0.0
        if s == 0.0:
            # e^{iφ} z^n
            return 1.0 if start <= self.zeros.size else 0.0
        R = (1.0 + 1.0 / s) / 2.0
        M = float(np.prod((R + mods) / (1.0 - mods * R)))
        return M * R ** (-start) * R / (R - 1.0)

    def rotated(self, theta: float) -> "BlaschkeGenerator":
        n = self.zeros.size
        return BlaschkeGenerator(self.zeros * np.exp(-1j * theta), self.phase + (n + 2) * theta)

    def conjugated(self) -> "BlaschkeGenerator":
        return BlaschkeGenerator(np.conj(self.zeros), -self.phase)

    def to_descriptor(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "zeros": complex_list_to_json(self.zeros),
            "phase": self.phase,
        }


# ============================================================================
# 工厂
# ============================================================================

def generator_from_descriptor(desc: Dict[str, Any]) -> SchwarzGenerator:
    """
    从 JSON 描述构造生成器

    支持 ``{"kind": "constant", "c": …}``、``{"kind": "polynomial", "coeffs": […], "scale": …}``
    与 ``{"kind": "blaschke", "zeros": […], "phase": …}``。
    """
    kind = desc.get("kind")
    if kind == "constant":
        return ConstantGenerator(complex_from_json(desc.get("c", 0.0)))
    if kind == "polynomial":
        coeffs = [complex_from_json(c) for c in desc.get("coeffs", [])]
        return PolynomialGenerator(coeffs, desc.get("scale"))
    if kind == "blaschke":
        zeros = [complex_from_json(a) for a in desc.get("zeros", [])]
        return BlaschkeGenerator(zeros, float(desc.get("phase", 0.0)))
    raise ParameterOutOfRange(f"unknown Schwarz generator kind: {kind!r}")


__all__ = [
    "ClassParameter",
    "lambda_value",
    "SchwarzGenerator",
    "ConstantGenerator",
    "PolynomialGenerator",
    "BlaschkeGenerator",
    "generator_from_descriptor",
    "QUADRATURE_NODES",
]
