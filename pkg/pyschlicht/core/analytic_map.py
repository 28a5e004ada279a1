"""
归一化解析函数 f(z) = z + a₂z² + …

所有后端都以 q(z) = z/f(z) 为主表示 (预 Schwarz 级数
z/f = 1 + Σ b_n zⁿ 就是它的 Taylor 展开):

- :class:`RationalForm`: f = N/D, N = z·Ñ, 于是 q = D/Ñ;
- :class:`CharacterizationForm`: q = 1 − a₂z + λz∫₀^z ω;
- :class:`PointwiseForm`: 变换产生的映射, 由闭包给出 q、q′ 和级数。

U 算子两种算法:
    u_eval      (z/f)² f′ − 1
    u_eval_alt  z/f − z (z/f)′ − 1
"""

from __future__ import annotations

from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import optimize

from ..shared.env.constants import BOUNDARY_TOL, POLE_TOL, SCHWARZ_SAMPLE_COUNT
from ..shared.env.settings import get_global_settings
from ..shared.errors import BoundaryZero, ParameterOutOfRange, PoleOrZeroHit
from ..shared.logger import logger
from ..shared.types import SampledExtremum
from ..shared.utils import complex_from_json, complex_list_to_json, complex_to_json, linspace_angles
from .schwarz import ClassParameter, SchwarzGenerator, generator_from_descriptor, lambda_value
from .series import TruncatedSeries, integrate, mul, reciprocal

ArrayLike = Union[complex, np.ndarray]
Evaluable = Callable[[np.ndarray], np.ndarray]

# 辐角增量超过这个值的弧段要细分
_MAX_ARG_STEP = np.pi / 4
_MAX_SUBDIVISION_DEPTH = 16


def _scalar_or_array(z: ArrayLike, out: np.ndarray) -> ArrayLike:
    return complex(out) if np.ndim(z) == 0 else out


def weighted_geometric_tail(M: float, R: float, start: int) -> float:
    """M Σ_{n ≥ start} (n − 1) R^{−n}, R > 1"""
    if not np.isfinite(M) or R <= 1.0:
        return float("inf")
    x = 1.0 / R
    return float(M * x ** start * ((start - 1) / (1.0 - x) + x / (1.0 - x) ** 2))


# ============================================================================
# 后端
# ============================================================================

class MapBacking(ABC):
    """z/f 的一种具体表示"""

    kind: str = "abstract"

    @abstractmethod
    def q(self, z: ArrayLike) -> ArrayLike:
        """z/f(z)"""

    @abstractmethod
    def dq(self, z: ArrayLike) -> ArrayLike:
        """(z/f)′(z)"""

    @abstractmethod
    def series(self, order: int) -> TruncatedSeries:
        """z/f 的 Taylor 级数"""

    @abstractmethod
    def tail_bound(self, order: int) -> float:
        """Σ_{n > order} (n − 1)|b_n| 的上界; 无法给出时返回 inf"""

    @abstractmethod
    def to_descriptor(self) -> Dict[str, Any]:
        """JSON 描述"""

    def polynomial_coefficients(self) -> Optional[np.ndarray]:
        """z/f 恰为多项式时返回其全部系数, 否则 None"""
        return None

    def f_and_df(self, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        """f(z) 与 f′(z); 默认由 q 推出"""
        qv = np.asarray(self.q(z), dtype=complex)
        dqv = np.asarray(self.dq(z), dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            f = z / qv
            df = (qv - z * dqv) / qv ** 2
        return f, df


class RationalForm(MapBacking):
    """
    有理函数 f = N/D

    Args:
        num: N 的系数 (低次在前), 必须 num[0] = 0, num[1] = den[0]
        den: D 的系数, den[0] ≠ 0
    """

    kind = "rational"

    def __init__(self, num: Sequence[complex], den: Sequence[complex], tol: float = 1e-12) -> None:
        num_arr = np.trim_zeros(np.asarray(list(num), dtype=complex), "b")
        den_arr = np.trim_zeros(np.asarray(list(den), dtype=complex), "b")
        if den_arr.size == 0 or abs(den_arr[0]) <= tol:
            raise ParameterOutOfRange("denominator constant term must be nonzero")
        if num_arr.size < 2 or abs(num_arr[0]) > tol:
            raise ParameterOutOfRange("numerator must start at z (f(0) = 0)")
        if abs(num_arr[1] - den_arr[0]) > tol * max(1.0, abs(den_arr[0])):
            raise ParameterOutOfRange(
                "numerator z-coefficient must equal the denominator constant term (f'(0) = 1)"
            )
        self.num = num_arr
        self.den = den_arr
        # q = D/Ñ
        self.num_reduced = num_arr[1:]
        self._dden = np.polynomial.polynomial.polyder(den_arr) if den_arr.size > 1 else np.zeros(1)
        self._dnum_reduced = (
            np.polynomial.polynomial.polyder(self.num_reduced)
            if self.num_reduced.size > 1 else np.zeros(1)
        )
        self._dnum = np.polynomial.polynomial.polyder(num_arr)

    @staticmethod
    def _horner(coeffs: np.ndarray, z: np.ndarray) -> np.ndarray:
        return np.polynomial.polynomial.polyval(z, coeffs)

    def q(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = self._horner(self.den, zz) / self._horner(self.num_reduced, zz)
        return _scalar_or_array(z, out)

    def dq(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        d = self._horner(self.den, zz)
        n = self._horner(self.num_reduced, zz)
        with np.errstate(divide="ignore", invalid="ignore"):
            out = (self._horner(self._dden, zz) * n - d * self._horner(self._dnum_reduced, zz)) / n ** 2
        return _scalar_or_array(z, out)

    def f_and_df(self, z: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        n = self._horner(self.num, z)
        d = self._horner(self.den, z)
        with np.errstate(divide="ignore", invalid="ignore"):
            f = n / d
            df = (self._horner(self._dnum, z) * d - n * self._horner(self._dden, z)) / d ** 2
        return f, df

    def polynomial_coefficients(self) -> Optional[np.ndarray]:
        if self.num_reduced.size == 1:
            return self.den / self.num_reduced[0]
        return None

    def series(self, order: int) -> TruncatedSeries:
        d = TruncatedSeries(self.den, order=order)
        n = TruncatedSeries(self.num_reduced, order=order)
        return mul(d, reciprocal(n))

    def tail_bound(self, order: int) -> float:
        start = order + 1
        if self.num_reduced.size == 1:
            # q 是多项式, 尾项可以直接算
            b = self.den / self.num_reduced[0]
            n = np.arange(b.size)
            mask = n >= start
            return float(np.sum((n[mask] - 1) * np.abs(b[mask])))
        roots = np.roots(self.num_reduced[::-1])
        rho = float(np.min(np.abs(roots))) if roots.size else float("inf")
        if rho <= 1.0 + 1e-9:
            return float("inf")
        R = min((1.0 + rho) / 2.0, 2.0)
        circle = R * np.exp(1j * linspace_angles(SCHWARZ_SAMPLE_COUNT))
        # 采样得到的 max|q|, 乘 1.01 作余量
        M = 1.01 * float(np.max(np.abs(self._horner(self.den, circle)))) / float(
            np.min(np.abs(self._horner(self.num_reduced, circle)))
        )
        return weighted_geometric_tail(M, R, start)

    def to_descriptor(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "num": complex_list_to_json(self.num),
            "den": complex_list_to_json(self.den),
        }


class CharacterizationForm(MapBacking):
    """z/f = 1 − a₂z + λ z ∫₀^z ω"""

    kind = "characterization"

    def __init__(self, a2: complex, lam: Union[float, ClassParameter], omega: SchwarzGenerator) -> None:
        self.a2 = complex(a2)
        self.lam = lambda_value(lam)
        self.omega = omega

    def q(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        out = 1.0 - self.a2 * zz + self.lam * zz * self.omega.antiderivative(zz)
        return _scalar_or_array(z, out)

    def dq(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        out = -self.a2 + self.lam * (self.omega.antiderivative(zz) + zz * self.omega.value(zz))
        return _scalar_or_array(z, out)

    def series(self, order: int) -> TruncatedSeries:
        base = np.zeros(order + 1, dtype=complex)
        base[0] = 1.0
        if order >= 1:
            base[1] = -self.a2
        if order < 2:
            return TruncatedSeries(base)
        tail = integrate(self.omega.series(order - 2)).shift_up(1).scale(self.lam)
        return TruncatedSeries(base) + tail

    def polynomial_coefficients(self) -> Optional[np.ndarray]:
        degree = self.omega.polynomial_degree
        if degree is None:
            return None
        return self.series(degree + 2).coeffs

    def tail_bound(self, order: int) -> float:
        # b_n = λ ω_{n−2}/(n−1), n ≥ 2
        return self.lam * self.omega.coefficient_tail_bound(order - 1)

    def to_descriptor(self) -> Dict[str, Any]:
        return {
            "kind": self.kind,
            "a2": complex_to_json(self.a2),
            "lambda": self.lam,
            "omega": self.omega.to_descriptor(),
        }


class PointwiseForm(MapBacking):
    """
    由闭包给出的后端, 变换模块用它表示 "对 q 做逐点运算" 的结果

    Args:
        q_fn / dq_fn: 向量化的 z/f 与其导数
        series_fn: order -> z/f 的 Taylor 级数
        tail_fn: order -> 尾项上界
        descriptor: 变换流水线的 JSON 描述
    """

    kind = "derived"

    def __init__(
        self,
        q_fn: Evaluable,
        dq_fn: Evaluable,
        series_fn: Callable[[int], TruncatedSeries],
        tail_fn: Callable[[int], float],
        descriptor: Dict[str, Any],
    ) -> None:
        self._q = q_fn
        self._dq = dq_fn
        self._series = series_fn
        self._tail = tail_fn
        self._descriptor = descriptor

    def q(self, z: ArrayLike) -> ArrayLike:
        return _scalar_or_array(z, np.asarray(self._q(np.asarray(z, dtype=complex)), dtype=complex))

    def dq(self, z: ArrayLike) -> ArrayLike:
        return _scalar_or_array(z, np.asarray(self._dq(np.asarray(z, dtype=complex)), dtype=complex))

    def series(self, order: int) -> TruncatedSeries:
        return self._series(order)

    def tail_bound(self, order: int) -> float:
        return float(self._tail(order))

    def to_descriptor(self) -> Dict[str, Any]:
        return dict(self._descriptor)


# ============================================================================
# AnalyticMap
# ============================================================================

class AnalyticMap:
    """
    归一化解析映射 f (f(0) = 0, f′(0) = 1)

    构造时立即计算并缓存 z/f 的级数; 对象不可变, 可在线程间共享。
    """

    def __init__(self, backing: MapBacking, order: Optional[int] = None, name: Optional[str] = None,
                 lineage: Optional[Dict[str, Any]] = None) -> None:
        self.backing = backing
        self.order = int(order if order is not None else get_global_settings().order)
        self.name = name
        # 由变换得到的多项式映射记录其来源
        self.lineage = lineage
        self._pre_schwarzian = backing.series(self.order)
        if abs(self._pre_schwarzian[0] - 1.0) > 1e-9:
            raise ParameterOutOfRange(
                f"z/f must equal 1 at the origin, got {self._pre_schwarzian[0]:.6g}"
            )

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def rational(cls, num: Sequence[complex], den: Sequence[complex],
                 order: Optional[int] = None, name: Optional[str] = None) -> "AnalyticMap":
        return cls(RationalForm(num, den), order, name)

    @classmethod
    def from_pre_schwarzian_polynomial(cls, b: Sequence[complex], order: Optional[int] = None,
                                       name: Optional[str] = None,
                                       lineage: Optional[Dict[str, Any]] = None) -> "AnalyticMap":
        """z/f = b₀ + b₁z + … (多项式, b₀ = 1) 即 f = z/(b₀ + b₁z + …)"""
        return cls(RationalForm([0.0, b[0]], list(b)), order, name, lineage)

    # ------------------------------------------------------------------
    # 属性
    # ------------------------------------------------------------------

    @property
    def pre_schwarzian(self) -> TruncatedSeries:
        return self._pre_schwarzian

    @property
    def a2(self) -> complex:
        return -self._pre_schwarzian[1]

    @property
    def tail_bound(self) -> float:
        return self.backing.tail_bound(self.order)

    @property
    def polynomial_coefficients(self) -> Optional[np.ndarray]:
        """z/f 为多项式时的系数 (去掉末尾零), 否则 None"""
        coeffs = self.backing.polynomial_coefficients()
        if coeffs is None:
            return None
        trimmed = np.trim_zeros(np.asarray(coeffs, dtype=complex), "b")
        return trimmed if trimmed.size else np.ones(1, dtype=complex)

    @property
    def characterization(self) -> Optional[CharacterizationForm]:
        return self.backing if isinstance(self.backing, CharacterizationForm) else None

    def series(self, order: int) -> TruncatedSeries:
        """z/f 级数; order 不超过缓存阶数时直接截断缓存"""
        if order <= self.order:
            return self._pre_schwarzian.truncate(order)
        return self.backing.series(order)

    def u_series(self, order: Optional[int] = None) -> TruncatedSeries:
        """U_f = −Σ_{n≥2} (n−1) b_n zⁿ"""
        b = self.series(order if order is not None else self.order)
        n = np.arange(b.order + 1)
        return TruncatedSeries(-(n - 1) * b.coeffs * (n >= 2))

    def describe(self) -> Dict[str, Any]:
        desc = self.backing.to_descriptor()
        if self.lineage:
            desc = {**desc, "lineage": self.lineage}
        if self.name:
            desc = {"name": self.name, **desc}
        return desc

    def __repr__(self) -> str:
        label = self.name or self.backing.kind
        return f"AnalyticMap({label}, order={self.order})"

    # ------------------------------------------------------------------
    # 求值
    # ------------------------------------------------------------------

    def q(self, z: ArrayLike) -> ArrayLike:
        return self.backing.q(z)

    def dq(self, z: ArrayLike) -> ArrayLike:
        return self.backing.dq(z)

    def __call__(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        f, _ = self.backing.f_and_df(zz)
        f = np.where(zz == 0, 0.0, f)
        return _scalar_or_array(z, f)

    def derivative(self, z: ArrayLike) -> ArrayLike:
        zz = np.asarray(z, dtype=complex)
        _, df = self.backing.f_and_df(zz)
        return _scalar_or_array(z, df)


# ============================================================================
# 操作
# ============================================================================

def from_characterization(
    a2: complex,
    lam: Union[float, ClassParameter],
    omega: SchwarzGenerator,
    order: Optional[int] = None,
    name: Optional[str] = None,
) -> AnalyticMap:
    """
    由刻画 z/f = 1 − a₂z + λz∫₀^z ω 构造映射

    不断言 f ∈ U(λ): z/f 在圆盘内可能有零点, 需要另外用
    :func:`zero_count_in_disk` 检查。
    """
    return AnalyticMap(CharacterizationForm(a2, lam, omega), order, name)


def _check_hits(z: np.ndarray, f: np.ndarray, qv: np.ndarray, tol: float) -> None:
    nonzero = z != 0
    bad = nonzero & ((np.abs(f) < tol) | ~np.isfinite(f) | (np.abs(qv) < tol) | ~np.isfinite(qv))
    if np.any(bad):
        where = complex(z[bad].ravel()[0])
        raise PoleOrZeroHit(f"f has a zero or pole at z={where:.12g}", z=where)


def u_eval(f: AnalyticMap, z: ArrayLike, tol: float = POLE_TOL) -> ArrayLike:
    """
    U_f(z) = (z/f(z))² f′(z) − 1

    z = 0 处返回 0 (可去奇点)。|f(z)| < tol (z ≠ 0) 或 f 在 z 处有极点时抛
    :class:`PoleOrZeroHit`。
    """
    zz = np.asarray(z, dtype=complex)
    fv, dfv = f.backing.f_and_df(zz)
    fv = np.asarray(fv, dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        qv = zz / fv
    _check_hits(zz, fv, qv, tol)
    with np.errstate(divide="ignore", invalid="ignore"):
        out = qv ** 2 * dfv - 1.0
    out = np.where(zz == 0, 0.0, out)
    return _scalar_or_array(z, out)


def u_eval_alt(f: AnalyticMap, z: ArrayLike, tol: float = POLE_TOL) -> ArrayLike:
    """U_f(z) = z/f − z(z/f)′ − 1, 与 :func:`u_eval` 交叉验证用"""
    zz = np.asarray(z, dtype=complex)
    qv = np.asarray(f.q(zz), dtype=complex)
    with np.errstate(divide="ignore", invalid="ignore"):
        fv = zz / qv
    _check_hits(zz, fv, qv, tol)
    out = qv - zz * np.asarray(f.dq(zz), dtype=complex) - 1.0
    out = np.where(zz == 0, 0.0, out)
    return _scalar_or_array(z, out)


def _arc_winding(g: Evaluable, r: float, t0: float, t1: float,
                 g0: complex, g1: complex, tol: float, depth: int) -> float:
    """[t0, t1] 弧段上的辐角增量, 步长过大时递归细分"""
    step = float(np.angle(g1 / g0))
    if abs(step) <= _MAX_ARG_STEP or depth >= _MAX_SUBDIVISION_DEPTH:
        return step
    ts = np.linspace(t0, t1, 9)
    vals = np.asarray(g(r * np.exp(1j * ts)), dtype=complex)
    low = float(np.min(np.abs(vals)))
    if low < tol:
        raise BoundaryZero(f"|g| = {low:.3e} on the circle r={r}", radius=r, min_modulus=low)
    vals[0], vals[-1] = g0, g1
    return sum(
        _arc_winding(g, r, ts[k], ts[k + 1], vals[k], vals[k + 1], tol, depth + 1)
        for k in range(8)
    )


def zero_count_in_disk(g: Evaluable, r: float, m: int = 4096, tol: float = BOUNDARY_TOL) -> int:
    """
    辐角原理: g 在 |z| < r 内的零点个数

    Args:
        g: 向量化可求值函数 (在闭圆盘上解析)
        r: 半径, 0 < r < 1
        m: 圆周采样点数, 至少 1024
        tol: 圆周上 |g| 的最小允许值

    Raises:
        BoundaryZero: 圆周上 min|g| < tol, 调用方需要换半径
    """
    if m < 1024:
        raise ParameterOutOfRange(f"zero counting needs m >= 1024 samples, got {m}")
    if not 0.0 < r:
        raise ParameterOutOfRange(f"radius must be positive, got {r}")
    theta = np.linspace(0.0, 2.0 * np.pi, m + 1)
    vals = np.asarray(g(r * np.exp(1j * theta)), dtype=complex)
    vals[-1] = vals[0]
    low = float(np.min(np.abs(vals)))
    if not np.isfinite(low) or low < tol:
        raise BoundaryZero(f"|g| = {low:.3e} on the circle r={r}", radius=r, min_modulus=low)

    steps = np.angle(vals[1:] / vals[:-1])
    total = float(np.sum(steps))
    for k in np.nonzero(np.abs(steps) > _MAX_ARG_STEP)[0]:
        refined = _arc_winding(g, r, theta[k], theta[k + 1], vals[k], vals[k + 1], tol, 0)
        total += refined - float(steps[k])

    winding = total / (2.0 * np.pi)
    count = int(round(winding))
    if abs(winding - count) > 0.25:
        raise BoundaryZero(
            f"winding number {winding:.4f} is not close to an integer at r={r}",
            radius=r, min_modulus=low,
        )
    logger.debug(f"zero_count_in_disk: r={r} m={m} min|g|={low:.3e} -> {count}")
    return count


def max_modulus_on_circle(g: Evaluable, r: float, m: int = 4096, refine: bool = True) -> SampledExtremum:
    """
    max_{|z|=r} |g(z)| 的采样估计

    m 个等距点取最大, 再在最大样本两侧一个步长内用有界黄金分割细化。
    """
    theta = linspace_angles(m)
    values = np.abs(np.asarray(g(r * np.exp(1j * theta)), dtype=complex))
    k = int(np.argmax(values))
    best_theta, best = float(theta[k]), float(values[k])
    if refine:
        h = 2.0 * np.pi / m
        res = optimize.minimize_scalar(
            lambda t: -float(np.abs(np.asarray(g(np.array([r * np.exp(1j * t)])), dtype=complex)[0])),
            bounds=(best_theta - h, best_theta + h),
            method="bounded",
            options={"xatol": 1e-10},
        )
        if res.success and -res.fun > best:
            best_theta, best = float(res.x), float(-res.fun)
    return SampledExtremum(value=best, where=complex(r * np.exp(1j * best_theta)), radius=r)


def taylor_coefficients(f: AnalyticMap, n_max: int) -> List[complex]:
    """
    a₁ = 1, a₂, …, a_{n_max}

    f/z = 1/(z/f), 所以 a_{k+1} 是 z/f 级数倒数的第 k 项。
    """
    if n_max < 1:
        raise ParameterOutOfRange(f"n_max must be >= 1, got {n_max}")
    inv = reciprocal(f.series(max(n_max - 1, 0)))
    return [complex(c) for c in inv.coeffs[:n_max]]


def map_from_descriptor(desc: Dict[str, Any], order: Optional[int] = None) -> AnalyticMap:
    """
    由 :meth:`AnalyticMap.describe` 的输出重建映射 (rational / characterization)

    变换得到的逐点映射没有封闭描述, 不能重建。
    """
    kind = desc.get("kind")
    name = desc.get("name")
    if kind == "rational":
        num = [complex_from_json(c) for c in desc["num"]]
        den = [complex_from_json(c) for c in desc["den"]]
        return AnalyticMap(RationalForm(num, den), order, name, desc.get("lineage"))
    if kind == "characterization":
        omega = generator_from_descriptor(desc["omega"])
        return AnalyticMap(
            CharacterizationForm(complex_from_json(desc["a2"]), float(desc["lambda"]), omega), order, name
        )
    raise ParameterOutOfRange(f"cannot rebuild a map from descriptor kind {kind!r}")


__all__ = [
    "MapBacking",
    "RationalForm",
    "CharacterizationForm",
    "PointwiseForm",
    "AnalyticMap",
    "from_characterization",
    "u_eval",
    "u_eval_alt",
    "zero_count_in_disk",
    "max_modulus_on_circle",
    "taylor_coefficients",
    "map_from_descriptor",
    "weighted_geometric_tail",
]
