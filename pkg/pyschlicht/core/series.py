"""
截断复幂级数

``TruncatedSeries`` 表示 c₀ + c₁z + … + c_N z^N + O(z^{N+1})。所有 z/f 的
计算 (倒数、开方、积分、按 zⁿ 抽取) 都在这一层完成。

约定:
- 对象构造后不可变 (系数数组只读), 可以在线程间共享;
- 二元运算的结果阶数取两个操作数阶数的较小值, 截断总是显式的;
- 系数必须全部有限。
"""

from __future__ import annotations

from typing import Iterable, Sequence, Union

import numpy as np

from ..shared.env.constants import DEFAULT_ORDER, ZERO_CONSTANT_TOL
from ..shared.errors import BranchBase, NearZeroConstantTerm, ParameterOutOfRange
from ..shared.types import SeriesMode

ArrayLike = Union[complex, float, np.ndarray]


class TruncatedSeries:
    """截断到 N 阶的复系数幂级数"""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[complex], order: int | None = None) -> None:
        arr = np.array(list(coeffs) if not isinstance(coeffs, np.ndarray) else coeffs,
                       dtype=complex).ravel()
        if order is not None:
            if order < 0:
                raise ParameterOutOfRange(f"order must be >= 0, got {order}")
            if arr.size < order + 1:
                arr = np.concatenate([arr, np.zeros(order + 1 - arr.size, dtype=complex)])
            else:
                arr = arr[: order + 1]
        if arr.size == 0:
            arr = np.zeros(1, dtype=complex)
        if not np.all(np.isfinite(arr)):
            raise ParameterOutOfRange("series coefficients must be finite")
        arr = arr.copy()
        arr.setflags(write=False)
        self._coeffs = arr

    # ------------------------------------------------------------------
    # 构造
    # ------------------------------------------------------------------

    @classmethod
    def constant(cls, c: complex, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        return cls([c], order=order)

    @classmethod
    def monomial(cls, k: int, c: complex = 1.0, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        coeffs = np.zeros(order + 1, dtype=complex)
        if k <= order:
            coeffs[k] = c
        return cls(coeffs)

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> "TruncatedSeries":
        """级数 z"""
        return cls.monomial(1, 1.0, order)

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------

    @property
    def coeffs(self) -> np.ndarray:
        return self._coeffs

    @property
    def order(self) -> int:
        return self._coeffs.size - 1

    def __getitem__(self, k: int) -> complex:
        if k < 0:
            raise IndexError(k)
        return complex(self._coeffs[k]) if k <= self.order else 0j

    def __len__(self) -> int:
        return self._coeffs.size

    def __repr__(self) -> str:
        nz = [(k, c) for k, c in enumerate(self._coeffs) if c != 0]
        head = ", ".join(f"{k}:{c:.6g}" for k, c in nz[:6])
        more = "…" if len(nz) > 6 else ""
        return f"TruncatedSeries(order={self.order}, {{{head}{more}}})"

    def degree(self, tol: float = 0.0) -> int:
        """最高非零系数的下标 (全零返回 0)"""
        nz = np.nonzero(np.abs(self._coeffs) > tol)[0]
        return int(nz[-1]) if nz.size else 0

    def allclose(self, other: "TruncatedSeries", atol: float = 1e-12) -> bool:
        n = min(self.order, other.order) + 1
        return bool(np.allclose(self._coeffs[:n], other.coeffs[:n], rtol=0.0, atol=atol))

    # ------------------------------------------------------------------
    # 线性运算
    # ------------------------------------------------------------------

    def truncate(self, order: int) -> "TruncatedSeries":
        return TruncatedSeries(self._coeffs, order=min(order, self.order))

    def __add__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            out = self._coeffs.copy()
            out[0] += complex(other)
            return TruncatedSeries(out)
        n = min(self.order, other.order) + 1
        return TruncatedSeries(self._coeffs[:n] + other.coeffs[:n])

    __radd__ = __add__

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(-self._coeffs)

    def __sub__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        return self + (-other)

    def scale(self, c: complex) -> "TruncatedSeries":
        return TruncatedSeries(self._coeffs * complex(c))

    def __mul__(self, other: "TruncatedSeries | complex") -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def map_coefficients(self, weights: np.ndarray) -> "TruncatedSeries":
        """逐项乘权: c_k -> w_k c_k"""
        w = np.asarray(weights, dtype=complex)[: self.order + 1]
        return TruncatedSeries(self._coeffs * w)

    def conjugate(self) -> "TruncatedSeries":
        return TruncatedSeries(np.conj(self._coeffs))

    def mask_multiples(self, n: int) -> "TruncatedSeries":
        """只保留下标为 n 的倍数的系数"""
        out = np.zeros_like(self._coeffs)
        out[::n] = self._coeffs[::n]
        return TruncatedSeries(out)

    def shift_up(self, k: int = 1) -> "TruncatedSeries":
        """乘以 z^k; 阶数相应增加 (信息没有丢失也没有虚增)"""
        return TruncatedSeries(np.concatenate([np.zeros(k, dtype=complex), self._coeffs]))

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            return TruncatedSeries([0.0])
        k = np.arange(1, self.order + 1)
        return TruncatedSeries(self._coeffs[1:] * k)

    # ------------------------------------------------------------------
    # 求值
    # ------------------------------------------------------------------

    def __call__(self, z: ArrayLike) -> ArrayLike:
        return evaluate(self, z)


# ============================================================================
# 运算
# ============================================================================

def mul(a: TruncatedSeries, b: TruncatedSeries) -> TruncatedSeries:
    """Cauchy 乘积, 截断到 min(order_a, order_b)"""
    n = min(a.order, b.order)
    prod = np.convolve(a.coeffs[: n + 1], b.coeffs[: n + 1])[: n + 1]
    return TruncatedSeries(prod)


def reciprocal(a: TruncatedSeries, tol: float = ZERO_CONSTANT_TOL) -> TruncatedSeries:
    """
    1/a 的前 N+1 项

    递推 d₀ = 1/c₀, d_k = −(1/c₀) Σ_{j=1..k} c_j d_{k−j}。
    |c₀| ≤ tol 时抛 :class:`NearZeroConstantTerm`。
    """
    c = a.coeffs
    if abs(c[0]) <= tol:
        raise NearZeroConstantTerm(
            f"cannot invert a series with |c0|={abs(c[0]):.3e} <= {tol:.1e}", c0=complex(c[0])
        )
    n = a.order
    d = np.zeros(n + 1, dtype=complex)
    inv0 = 1.0 / c[0]
    d[0] = inv0
    for k in range(1, n + 1):
        # c_1..c_k 与 d_{k-1}..d_0 的点积
        d[k] = -inv0 * np.dot(c[1: k + 1], d[k - 1:: -1][:k])
    return TruncatedSeries(d)


def integrate(a: TruncatedSeries) -> TruncatedSeries:
    """逐项积分, 常数项为 0, 阶数 N+1"""
    k = np.arange(1, a.order + 2, dtype=float)
    return TruncatedSeries(np.concatenate([[0.0], a.coeffs / k]))


def log_series(a: TruncatedSeries, tol: float = ZERO_CONSTANT_TOL) -> TruncatedSeries:
    """
    log a (主值分支, 要求 c₀ = 1)

    用 log a = ∫ a'/a 计算, 结果常数项为 0, 阶数 N。
    """
    _require_unit_constant(a, tol)
    if a.order == 0:
        return TruncatedSeries([0.0])
    quotient = mul(a.derivative(), reciprocal(a, tol))
    return integrate(quotient).truncate(a.order)


def exp_series(s: TruncatedSeries) -> TruncatedSeries:
    """
    exp s

    递推 k e_k = Σ_{j=1..k} j s_j e_{k−j}, e₀ = exp(s₀)。
    """
    sc = s.coeffs
    n = s.order
    e = np.zeros(n + 1, dtype=complex)
    e[0] = np.exp(sc[0])
    js = np.arange(n + 1) * sc
    for k in range(1, n + 1):
        e[k] = np.dot(js[1: k + 1], e[k - 1:: -1][:k]) / k
    return TruncatedSeries(e)


def nth_root(a: TruncatedSeries, n: int, tol: float = ZERO_CONSTANT_TOL) -> TruncatedSeries:
    """
    aⁿ 的主值 n 次方根, 常数项锚定为 1

    经由 exp(log(a)/n) 计算; c₀ ≠ 1 时抛 :class:`BranchBase`。
    """
    if n < 2:
        raise ParameterOutOfRange(f"root degree must be >= 2, got {n}")
    return exp_series(log_series(a, tol).scale(1.0 / n))


def power(a: TruncatedSeries, p: float, tol: float = ZERO_CONSTANT_TOL) -> TruncatedSeries:
    """a^p (c₀ = 1, 主值分支)"""
    return exp_series(log_series(a, tol).scale(p))


def evaluate(a: TruncatedSeries, z: ArrayLike) -> ArrayLike:
    """
    Horner 求值 c₀ + … + c_N z^N

    z 可以是标量或 numpy 数组。截断误差由调用方负责 (|z| < 1 时尾项按
    |z|^{N+1} 量级衰减, 这里不做检查)。
    """
    c = a.coeffs
    zz = np.asarray(z, dtype=complex)
    acc = np.full(zz.shape, c[-1], dtype=complex)
    for coef in c[-2::-1]:
        acc = acc * zz + coef
    if np.ndim(z) == 0:
        return complex(acc)
    return acc


def compose_zpow(a: TruncatedSeries, n: int, mode: SeriesMode = "substitute") -> TruncatedSeries:
    """
    z -> zⁿ 的两种抽取

    - ``substitute``: a(zⁿ), 系数落在 n 的倍数上; a 精确到 O(z^{N+1}),
      所以 a(zⁿ) 精确到 O(z^{n(N+1)}), 结果阶数取 n(N+1)−1;
    - ``decimate``: 保留 b_{nk} 放到第 k 位, 阶数 ⌊N/n⌋。
    """
    if n < 1:
        raise ParameterOutOfRange(f"stride must be >= 1, got {n}")
    if mode == "substitute":
        out = np.zeros(n * (a.order + 1), dtype=complex)
        out[::n] = a.coeffs
        return TruncatedSeries(out)
    if mode == "decimate":
        return TruncatedSeries(a.coeffs[::n])
    raise ParameterOutOfRange(f"unknown compose mode: {mode!r}")


def polynomial(coeffs: Sequence[complex], order: int = DEFAULT_ORDER) -> TruncatedSeries:
    """多项式系数 (低次在前) -> 截断级数, 阶数至少为多项式次数"""
    return TruncatedSeries(coeffs, order=max(order, len(coeffs) - 1))


def _require_unit_constant(a: TruncatedSeries, tol: float) -> None:
    if abs(a.coeffs[0] - 1.0) > max(tol, 1e-12):
        raise BranchBase(
            f"principal branch needs constant term 1, got {complex(a.coeffs[0]):.6g}",
            c0=complex(a.coeffs[0]),
        )


__all__ = [
    "TruncatedSeries",
    "mul",
    "reciprocal",
    "integrate",
    "log_series",
    "exp_series",
    "nth_root",
    "power",
    "evaluate",
    "compose_zpow",
    "polynomial",
]
