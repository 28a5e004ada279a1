"""
标量公式与求根

- Marx 型下界 α(x) 及其反函数
- Φ(t) 与 A/B/C 非负性账本
- 半径方程 r₀ 与尾和恒等式
- Fekete 极值参数条件、猜想上界
- Schwarz-Pick 积分估计与等号情形的压缩半径
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any, Dict, Optional, Sequence, Tuple, Union

import numpy as np
from scipy import optimize

from ..shared.errors import BracketFailure, DomainError, ParameterOutOfRange
from ..shared.logger import logger
from ..shared.types import TailMode
from .series import TruncatedSeries

ALPHA_MIN = 0.5
ALPHA_MAX = 2.0 / 3.0

# 1/√2: 每个 S 中函数都在 |z| < 1/√2 内属于 U 的最大半径
UNIVERSAL_U_RADIUS = 1.0 / math.sqrt(2.0)

RADIUS_BRACKET: Tuple[float, float] = (0.5, 0.9)
_BISECTION_WIDTH = 1e-3


# ============================================================================
# Marx 型下界
# ============================================================================

def marx_alpha(x: float) -> float:
    """α(x) = (20 + x − √(x² + 40x + 16)) / 24, x ∈ [0, 2]"""
    if not 0.0 <= x <= 2.0:
        raise DomainError(f"marx_alpha is defined on [0, 2], got {x}")
    return (20.0 + x - math.sqrt(x * x + 40.0 * x + 16.0)) / 24.0


def alpha_to_a2(alpha: float) -> float:
    """12α² − α(20 + a₂) + 8 = 0 解出 a₂ = 12α + 8/α − 20"""
    if alpha <= 0.0:
        raise DomainError(f"alpha must be positive, got {alpha}")
    return 12.0 * alpha + 8.0 / alpha - 20.0


def m_lower_bound(alpha: float, a2: float) -> float:
    """m ≥ 8(1−α)/(4(1−α) + a₂)"""
    return 8.0 * (1.0 - alpha) / (4.0 * (1.0 - alpha) + a2)


@dataclass(frozen=True)
class PhiParameters:
    """
    Φ(t) = ((a+bt)² + ct(d+t)²) / ((1−α)²(α²+t)³)

    Φ(t) − 1 = (At² + Bt + C) / ((1−α)²(α²+t)³), 所以 A, B, C ≥ 0 即 Φ ≥ 1。
    """
    alpha: float
    m: float
    a: float
    b: float
    c: float
    d: float
    A: float
    B: float
    C: float

    @classmethod
    def build(cls, alpha: float, m: Optional[float] = None, a2: Optional[float] = None) -> "PhiParameters":
        """
        Args:
            alpha: α ∈ [1/2, 2/3]
            m: 缺省取下界 m_lower_bound(α, a₂)
            a2: 缺省取 alpha_to_a2(α)
        """
        if not ALPHA_MIN - 1e-12 <= alpha <= ALPHA_MAX + 1e-12:
            raise DomainError(f"alpha must lie in [1/2, 2/3], got {alpha}")
        if m is None:
            m = m_lower_bound(alpha, alpha_to_a2(alpha) if a2 is None else a2)
        c = (1.0 - alpha) ** 2
        a = c * (m - alpha * (1.0 + alpha))
        b = m - 3.0 * alpha * (1.0 - alpha)
        d = 1.0 - 3.0 * alpha ** 2
        return cls(
            alpha=alpha,
            m=m,
            a=a,
            b=b,
            c=c,
            d=d,
            A=b * b + 2.0 * c * d - 3.0 * alpha ** 2 * c,
            B=2.0 * a * b + c * d * d - 3.0 * alpha ** 4 * c,
            C=a * a - alpha ** 6 * c,
        )

    def to_dict(self) -> Dict[str, float]:
        return asdict(self)


def phi_value(params: PhiParameters, t: Union[float, np.ndarray]) -> Any:
    """Φ(t), t ≥ 0; 可向量化"""
    tt = np.asarray(t, dtype=float)
    if np.any(tt < 0):
        raise ParameterOutOfRange("phi_value needs t >= 0")
    p = params
    num = (p.a + p.b * tt) ** 2 + p.c * tt * (p.d + tt) ** 2
    den = (1.0 - p.alpha) ** 2 * (p.alpha ** 2 + tt) ** 3
    out = num / den
    return float(out) if out.ndim == 0 else out


@dataclass
class AbcReport:
    """α 网格上 A, B, C 的最小值"""
    step: float
    points: int
    min_A: float
    min_B: float
    min_C: float
    argmin_A: float
    argmin_B: float
    argmin_C: float
    tol: float = 1e-12

    @property
    def ok(self) -> bool:
        return min(self.min_A, self.min_B, self.min_C) >= -self.tol

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["ok"] = self.ok
        return out


def alpha_grid(step: float) -> np.ndarray:
    """[1/2, 2/3] 上步长不超过 step 的等距网格, 含两个端点"""
    if step <= 0:
        raise ParameterOutOfRange(f"grid step must be positive, got {step}")
    n = max(1, int(math.ceil((ALPHA_MAX - ALPHA_MIN) / step)))
    return np.linspace(ALPHA_MIN, ALPHA_MAX, n + 1)


def abc_check(alpha_grid_step: float = 1e-4) -> AbcReport:
    """a₂ = alpha_to_a2(α), m 取下界时 A, B, C 在网格上的最小值"""
    grid = alpha_grid(alpha_grid_step)
    table = np.array([[p.A, p.B, p.C] for p in (PhiParameters.build(float(al)) for al in grid)])
    idx = np.argmin(table, axis=0)
    report = AbcReport(
        step=alpha_grid_step,
        points=int(grid.size),
        min_A=float(table[idx[0], 0]),
        min_B=float(table[idx[1], 1]),
        min_C=float(table[idx[2], 2]),
        argmin_A=float(grid[idx[0]]),
        argmin_B=float(grid[idx[1]]),
        argmin_C=float(grid[idx[2]]),
    )
    logger.debug(f"abc_check: {report.to_dict()}")
    return report


def phi_grid_minimum(alpha_grid_step: float = 1e-2, t_max: float = 1e3, t_points: int = 2001) -> Tuple[float, float, float]:
    """
    min Φ(t) over α 网格 × t ∈ [0, t_max]

    Returns:
        (最小值, 取到的 α, 取到的 t)
    """
    ts = np.concatenate([[0.0], np.geomspace(1e-6, t_max, t_points - 1)])
    best = (math.inf, math.nan, math.nan)
    for al in alpha_grid(alpha_grid_step):
        values = phi_value(PhiParameters.build(float(al)), ts)
        k = int(np.argmin(values))
        if values[k] < best[0]:
            best = (float(values[k]), float(al), float(ts[k]))
    return best


# ============================================================================
# 半径问题
# ============================================================================

def _log_ratio(r: float) -> float:
    # log((1+r)/(1−r))
    return 2.0 * math.atanh(r)


def radius_lhs(r: float) -> float:
    """r(1−r²)²/2 · log((1+r)/(1−r)) − (4 + r⁴ − 7r²)"""
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius must lie in (0, 1), got {r}")
    r2 = r * r
    return r * (1.0 - r2) ** 2 / 2.0 * _log_ratio(r) - (4.0 + r2 * r2 - 7.0 * r2)


def solve_radius(tol: float = 1e-12, bracket: Tuple[float, float] = RADIUS_BRACKET, shift: float = 0.0) -> float:
    """
    radius_lhs(r) + shift = 0 在 bracket 内的根

    先二分到宽度 1e-3, 再用割线法加细; 割线跑出区间时退回 brentq。

    Raises:
        BracketFailure: 区间端点同号
    """
    if tol <= 0:
        raise ParameterOutOfRange(f"tolerance must be positive, got {tol}")
    lo, hi = float(bracket[0]), float(bracket[1])
    if not 0.0 < lo < hi < 1.0:
        raise ParameterOutOfRange(f"bracket must satisfy 0 < lo < hi < 1, got {bracket}")

    def g(r: float) -> float:
        return radius_lhs(r) + shift

    g_lo, g_hi = g(lo), g(hi)
    if g_lo == 0.0:
        return lo
    if g_hi == 0.0:
        return hi
    if (g_lo > 0) == (g_hi > 0):
        raise BracketFailure(
            f"radius equation has equal signs at the bracket ends ({g_lo:.6g}, {g_hi:.6g})",
            bracket=(lo, hi), values=(g_lo, g_hi),
        )

    while hi - lo > _BISECTION_WIDTH:
        mid = 0.5 * (lo + hi)
        g_mid = g(mid)
        if g_mid == 0.0:
            return mid
        if (g_mid > 0) == (g_lo > 0):
            lo, g_lo = mid, g_mid
        else:
            hi = mid
    logger.debug(f"solve_radius: bisection bracket [{lo!r}, {hi!r}]")

    root, info = optimize.newton(g, x0=lo, x1=hi, tol=tol, maxiter=100, full_output=True, disp=False)
    root = float(root)
    if not (info.converged and lo <= root <= hi):
        logger.debug("solve_radius: secant left the bracket, falling back to brentq")
        root = float(optimize.brentq(g, lo, hi, xtol=max(tol, 1e-300), rtol=4 * np.finfo(float).eps))
    return root


def tail_sum(r: float, mode: TailMode = "closed_form", n_terms: Optional[int] = None) -> float:
    """
    Σ_{n≥2} (n−1)²/(2n−1) · r^{2n}

    mode="closed_form": r²(3r²−1)/(4(1−r²)²) + (r/8)·log((1+r)/(1−r))
    mode="partial": 从 n=2 加到 n=n_terms
    """
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius must lie in (0, 1), got {r}")
    if mode == "closed_form":
        r2 = r * r
        return r2 * (3.0 * r2 - 1.0) / (4.0 * (1.0 - r2) ** 2) + r / 8.0 * _log_ratio(r)
    if mode == "partial":
        if n_terms is None or n_terms < 2:
            raise ParameterOutOfRange(f"partial tail sum needs N >= 2, got {n_terms}")
        n = np.arange(2, n_terms + 1, dtype=float)
        terms = (n - 1.0) ** 2 / (2.0 * n - 1.0) * np.power(r * r, n)
        # 从小项加起
        return float(math.fsum(terms[::-1]))
    raise ParameterOutOfRange(f"unknown tail-sum mode: {mode!r}")


def area_inequality_sum(b: Union[TruncatedSeries, Sequence[complex]]) -> float:
    """Σ_{n≥2} (n−1)|b_n|², b 为 z/f 的系数 (b₀ = 1)"""
    coeffs = b.coeffs if isinstance(b, TruncatedSeries) else np.asarray(b, dtype=complex)
    n = np.arange(coeffs.size, dtype=float)
    return float(np.sum(np.clip(n - 1.0, 0.0, None) * np.abs(coeffs) ** 2))


@dataclass
class GrunskyReport:
    """S(r) = Σ_{n≥2}(n−1)|b_{2n}|rⁿ 与 Cauchy-Schwarz 包络"""
    r: float
    s_value: float
    envelope: float
    area_sum: float
    area_ok: bool

    @property
    def holds(self) -> bool:
        return self.s_value <= self.envelope + 1e-12

    def to_dict(self) -> Dict[str, Any]:
        out = asdict(self)
        out["holds"] = self.holds
        return out


def grunsky_radius_check(b: Union[TruncatedSeries, Sequence[complex]], r: float) -> GrunskyReport:
    """
    对 z/f 的系数计算 S(r) 与 √(Σ(2n−1)|b_{2n}|²) · √tail_sum(r)

    面积不等式 Σ(n−1)|b_n|² ≤ 1 成立时, 包络不超过 √tail_sum(r);
    tail_sum(r) ≤ 1 即 r ≤ r₀ 时 S ≤ 1, 偶系数构造出的函数在 |z| < r 内属于 U。
    """
    coeffs = b.coeffs if isinstance(b, TruncatedSeries) else np.asarray(b, dtype=complex)
    area = area_inequality_sum(coeffs)
    even = coeffs[::2]
    n = np.arange(even.size, dtype=float)
    s_value = float(np.sum(np.clip(n - 1.0, 0.0, None) * np.abs(even) * np.power(r, n)))
    weighted = float(np.sum(np.where(n >= 2, 2.0 * n - 1.0, 0.0) * np.abs(even) ** 2))
    envelope = math.sqrt(weighted) * math.sqrt(tail_sum(r))
    return GrunskyReport(r=r, s_value=s_value, envelope=envelope, area_sum=area, area_ok=area <= 1.0 + 1e-12)


# ============================================================================
# 极值参数与猜想
# ============================================================================

@dataclass(frozen=True)
class ThetaBound:
    value: float
    clamped: bool
    constrained: bool


def extremal_theta_details(a2: float, lam: float) -> ThetaBound:
    """cos θ ≤ ((1−λ²)² − a₂²(1+λ²)) / (2λa₂²); a₂ ≤ 1−λ 时无约束"""
    if not 0.0 < lam <= 1.0:
        raise ParameterOutOfRange(f"lambda must lie in (0, 1], got {lam}")
    a2 = abs(a2)
    if a2 > 1.0 + lam + 1e-12:
        raise DomainError(f"|a2|={a2} exceeds 1+lambda={1.0 + lam}")
    if a2 <= 1.0 - lam:
        return ThetaBound(value=1.0, clamped=False, constrained=False)
    value = ((1.0 - lam ** 2) ** 2 - a2 ** 2 * (1.0 + lam ** 2)) / (2.0 * lam * a2 ** 2)
    if abs(value + 1.0) <= 1e-12:
        value = -1.0
    clamped = not -1.0 <= value <= 1.0
    if clamped:
        value = min(1.0, max(-1.0, value))
    return ThetaBound(value=value, clamped=clamped, constrained=True)


def extremal_theta_bound(a2: float, lam: float) -> float:
    return extremal_theta_details(a2, lam).value


def conjecture_bound(n: int, lam: float) -> float:
    """Σ_{k=0}^{n−1} λᵏ"""
    if n < 1:
        raise ParameterOutOfRange(f"coefficient index must be >= 1, got {n}")
    if not 0.0 <= lam <= 1.0:
        raise ParameterOutOfRange(f"lambda must lie in [0, 1], got {lam}")
    if lam == 1.0:
        return float(n)
    return (1.0 - lam ** n) / (1.0 - lam)


# ============================================================================
# 等号情形
# ============================================================================

def schwarz_pick_integral_bound(a: complex) -> float:
    """
    v(a) = 1/a − (1−a²)/a² · log(1+a), a = |ω(0)| ∈ [0, 1)

    |∫₀^z ω| ≤ v(|ω(0)|)|z| 在单位圆盘内成立; v(0) = 1/2, v < 1。
    """
    x = abs(a)
    if x >= 1.0:
        raise DomainError(f"|omega(0)| must be < 1, got {x}")
    if x < 1e-5:
        return 0.5 + 2.0 * x / 3.0 - x * x / 4.0
    return 1.0 / x - (1.0 - x * x) / (x * x) * math.log1p(x)


def equality_case_contraction_radius(lam: float, a: complex) -> float:
    """
    (1 + λv(|a|)) / (1 + λ)

    |a₂| = 1+λ 且 |ω(0)| < 1 时, 不动点映射在闭圆盘 |z| ≤ ρ 上压缩,
    ρ 取这个值, 于是 z/f 在 𝔻 内有零点。
    """
    if not 0.0 < lam <= 1.0:
        raise ParameterOutOfRange(f"lambda must lie in (0, 1], got {lam}")
    return (1.0 + lam * schwarz_pick_integral_bound(a)) / (1.0 + lam)


__all__ = [
    "ALPHA_MIN",
    "ALPHA_MAX",
    "UNIVERSAL_U_RADIUS",
    "RADIUS_BRACKET",
    "marx_alpha",
    "alpha_to_a2",
    "m_lower_bound",
    "PhiParameters",
    "phi_value",
    "AbcReport",
    "alpha_grid",
    "abc_check",
    "phi_grid_minimum",
    "radius_lhs",
    "solve_radius",
    "tail_sum",
    "area_inequality_sum",
    "GrunskyReport",
    "grunsky_radius_check",
    "ThetaBound",
    "extremal_theta_details",
    "extremal_theta_bound",
    "conjecture_bound",
    "schwarz_pick_integral_bound",
    "equality_case_contraction_radius",
]
