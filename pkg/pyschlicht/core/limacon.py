"""
蜗线几何与从属关系检验

蜗线是单位圆在 u ↦ l·u + λu² 下的像, 可再绕原点转 β 角。
区域包含用精确的二次方程求根判定: w 属于区域当且仅当
λu² + lu − e^{−iβ}w = 0 有一个根落在开单位圆盘内。
l < 2λ 时蜗线有内环, 按曲线做点在多边形内的判断是有歧义的,
这里判定的是 "w 是否被 |u| < 1 取到"。
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

import numpy as np
from scipy import optimize

from ..shared.env.constants import NONVANISHING_RADIUS
from ..shared.errors import (
    BoundaryZero,
    DegenerateQuadratic,
    DomainError,
    HypothesisUnchecked,
    NoIntersection,
    ParameterOutOfRange,
)
from ..shared.logger import logger
from ..shared.types import SampledExtremum, SubordinationVariant
from ..shared.utils import complex_to_json, linspace_angles
from .analytic_map import AnalyticMap, max_modulus_on_circle, zero_count_in_disk
from .bounds import extremal_theta_bound
from .schwarz import ClassParameter, lambda_value

# 严格包含 |u| < 1 的数值余量
CONTAINMENT_TOL = 1e-12
_DEGENERATE_LAMBDA = 1e-14

# 图 1 的 (λ, l) 与图 2 的 λ
FIGURE_LIMACON_PAIRS: Tuple[Tuple[float, float], ...] = (
    (0.25, 0.75), (0.25, 1.25), (0.5, 0.5), (0.5, 1.0), (0.75, 0.25), (0.75, 1.75),
)
FIGURE_TARGET_LAMBDAS: Tuple[float, ...] = (0.25, 0.5, 0.75, 1.0)


@dataclass(frozen=True)
class Limacon:
    """{l·u + λu² : u ∈ 𝔻} 绕原点旋转 β"""
    lam: float
    l: float
    beta: float = 0.0

    def __post_init__(self):
        lam = lambda_value(self.lam)
        object.__setattr__(self, "lam", lam)
        if not (1.0 - lam - 1e-12 <= self.l <= 1.0 + lam + 1e-12):
            raise ParameterOutOfRange(
                f"l={self.l} outside [1-lambda, 1+lambda] = [{1.0 - lam}, {1.0 + lam}]"
            )


# ============================================================================
# 曲线
# ============================================================================

def parametric_point(c: Limacon, alpha: Union[float, np.ndarray]) -> Tuple[Any, Any]:
    """
    x + λ = cos α (l + 2λ cos α),  y = sin α (l + 2λ cos α), 再旋转 β

    alpha 可以是数组, 此时返回两个数组。
    """
    a = np.asarray(alpha, dtype=float)
    radial = c.l + 2.0 * c.lam * np.cos(a)
    x = np.cos(a) * radial - c.lam
    y = np.sin(a) * radial
    if c.beta:
        cb, sb = math.cos(c.beta), math.sin(c.beta)
        x, y = cb * x - sb * y, sb * x + cb * y
    if np.ndim(alpha) == 0:
        return float(x), float(y)
    return x, y


def implicit_residual(c: Limacon, x: Union[float, np.ndarray], y: Union[float, np.ndarray]) -> Any:
    """
    (x² + y² − λ²)² − l²(x² + y² + λ² + 2λx)

    在曲线自身坐标系中计算; β ≠ 0 时先把点转回 −β。
    """
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if c.beta:
        cb, sb = math.cos(c.beta), math.sin(c.beta)
        x, y = cb * x + sb * y, -sb * x + cb * y
    rho2 = x * x + y * y
    lam = c.lam
    out = (rho2 - lam ** 2) ** 2 - c.l ** 2 * (rho2 + lam ** 2 + 2.0 * lam * x)
    return float(out) if out.ndim == 0 else out


def target_curve_point(lam: float, alpha: Union[float, np.ndarray]) -> Tuple[Any, Any]:
    """1 + (1+λ)e^{iα} + λe^{2iα}, 从属目标函数的边界曲线"""
    lam = lambda_value(lam)
    a = np.asarray(alpha, dtype=float)
    w = 1.0 + (1.0 + lam) * np.exp(1j * a) + lam * np.exp(2j * a)
    if np.ndim(alpha) == 0:
        return float(w.real), float(w.imag)
    return w.real, w.imag


# ============================================================================
# 区域包含
# ============================================================================

def quadratic_roots(c1: complex, c2: complex, w: Union[complex, np.ndarray]) -> Tuple[Any, Any]:
    """
    c₂u² + c₁u − w = 0 的两个根 (数值稳定的求根公式)

    Raises:
        DegenerateQuadratic: |c₂| < 1e-14
    """
    if abs(c2) < _DEGENERATE_LAMBDA:
        raise DegenerateQuadratic(f"quadratic coefficient {abs(c2):.3e} is degenerate")
    ww = np.asarray(w, dtype=complex)
    sq = np.sqrt(c1 * c1 + 4.0 * c2 * ww)
    plus, minus = c1 + sq, c1 - sq
    big = np.where(np.abs(plus) >= np.abs(minus), plus, minus)
    qq = -0.5 * big
    with np.errstate(divide="ignore", invalid="ignore"):
        u1 = qq / c2
        u2 = np.where(qq != 0, -ww / qq, 0.0)
    if np.ndim(w) == 0:
        return complex(u1), complex(u2)
    return u1, u2


def preimage_modulus(c1: complex, c2: complex, w: Union[complex, np.ndarray]) -> Any:
    """w = c₁u + c₂u² 的所有解中 |u| 的最小值; c₂ 退化时按一次方程求解"""
    try:
        u1, u2 = quadratic_roots(c1, c2, w)
        out = np.minimum(np.abs(u1), np.abs(u2))
    except DegenerateQuadratic:
        if abs(c1) < _DEGENERATE_LAMBDA:
            raise
        out = np.abs(np.asarray(w, dtype=complex) / c1)
    return float(out) if np.ndim(out) == 0 else out


def quadratic_image_contains(c1: complex, c2: complex, w: Union[complex, np.ndarray],
                             tol: float = CONTAINMENT_TOL) -> Any:
    """w 是否被某个 |u| < 1 取到 (w = c₁u + c₂u²)"""
    out = np.asarray(preimage_modulus(c1, c2, w)) < 1.0 - tol
    return bool(out) if out.ndim == 0 else out


def region_contains(c: Limacon, w: complex, tol: float = CONTAINMENT_TOL) -> bool:
    """e^{−iβ}w = l·u + λu² 是否有 |u| < 1 的解"""
    rotated = complex(w) * complex(np.exp(-1j * c.beta))
    if c.lam < _DEGENERATE_LAMBDA:
        logger.debug("region_contains: degenerate lambda, solving the linear equation")
    return bool(quadratic_image_contains(c.l, c.lam, rotated, tol))


# ============================================================================
# β₁
# ============================================================================

@dataclass(frozen=True)
class Beta1:
    """β₁ 及其计算细节"""
    beta1: float
    cos_argument: float
    clamped: bool


def beta1_details(lam: float, l: float) -> Beta1:
    """
    x = ((1−λ²)² − l²(1+λ²)) / (2λl²) =: −cos β₁

    −x 超出 [−1, 1] 时截断并记录 clamped。
    """
    lam = lambda_value(lam)
    if l <= 0.0:
        raise DomainError(f"beta1 needs l > 0, got {l}")
    if not (1.0 - lam - 1e-12 <= l <= 1.0 + lam + 1e-12):
        raise DomainError(f"l={l} outside [1-lambda, 1+lambda]")
    x = ((1.0 - lam ** 2) ** 2 - l ** 2 * (1.0 + lam ** 2)) / (2.0 * lam * l ** 2)
    arg = -x
    # 端点 l = 1±λ 处的舍入误差
    if abs(abs(arg) - 1.0) <= 1e-12:
        arg = math.copysign(1.0, arg)
    clamped = not (-1.0 <= arg <= 1.0)
    if clamped:
        logger.debug(f"beta1: clamping cosine {arg!r} (lambda={lam}, l={l})")
        arg = min(1.0, max(-1.0, arg))
    return Beta1(beta1=math.acos(arg), cos_argument=-x, clamped=clamped)


def beta1_closed_form(lam: float, l: float) -> float:
    """允许的旋转范围 |β| ≤ β₁"""
    return beta1_details(lam, l).beta1


@dataclass(frozen=True)
class CircleIntersection:
    """蜗线 l·e^{iα} + λe^{2iα} 与单位圆的交点"""
    alpha: float
    point: complex
    angle: float
    beta1: float


def unit_circle_intersection_numeric(c: Limacon, scan: int = 64) -> CircleIntersection:
    """
    数值求 α* ∈ [0, π] 使 |l·e^{iα} + λe^{2iα}| = 1

    |l e^{iα} + λe^{2iα}|² − 1 = l² + λ² + 2lλ cos α − 1, 先粗扫找变号区间再用 brentq;
    端点处的零点 (相切) 直接取端点。返回交点的辐角与 β₁ = π − |辐角|。

    Raises:
        NoIntersection: 曲线整体在单位圆外或圆内
    """
    lam, l = c.lam, c.l

    def h(alpha: float) -> float:
        return l * l + lam * lam + 2.0 * l * lam * math.cos(alpha) - 1.0

    grid = np.linspace(0.0, math.pi, scan + 1)
    values = np.array([h(a) for a in grid])
    alpha_star: Optional[float] = None
    if abs(values[0]) <= 1e-14:
        alpha_star = 0.0
    elif abs(values[-1]) <= 1e-14:
        alpha_star = math.pi
    else:
        changes = np.nonzero(np.sign(values[:-1]) != np.sign(values[1:]))[0]
        if changes.size == 0:
            raise NoIntersection(
                f"limacon (lambda={lam}, l={l}) does not meet the unit circle",
                lam=lam, l=l,
            )
        k = int(changes[0])
        alpha_star = optimize.brentq(h, grid[k], grid[k + 1], xtol=1e-15, rtol=4 * np.finfo(float).eps)

    u = complex(np.exp(1j * alpha_star))
    point = l * u + lam * u * u
    angle = math.atan2(point.imag, point.real)
    return CircleIntersection(alpha=float(alpha_star), point=point, angle=angle,
                              beta1=math.pi - abs(angle))


# ============================================================================
# q_ψ 的最小模
# ============================================================================

def q_min_modulus(lam: float, psi: float, m: int = 4096) -> Tuple[float, float]:
    """
    min_{τ} |q_ψ(e^{iτ})|, q_ψ(z) = (1+λ)z − λe^{iψ}z²

    Returns:
        (最小值, 取到的 τ ∈ (−π, π])
    """
    if not 0.0 <= lam <= 1.0:
        raise ParameterOutOfRange(f"lambda must lie in [0, 1], got {lam}")
    if m < 4096:
        raise ParameterOutOfRange(f"q_min_modulus needs m >= 4096, got {m}")
    rot = complex(np.exp(1j * psi))

    def modulus(tau: Union[float, np.ndarray]) -> Any:
        z = np.exp(1j * np.asarray(tau))
        return np.abs((1.0 + lam) * z - lam * rot * z * z)

    tau = linspace_angles(m) - math.pi
    values = modulus(tau)
    k = int(np.argmin(values))
    best_tau, best = float(tau[k]), float(values[k])
    h = 2.0 * math.pi / m
    res = optimize.minimize_scalar(
        lambda t: float(modulus(t)), bounds=(best_tau - h, best_tau + h),
        method="bounded", options={"xatol": 1e-12},
    )
    if res.success and float(res.fun) <= best:
        best_tau, best = float(res.x), float(res.fun)
    best_tau = math.atan2(math.sin(best_tau), math.cos(best_tau))
    return best, best_tau


# ============================================================================
# 从属关系与增长估计
# ============================================================================

@dataclass
class SubordinationReport:
    """从属检验结果; 真值即 "所有样本都在目标区域内" """
    holds: bool
    variant: str
    radius: float
    samples: int
    worst_point: complex
    worst_preimage: float
    hypothesis_verified: bool = True
    notes: Dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.holds

    def to_dict(self) -> Dict[str, Any]:
        return {
            "holds": self.holds,
            "variant": self.variant,
            "radius": self.radius,
            "samples": self.samples,
            "worst_point": complex_to_json(self.worst_point),
            "worst_preimage": self.worst_preimage,
            "hypothesis_verified": self.hypothesis_verified,
            **({"notes": self.notes} if self.notes else {}),
        }


def region_hypothesis_holds(f: AnalyticMap, lam: float) -> Optional[bool]:
    """
    z/f ≠ (1−λ)(1+z) 在圆盘内是否成立 (零点计数); 圆周上有零点时返回 None
    """
    shift = 1.0 - lam
    try:
        count = zero_count_in_disk(lambda z: f.q(z) - shift * (1.0 + z), NONVANISHING_RADIUS)
    except BoundaryZero:
        return None
    return count == 0


def subordination_check(
    f: AnalyticMap,
    lam: Union[float, ClassParameter],
    r: float = 0.99,
    m: int = 2048,
    variant: SubordinationVariant = "plain",
    strict: bool = False,
    hypothesis: Optional[bool] = None,
) -> SubordinationReport:
    """
    |z| = r 上采样检验 W(z) − 1 ∈ {c₁u + c₂u² : u ∈ 𝔻}

    - plain:          W = z/f,            (c₁, c₂) = (1+λ, λ)
    - a2_shifted:     W = z/f + a₂z,      (c₁, c₂) = (2λ, λ)
    - lambda_shifted: W = z/f − (1−λ)z, (c₁, c₂) = (2λ, λ), 前提 z/f ≠ (1−λ)(1+z)

    hypothesis 为 lambda_shifted 的前提给出已知结论时跳过零点计数。

    Raises:
        HypothesisUnchecked: strict=True 且 lambda_shifted 的前提没能由零点计数确认
    """
    lam_v = lambda_value(lam)
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius must lie in (0, 1), got {r}")
    if m < 2048:
        raise ParameterOutOfRange(f"subordination sampling needs m >= 2048, got {m}")

    z = r * np.exp(1j * linspace_angles(m))
    q = np.asarray(f.q(z), dtype=complex)
    verified = True
    if variant == "plain":
        w, c1 = q - 1.0, 1.0 + lam_v
    elif variant == "a2_shifted":
        w, c1 = q + f.a2 * z - 1.0, 2.0 * lam_v
    elif variant == "lambda_shifted":
        w, c1 = q - (1.0 - lam_v) * z - 1.0, 2.0 * lam_v
        if hypothesis is None:
            hypothesis = bool(region_hypothesis_holds(f, lam_v))
        verified = bool(hypothesis)
        if not verified:
            message = "hypothesis z/f != (1-lambda)(1+z) could not be verified by zero counting"
            if strict:
                raise HypothesisUnchecked(message, lam=lam_v)
            logger.warning(f"{f!r}: {message}")
    else:
        raise ParameterOutOfRange(f"unknown subordination variant: {variant!r}")

    pre = np.asarray(preimage_modulus(c1, lam_v, w))
    k = int(np.argmax(pre))
    worst = float(pre[k])
    return SubordinationReport(
        holds=bool(worst < 1.0 - CONTAINMENT_TOL),
        variant=variant,
        radius=r,
        samples=m,
        worst_point=complex(z[k]),
        worst_preimage=worst,
        hypothesis_verified=verified,
    )


def growth_bound(lam: float, r: float) -> float:
    """−1 + (1 + λr)(1 + r)"""
    return -1.0 + (1.0 + lam * r) * (1.0 + r)


def growth_bound_check(f: AnalyticMap, lam: Union[float, ClassParameter], r: float,
                       m: int = 4096) -> float:
    """max_{|z|=r} |z/f − 1| − (−1 + (1+λr)(1+r)); 成员应 ≤ 1e-9"""
    lam_v = lambda_value(lam)
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius must lie in (0, 1), got {r}")
    ext: SampledExtremum = max_modulus_on_circle(lambda z: np.asarray(f.q(z)) - 1.0, r, m)
    return ext.value - growth_bound(lam_v, r)


# ============================================================================
# Fekete 极值族
# ============================================================================

@dataclass
class ExtremalCandidate:
    """z/(1 − a₂z − λe^{iθ}z²) 及其可容许性"""
    f: AnalyticMap
    lam: float
    a2: float
    theta: float
    theta_bound: float
    admissible: bool
    nonvanishing: Optional[bool]

    @property
    def consistent(self) -> bool:
        """余弦条件与零点计数给出同样的结论"""
        return self.nonvanishing is None or self.nonvanishing == self.admissible


def extremal_family_member(lam: float, a2: float, theta: float,
                           order: Optional[int] = None) -> ExtremalCandidate:
    """
    Fekete 泛函的极值函数 f = z/(1 − a₂z − λe^{iθ}z²), a₂ ≥ 0

    可容许条件 cos θ ≤ extremal_theta_bound(a₂, λ); 同时用零点计数交叉检查
    z/f 在圆盘内不为零。
    """
    lam_v = lambda_value(lam)
    if a2 < 0:
        raise DomainError(f"extremal family is parametrized by a2 >= 0, got {a2}")
    bound = extremal_theta_bound(a2, lam_v)
    f = AnalyticMap.from_pre_schwarzian_polynomial(
        [1.0, -a2, -lam_v * complex(np.exp(1j * theta))], order=order,
        name=f"extremal(lambda={lam_v}, a2={a2}, theta={theta})",
    )
    try:
        nonvanishing: Optional[bool] = zero_count_in_disk(f.q, NONVANISHING_RADIUS) == 0
    except BoundaryZero:
        nonvanishing = None
    admissible = math.cos(theta) <= bound + 1e-12
    return ExtremalCandidate(f=f, lam=lam_v, a2=float(a2), theta=float(theta),
                             theta_bound=bound, admissible=admissible, nonvanishing=nonvanishing)


__all__ = [
    "Limacon",
    "FIGURE_LIMACON_PAIRS",
    "FIGURE_TARGET_LAMBDAS",
    "CONTAINMENT_TOL",
    "parametric_point",
    "implicit_residual",
    "target_curve_point",
    "quadratic_roots",
    "preimage_modulus",
    "quadratic_image_contains",
    "region_contains",
    "Beta1",
    "beta1_details",
    "beta1_closed_form",
    "CircleIntersection",
    "unit_circle_intersection_numeric",
    "q_min_modulus",
    "SubordinationReport",
    "region_hypothesis_holds",
    "subordination_check",
    "growth_bound",
    "growth_bound_check",
    "ExtremalCandidate",
    "extremal_family_member",
]
