"""
U(λ) 成员判定

判定流水线 (:func:`verdict`):
    1. 辐角原理数 z/f 在 |z| < 0.999 内的零点, 有零点 -> NonvanishingViolated
    2. 系数充分条件 Σ(n−1)|b_n| ≤ λ 成立 -> CertifiedMember
    3. 在 r ∈ {0.9, 0.99, 0.999} 上采样 sup|U_f|:
       有样本 ≥ λ(1+10⁻⁹) -> Refuted; 全部 < λ(1−10⁻⁹) -> SampledMember;
       其余 -> Inconclusive

"不是成员" 不抛异常, 而是一个 verdict 取值。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, List, Optional, Sequence, Tuple, Union

import numpy as np

from ..shared.env.constants import NONVANISHING_RADIUS, SCHWARZ_SAMPLE_COUNT
from ..shared.env.settings import NumericSettings, get_global_settings
from ..shared.errors import (
    BoundaryZero,
    NegativeCoefficient,
    NotContracting,
    ParameterOutOfRange,
    PoleOrZeroHit,
)
from ..shared.logger import logger
from ..shared.types import MEMBER_STATUSES, SampledExtremum, VerdictStatus
from ..shared.utils import complex_to_json, linspace_angles
from .analytic_map import (
    AnalyticMap,
    RationalForm,
    max_modulus_on_circle,
    taylor_coefficients,
    u_eval,
    zero_count_in_disk,
)
from .schwarz import ClassParameter, SchwarzGenerator, lambda_value
from .series import TruncatedSeries, evaluate

# 系数证书的余量
EXACT_SERIES_SLACK = 1e-12
TRUNCATED_SERIES_MARGIN = 1e-6
# 采样判定的相对余量
REFUTE_MARGIN = 1e-9
# BoundaryZero 时依次尝试的半径
_NONVANISHING_FALLBACK = (NONVANISHING_RADIUS, 0.9985, 0.998)


# ============================================================================
# 判定结果
# ============================================================================

@dataclass
class MembershipVerdict:
    """成员判定结果, evidence 记录是哪一步给出的结论"""
    status: VerdictStatus
    lam: float
    evidence: Dict[str, Any] = field(default_factory=dict)
    margin: Optional[float] = None
    radius_sweep: List[float] = field(default_factory=list)
    witness: Optional[complex] = None
    value: Optional[float] = None
    zero_count: Optional[int] = None
    radius: Optional[float] = None

    @property
    def is_member(self) -> bool:
        return self.status in MEMBER_STATUSES

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {"status": self.status, "lambda": self.lam, "evidence": self.evidence}
        if self.margin is not None:
            data["margin"] = self.margin
        if self.radius_sweep:
            data["radius_sweep"] = list(self.radius_sweep)
        if self.witness is not None:
            data["witness"] = complex_to_json(self.witness)
        if self.value is not None:
            data["value"] = self.value
        if self.zero_count is not None:
            data["zero_count"] = self.zero_count
        if self.radius is not None:
            data["radius"] = self.radius
        return data


# ============================================================================
# 非零性
# ============================================================================

def _polynomial_zero_count(coeffs: np.ndarray, r: float, m: int) -> int:
    if coeffs.size <= 1:
        return 0
    return zero_count_in_disk(lambda z: np.polynomial.polynomial.polyval(z, coeffs), r, m)


def nonvanishing_zero_count(f: AnalyticMap, radii: Sequence[float] = _NONVANISHING_FALLBACK,
                            m: int = 4096) -> Tuple[int, float]:
    """
    z/f 在圆盘内的零点数 (以及实际使用的半径)

    圆周上碰到零点时换下一个半径; 全部失败则抛出最后一个 :class:`BoundaryZero`。
    有理后端 q = D/Ñ 的辐角只给出 Z(D) − Z(Ñ), 所以分别数 D 与 Ñ 的零点再相加:
    Ñ 的零点是 f 在 z ≠ 0 处的零点, 也就是 z/f 的极点, 同样破坏成员资格。
    """
    last: Optional[BoundaryZero] = None
    for r in radii:
        try:
            if isinstance(f.backing, RationalForm):
                count = (_polynomial_zero_count(f.backing.den, r, m)
                         + _polynomial_zero_count(f.backing.num_reduced, r, m))
            else:
                count = zero_count_in_disk(f.q, r, m)
            return count, r
        except BoundaryZero as exc:
            logger.debug(f"Boundary zero at r={r}; retrying with a smaller radius")
            last = exc
    assert last is not None
    raise last


# ============================================================================
# 系数充分条件
# ============================================================================

def coefficient_sum(series: TruncatedSeries) -> float:
    """Σ_{n=2}^{N} (n−1)|b_n|"""
    n = np.arange(series.order + 1)
    return float(np.sum(np.where(n >= 2, (n - 1) * np.abs(series.coeffs), 0.0)))


def certify_by_coefficients(
    pre_schwarzian: Union[TruncatedSeries, AnalyticMap],
    lam: Union[float, ClassParameter],
    tail_bound: Optional[float] = None,
) -> bool:
    """
    系数充分条件: Σ(n−1)|b_n| ≤ λ 且 z/f 在 |z| < 0.999 内无零点

    由 U_f = −Σ_{n≥2}(n−1)b_n zⁿ 得 |U_f| ≤ Σ(n−1)|b_n|。
    级数精确 (尾项为 0) 时比较 Σ ≤ λ + 10⁻¹²; 否则要求
    Σ + 尾项上界 ≤ λ(1 − 10⁻⁶)。

    Args:
        pre_schwarzian: z/f 级数, 或者直接给映射 (此时尾项上界取自后端)
        lam: 类参数
        tail_bound: 显式尾项上界; 只给级数时默认 0 (把级数看作多项式)
    """
    lam_v = lambda_value(lam)
    if isinstance(pre_schwarzian, AnalyticMap):
        f = pre_schwarzian
        series = f.pre_schwarzian
        tail = f.tail_bound if tail_bound is None else tail_bound
        g = f.q
    else:
        f = None
        series = pre_schwarzian
        tail = 0.0 if tail_bound is None else tail_bound
        g = lambda z: evaluate(series, z)

    if abs(series[0] - 1.0) > 1e-12:
        return False
    total = coefficient_sum(series)
    if tail == 0.0:
        passed = total <= lam_v + EXACT_SERIES_SLACK
    else:
        passed = total + tail <= lam_v * (1.0 - TRUNCATED_SERIES_MARGIN)
    logger.debug(f"coefficient certificate: sum={total:.17g} tail={tail:.3e} lambda={lam_v} -> {passed}")
    if not passed:
        return False

    try:
        if f is not None:
            count, _ = nonvanishing_zero_count(f)
        else:
            count = zero_count_in_disk(g, NONVANISHING_RADIUS)
    except BoundaryZero:
        return False
    return count == 0


# ============================================================================
# 采样
# ============================================================================

def sup_u_with_witness(f: AnalyticMap, r: float, m: int = 8192) -> SampledExtremum:
    """
    |z| = r 上 |U_f| 的最大值与取到的位置

    先取 m 个等距点, 再在最大样本的相邻区间上做黄金分割细化。
    """
    if not 0.0 < r < 1.0:
        raise ParameterOutOfRange(f"radius must lie in (0, 1), got {r}")
    if m < SCHWARZ_SAMPLE_COUNT:
        raise ParameterOutOfRange(f"sup sampling needs m >= {SCHWARZ_SAMPLE_COUNT}, got {m}")
    return max_modulus_on_circle(lambda z: u_eval(f, z), r, m)


def sup_u_on_circle(f: AnalyticMap, r: float, m: int = 8192) -> float:
    """max_{|z|=r} |U_f(z)| 的采样估计"""
    return sup_u_with_witness(f, r, m).value


# ============================================================================
# 判定
# ============================================================================

def verdict(f: AnalyticMap, lam: Union[float, ClassParameter],
            settings: Optional[NumericSettings] = None) -> MembershipVerdict:
    """成员判定流水线, 见模块说明"""
    lam_v = lambda_value(lam)
    settings = settings or get_global_settings()

    try:
        count, radius = nonvanishing_zero_count(f)
    except BoundaryZero as exc:
        return MembershipVerdict(
            "Inconclusive", lam_v,
            evidence={"test": "zero_count", "reason": str(exc), "min_modulus": exc.min_modulus},
        )
    if count > 0:
        logger.debug(f"{f!r}: z/f has {count} zero(s) in |z|<{radius}")
        return MembershipVerdict(
            "NonvanishingViolated", lam_v,
            evidence={"test": "zero_count"}, zero_count=count, radius=radius,
        )

    if certify_by_coefficients(f, lam_v):
        return MembershipVerdict(
            "CertifiedMember", lam_v,
            evidence={
                "test": "coefficient_sum",
                "coefficient_sum": coefficient_sum(f.pre_schwarzian),
                "tail_bound": f.tail_bound,
                "zero_count": 0,
                "order": f.order,
            },
        )

    sweep: List[float] = []
    sup = 0.0
    for r in settings.sweep_radii:
        try:
            ext = sup_u_with_witness(f, r, settings.sweep_samples)
        except PoleOrZeroHit as exc:
            return MembershipVerdict(
                "NonvanishingViolated", lam_v,
                evidence={"test": "sup_sweep", "reason": str(exc)}, zero_count=1, radius=r,
            )
        sweep.append(ext.value)
        sup = max(sup, ext.value)
        if ext.value >= lam_v * (1.0 + REFUTE_MARGIN):
            return MembershipVerdict(
                "Refuted", lam_v,
                evidence={"test": "sup_sweep", "radius": r},
                radius_sweep=sweep, witness=ext.where, value=ext.value,
            )

    if sup < lam_v * (1.0 - REFUTE_MARGIN):
        return MembershipVerdict(
            "SampledMember", lam_v,
            evidence={"test": "sup_sweep", "radii": list(settings.sweep_radii),
                      "samples": settings.sweep_samples},
            margin=lam_v - sup, radius_sweep=sweep,
        )
    return MembershipVerdict(
        "Inconclusive", lam_v,
        evidence={"test": "sup_sweep", "sup": sup}, radius_sweep=sweep,
    )


def membership_radius(f: AnalyticMap, lam: Union[float, ClassParameter],
                      tol: float = 1e-4, m: int = 4096) -> float:
    """
    最大的 r 使得 |z| < r 内 |U_f| < λ (采样意义下)

    sup_{|z|=r}|U_f| 随 r 单调不减, 直接二分。r = 0.999 时仍满足返回 1.0。
    """
    lam_v = lambda_value(lam)

    def inside(r: float) -> bool:
        try:
            return sup_u_on_circle(f, r, m) < lam_v
        except PoleOrZeroHit:
            return False

    if inside(NONVANISHING_RADIUS):
        return 1.0
    lo, hi = 0.0, NONVANISHING_RADIUS
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if inside(mid):
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ============================================================================
# 系数泛函
# ============================================================================

def fekete_check(f: AnalyticMap, lam: Union[float, ClassParameter, None] = None) -> float:
    """|a₃ − a₂²|; 成员满足 ≤ λ"""
    _, a2, a3 = taylor_coefficients(f, 3)
    return float(abs(a3 - a2 * a2))


def _require_contraction(a2: complex, lam_v: float, omega: SchwarzGenerator) -> None:
    """
    不动点迭代的前置条件

    |a₂| < 1+λ 一律抛 NotContracting。等号 |a₂| = 1+λ 只在 |ω(0)| = 1
    (极值成员) 时拒绝; |ω(0)| < 1 时放行, 此时映射在更小的圆盘上仍然压缩,
    比 "|a₂| ≤ 1+λ 即拒绝" 的条件宽一点。
    """
    bound = 1.0 + lam_v
    if abs(a2) < bound - 1e-12:
        raise NotContracting(f"|a2|={abs(a2):.12g} <= 1+lambda={bound:.12g}", a2=a2, lam=lam_v)
    if abs(abs(a2) - bound) <= 1e-12 and abs(omega.at_zero) >= 1.0 - 1e-12:
        raise NotContracting(
            "|a2| = 1+lambda with |w(0)| = 1: the map is an extremal member", a2=a2, lam=lam_v
        )


def fixed_point_iterates(a2: complex, lam: Union[float, ClassParameter],
                         omega: SchwarzGenerator, max_iter: int = 100_000) -> Iterator[complex]:
    """
    z ← (1 + λz∫₀^z ω)/a₂, 从 z = 0 开始

    |a₂| > 1+λ 时这是 |z| ≤ (1+λ)/|a₂| 上的压缩映射 (Lipschitz 常数 ≤ r²);
    |a₂| = 1+λ 且 |ω(0)| < 1 时在更小的圆盘上仍然压缩。
    前置条件在调用时立即检查。
    """
    lam_v = lambda_value(lam)
    a2 = complex(a2)
    _require_contraction(a2, lam_v, omega)

    def _iterate() -> Iterator[complex]:
        z = 0j
        for _ in range(max_iter):
            z = (1.0 + lam_v * z * omega.antiderivative(z)) / a2
            yield z

    return _iterate()


def fixed_point_zero_locator(a2: complex, lam: Union[float, ClassParameter],
                             omega: SchwarzGenerator, tol: float = 1e-12,
                             max_iter: int = 100_000) -> complex:
    """
    Banach 迭代找 z/f = 1 − a₂z + λz∫₀^z ω 在圆盘内的零点

    Returns:
        z₀, 满足 |1 − a₂z₀ + λz₀∫₀^{z₀}ω| < 10·tol

    Raises:
        NotContracting: |a₂| ≤ 1+λ (等号情形仅当 |ω(0)| = 1)
    """
    lam_v = lambda_value(lam)
    prev = 0j
    z = 0j
    for z in fixed_point_iterates(a2, lam_v, omega, max_iter):
        residual = abs(1.0 - complex(a2) * z + lam_v * z * omega.antiderivative(z))
        if abs(z - prev) < tol and residual < 10.0 * tol:
            logger.debug(f"fixed point located at z0={z:.17g} (residual {residual:.3e})")
            return z
        prev = z
    raise NotContracting(f"iteration did not converge within {max_iter} steps", a2=complex(a2), lam=lam_v)


def alternating_univalence_test(b: Sequence[float], b1: float = 0.0) -> bool:
    """
    z/f = 1 + b₁z + Σ(−1)ⁿ b_n zⁿ (b_n ≥ 0) 时 f 单叶 ⟺ Σ(n−1)b_n ≤ 1

    Args:
        b: b₂, b₃, … (下标从 2 开始)
        b1: 一次项系数, 不影响判定
    """
    arr = np.asarray(list(b), dtype=float)
    if np.any(arr < 0):
        raise NegativeCoefficient("alternating form needs b_n >= 0 for n >= 2")
    weights = np.arange(1, arr.size + 1)
    return bool(np.dot(weights, arr) <= 1.0 + EXACT_SERIES_SLACK)


def omitted_value_bound_check(f: AnalyticMap, mu: complex,
                              lam: Union[float, ClassParameter, None] = None,
                              r: float = NONVANISHING_RADIUS, m: int = 4096) -> float:
    """
    min_{|z|=r} |1 + μz + λz∫₀^z ω|

    1 + μz + λz∫ω = z/f + (a₂ + μ)z, 所以对任意后端都能算。
    正值说明 −1/(a₂+μ) 不在 f(𝔻) 内。

    Raises:
        ParameterOutOfRange: |μ| > 1−λ, 或 a₂ + μ = 0
    """
    if lam is None:
        if f.characterization is None:
            raise ParameterOutOfRange("lambda is required for maps without a characterization backing")
        lam_v = f.characterization.lam
    else:
        lam_v = lambda_value(lam)
    mu = complex(mu)
    if abs(mu) > 1.0 - lam_v + 1e-12:
        raise ParameterOutOfRange(f"|mu|={abs(mu):.12g} exceeds 1-lambda={1.0 - lam_v:.12g}")
    shift = f.a2 + mu
    if abs(shift) <= 1e-14:
        raise ParameterOutOfRange("a2 + mu must be nonzero")
    z = r * np.exp(1j * linspace_angles(m))
    return float(np.min(np.abs(np.asarray(f.q(z)) + shift * z)))


__all__ = [
    "MembershipVerdict",
    "nonvanishing_zero_count",
    "coefficient_sum",
    "certify_by_coefficients",
    "sup_u_with_witness",
    "sup_u_on_circle",
    "verdict",
    "membership_radius",
    "fekete_check",
    "fixed_point_iterates",
    "fixed_point_zero_locator",
    "alternating_univalence_test",
    "omitted_value_bound_check",
]
