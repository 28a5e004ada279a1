"""
异常体系

所有领域错误都继承自 :class:`SchlichtError`。"不是成员"本身不是错误,
那是 :class:`~pyschlicht.core.membership.MembershipVerdict` 的一个取值;
这里只收录前置条件被破坏、数值退化等需要调用方处理的情况。
"""

from __future__ import annotations

from typing import Any, Optional


class SchlichtError(Exception):
    """pyschlicht 领域错误基类"""

    def __init__(self, message: str, **context: Any) -> None:
        super().__init__(message)
        self.context: dict[str, Any] = dict(context)


# ----------------------------------------------------------------------------
# 级数代数
# ----------------------------------------------------------------------------

class NearZeroConstantTerm(SchlichtError):
    """对常数项 (近似) 为 0 的级数求倒数。"""


class BranchBase(SchlichtError):
    """开 n 次方根时常数项不是 1, 主值分支无法锚定。"""


# ----------------------------------------------------------------------------
# 函数求值 / 零点
# ----------------------------------------------------------------------------

class PoleOrZeroHit(SchlichtError):
    """在 z≠0 处 |f(z)| 低于阈值 (f 在圆盘内有零点或极点)。"""

    def __init__(self, message: str, z: Optional[complex] = None) -> None:
        super().__init__(message, z=z)
        self.z = z


class BoundaryZero(SchlichtError):
    """积分圆周上 |g| 的最小值低于噪声阈值, 辐角增量不可靠, 需要换半径。"""

    def __init__(self, message: str, radius: float, min_modulus: float) -> None:
        super().__init__(message, radius=radius, min_modulus=min_modulus)
        self.radius = radius
        self.min_modulus = min_modulus


class NonvanishingViolated(SchlichtError):
    """z/f (或某个构造出的 z/F) 在圆盘内有零点。"""

    def __init__(self, message: str, zero_count: int, radius: float) -> None:
        super().__init__(message, zero_count=zero_count, radius=radius)
        self.zero_count = zero_count
        self.radius = radius


class ValueAttained(SchlichtError):
    """省略值变换要求 c ∉ f(𝔻), 但 c−f 在圆盘内有零点。"""


class UOperatorChanged(SchlichtError):
    """构造出的函数与原函数的 U 算子在采样点上不一致。"""

    def __init__(self, message: str, max_diff: float, tol: float) -> None:
        super().__init__(message, max_diff=max_diff, tol=tol)
        self.max_diff = max_diff
        self.tol = tol


# ----------------------------------------------------------------------------
# 参数 / 前置条件
# ----------------------------------------------------------------------------

class ParameterOutOfRange(SchlichtError, ValueError):
    """参数超出允许范围 (λ、μ、半径、阶数等)。"""


class DomainError(SchlichtError, ValueError):
    """标量公式在定义域之外被调用。"""


class WeightConstraint(SchlichtError, ValueError):
    """凸组合的权重不满足 Σ μ_k λ_k = 1。"""


class NegativeCoefficient(SchlichtError, ValueError):
    """交错符号判别法要求 b_n ≥ 0 (n ≥ 2)。"""


class NotContracting(SchlichtError):
    """|a₂| ≤ 1+λ 时不动点映射不保证是压缩映射。"""


# ----------------------------------------------------------------------------
# 几何
# ----------------------------------------------------------------------------

class DegenerateQuadratic(SchlichtError):
    """二次项系数过小, 包含性检验退化为一次方程。"""


class NoIntersection(SchlichtError):
    """蚶线与单位圆不相交 (严格在内或严格在外)。"""


class HypothesisUnchecked(SchlichtError):
    """定理的附加假设没有被零点计数验证。"""


# ----------------------------------------------------------------------------
# 求根 / 随机实验 / 输入文件
# ----------------------------------------------------------------------------

class BracketFailure(SchlichtError):
    """求根区间两端函数值同号。"""

    def __init__(self, message: str, bracket: tuple[float, float],
                 values: tuple[float, float]) -> None:
        super().__init__(message, bracket=bracket, values=values)
        self.bracket = bracket
        self.values = values


class RejectionBudgetExceeded(SchlichtError):
    """随机成员生成器连续拒绝次数超过预算。"""


class SpecFileError(SchlichtError, ValueError):
    """函数描述 JSON 不合法 (结构或取值)。"""


__all__ = [
    "SchlichtError",
    "NearZeroConstantTerm",
    "BranchBase",
    "PoleOrZeroHit",
    "BoundaryZero",
    "NonvanishingViolated",
    "ValueAttained",
    "UOperatorChanged",
    "ParameterOutOfRange",
    "DomainError",
    "WeightConstraint",
    "NegativeCoefficient",
    "NotContracting",
    "DegenerateQuadratic",
    "NoIntersection",
    "HypothesisUnchecked",
    "BracketFailure",
    "RejectionBudgetExceeded",
    "SpecFileError",
]
