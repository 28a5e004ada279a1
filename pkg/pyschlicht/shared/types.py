"""
共享类型定义

跨模块使用的字面量类型与小型数据结构。
"""

from dataclasses import dataclass
from typing import Literal

# ============================================================================
# 成员判定
# ============================================================================

VerdictStatus = Literal[
    "CertifiedMember",
    "SampledMember",
    "Refuted",
    "NonvanishingViolated",
    "Inconclusive",
]

MEMBER_STATUSES: tuple[str, ...] = ("CertifiedMember", "SampledMember")
REJECT_STATUSES: tuple[str, ...] = ("Refuted", "NonvanishingViolated")

# ============================================================================
# 从属关系检验
# ============================================================================

# plain: z/f ≺ 1+(1+λ)z+λz²
# a2_shifted: z/f + a₂z ≺ 1+2λz+λz²
# lambda_shifted: z/f − (1−λ)z ≺ 1+2λz+λz²  (需要 z/f ≠ (1−λ)(1+z))
SubordinationVariant = Literal["plain", "a2_shifted", "lambda_shifted"]

# ============================================================================
# 级数尾项
# ============================================================================

SeriesMode = Literal["substitute", "decimate"]

TailMode = Literal["closed_form", "partial"]


@dataclass(frozen=True)
class SampledExtremum:
    """圆周采样极值: 值 + 取到的位置"""
    value: float
    where: complex
    radius: float


__all__ = [
    "VerdictStatus",
    "MEMBER_STATUSES",
    "REJECT_STATUSES",
    "SubordinationVariant",
    "SeriesMode",
    "TailMode",
    "SampledExtremum",
]
