"""
数值配置 - 从环境变量读取运行期参数

读取顺序: 显式参数 > 环境变量 > 默认值。非法取值回落到默认值并打警告。
"""

import os
from dataclasses import dataclass, field, replace
from typing import Optional

from .constants import (
    BOUNDARY_TOL,
    DEFAULT_ORDER,
    DEFAULT_RUN_DIR_NAME,
    DEFAULT_THREADS,
    POLE_TOL,
    SCHLICHT_U_ORDER,
    SCHLICHT_U_RUN_DIR,
    SCHLICHT_U_THREADS,
    SWEEP_RADII,
    SWEEP_SAMPLES,
    ZERO_CONSTANT_TOL,
)


def _read_positive_int(var: str, default: int) -> int:
    """读一个正整数环境变量; 未设置或非法时返回 default。"""
    raw = os.environ.get(var)
    if raw is None or not raw.strip():
        return default
    try:
        value = int(float(raw.strip()))
    except (TypeError, ValueError):
        value = 0
    if value <= 0:
        from ..logger import logger

        logger.warning(f"Ignoring invalid {var}={raw!r}; using {default}")
        return default
    return value


@dataclass(frozen=True)
class NumericSettings:
    """数值运行参数"""
    order: int = DEFAULT_ORDER
    threads: int = DEFAULT_THREADS
    run_dir: str = DEFAULT_RUN_DIR_NAME
    zero_tol: float = ZERO_CONSTANT_TOL
    pole_tol: float = POLE_TOL
    boundary_tol: float = BOUNDARY_TOL
    sweep_radii: tuple[float, ...] = field(default=SWEEP_RADII)
    sweep_samples: int = SWEEP_SAMPLES

    def with_overrides(self, **kwargs) -> "NumericSettings":
        """返回覆盖了非 None 字段的新配置"""
        return replace(self, **{k: v for k, v in kwargs.items() if v is not None})


def load_settings() -> NumericSettings:
    """从当前环境构造 :class:`NumericSettings`"""
    return NumericSettings(
        order=_read_positive_int(SCHLICHT_U_ORDER, DEFAULT_ORDER),
        threads=_read_positive_int(SCHLICHT_U_THREADS, DEFAULT_THREADS),
        run_dir=os.environ.get(SCHLICHT_U_RUN_DIR) or DEFAULT_RUN_DIR_NAME,
    )


_global_settings: Optional[NumericSettings] = None


def get_global_settings() -> NumericSettings:
    """全局配置实例 (首次调用时读取环境)"""
    global _global_settings
    if _global_settings is None:
        _global_settings = load_settings()
    return _global_settings


def reset_global_settings() -> None:
    """丢弃缓存的配置; 测试里改了环境变量后调用"""
    global _global_settings
    _global_settings = None


__all__ = [
    "NumericSettings",
    "load_settings",
    "get_global_settings",
    "reset_global_settings",
]
