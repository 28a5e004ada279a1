"""
环境配置模块
"""

from .constants import (
    SCHLICHT_U_THREADS,
    SCHLICHT_U_ORDER,
    SCHLICHT_U_LOG_LEVEL,
    SCHLICHT_U_RUN_DIR,
    DEFAULT_ORDER,
    DEFAULT_THREADS,
    ALL_ENV_KEYS,
)

from .settings import (
    NumericSettings,
    load_settings,
    get_global_settings,
    reset_global_settings,
)


__all__ = [
    # Constants
    "SCHLICHT_U_THREADS",
    "SCHLICHT_U_ORDER",
    "SCHLICHT_U_LOG_LEVEL",
    "SCHLICHT_U_RUN_DIR",
    "DEFAULT_ORDER",
    "DEFAULT_THREADS",
    "ALL_ENV_KEYS",
    # Settings
    "NumericSettings",
    "load_settings",
    "get_global_settings",
    "reset_global_settings",
]
