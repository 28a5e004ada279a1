"""
pyschlicht 共享模块

- errors: 异常体系
- logger: 控制台日志器
- env: 环境变量与数值配置
- types / utils: 字面量类型、JSON 与种子工具
"""

from .errors import SchlichtError
from .logger import logger
from .types import MEMBER_STATUSES, REJECT_STATUSES, SampledExtremum, VerdictStatus
from .utils import dumps_canonical, mix_seed

__all__ = [
    "SchlichtError",
    "logger",
    "MEMBER_STATUSES",
    "REJECT_STATUSES",
    "SampledExtremum",
    "VerdictStatus",
    "dumps_canonical",
    "mix_seed",
]
