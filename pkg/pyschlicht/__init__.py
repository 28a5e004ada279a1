"""
pyschlicht - 单叶函数类 U(λ) 的数值工具箱

    from pyschlicht import builtin, verdict

    f = builtin("koebe")
    verdict(f, 1.0).status   # "CertifiedMember"
"""

from pyschlicht.core import (
    CATALOG,
    AnalyticMap,
    Limacon,
    MembershipVerdict,
    TruncatedSeries,
    builtin,
    from_characterization,
    marx_alpha,
    solve_radius,
    u_eval,
    verdict,
)
from pyschlicht.lab import FuzzConfig, run_fuzz

# 日志
from pyschlicht.shared.logger import logger

# 版本信息
__version__ = "0.1.0"

__all__ = [
    "CATALOG",
    "AnalyticMap",
    "Limacon",
    "MembershipVerdict",
    "TruncatedSeries",
    "builtin",
    "from_characterization",
    "marx_alpha",
    "solve_radius",
    "u_eval",
    "verdict",
    "FuzzConfig",
    "run_fuzz",
    "logger",
    "__version__",
]
