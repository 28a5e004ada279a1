"""随机成员实验: 抽样、定理结论检验、猜想扫描"""

from .fuzz import (
    ConjectureReport,
    FuzzConfig,
    FuzzRecord,
    conjecture_scan,
    persist_run,
    run_fuzz,
    sample_member,
    theorem_suite,
)

__all__ = [
    "ConjectureReport",
    "FuzzConfig",
    "FuzzRecord",
    "conjecture_scan",
    "persist_run",
    "run_fuzz",
    "sample_member",
    "theorem_suite",
]
