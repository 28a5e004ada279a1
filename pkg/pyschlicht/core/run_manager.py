"""
运行目录管理

schlicht_run/
├── fuzz/       # JSONL 记录与 summary JSON
├── figures/    # 曲线 CSV
├── report/     # report 子命令的聚合结果
└── log/        # 组件日志
"""

import os
import tempfile
from datetime import datetime
from pathlib import Path
from typing import List, Optional

from ..shared.env.constants import DEFAULT_RUN_DIR_NAME, SCHLICHT_U_RUN_DIR
from ..shared.logger import logger


class SchlichtRunManager:
    """创建并定位运行目录下的各个子目录"""

    RUN_DIR_NAME = DEFAULT_RUN_DIR_NAME

    FUZZ_DIR = "fuzz"
    FIGURES_DIR = "figures"
    REPORT_DIR = "report"
    LOG_DIR = "log"

    def __init__(self, base_dir: Optional[str] = None):
        """
        Args:
            base_dir: 给出时运行目录为 base_dir/schlicht_run; 否则读
                ``SCHLICHT_U_RUN_DIR`` (相对路径按 cwd 解析), 未设置时用 cwd/schlicht_run
        """
        if base_dir:
            self.base_dir = Path(base_dir)
            self.run_dir = self.base_dir / self.RUN_DIR_NAME
        else:
            self.run_dir = Path(os.path.abspath(os.environ.get(SCHLICHT_U_RUN_DIR) or self.RUN_DIR_NAME))
            self.base_dir = self.run_dir.parent
        self._ensure_directories()
        logger.debug(f"SchlichtRunManager initialized: {self.run_dir}")

    def _ensure_directories(self) -> None:
        """创建子目录; 失败 (只读 cwd) 时退到系统临时目录"""
        try:
            self._mkdirs_under(self.run_dir)
        except OSError as exc:
            fallback = Path(tempfile.gettempdir()) / self.RUN_DIR_NAME
            logger.warning(f"Cannot create run dir {self.run_dir} ({exc}); falling back to {fallback}")
            self.run_dir = fallback
            self.base_dir = fallback.parent
            self._mkdirs_under(self.run_dir)

    def _mkdirs_under(self, run_dir: Path) -> None:
        for sub in (self.FUZZ_DIR, self.FIGURES_DIR, self.REPORT_DIR, self.LOG_DIR):
            (run_dir / sub).mkdir(parents=True, exist_ok=True)
        gitignore = run_dir / ".gitignore"
        if not gitignore.exists():
            try:
                gitignore.write_text("# pyschlicht run artifacts\n*\n", encoding="utf-8")
            except OSError:
                pass

    @property
    def fuzz_dir(self) -> Path:
        return self.run_dir / self.FUZZ_DIR

    @property
    def figures_dir(self) -> Path:
        return self.run_dir / self.FIGURES_DIR

    @property
    def report_dir(self) -> Path:
        return self.run_dir / self.REPORT_DIR

    @property
    def log_dir(self) -> Path:
        return self.run_dir / self.LOG_DIR

    def fuzz_run_paths(self, seed: int, timestamp: Optional[datetime] = None) -> tuple[Path, Path]:
        """
        一次 fuzz 运行的 (JSONL 路径, summary 路径)

        文件名: ``fuzz-{seed}-{YYYY-MM-DD_HH-MM-SS}.jsonl``
        """
        if timestamp is None:
            timestamp = datetime.now()
        stem = f"fuzz-{seed}-{timestamp.strftime('%Y-%m-%d_%H-%M-%S')}"
        return self.fuzz_dir / f"{stem}.jsonl", self.fuzz_dir / f"{stem}.summary.json"

    def list_runs(self) -> List[Path]:
        """fuzz JSONL 文件, 按修改时间倒序"""
        runs = list(self.fuzz_dir.glob("*.jsonl"))
        runs.sort(key=lambda p: p.stat().st_mtime, reverse=True)
        return runs

    def __repr__(self) -> str:
        return f"SchlichtRunManager(run_dir={self.run_dir}, runs={len(self.list_runs())})"


_default_manager: Optional[SchlichtRunManager] = None


def get_default_run_manager(base_dir: Optional[str] = None) -> SchlichtRunManager:
    global _default_manager
    if _default_manager is None or (base_dir and _default_manager.base_dir != Path(base_dir)):
        _default_manager = SchlichtRunManager(base_dir)
    return _default_manager


def reset_default_run_manager() -> None:
    global _default_manager
    _default_manager = None


__all__ = [
    "SchlichtRunManager",
    "get_default_run_manager",
    "reset_default_run_manager",
]
