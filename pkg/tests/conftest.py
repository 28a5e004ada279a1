"""
共享 fixture: 每个测试使用独立的运行目录, 全局单例 (数值配置 / 运行目录 / 组件日志) 在测试前后复位。
"""

from __future__ import annotations

import pytest

from pyschlicht.core.logging_system import reset_log_manager
from pyschlicht.core.run_manager import reset_default_run_manager
from pyschlicht.shared.env import reset_global_settings
from pyschlicht.shared.env.constants import (
    SCHLICHT_U_ORDER,
    SCHLICHT_U_RUN_DIR,
    SCHLICHT_U_THREADS,
)


@pytest.fixture(autouse=True)
def isolated_run_dir(tmp_path, monkeypatch):
    """把运行产物重定向到 tmp_path/schlicht_run"""
    run_dir = tmp_path / "schlicht_run"
    monkeypatch.setenv(SCHLICHT_U_RUN_DIR, str(run_dir))
    monkeypatch.delenv(SCHLICHT_U_ORDER, raising=False)
    monkeypatch.delenv(SCHLICHT_U_THREADS, raising=False)
    monkeypatch.chdir(tmp_path)
    reset_global_settings()
    reset_default_run_manager()
    reset_log_manager()
    yield run_dir
    reset_log_manager()
    reset_default_run_manager()
    reset_global_settings()
