"""
多组件运行日志

每个 CLI 子命令写自己的日志文件:
- verify.log
- fuzz.log
- figures.log
- radius.log

文件位于运行目录的 ``log/`` 下, 每行形如
``[2026-01-01T12:00:00.000+08:00] 消息``。
"""

import json
import logging
from datetime import datetime
from pathlib import Path
from typing import Dict, Optional

from ..shared.utils import to_jsonable


class SchlichtLogManager:
    """按组件分文件的日志管理器"""

    COMPONENTS = {
        "verify": "verify.log",
        "fuzz": "fuzz.log",
        "figures": "figures.log",
        "radius": "radius.log",
    }

    def __init__(self, log_dir: Optional[Path] = None):
        """
        Args:
            log_dir: 日志目录, 默认 ``./schlicht_run/log``
        """
        self.log_dir = Path(log_dir) if log_dir else Path.cwd() / "schlicht_run" / "log"
        self.log_dir.mkdir(parents=True, exist_ok=True)

        self._loggers: Dict[str, logging.Logger] = {}
        self._handlers: Dict[str, logging.FileHandler] = {}

        for component, filename in self.COMPONENTS.items():
            self._create_component_logger(component, filename)

    def _create_component_logger(self, component: str, filename: str) -> None:
        component_logger = logging.getLogger(f"pyschlicht.run.{component}")
        component_logger.setLevel(logging.DEBUG)
        component_logger.propagate = False

        for handler in component_logger.handlers[:]:
            component_logger.removeHandler(handler)
            handler.close()

        handler = logging.FileHandler(self.log_dir / filename, encoding="utf-8")
        handler.setLevel(logging.DEBUG)
        handler.setFormatter(RunLogFormatter())
        component_logger.addHandler(handler)

        self._loggers[component] = component_logger
        self._handlers[component] = handler

    def get_logger(self, component: str) -> logging.Logger:
        """取组件日志器; 未登记的组件按 ``<component>.log`` 新建"""
        if component not in self._loggers:
            self._create_component_logger(component, f"{component}.log")
        return self._loggers[component]

    def log(self, component: str, message: str, level: str = "info", **kwargs) -> None:
        """
        记录一条日志

        Args:
            component: 组件名称
            message: 日志消息
            level: 日志级别
            **kwargs: 附加数据, 以 JSON 形式跟在消息后面
        """
        component_logger = self.get_logger(component)
        if kwargs:
            message = f"{message} {json.dumps(to_jsonable(kwargs), ensure_ascii=False, sort_keys=True)}"
        getattr(component_logger, level, component_logger.info)(message)

    def verify(self, message: str, **kwargs) -> None:
        self.log("verify", message, **kwargs)

    def fuzz(self, message: str, **kwargs) -> None:
        self.log("fuzz", message, **kwargs)

    def figures(self, message: str, **kwargs) -> None:
        self.log("figures", message, **kwargs)

    def radius(self, message: str, **kwargs) -> None:
        self.log("radius", message, **kwargs)

    def close(self) -> None:
        """关闭所有文件处理器"""
        for component, handler in self._handlers.items():
            self._loggers[component].removeHandler(handler)
            handler.close()
        self._handlers.clear()
        self._loggers.clear()


class RunLogFormatter(logging.Formatter):
    """``[ISO-8601 毫秒时间戳] 消息``"""

    def format(self, record: logging.LogRecord) -> str:
        now = datetime.now().astimezone()
        return f"[{now.isoformat(timespec='milliseconds')}] {record.getMessage()}"


_global_log_manager: Optional[SchlichtLogManager] = None


def get_log_manager(log_dir: Optional[Path] = None) -> SchlichtLogManager:
    """全局日志管理器; log_dir 只在首次调用时生效"""
    global _global_log_manager
    if _global_log_manager is None:
        _global_log_manager = SchlichtLogManager(log_dir)
    return _global_log_manager


def reset_log_manager() -> None:
    global _global_log_manager
    if _global_log_manager:
        _global_log_manager.close()
    _global_log_manager = None


__all__ = [
    "SchlichtLogManager",
    "RunLogFormatter",
    "get_log_manager",
    "reset_log_manager",
]
