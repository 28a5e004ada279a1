"""
pyschlicht CLI 入口

流程: 解析参数 -> 加载 ``<cwd>/.env`` -> 设置日志级别 -> 准备运行目录与组件日志
-> 分派子命令 -> 把异常折算成退出码。
"""

from __future__ import annotations

import sys
import traceback
from typing import List, Optional

from ..core.logging_system import get_log_manager, reset_log_manager
from ..core.run_manager import get_default_run_manager
from ..shared.errors import BracketFailure, SchlichtError
from ..shared.logger import logger
from .args import parse_args
from .commands import (
    EXIT_REJECTED,
    EXIT_USAGE,
    cmd_bounds,
    cmd_figures,
    cmd_fuzz,
    cmd_radius,
    cmd_report,
    cmd_verify,
)
from .config import load_env_file
from .printer import print_error


def run(argv: List[str]) -> int:
    """执行一条命令并返回退出码 (不调用 sys.exit)"""
    options = parse_args(argv)
    load_env_file(override=options.dotenv_override)
    if options.log_level:
        logger.set_level(options.log_level)

    try:
        runs = get_default_run_manager(options.run_dir)
        log = get_log_manager(runs.log_dir)
        if log.log_dir != runs.log_dir:
            reset_log_manager()
            log = get_log_manager(runs.log_dir)
        if options.command == "verify":
            return cmd_verify(options, log)
        if options.command == "figures":
            return cmd_figures(options, log, runs)
        if options.command == "radius":
            return cmd_radius(options, log)
        if options.command == "bounds":
            return cmd_bounds(options, log)
        if options.command == "fuzz":
            return cmd_fuzz(options, log, runs)
        return cmd_report(options, log)
    except BracketFailure as exc:
        print_error(str(exc))
        return EXIT_REJECTED
    except (SchlichtError, ValueError, OSError) as exc:
        if logger.is_debug():
            logger.debug(traceback.format_exc())
        print_error(str(exc))
        return EXIT_USAGE


def main(argv: Optional[List[str]] = None) -> None:
    """同步入口 (console_scripts 调用)"""
    if argv is None:
        argv = sys.argv[1:]
    try:
        code = run(argv)
    except KeyboardInterrupt:
        code = 130
    sys.exit(code)


__all__ = ["main", "run"]
