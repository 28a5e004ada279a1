"""
fuzz 配置工厂

把 ``CLI flag > YAML 字段 > 默认值`` 三层合并成一个 :class:`FuzzConfig`。
YAML 在解析前做 ``${VAR}`` 环境变量替换 (注释行跳过, 未定义的变量报错)。
"""

from __future__ import annotations

import argparse
import os
import re
from pathlib import Path
from typing import Any, Dict, Optional

import yaml
from dotenv import load_dotenv

from ..lab.fuzz import FuzzConfig
from ..shared.errors import SpecFileError
from ..shared.logger import logger

_ENV_VAR_RE = re.compile(r"\$\{([^}]+)\}")


def interpolate_env_vars(content: str) -> str:
    """把 ``${VAR}`` 替换成环境变量值; ``#`` 开头的行原样保留"""

    def _replace_line(line: str) -> str:
        if line.lstrip().startswith("#"):
            return line

        def repl(match: re.Match[str]) -> str:
            name = match.group(1).strip()
            value = os.environ.get(name)
            if value is None:
                raise SpecFileError(f'Environment variable "{name}" is not defined')
            return value

        return _ENV_VAR_RE.sub(repl, line)

    return "\n".join(_replace_line(line) for line in content.split("\n"))


def load_config_yaml(path: str) -> Dict[str, Any]:
    """
    读取 fuzz YAML 配置

    Raises:
        SpecFileError: YAML 语法错误或顶层不是映射
        OSError: 文件不可读
    """
    content = Path(path).read_text(encoding="utf-8")
    try:
        parsed = yaml.safe_load(interpolate_env_vars(content)) or {}
    except yaml.YAMLError as exc:
        raise SpecFileError(f"{path}: malformed YAML ({exc})") from exc
    if not isinstance(parsed, dict):
        raise SpecFileError(f"{path}: fuzz config must be a mapping")
    return parsed


def _pick(cli_value: Any, file_value: Any, default: Any) -> Any:
    """三层优先级: CLI > 配置文件 > 默认。``None`` 视为未设置。"""
    if cli_value is not None:
        return cli_value
    if file_value is not None:
        return file_value
    return default


def create_fuzz_config(options: argparse.Namespace) -> FuzzConfig:
    """
    合并命令行与 YAML 得到 :class:`FuzzConfig`

    Raises:
        ParameterOutOfRange: 字段取值非法 (λ ∉ (0, 1], count < 1, ...)
        SpecFileError: YAML 本身有问题
    """
    file_values: Dict[str, Any] = load_config_yaml(options.config) if options.config else {}
    defaults = FuzzConfig()
    merged = dict(file_values)
    merged["seed"] = _pick(options.seed, file_values.get("seed"), defaults.seed)
    merged["count"] = _pick(options.count, file_values.get("count"), defaults.count)
    merged["lambda_set"] = _pick(options.lam, file_values.get("lambda_set"), defaults.lambda_set)
    merged["order"] = _pick(options.order, file_values.get("order"), defaults.order)
    merged["threads"] = _pick(options.threads, file_values.get("threads"), defaults.threads)
    merged["coefficients"] = _pick(
        options.coefficients, file_values.get("coefficients"), defaults.coefficients
    )
    if options.scan is not None and merged["coefficients"] < options.scan:
        merged["coefficients"] = options.scan
    return FuzzConfig.from_dict(merged)


def load_env_file(override: bool = False, cwd: Optional[str] = None) -> Optional[str]:
    """加载 ``<cwd>/.env`` (若存在), 返回实际加载的路径"""
    dotenv_path = os.path.join(cwd or os.getcwd(), ".env")
    if not os.path.exists(dotenv_path):
        return None
    try:
        load_dotenv(dotenv_path, override=override)
    except Exception as exc:  # noqa: BLE001
        logger.warning(f"Failed to load .env: {exc}")
        return None
    logger.debug(f"Loaded env file: {dotenv_path}")
    return dotenv_path


__all__ = [
    "interpolate_env_vars",
    "load_config_yaml",
    "create_fuzz_config",
    "load_env_file",
]
