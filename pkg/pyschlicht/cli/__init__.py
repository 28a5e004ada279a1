"""
pyschlicht 命令行

入口: ``pyschlicht <verify|figures|radius|bounds|fuzz|report> ...`` 或 ``python -m pyschlicht.cli ...``。
"""

from .main import main

__all__ = ["main"]
