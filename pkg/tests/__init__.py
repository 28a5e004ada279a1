"""
测试初始化文件
"""

__all__ = []
