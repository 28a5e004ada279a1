"""
命令行输出

stdout 只放结果 JSON (一行一个文档, 17 位有效数字); 诊断信息走 stderr。
"""

from __future__ import annotations

import sys
from typing import Any, Dict

from ..shared.utils import dumps_canonical

# 状态字形, 只用于 stderr 的人读摘要
_GLYPH = {
    "CertifiedMember": "✔",
    "SampledMember": "✔",
    "Refuted": "✘",
    "NonvanishingViolated": "✘",
    "Inconclusive": "?",
}


def emit_json(payload: Any) -> None:
    sys.stdout.write(dumps_canonical(payload))
    sys.stdout.write("\n")
    sys.stdout.flush()


def print_error(message: str) -> None:
    """单行错误信息"""
    first = str(message).strip().splitlines()[0] if str(message).strip() else "error"
    print(f"pyschlicht: error: {first}", file=sys.stderr)


def print_verdict_line(name: str, status: str) -> None:
    print(f"{_GLYPH.get(status, '•')} {name}: {status}", file=sys.stderr)


def print_fuzz_summary(summary: Dict[str, Any], jsonl_path: str) -> None:
    """📊 汇总块 (stderr)"""
    print("\n📊 Fuzz Summary:", file=sys.stderr)
    print(f"   Records: {summary['records']}", file=sys.stderr)
    print(f"   Per lambda: {summary['per_lambda']}", file=sys.stderr)
    print(f"   Pass rate: {summary['pass_rate']}", file=sys.stderr)
    print(f"   Failures: {summary['failure_count']}", file=sys.stderr)
    print(f"   Near extremal: {summary['near_extremal']}", file=sys.stderr)
    print(f"   Records file: {jsonl_path}", file=sys.stderr)
    if summary["failures"]:
        print("\n❌ Failed checks:", file=sys.stderr)
        for item in summary["failures"][:20]:
            print(f"   #{item['index']} {item['check']} residual={item['residual']}", file=sys.stderr)
        if len(summary["failures"]) > 20:
            print(f"   ... {len(summary['failures']) - 20} more", file=sys.stderr)


__all__ = ["emit_json", "print_error", "print_verdict_line", "print_fuzz_summary"]
