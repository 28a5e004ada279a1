"""
命令行参数解析

子命令:
    verify   判定一个函数是否属于 U(λ)
    figures  输出蜗线与从属目标曲线的 CSV
    radius   求半径方程的根 r₀
    bounds   计算标量上下界 (Marx 下界、A/B/C 账本、尾和、极值条件、猜想上界)
    fuzz     随机成员的定理结论检验
    report   聚合若干次 fuzz 运行
"""

from __future__ import annotations

import argparse
import sys
from typing import NoReturn, Optional, Sequence

BOUND_NAMES = ("marx", "alpha-to-a2", "phi", "abc", "tail-sum", "theta", "conjecture", "schwarz-pick")


class SchlichtArgumentParser(argparse.ArgumentParser):
    """参数错误以退出码 1 结束 (2 留给 "不是成员")"""

    def error(self, message: str) -> NoReturn:
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--log-level", dest="log_level", default=None,
                        help="DEBUG / INFO / WARNING / ERROR (default: $SCHLICHT_U_LOG_LEVEL or INFO).")
    parser.add_argument("--run-dir", dest="run_dir", default=None,
                        help="Base directory for schlicht_run/ (default: $SCHLICHT_U_RUN_DIR or ./schlicht_run).")
    parser.add_argument("--dotenv-override", dest="dotenv_override", action="store_true", default=False,
                        help="Let <cwd>/.env override existing environment variables.")


def build_parser() -> argparse.ArgumentParser:
    parser = SchlichtArgumentParser(
        prog="pyschlicht",
        description="Numerical toolkit for the univalent class U(lambda).",
        epilog=(
            "Examples:\n"
            "  pyschlicht verify --builtin koebe --lambda 1\n"
            "  pyschlicht verify spec.json --lambda 0.5\n"
            "  pyschlicht figures --kind limacon --out ./figs\n"
            "  pyschlicht radius --tol 1e-12\n"
            "  pyschlicht bounds marx --x 1\n"
            "  pyschlicht fuzz --seed 42 --count 1000 --lambda 1\n"
            "  pyschlicht report schlicht_run/fuzz/*.jsonl\n"
        ),
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True, parser_class=SchlichtArgumentParser)

    verify = sub.add_parser("verify", help="Membership verdict for one function.")
    _add_common(verify)
    verify.add_argument("spec", nargs="?", default=None, help="Function spec JSON file.")
    verify.add_argument("--builtin", default=None, help="Catalog name instead of a spec file.")
    verify.add_argument("--lambda", dest="lam", type=float, default=1.0, help="Class parameter (default 1).")
    verify.add_argument("--order", type=int, default=None, help="Truncation order N.")
    verify.add_argument("--membership-radius", dest="membership_radius", action="store_true",
                        help="Also report the largest r with sup|U_f| < lambda on |z| < r.")
    verify.add_argument("--subordination", action="store_true",
                        help="Also run the subordination checks at r = 0.99.")

    figures = sub.add_parser("figures", help="Emit limacon CSV curves.")
    _add_common(figures)
    figures.add_argument("--kind", choices=("limacon", "limacon2"), default="limacon")
    figures.add_argument("--lambda", dest="lam", type=float, default=None)
    figures.add_argument("--l", dest="l", type=float, default=None)
    figures.add_argument("--beta", type=float, default=0.0)
    figures.add_argument("--rows", type=int, default=2048, help="Rows per curve (default 2048).")
    figures.add_argument("--out", default=None, help="Output directory (default schlicht_run/figures).")

    radius = sub.add_parser("radius", help="Root of the radius equation.")
    _add_common(radius)
    radius.add_argument("--tol", type=float, default=1e-12)
    radius.add_argument("--bracket", type=float, nargs=2, default=None, metavar=("LO", "HI"))
    radius.add_argument("--shift", type=float, default=0.0, help="Solve lhs(r) + shift = 0.")

    bounds = sub.add_parser("bounds", help="Scalar bounds.")
    _add_common(bounds)
    bounds.add_argument("name", choices=BOUND_NAMES)
    bounds.add_argument("--x", type=float, default=None)
    bounds.add_argument("--alpha", type=float, default=None)
    bounds.add_argument("--t", type=float, default=None)
    bounds.add_argument("--step", type=float, default=1e-4)
    bounds.add_argument("--r", type=float, default=None)
    bounds.add_argument("--terms", type=int, default=None, help="Partial tail sum up to N.")
    bounds.add_argument("--n", type=int, default=None)
    bounds.add_argument("--lambda", dest="lam", type=float, default=None)
    bounds.add_argument("--a2", type=float, default=None)

    fuzz = sub.add_parser("fuzz", help="Randomized theorem-conclusion checks.")
    _add_common(fuzz)
    fuzz.add_argument("--config", default=None, help="YAML config (${VAR} interpolated).")
    fuzz.add_argument("--seed", type=int, default=None)
    fuzz.add_argument("--count", type=int, default=None)
    fuzz.add_argument("--lambda", dest="lam", type=float, nargs="+", default=None)
    fuzz.add_argument("--order", type=int, default=None)
    fuzz.add_argument("--threads", type=int, default=None)
    fuzz.add_argument("--coefficients", type=int, default=None, help="Record a_2..a_K.")
    fuzz.add_argument("--scan", type=int, default=None, metavar="K",
                      help="Also scan |a_n| against the conjectured envelope for n <= K.")
    fuzz.add_argument("--out", default=None, help="JSONL output path.")

    report = sub.add_parser("report", help="Aggregate fuzz JSONL runs.")
    _add_common(report)
    report.add_argument("runs", nargs="+", help="JSONL files.")
    report.add_argument("--scan", type=int, default=None, metavar="K")
    report.add_argument("--out", default=None, help="Write the aggregate JSON here as well.")

    return parser


def parse_args(argv: Optional[Sequence[str]]) -> argparse.Namespace:
    return build_parser().parse_args(list(argv) if argv is not None else None)


__all__ = ["BOUND_NAMES", "SchlichtArgumentParser", "build_parser", "parse_args"]
