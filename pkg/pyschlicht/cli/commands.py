"""
子命令实现

每个 ``cmd_*`` 接收解析后的参数, 把结果 JSON 写到 stdout 并返回退出码:

    0  成功 / 是成员
    1  参数、规格文件或 IO 错误
    2  不是成员 (Refuted / NonvanishingViolated), 或数值前提不成立 (BracketFailure)
    3  Inconclusive
    4  fuzz 中有定理结论检验失败
"""

from __future__ import annotations

import argparse
from pathlib import Path
from typing import Any, Callable, Dict, List

import numpy as np

from ..core.analytic_map import AnalyticMap
from ..core.bounds import (
    PhiParameters,
    abc_check,
    alpha_to_a2,
    conjecture_bound,
    extremal_theta_details,
    marx_alpha,
    phi_value,
    radius_lhs,
    schwarz_pick_integral_bound,
    solve_radius,
    tail_sum,
)
from ..core.limacon import (
    FIGURE_LIMACON_PAIRS,
    FIGURE_TARGET_LAMBDAS,
    Limacon,
    implicit_residual,
    parametric_point,
    region_hypothesis_holds,
    subordination_check,
    target_curve_point,
)
from ..core.logging_system import SchlichtLogManager
from ..core.membership import membership_radius, verdict
from ..core.run_manager import SchlichtRunManager
from ..core.schwarz import lambda_value
from ..lab.fuzz import FuzzRecord, load_records, persist_run, run_fuzz, scan_records, summarize
from ..shared.errors import (
    BracketFailure,
    BranchBase,
    NonvanishingViolated,
    ParameterOutOfRange,
    SpecFileError,
    ValueAttained,
)
from ..shared.logger import logger
from ..shared.types import MEMBER_STATUSES, REJECT_STATUSES
from ..shared.utils import dumps_canonical, format_float, linspace_angles
from .config import create_fuzz_config
from .printer import emit_json, print_fuzz_summary, print_verdict_line
from .spec_file import BuiltinSpec, build_map, load_spec

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_REJECTED = 2
EXIT_INCONCLUSIVE = 3
EXIT_FUZZ_FAILURES = 4

# 残差超过这个值的曲线行视为生成错误
FIGURE_RESIDUAL_TOL = 1e-9

_PARAMETRIC_BUILTINS = ("f_lambda", "extremal")


# ============================================================================
# verify
# ============================================================================

def _load_map(options: argparse.Namespace) -> AnalyticMap:
    if options.spec and options.builtin:
        raise SpecFileError("give either a spec file or --builtin, not both")
    if options.builtin:
        params: Dict[str, Any] = {"lam": options.lam} if options.builtin in _PARAMETRIC_BUILTINS else {}
        return build_map(BuiltinSpec(kind="builtin", name=options.builtin, params=params), options.order)
    if options.spec:
        return build_map(load_spec(options.spec), options.order)
    raise SpecFileError("no function given: pass a spec file or --builtin NAME")


def cmd_verify(options: argparse.Namespace, log: SchlichtLogManager) -> int:
    lam = lambda_value(options.lam)
    try:
        f = _load_map(options)
    except (NonvanishingViolated, BranchBase, ValueAttained) as exc:
        # 变换在构造阶段就失败, 函数不在类中; BranchBase 只在 z/f 有零点时抛出
        status = "Refuted" if isinstance(exc, ValueAttained) else "NonvanishingViolated"
        payload = {"name": options.builtin or options.spec, "status": status, "lambda": lam,
                   "evidence": {"test": "transform", "error": type(exc).__name__, "reason": str(exc)}}
        emit_json(payload)
        log.verify("verify rejected during construction", **payload)
        return EXIT_REJECTED

    result = verdict(f, lam)
    payload: Dict[str, Any] = {"name": f.name or options.builtin or options.spec, **result.to_dict()}

    if options.membership_radius:
        payload["membership_radius"] = membership_radius(f, lam)
    if options.subordination and result.status not in REJECT_STATUSES:
        hypothesis = region_hypothesis_holds(f, lam)
        payload["subordination"] = {
            variant: subordination_check(f, lam, variant=variant, hypothesis=hypothesis).to_dict()
            for variant in ("plain", "a2_shifted", "lambda_shifted")
        }

    emit_json(payload)
    print_verdict_line(str(payload["name"]), result.status)
    log.verify("verdict", **payload)

    if result.status in MEMBER_STATUSES:
        return EXIT_OK
    if result.status in REJECT_STATUSES:
        return EXIT_REJECTED
    return EXIT_INCONCLUSIVE


# ============================================================================
# figures
# ============================================================================

def _write_curve(path: Path, alpha: np.ndarray, x: np.ndarray, y: np.ndarray) -> None:
    lines = ["alpha,x,y"]
    lines.extend(
        f"{format_float(a)},{format_float(u)},{format_float(v)}" for a, u, v in zip(alpha, x, y)
    )
    path.write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")


def _tag(value: float) -> str:
    return f"{value:g}"


def cmd_figures(options: argparse.Namespace, log: SchlichtLogManager, runs: SchlichtRunManager) -> int:
    if options.rows < 1:
        raise ParameterOutOfRange(f"rows must be >= 1, got {options.rows}")
    out_dir = Path(options.out) if options.out else runs.figures_dir
    out_dir.mkdir(parents=True, exist_ok=True)
    alpha = linspace_angles(options.rows)

    files: List[Dict[str, Any]] = []
    if options.kind == "limacon":
        if (options.lam is None) != (options.l is None):
            raise ParameterOutOfRange("--lambda and --l must be given together")
        pairs = [(options.lam, options.l)] if options.lam is not None else list(FIGURE_LIMACON_PAIRS)
        for lam, l in pairs:
            curve = Limacon(lam, l, options.beta)
            x, y = parametric_point(curve, alpha)
            worst = float(np.max(np.abs(implicit_residual(curve, x, y))))
            if worst > FIGURE_RESIDUAL_TOL:
                logger.warning(f"limacon (lambda={lam}, l={l}): implicit residual {worst:.3e}")
            name = f"limacon_lambda{_tag(lam)}_l{_tag(l)}"
            if options.beta:
                name += f"_beta{_tag(options.beta)}"
            path = out_dir / f"{name}.csv"
            _write_curve(path, alpha, x, y)
            files.append({"path": str(path), "lambda": lam, "l": l, "beta": options.beta,
                          "max_implicit_residual": worst})
    else:
        lams = [options.lam] if options.lam is not None else list(FIGURE_TARGET_LAMBDAS)
        for lam in lams:
            x, y = target_curve_point(lam, alpha)
            path = out_dir / f"limacon2_lambda{_tag(lam)}.csv"
            _write_curve(path, alpha, x, y)
            files.append({"path": str(path), "lambda": lam})

    payload = {"kind": options.kind, "rows": options.rows, "files": files}
    emit_json(payload)
    log.figures("figures written", **payload)
    return EXIT_OK


# ============================================================================
# radius / bounds
# ============================================================================

def cmd_radius(options: argparse.Namespace, log: SchlichtLogManager) -> int:
    kwargs: Dict[str, Any] = {"tol": options.tol, "shift": options.shift}
    if options.bracket is not None:
        kwargs["bracket"] = tuple(options.bracket)
    try:
        r0 = solve_radius(**kwargs)
    except BracketFailure as exc:
        payload = {"name": "radius", "error": "BracketFailure", "detail": str(exc),
                   "bracket": list(exc.bracket) if exc.bracket else None}
        emit_json(payload)
        log.radius("bracket failure", **payload)
        raise
    payload = {
        "name": "radius",
        "value": r0,
        "r0": r0,
        "residual": radius_lhs(r0) + options.shift,
        "tolerance": options.tol,
        "shift": options.shift,
    }
    emit_json(payload)
    log.radius("radius solved", **payload)
    return EXIT_OK


def _need(options: argparse.Namespace, *names: str) -> None:
    missing = [f"--{n.replace('_', '-') if n != 'lam' else 'lambda'}" for n in names
               if getattr(options, n) is None]
    if missing:
        raise ParameterOutOfRange(f"bounds {options.name} needs {', '.join(missing)}")


def _bound_marx(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "x")
    return {"value": marx_alpha(o.x), "x": o.x}


def _bound_alpha_to_a2(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "alpha")
    value = alpha_to_a2(o.alpha)
    return {"value": value, "alpha": o.alpha, "residual": marx_alpha(value) - o.alpha if 0 <= value <= 2 else None}


def _bound_phi(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "alpha", "t")
    params = PhiParameters.build(o.alpha, a2=o.a2)
    return {"value": phi_value(params, o.t), "t": o.t, "params": params.to_dict()}


def _bound_abc(o: argparse.Namespace) -> Dict[str, Any]:
    report = abc_check(o.step)
    return {"value": min(report.min_A, report.min_B, report.min_C), "tolerance": report.tol,
            "report": report.to_dict()}


def _bound_tail_sum(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "r")
    closed = tail_sum(o.r)
    out: Dict[str, Any] = {"value": closed, "r": o.r}
    if o.terms is not None:
        partial = tail_sum(o.r, mode="partial", n_terms=o.terms)
        out.update(partial=partial, residual=closed - partial)
    return out


def _bound_theta(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "a2", "lam")
    details = extremal_theta_details(o.a2, o.lam)
    return {"value": details.value, "clamped": details.clamped, "constrained": details.constrained,
            "a2": o.a2, "lambda": o.lam}


def _bound_conjecture(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "n", "lam")
    return {"value": conjecture_bound(o.n, o.lam), "n": o.n, "lambda": o.lam}


def _bound_schwarz_pick(o: argparse.Namespace) -> Dict[str, Any]:
    _need(o, "alpha")
    return {"value": schwarz_pick_integral_bound(o.alpha), "a": o.alpha}


_BOUNDS: Dict[str, Callable[[argparse.Namespace], Dict[str, Any]]] = {
    "marx": _bound_marx,
    "alpha-to-a2": _bound_alpha_to_a2,
    "phi": _bound_phi,
    "abc": _bound_abc,
    "tail-sum": _bound_tail_sum,
    "theta": _bound_theta,
    "conjecture": _bound_conjecture,
    "schwarz-pick": _bound_schwarz_pick,
}


def cmd_bounds(options: argparse.Namespace, log: SchlichtLogManager) -> int:
    body = _BOUNDS[options.name](options)
    payload: Dict[str, Any] = {"name": options.name, "residual": None, "tolerance": None, **body}
    emit_json(payload)
    log.log("bounds", "bound computed", **payload)
    if options.name == "abc" and not body["report"]["ok"]:
        return EXIT_REJECTED
    return EXIT_OK


# ============================================================================
# fuzz / report
# ============================================================================

def cmd_fuzz(options: argparse.Namespace, log: SchlichtLogManager, runs: SchlichtRunManager) -> int:
    config = create_fuzz_config(options)
    if options.out:
        jsonl = Path(options.out)
        jsonl.parent.mkdir(parents=True, exist_ok=True)
    else:
        jsonl, _ = runs.fuzz_run_paths(config.seed)

    log.fuzz("fuzz started", config=config.to_dict(), jsonl=str(jsonl))
    run = run_fuzz(config, threads=options.threads)
    summary = persist_run(run.records, jsonl, seed=config.seed, config=config)
    if options.scan is not None:
        summary["conjecture"] = scan_records(run.records, options.scan).to_dict()

    emit_json(summary)
    print_fuzz_summary(summary, str(jsonl))
    log.fuzz("fuzz finished", records=summary["records"], failures=summary["failure_count"],
             pass_rate=summary["pass_rate"])
    return EXIT_FUZZ_FAILURES if summary["failure_count"] else EXIT_OK


def cmd_report(options: argparse.Namespace, log: SchlichtLogManager) -> int:
    records: List[FuzzRecord] = []
    sources: List[Dict[str, Any]] = []
    for path in options.runs:
        rows = [FuzzRecord.from_dict(row) for row in load_records(path)]
        sources.append({"path": str(path), "records": len(rows)})
        records.extend(rows)

    seeds = sorted({rec.seed for rec in records})
    summary = summarize(records, seed=seeds[0] if len(seeds) == 1 else None)
    summary["runs"] = sources
    summary["seeds"] = seeds
    if options.scan is not None:
        summary["conjecture"] = scan_records(records, options.scan).to_dict()

    if options.out:
        Path(options.out).write_text(dumps_canonical(summary) + "\n", encoding="utf-8", newline="\n")
    emit_json(summary)
    log.fuzz("report aggregated", runs=len(sources), records=len(records))
    return EXIT_OK


__all__ = [
    "EXIT_OK",
    "EXIT_USAGE",
    "EXIT_REJECTED",
    "EXIT_INCONCLUSIVE",
    "EXIT_FUZZ_FAILURES",
    "cmd_verify",
    "cmd_figures",
    "cmd_radius",
    "cmd_bounds",
    "cmd_fuzz",
    "cmd_report",
]
