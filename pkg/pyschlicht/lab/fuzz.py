"""
随机成员生成与定理结论批量检验

流程:
    1. :func:`sample_member` 按刻画 z/f = 1 − a₂z + λz∫ω 抽样, 用成员判定筛掉非成员;
    2. :func:`theorem_suite` 对每个成员逐条检验定理结论, 记录 "上界 − 实际值";
    3. :func:`run_fuzz` 把 (λ, 序号) 的任务分给线程池, 按序号合并;
    4. :func:`persist_run` 写 JSONL 与 summary, :func:`conjecture_scan` 统计 |a_n| 与猜想上界之比。

第 i 个样本只使用种子 ``mix_seed(seed, i)``, 输出与线程数无关。
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from pathlib import Path
from typing import Any, Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from ..core.analytic_map import AnalyticMap, from_characterization, taylor_coefficients
from ..core.bounds import conjecture_bound, marx_alpha
from ..core.catalog import extremal
from ..core.limacon import growth_bound_check, region_hypothesis_holds, subordination_check
from ..core.membership import MembershipVerdict, fekete_check, verdict
from ..core.schwarz import (
    BlaschkeGenerator,
    ConstantGenerator,
    PolynomialGenerator,
    SchwarzGenerator,
    lambda_value,
)
from ..core.transforms import Rotate, basic_transform, continued_root
from ..shared.env.settings import NumericSettings, get_global_settings
from ..shared.errors import ParameterOutOfRange, RejectionBudgetExceeded, SchlichtError, SpecFileError
from ..shared.logger import logger
from ..shared.types import MEMBER_STATUSES
from ..shared.utils import complex_from_json, complex_to_json, dumps_canonical, linspace_angles, mix_seed

SCHEMA_VERSION = 1

# 连续拒绝这么多次后放弃
REJECTION_BUDGET = 1000
# 残差 ≥ −RESIDUAL_TOL 视为通过
RESIDUAL_TOL = 1e-9
# |a₂| ≥ (1+λ)(1 − NEAR_EXTREMAL_REL) 视为接近极值
NEAR_EXTREMAL_REL = 1e-3
# 20% 的 a₂ 集中在 |a₂| = 1+λ 附近
BOUNDARY_BIAS = 0.2
CONJECTURE_TOL = 1e-9

GENERATOR_KINDS: Tuple[str, ...] = ("constant", "polynomial", "blaschke")
DEFAULT_GENERATOR_MIX: Dict[str, float] = {"constant": 0.4, "polynomial": 0.3, "blaschke": 0.3}


# ============================================================================
# 配置
# ============================================================================

@dataclass
class FuzzConfig:
    """一次 fuzz 运行的全部参数; 相同配置 + 相同种子得到相同字节"""
    seed: int = 0
    count: int = 100
    lambda_set: Tuple[float, ...] = (1.0,)
    generator_mix: Dict[str, float] = field(default_factory=lambda: dict(DEFAULT_GENERATOR_MIX))
    order: Optional[int] = None
    radii: Tuple[float, ...] = (0.9, 0.99)
    subordination_radius: float = 0.99
    marx_radius: float = 0.99
    coefficients: int = 8
    extremal_phis: Tuple[float, ...] = (0.0,)
    verdict_radii: Tuple[float, ...] = (0.99, 0.999)
    samples: int = 4096
    marx_exploratory: bool = False
    threads: Optional[int] = None

    def __post_init__(self):
        self.seed = int(self.seed)
        self.count = int(self.count)
        if self.count < 1:
            raise ParameterOutOfRange(f"count must be >= 1, got {self.count}")
        self.lambda_set = tuple(lambda_value(float(lam)) for lam in self.lambda_set)
        if not self.lambda_set:
            raise ParameterOutOfRange("lambda_set must not be empty")
        unknown = set(self.generator_mix) - set(GENERATOR_KINDS)
        if unknown:
            raise ParameterOutOfRange(f"unknown generator kinds: {sorted(unknown)}")
        weights = [float(w) for w in self.generator_mix.values()]
        if any(w < 0 for w in weights) or abs(sum(weights) - 1.0) > 1e-9:
            raise ParameterOutOfRange(f"generator weights must be >= 0 and sum to 1, got {self.generator_mix}")
        self.generator_mix = {k: float(self.generator_mix[k]) for k in GENERATOR_KINDS if k in self.generator_mix}
        for name in ("radii", "verdict_radii"):
            values = tuple(float(r) for r in getattr(self, name))
            if not values or any(not 0.0 < r < 1.0 for r in values):
                raise ParameterOutOfRange(f"{name} must be a non-empty subset of (0, 1), got {values}")
            setattr(self, name, values)
        for name in ("subordination_radius", "marx_radius"):
            r = float(getattr(self, name))
            if not 0.0 < r < 1.0:
                raise ParameterOutOfRange(f"{name} must lie in (0, 1), got {r}")
            setattr(self, name, r)
        if self.coefficients < 3:
            raise ParameterOutOfRange(f"coefficients must be >= 3, got {self.coefficients}")
        self.extremal_phis = tuple(float(p) for p in self.extremal_phis)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FuzzConfig":
        """从 YAML/JSON 映射构造, 忽略未知键并打警告"""
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            logger.warning(f"Ignoring unknown fuzz config keys: {sorted(extra)}")
        kwargs = {k: v for k, v in data.items() if k in known and v is not None}
        for key in ("lambda_set", "radii", "extremal_phis", "verdict_radii"):
            if key in kwargs and not isinstance(kwargs[key], (list, tuple)):
                kwargs[key] = (kwargs[key],)
        return cls(**kwargs)

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data.pop("threads")
        return data

    def numeric_settings(self) -> NumericSettings:
        return get_global_settings().with_overrides(
            order=self.order, sweep_radii=self.verdict_radii, sweep_samples=self.samples
        )


# ============================================================================
# 记录
# ============================================================================

@dataclass
class FuzzRecord:
    """单个成员的检验记录"""
    lam: float
    descriptor: Dict[str, Any]
    verdict: str
    coefficients: List[complex]
    residuals: Dict[str, Optional[float]]
    passed: Dict[str, Optional[bool]]
    near_extremal: bool = False
    boundary_marginal: bool = False
    errors: Dict[str, str] = field(default_factory=dict)
    source: str = "random"
    phi: Optional[float] = None
    index: int = 0
    seed: int = 0
    sample_seed: Optional[int] = None
    rejections: int = 0
    exploratory: Dict[str, float] = field(default_factory=dict)

    @property
    def failures(self) -> List[str]:
        return sorted(name for name, ok in self.passed.items() if ok is False)

    @property
    def a2(self) -> complex:
        return self.coefficients[0]

    def to_dict(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "schema": SCHEMA_VERSION,
            "index": self.index,
            "seed": self.seed,
            "sample_seed": self.sample_seed,
            "source": self.source,
            "phi": self.phi,
            "lambda": self.lam,
            "descriptor": self.descriptor,
            "verdict": self.verdict,
            "rejections": self.rejections,
            # a₂, a₃, …, a_K
            "coefficients": [complex_to_json(c) for c in self.coefficients],
            "residuals": self.residuals,
            "passed": self.passed,
            "near_extremal": self.near_extremal,
            "boundary_marginal": self.boundary_marginal,
        }
        if self.errors:
            data["errors"] = self.errors
        if self.exploratory:
            data["exploratory"] = self.exploratory
        return data

    def to_json(self) -> str:
        return dumps_canonical(self.to_dict())

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "FuzzRecord":
        """JSONL 的一行还原成记录; schema 不符时抛 SpecFileError"""
        if data.get("schema") != SCHEMA_VERSION:
            raise SpecFileError(f"unsupported record schema {data.get('schema')!r}, expected {SCHEMA_VERSION}")
        try:
            return cls(
                lam=float(data["lambda"]),
                descriptor=dict(data["descriptor"]),
                verdict=str(data["verdict"]),
                coefficients=[complex_from_json(c) for c in data["coefficients"]],
                residuals=dict(data["residuals"]),
                passed=dict(data["passed"]),
                near_extremal=bool(data.get("near_extremal", False)),
                boundary_marginal=bool(data.get("boundary_marginal", False)),
                errors=dict(data.get("errors", {})),
                source=str(data.get("source", "random")),
                phi=data.get("phi"),
                index=int(data.get("index", 0)),
                seed=int(data.get("seed", 0)),
                sample_seed=data.get("sample_seed"),
                rejections=int(data.get("rejections", 0)),
                exploratory=dict(data.get("exploratory", {})),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise SpecFileError(f"malformed fuzz record: {exc}") from exc


# ============================================================================
# 抽样
# ============================================================================

def _disk_point(rng: np.random.Generator, radius: float) -> complex:
    return complex(radius * math.sqrt(rng.uniform()) * np.exp(2j * math.pi * rng.uniform()))


def draw_a2(rng: np.random.Generator, lam: float) -> complex:
    """80% 在 |a₂| ≤ 1+λ 上均匀, 20% 集中在 |a₂| = 1+λ 附近"""
    if rng.uniform() < BOUNDARY_BIAS:
        r = (1.0 + lam) * (1.0 - NEAR_EXTREMAL_REL * rng.uniform())
        return complex(r * np.exp(2j * math.pi * rng.uniform()))
    return _disk_point(rng, 1.0 + lam)


def draw_generator(rng: np.random.Generator, mix: Mapping[str, float]) -> SchwarzGenerator:
    """按 generator_mix 的权重抽一个 ω ∈ B"""
    kinds = list(mix)
    kind = kinds[int(rng.choice(len(kinds), p=np.asarray([mix[k] for k in kinds])))]
    if kind == "constant":
        # 四分之一取单位圆上的常数 (极值情形)
        if rng.uniform() < 0.25:
            return ConstantGenerator(complex(np.exp(2j * math.pi * rng.uniform())))
        return ConstantGenerator(_disk_point(rng, 1.0))
    if kind == "polynomial":
        degree = int(rng.integers(1, 5))
        coeffs = rng.normal(size=degree + 1) + 1j * rng.normal(size=degree + 1)
        return PolynomialGenerator(coeffs)
    zeros = [_disk_point(rng, 0.9) for _ in range(int(rng.integers(1, 4)))]
    return BlaschkeGenerator(zeros, float(2.0 * math.pi * rng.uniform()))


@dataclass
class SampledCandidate:
    f: AnalyticMap
    verdict: MembershipVerdict
    rejections: int


def screen(f: AnalyticMap, lam: float, settings: Optional[NumericSettings] = None) -> MembershipVerdict:
    """成员判定; 只有 CertifiedMember / SampledMember 会被接受"""
    return verdict(f, lam, settings)


def sample_member(config: FuzzConfig, rng: np.random.Generator, lam: Optional[float] = None,
                  settings: Optional[NumericSettings] = None) -> SampledCandidate:
    """
    抽样直到得到一个成员

    Raises:
        RejectionBudgetExceeded: 连续 1000 次被拒
    """
    lam_v = lambda_value(lam if lam is not None else config.lambda_set[0])
    settings = settings or config.numeric_settings()
    for attempt in range(REJECTION_BUDGET):
        a2 = draw_a2(rng, lam_v)
        omega = draw_generator(rng, config.generator_mix)
        f = from_characterization(a2, lam_v, omega, order=settings.order)
        result = screen(f, lam_v, settings)
        if result.status in MEMBER_STATUSES:
            return SampledCandidate(f, result, attempt)
        logger.debug(f"rejected candidate a2={a2:.6g} ({omega.kind}): {result.status}")
    raise RejectionBudgetExceeded(
        f"{REJECTION_BUDGET} consecutive rejections at lambda={lam_v}", lam=lam_v
    )


# ============================================================================
# 定理检验
# ============================================================================

def real_a2_rotation(f: AnalyticMap) -> AnalyticMap:
    """旋转使 a₂ 为非负实数"""
    a2 = f.a2
    if abs(a2) <= 1e-15:
        return f
    return basic_transform(f, Rotate(-math.atan2(a2.imag, a2.real)))


def min_real_sqrt(f: AnalyticMap, r: float, m: int = 4096) -> float:
    """min_{|z|=r} Re √(f(z)/z), 分支沿射线从 z = 0 处的 1 延拓"""
    z = r * np.exp(1j * linspace_angles(m))
    root = continued_root(f.q, z, 2)
    return float(np.min((1.0 / root).real))


def _run_check(name: str, fn: Callable[[], Optional[float]], residuals: Dict[str, Optional[float]],
               passed: Dict[str, Optional[bool]], errors: Dict[str, str]) -> None:
    try:
        value = fn()
    except SchlichtError as exc:
        residuals[name] = None
        passed[name] = False
        errors[name] = f"{type(exc).__name__}: {exc}"
        return
    residuals[name] = value
    passed[name] = None if value is None else bool(value >= -RESIDUAL_TOL)


def theorem_suite(f: AnalyticMap, lam: float, config: Optional[FuzzConfig] = None) -> FuzzRecord:
    """
    对一个成员逐条检验定理结论, 残差 = 上界 − 实际值

    - a2_bound            1+λ − |a₂|
    - fekete              λ − |a₃ − a₂²|
    - growth_r{r}         (1+λr)(1+r) − 1 − max_{|z|=r}|z/f − 1|
    - subordination       z/f − 1 落在 (1+λ)u + λu² 的像内 (1 − 最差原像模);
                          仅 λ = 1 计入检验, λ < 1 时记在 exploratory 里
    - subordination_shift z/f + a₂z − 1 落在 2λu + λu² 的像内
    - region              2λ − |a₂ + (1−λ)|, 仅当 z/f ≠ (1−λ)(1+z) 已被确认
    - region_subordination z/f − (1−λ)z − 1 落在 2λu + λu² 的像内, 条件同上
    - marx                min Re√(f/z) − α(|a₂|), 仅 λ = 1

    失败只记录, 不抛异常。
    """
    config = config or FuzzConfig()
    lam_v = lambda_value(lam)
    residuals: Dict[str, Optional[float]] = {}
    passed: Dict[str, Optional[bool]] = {}
    errors: Dict[str, str] = {}
    exploratory: Dict[str, float] = {}

    coeffs = taylor_coefficients(f, config.coefficients)[1:]
    a2 = coeffs[0]
    r_sub = config.subordination_radius

    _run_check("a2_bound", lambda: 1.0 + lam_v - abs(a2), residuals, passed, errors)
    _run_check("fekete", lambda: lam_v - fekete_check(f), residuals, passed, errors)
    for r in config.radii:
        _run_check(f"growth_r{r:g}", lambda r=r: -growth_bound_check(f, lam_v, r, config.samples),
                   residuals, passed, errors)

    def plain_subordination() -> float:
        return 1.0 - subordination_check(f, lam_v, r_sub, variant="plain").worst_preimage

    if lam_v == 1.0:
        _run_check("subordination", plain_subordination, residuals, passed, errors)
    else:
        # λ < 1 时抽样已找到落在 s(𝔻) 之外的成员, 只记录残差
        try:
            exploratory["subordination"] = plain_subordination()
        except SchlichtError as exc:
            logger.debug(f"exploratory subordination check failed: {exc}")

    _run_check(
        "subordination_shift",
        lambda: 1.0 - subordination_check(f, lam_v, r_sub, variant="a2_shifted").worst_preimage,
        residuals, passed, errors,
    )

    if region_hypothesis_holds(f, lam_v):
        _run_check("region", lambda: 2.0 * lam_v - abs(a2 + (1.0 - lam_v)), residuals, passed, errors)
        _run_check(
            "region_subordination",
            lambda: 1.0 - subordination_check(f, lam_v, r_sub, variant="lambda_shifted", hypothesis=True).worst_preimage,
            residuals, passed, errors,
        )
    else:
        residuals["region"] = residuals["region_subordination"] = None
        passed["region"] = passed["region_subordination"] = None

    def marx_residual() -> float:
        rotated = real_a2_rotation(f)
        x = min(abs(rotated.a2), 2.0)
        return min_real_sqrt(rotated, config.marx_radius, config.samples) - marx_alpha(x)

    if lam_v == 1.0:
        _run_check("marx", marx_residual, residuals, passed, errors)
    elif config.marx_exploratory and abs(a2) <= 2.0:
        try:
            exploratory["marx"] = marx_residual()
        except SchlichtError as exc:
            logger.debug(f"exploratory marx check failed: {exc}")

    near = abs(a2) >= (1.0 + lam_v) * (1.0 - NEAR_EXTREMAL_REL)
    return FuzzRecord(
        lam=lam_v,
        descriptor=f.describe(),
        verdict="",
        coefficients=coeffs,
        residuals=residuals,
        passed=passed,
        near_extremal=near,
        boundary_marginal=near and lam_v < 1.0,
        errors=errors,
        exploratory=exploratory,
    )


# ============================================================================
# 运行
# ============================================================================

@dataclass(frozen=True)
class _Task:
    index: int
    lam: float
    source: str
    phi: Optional[float] = None


def plan_tasks(config: FuzzConfig) -> List[_Task]:
    """每个 λ: 先是极值族成员, 再是 count 个随机成员"""
    tasks: List[_Task] = []
    for lam in config.lambda_set:
        for phi in config.extremal_phis:
            tasks.append(_Task(len(tasks), lam, "extremal", phi))
        for _ in range(config.count):
            tasks.append(_Task(len(tasks), lam, "random"))
    return tasks


def run_task(config: FuzzConfig, task: _Task, settings: Optional[NumericSettings] = None) -> FuzzRecord:
    settings = settings or config.numeric_settings()
    sample_seed: Optional[int] = None
    rejections = 0
    if task.source == "extremal":
        f = extremal(task.lam, task.phi or 0.0, order=settings.order)
        member = screen(f, task.lam, settings)
    else:
        sample_seed = mix_seed(config.seed, task.index)
        candidate = sample_member(config, np.random.default_rng(sample_seed), task.lam, settings)
        f, member, rejections = candidate.f, candidate.verdict, candidate.rejections
    record = theorem_suite(f, task.lam, config)
    record.verdict = member.status
    record.index = task.index
    record.seed = config.seed
    record.sample_seed = sample_seed
    record.source = task.source
    record.phi = task.phi
    record.rejections = rejections
    return record


@dataclass
class FuzzRun:
    config: FuzzConfig
    records: List[FuzzRecord]

    @property
    def failures(self) -> List[Tuple[int, str]]:
        return [(rec.index, name) for rec in self.records for name in rec.failures]

    def summary(self) -> Dict[str, Any]:
        return summarize(self.records, seed=self.config.seed, config=self.config)


def run_fuzz(config: FuzzConfig, threads: Optional[int] = None,
             progress_every: int = 1000) -> FuzzRun:
    """按任务序号并行执行, 结果按序号合并"""
    settings = config.numeric_settings()
    workers = max(1, int(threads or config.threads or settings.threads))
    tasks = plan_tasks(config)
    logger.info(f"fuzz: {len(tasks)} tasks, lambdas={list(config.lambda_set)}, seed={config.seed}, threads={workers}")

    records: List[FuzzRecord] = []
    if workers == 1:
        for task in tasks:
            records.append(run_task(config, task, settings))
            if progress_every and len(records) % progress_every == 0:
                logger.info(f"fuzz: {len(records)}/{len(tasks)} records")
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            for record in pool.map(lambda t: run_task(config, t, settings), tasks):
                records.append(record)
                if progress_every and len(records) % progress_every == 0:
                    logger.info(f"fuzz: {len(records)}/{len(tasks)} records")
    records.sort(key=lambda rec: rec.index)
    return FuzzRun(config, records)


def replay_record(data: Mapping[str, Any], config: Optional[FuzzConfig] = None) -> FuzzRecord:
    """由 JSONL 中的一行重新抽样并检验, 应与原记录逐字节一致"""
    config = config or FuzzConfig(seed=int(data["seed"]), lambda_set=(float(data["lambda"]),))
    phi = data.get("phi")
    task = _Task(int(data["index"]), float(data["lambda"]), str(data["source"]),
                 None if phi is None else float(phi))
    return run_task(config, task)


# ============================================================================
# 汇总与持久化
# ============================================================================

def _exploratory_violations(records: Sequence[FuzzRecord]) -> Dict[str, int]:
    """exploratory 残差低于 −RESIDUAL_TOL 的记录数, 按检验名"""
    counts: Dict[str, int] = {}
    for rec in records:
        for name, value in rec.exploratory.items():
            counts.setdefault(name, 0)
            if value < -RESIDUAL_TOL:
                counts[name] += 1
    return dict(sorted(counts.items()))


def summarize(records: Sequence[FuzzRecord], seed: Optional[int] = None,
              config: Optional[FuzzConfig] = None) -> Dict[str, Any]:
    """通过率、最差残差、失败清单与回放所需的种子"""
    checks: Dict[str, Dict[str, Any]] = {}
    per_lambda: Dict[str, int] = {}
    failures: List[Dict[str, Any]] = []
    for rec in records:
        per_lambda[repr(rec.lam)] = per_lambda.get(repr(rec.lam), 0) + 1
        for name, ok in rec.passed.items():
            entry = checks.setdefault(name, {"checked": 0, "passed": 0, "worst_residual": None, "worst_index": None})
            if ok is None:
                continue
            entry["checked"] += 1
            entry["passed"] += int(ok)
            value = rec.residuals.get(name)
            if value is not None and (entry["worst_residual"] is None or value < entry["worst_residual"]):
                entry["worst_residual"] = value
                entry["worst_index"] = rec.index
        for name in rec.failures:
            failures.append({"index": rec.index, "check": name, "residual": rec.residuals.get(name),
                             "error": rec.errors.get(name)})
    for entry in checks.values():
        entry["pass_rate"] = entry["passed"] / entry["checked"] if entry["checked"] else None

    total_checks = sum(e["checked"] for e in checks.values())
    total_passed = sum(e["passed"] for e in checks.values())
    summary: Dict[str, Any] = {
        "schema": SCHEMA_VERSION,
        "seed": seed,
        "records": len(records),
        "per_lambda": dict(sorted(per_lambda.items())),
        "checks": dict(sorted(checks.items())),
        "pass_rate": total_passed / total_checks if total_checks else 1.0,
        "failure_count": len(failures),
        "failures": failures,
        "near_extremal": sum(1 for rec in records if rec.near_extremal),
        "boundary_marginal": sum(1 for rec in records if rec.boundary_marginal),
        "exploratory_violations": _exploratory_violations(records),
    }
    if config is not None:
        summary["config"] = config.to_dict()
    return summary


def summary_path_for(path: Union[str, Path]) -> Path:
    p = Path(path)
    return p.with_name(p.stem + ".summary.json")


def persist_run(records: Sequence[FuzzRecord], path: Union[str, Path], seed: Optional[int] = None,
                config: Optional[FuzzConfig] = None) -> Dict[str, Any]:
    """
    每条记录一行 JSON (JSONL), 同名 ``.summary.json`` 写汇总

    Raises:
        OSError: 路径不可写
    """
    p = Path(path)
    with p.open("w", encoding="utf-8", newline="\n") as fh:
        for rec in records:
            fh.write(rec.to_json())
            fh.write("\n")
    summary = summarize(records, seed=seed, config=config)
    summary["jsonl"] = p.name
    summary_path_for(p).write_text(dumps_canonical(summary) + "\n", encoding="utf-8", newline="\n")
    logger.debug(f"persisted {len(records)} records to {p}")
    return summary


def load_records(path: Union[str, Path]) -> List[Dict[str, Any]]:
    """读 JSONL, 每行一个 dict"""
    out: List[Dict[str, Any]] = []
    with Path(path).open("r", encoding="utf-8") as fh:
        for line in fh:
            if line.strip():
                out.append(json.loads(line))
    return out


# ============================================================================
# 猜想
# ============================================================================

@dataclass
class ConjectureReport:
    """max_n |a_n| / Σ_{k<n} λᵏ 的统计"""
    K: int
    records: int
    max_ratio: float
    max_ratio_by_n: Dict[int, float]
    candidates: List[Dict[str, Any]]
    marginal: int

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["max_ratio_by_n"] = {str(n): v for n, v in self.max_ratio_by_n.items()}
        return data


def _record_fields(rec: Union[FuzzRecord, Mapping[str, Any]]) -> Tuple[float, List[complex], Dict[str, Any], bool]:
    if isinstance(rec, FuzzRecord):
        return rec.lam, list(rec.coefficients), rec.to_dict(), rec.boundary_marginal
    coeffs = [complex(c[0], c[1]) for c in rec["coefficients"]]
    return float(rec["lambda"]), coeffs, dict(rec), bool(rec.get("boundary_marginal", False))


def scan_records(records: Iterable[Union[FuzzRecord, Mapping[str, Any]]], K: int) -> ConjectureReport:
    """对已有记录计算 |a_n| / conjecture_bound(n, λ), n = 2..K"""
    if K < 3:
        raise ParameterOutOfRange(f"conjecture scan needs K >= 3, got {K}")
    by_n: Dict[int, float] = {n: 0.0 for n in range(2, K + 1)}
    candidates: List[Dict[str, Any]] = []
    count = 0
    marginal = 0
    for rec in records:
        lam, coeffs, data, is_marginal = _record_fields(rec)
        if len(coeffs) < K - 1:
            raise ParameterOutOfRange(f"record carries a_2..a_{len(coeffs) + 1}, K={K} requested")
        count += 1
        marginal += int(is_marginal)
        for n in range(2, K + 1):
            ratio = abs(coeffs[n - 2]) / conjecture_bound(n, lam)
            by_n[n] = max(by_n[n], ratio)
            if ratio > 1.0 + CONJECTURE_TOL:
                candidates.append({
                    "n": n,
                    "ratio": ratio,
                    "lambda": lam,
                    "index": data.get("index"),
                    "seed": data.get("seed"),
                    "sample_seed": data.get("sample_seed"),
                    "descriptor": data.get("descriptor"),
                    "boundary_marginal": is_marginal,
                })
    if candidates:
        logger.warning(f"conjecture scan: {len(candidates)} counterexample candidate(s)")
    return ConjectureReport(
        K=K,
        records=count,
        max_ratio=max(by_n.values()) if count else 0.0,
        max_ratio_by_n=by_n,
        candidates=candidates,
        marginal=marginal,
    )


def conjecture_scan(config: FuzzConfig, K: int) -> ConjectureReport:
    """抽样 (系数取到 a_K) 并扫描猜想上界"""
    if K < 3:
        raise ParameterOutOfRange(f"conjecture scan needs K >= 3, got {K}")
    if config.coefficients < K:
        config = FuzzConfig(**{**asdict(config), "coefficients": K})
    return scan_records(run_fuzz(config).records, K)


__all__ = [
    "SCHEMA_VERSION",
    "REJECTION_BUDGET",
    "RESIDUAL_TOL",
    "GENERATOR_KINDS",
    "DEFAULT_GENERATOR_MIX",
    "FuzzConfig",
    "FuzzRecord",
    "draw_a2",
    "draw_generator",
    "SampledCandidate",
    "screen",
    "sample_member",
    "real_a2_rotation",
    "min_real_sqrt",
    "theorem_suite",
    "plan_tasks",
    "run_task",
    "FuzzRun",
    "run_fuzz",
    "replay_record",
    "summarize",
    "summary_path_for",
    "persist_run",
    "load_records",
    "ConjectureReport",
    "scan_records",
    "conjecture_scan",
]
