"""
保持 U(λ) 的构造与 n 次根变换

- 旋转 / 共轭 / 伸缩 / 删除值变换;
- n 重对称化、系数滤波 (cos / sin / 实部 / 偶数项压缩)、凸组合;
- n 次根变换 (不保持 U, 用来构造反例);
- 区域变差辅助映射 G = λg 与删除值平移 f/(1+(a₂+μ)f)。

z/f 恰为多项式时结果仍是多项式映射 (系数精确); 其余情况用
:class:`PointwiseForm` 对 q = z/f 做逐点运算, 同时维护级数缓存。
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass
from typing import Any, Callable, ClassVar, Dict, Sequence, Type, Union

import numpy as np

from ..shared.env.constants import NONVANISHING_RADIUS
from ..shared.errors import (
    BoundaryZero,
    BranchBase,
    NonvanishingViolated,
    ParameterOutOfRange,
    UOperatorChanged,
    ValueAttained,
    WeightConstraint,
)
from ..shared.logger import logger
from ..shared.utils import complex_from_json, complex_to_json
from .analytic_map import (
    AnalyticMap,
    CharacterizationForm,
    PointwiseForm,
    u_eval,
    zero_count_in_disk,
)
from .membership import nonvanishing_zero_count, omitted_value_bound_check, verdict
from .schwarz import ClassParameter, lambda_value
from .series import TruncatedSeries, compose_zpow, nth_root

# 射线延拓取的采样点数
ROOT_RAY_SAMPLES = 96
# EvenSqueeze 在 |z| 小于此值时用级数求导
_SQUEEZE_SERIES_RADIUS = 1e-6


# ============================================================================
# 变换种类
# ============================================================================

@dataclass(frozen=True)
class TransformKind:
    """变换描述的基类; ``tag`` 是 JSON 里的类型名"""

    tag: ClassVar[str] = "abstract"

    def to_dict(self) -> Dict[str, Any]:
        data = {k: (complex_to_json(v) if isinstance(v, complex) else v) for k, v in asdict(self).items()}
        return {"tag": self.tag, **data}


def _normalize_angle(theta: float) -> float:
    return float(theta) % (2.0 * math.pi)


@dataclass(frozen=True)
class Rotate(TransformKind):
    tag: ClassVar[str] = "Rotate"
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _normalize_angle(self.theta))


@dataclass(frozen=True)
class Conjugate(TransformKind):
    tag: ClassVar[str] = "Conjugate"


@dataclass(frozen=True)
class Dilate(TransformKind):
    tag: ClassVar[str] = "Dilate"
    r: float

    def __post_init__(self):
        if not 0.0 < self.r <= 1.0:
            raise ParameterOutOfRange(f"dilation radius must lie in (0, 1], got {self.r}")


@dataclass(frozen=True)
class OmittedValue(TransformKind):
    tag: ClassVar[str] = "OmittedValue"
    c: complex

    def __post_init__(self):
        object.__setattr__(self, "c", complex(self.c))
        if self.c == 0:
            raise ParameterOutOfRange("omitted value must be nonzero")


@dataclass(frozen=True)
class MobiusShift(TransformKind):
    tag: ClassVar[str] = "MobiusShift"
    mu: complex

    def __post_init__(self):
        object.__setattr__(self, "mu", complex(self.mu))


@dataclass(frozen=True)
class SymmetrizeN(TransformKind):
    tag: ClassVar[str] = "SymmetrizeN"
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        if self.n < 2:
            raise ParameterOutOfRange(f"symmetrization needs n >= 2, got {self.n}")


@dataclass(frozen=True)
class Cosine(TransformKind):
    tag: ClassVar[str] = "Cosine"
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _normalize_angle(self.theta))


@dataclass(frozen=True)
class Sine(TransformKind):
    tag: ClassVar[str] = "Sine"
    theta: float

    def __post_init__(self):
        object.__setattr__(self, "theta", _normalize_angle(self.theta))


@dataclass(frozen=True)
class RealPart(TransformKind):
    tag: ClassVar[str] = "RealPart"


@dataclass(frozen=True)
class EvenSqueeze(TransformKind):
    tag: ClassVar[str] = "EvenSqueeze"


@dataclass(frozen=True)
class NthRoot(TransformKind):
    tag: ClassVar[str] = "NthRoot"
    n: int

    def __post_init__(self):
        object.__setattr__(self, "n", int(self.n))
        if self.n < 2:
            raise ParameterOutOfRange(f"root degree must be >= 2, got {self.n}")


TRANSFORM_KINDS: Dict[str, Type[TransformKind]] = {
    cls.tag: cls
    for cls in (Rotate, Conjugate, Dilate, OmittedValue, MobiusShift, SymmetrizeN,
                Cosine, Sine, RealPart, EvenSqueeze, NthRoot)
}


def transform_from_dict(data: Dict[str, Any]) -> TransformKind:
    """``{"tag": "Rotate", "theta": 1.0}`` -> :class:`Rotate`"""
    tag = data.get("tag")
    cls = TRANSFORM_KINDS.get(tag)  # type: ignore[arg-type]
    if cls is None:
        raise ParameterOutOfRange(f"unknown transform tag: {tag!r}")
    params = {k: v for k, v in data.items() if k != "tag"}
    if cls is OmittedValue:
        params["c"] = complex_from_json(params.get("c"))
    if cls is MobiusShift:
        params["mu"] = complex_from_json(params.get("mu", 0.0))
    try:
        return cls(**params)
    except TypeError as exc:
        raise ParameterOutOfRange(f"bad parameters for {tag}: {exc}") from exc


# ============================================================================
# 内部工具
# ============================================================================

def _descriptor(f: AnalyticMap, kind: Dict[str, Any]) -> Dict[str, Any]:
    return {"kind": "derived", "transform": kind, "source": f.describe()}


def _polynomial_map(f: AnalyticMap, b: np.ndarray, kind: Dict[str, Any]) -> AnalyticMap:
    b = np.asarray(b, dtype=complex)
    logger.debug(f"{kind.get('tag')}: exact polynomial result of degree {b.size - 1}")
    return AnalyticMap.from_pre_schwarzian_polynomial(b, order=f.order, lineage=_descriptor(f, kind))


def _pointwise_map(
    f: AnalyticMap,
    q_fn: Callable[[np.ndarray], np.ndarray],
    dq_fn: Callable[[np.ndarray], np.ndarray],
    series_fn: Callable[[int], TruncatedSeries],
    tail_fn: Callable[[int], float],
    kind: Dict[str, Any],
) -> AnalyticMap:
    backing = PointwiseForm(q_fn, dq_fn, series_fn, tail_fn, _descriptor(f, kind))
    return AnalyticMap(backing, order=f.order)


def _require_nonvanishing(g: AnalyticMap, what: str) -> None:
    try:
        count, radius = nonvanishing_zero_count(g)
    except BoundaryZero as exc:
        raise NonvanishingViolated(
            f"{what}: z/F vanishes near |z|={exc.radius}", zero_count=1, radius=exc.radius
        ) from exc
    if count > 0:
        raise NonvanishingViolated(
            f"{what}: z/F has {count} zero(s) in |z|<{radius}", zero_count=count, radius=radius
        )


def _index(order: int) -> np.ndarray:
    return np.arange(order + 1)


# ============================================================================
# 旋转 / 共轭 / 伸缩
# ============================================================================

def basic_transform(f: AnalyticMap, kind: TransformKind) -> AnalyticMap:
    """
    Rotate(θ): g(z) = e^{−iθ} f(ze^{iθ}),  U_g(z) = U_f(ze^{iθ})
    Conjugate: h(z) = conj f(conj z),     U_h(z) = conj U_f(conj z)
    Dilate(r): ψ(z) = f(rz)/r,            U_ψ(z) = U_f(rz)
    """
    desc = kind.to_dict()
    poly = f.polynomial_coefficients
    char = f.characterization

    if isinstance(kind, Rotate):
        unit = complex(np.exp(1j * kind.theta))
        if poly is not None:
            return _polynomial_map(f, poly * unit ** _index(poly.size - 1), desc)
        if char is not None:
            return AnalyticMap(
                CharacterizationForm(char.a2 * unit, char.lam, char.omega.rotated(kind.theta)), f.order
            )
        return _pointwise_map(
            f,
            lambda z: f.q(unit * z),
            lambda z: unit * f.dq(unit * z),
            lambda order: f.series(order).map_coefficients(unit ** _index(order)),
            f.backing.tail_bound,
            desc,
        )

    if isinstance(kind, Conjugate):
        if poly is not None:
            return _polynomial_map(f, np.conj(poly), desc)
        if char is not None:
            return AnalyticMap(
                CharacterizationForm(np.conj(char.a2), char.lam, char.omega.conjugated()), f.order
            )
        return _pointwise_map(
            f,
            lambda z: np.conj(f.q(np.conj(z))),
            lambda z: np.conj(f.dq(np.conj(z))),
            lambda order: f.series(order).conjugate(),
            f.backing.tail_bound,
            desc,
        )

    if isinstance(kind, Dilate):
        r = kind.r
        if poly is not None:
            return _polynomial_map(f, poly * r ** _index(poly.size - 1), desc)
        return _pointwise_map(
            f,
            lambda z: f.q(r * z),
            lambda z: r * f.dq(r * z),
            lambda order: f.series(order).map_coefficients(r ** _index(order)),
            f.backing.tail_bound,
            desc,
        )

    raise ParameterOutOfRange(f"basic_transform does not handle {kind.tag}")


# ============================================================================
# 删除值变换
# ============================================================================

# U 不变性的采样容差 (相对于 1 + max|U_f|)
U_PRESERVED_TOL = 1e-10


def _check_u_preserved(f: AnalyticMap, g: AnalyticMap, samples: int = 64) -> None:
    """在 |z| < 0.9 的固定采样点上比较 U_g 与 U_f, 超出容差则抛 UOperatorChanged。"""
    rng = np.random.default_rng(0)
    z = 0.9 * np.sqrt(rng.uniform(0, 1, samples)) * np.exp(2j * np.pi * rng.uniform(0, 1, samples))
    u_f = np.asarray(u_eval(f, z))
    diff = float(np.max(np.abs(np.asarray(u_eval(g, z)) - u_f)))
    tol = U_PRESERVED_TOL * (1.0 + float(np.max(np.abs(u_f))))
    if not diff <= tol:
        raise UOperatorChanged(
            f"omitted-value transform changed U by {diff:.3e} at sampled points",
            max_diff=diff,
            tol=tol,
        )


def omitted_value_transform(f: AnalyticMap, c: complex) -> AnalyticMap:
    """
    F = cf/(c − f), z/F = z/f − z/c, U_F = U_f

    Raises:
        ValueAttained: c − f 在 |z| < 0.999 内有零点 (c ∈ f(𝔻))
        UOperatorChanged: 构造结果的 U 与 U_f 在采样点上不一致
    """
    kind = OmittedValue(c)
    c = kind.c
    desc = kind.to_dict()
    poly = f.polynomial_coefficients
    if poly is not None:
        b = np.zeros(max(poly.size, 2), dtype=complex)
        b[: poly.size] = poly
        b[1] -= 1.0 / c
        g = _polynomial_map(f, b, desc)
    else:
        def series_fn(order: int) -> TruncatedSeries:
            s = f.series(order)
            return s - TruncatedSeries.monomial(1, 1.0 / c, order)

        g = _pointwise_map(
            f,
            lambda z: f.q(z) - z / c,
            lambda z: f.dq(z) - 1.0 / c,
            series_fn,
            f.backing.tail_bound,
            desc,
        )
    try:
        count = zero_count_in_disk(g.q, NONVANISHING_RADIUS)
    except BoundaryZero as exc:
        raise ValueAttained(f"c={c} lies on the image of |z|={exc.radius}", c=c) from exc
    if count > 0:
        raise ValueAttained(f"c={c} is attained by f in the unit disk ({count} preimage(s))", c=c)
    _check_u_preserved(f, g)
    return g


def mobius_shift(f: AnalyticMap, mu: complex,
                    lam: Union[float, ClassParameter, None] = None) -> AnalyticMap:
    """
    F = f/(1 + (a₂+μ)f), 即取 c = −1/(a₂+μ) 的删除值变换

    先用 :func:`omitted_value_bound_check` 确认 c 不在 f(𝔻) 内。
    """
    margin = omitted_value_bound_check(f, mu, lam)
    if margin <= 0.0:
        raise ValueAttained(f"-1/(a2+mu) may be attained: boundary margin {margin:.3e}")
    return omitted_value_transform(f, -1.0 / (f.a2 + complex(mu)))


# ============================================================================
# 系数层面的构造
# ============================================================================

def symmetrize_n(f: AnalyticMap, n: int) -> AnalyticMap:
    """
    z/f_n = (1/n) Σ_k q(ω^k z) = 1 + Σ b_{nk} z^{nk}

    n ≥ 3 时要求结果在圆盘内不为零; n = 2 时这一条自动成立。
    """
    kind = SymmetrizeN(n)
    n = int(n)
    desc = kind.to_dict()
    poly = f.polynomial_coefficients
    if poly is not None:
        b = np.zeros_like(poly)
        b[::n] = poly[::n]
        g = _polynomial_map(f, b, desc)
    else:
        roots = np.exp(2j * np.pi * np.arange(n) / n)

        def q_fn(z: np.ndarray) -> np.ndarray:
            return sum(f.q(w * z) for w in roots) / n

        def dq_fn(z: np.ndarray) -> np.ndarray:
            return sum(w * f.dq(w * z) for w in roots) / n

        g = _pointwise_map(
            f, q_fn, dq_fn,
            lambda order: f.series(order).mask_multiples(n),
            f.backing.tail_bound,
            desc,
        )
    if n >= 3:
        _require_nonvanishing(g, f"SymmetrizeN({n})")
    return g


def coefficient_filter(f: AnalyticMap, kind: TransformKind) -> AnalyticMap:
    """
    Cosine(θ):  1 + Σ b_n cos(nθ) zⁿ
    Sine(θ):    1 + Σ b_n sin(nθ) zⁿ
    RealPart:   1 + Σ Re(b_n) zⁿ
    EvenSqueeze: 1 + Σ b_{2n} zⁿ

    前三种要求结果在圆盘内不为零, 否则抛 :class:`NonvanishingViolated`。
    """
    desc = kind.to_dict()
    poly = f.polynomial_coefficients

    if isinstance(kind, Cosine):
        theta = kind.theta
        e_plus, e_minus = np.exp(1j * theta), np.exp(-1j * theta)
        if poly is not None:
            g = _polynomial_map(f, poly * np.cos(_index(poly.size - 1) * theta), desc)
        else:
            g = _pointwise_map(
                f,
                lambda z: 0.5 * (f.q(e_plus * z) + f.q(e_minus * z)),
                lambda z: 0.5 * (e_plus * f.dq(e_plus * z) + e_minus * f.dq(e_minus * z)),
                lambda order: f.series(order).map_coefficients(np.cos(_index(order) * theta)),
                f.backing.tail_bound,
                desc,
            )
        _require_nonvanishing(g, "Cosine")
        return g

    if isinstance(kind, Sine):
        theta = kind.theta
        e_plus, e_minus = np.exp(1j * theta), np.exp(-1j * theta)

        def sine_weights(order: int) -> np.ndarray:
            w = np.sin(_index(order) * theta).astype(complex)
            w[0] = 1.0
            return w

        if poly is not None:
            g = _polynomial_map(f, poly * sine_weights(poly.size - 1), desc)
        else:
            g = _pointwise_map(
                f,
                lambda z: 1.0 + (f.q(e_plus * z) - f.q(e_minus * z)) / 2j,
                lambda z: (e_plus * f.dq(e_plus * z) - e_minus * f.dq(e_minus * z)) / 2j,
                lambda order: f.series(order).map_coefficients(sine_weights(order)),
                f.backing.tail_bound,
                desc,
            )
        _require_nonvanishing(g, "Sine")
        return g

    if isinstance(kind, RealPart):
        if poly is not None:
            g = _polynomial_map(f, poly.real.astype(complex), desc)
        else:
            g = _pointwise_map(
                f,
                lambda z: 0.5 * (f.q(z) + np.conj(f.q(np.conj(z)))),
                lambda z: 0.5 * (f.dq(z) + np.conj(f.dq(np.conj(z)))),
                lambda order: TruncatedSeries(f.series(order).coeffs.real),
                f.backing.tail_bound,
                desc,
            )
        _require_nonvanishing(g, "RealPart")
        return g

    if isinstance(kind, EvenSqueeze):
        if poly is not None:
            return _polynomial_map(f, poly[::2], desc)

        def squeezed_series(order: int) -> TruncatedSeries:
            # 源级数需要 2·order 阶
            return compose_zpow(f.series(2 * order), 2, "decimate")

        small = squeezed_series(8).derivative()

        def q_fn(z: np.ndarray) -> np.ndarray:
            s = np.sqrt(z)
            return 0.5 * (f.q(s) + f.q(-s))

        def dq_fn(z: np.ndarray) -> np.ndarray:
            zz = np.asarray(z, dtype=complex)
            s = np.sqrt(zz)
            near = np.abs(zz) < _SQUEEZE_SERIES_RADIUS
            safe = np.where(near, 1.0, s)
            out = (f.dq(safe) - f.dq(-safe)) / (4.0 * safe)
            return np.where(near, small(zz), out)

        return _pointwise_map(
            f, q_fn, dq_fn, squeezed_series,
            lambda order: f.backing.tail_bound(2 * order + 1),
            desc,
        )

    raise ParameterOutOfRange(f"coefficient_filter does not handle {kind.tag}")


def convex_combine(
    gs: Sequence[AnalyticMap],
    mus: Sequence[float],
    lambdas: Sequence[float],
    verify_inputs: bool = True,
) -> AnalyticMap:
    """
    z/Ψ = Σ μ_k z/g_k, 于是 U_Ψ = Σ μ_k U_{g_k}

    Raises:
        WeightConstraint: Σμ_kλ_k ≠ 1, 或 Σμ_k ≠ 1 (Ψ 不再归一化)
        NonvanishingViolated: z/Ψ 在圆盘内有零点
    """
    if not (len(gs) == len(mus) == len(lambdas)) or not gs:
        raise WeightConstraint("gs, mus and lambdas must be non-empty and of equal length")
    mu = np.asarray(mus, dtype=float)
    lam = np.asarray(lambdas, dtype=float)
    if np.any((mu < 0) | (mu > 1)) or np.any((lam < 0) | (lam > 1)):
        raise WeightConstraint("weights mu_k and lambda_k must lie in [0, 1]")
    weighted = float(np.dot(mu, lam))
    if abs(weighted - 1.0) > 1e-12:
        raise WeightConstraint(f"sum mu_k*lambda_k = {weighted:.17g} != 1")
    if abs(float(mu.sum()) - 1.0) > 1e-12:
        raise WeightConstraint(f"sum mu_k = {mu.sum():.17g} != 1: z/Psi would not be normalized")
    if verify_inputs:
        for g, lam_k in zip(gs, lam):
            if lam_k > 0 and not verdict(g, lam_k).is_member:
                raise ParameterOutOfRange(f"{g!r} is not a member of U({lam_k})")

    desc = {"tag": "ConvexCombination", "mus": mu.tolist(), "lambdas": lam.tolist()}
    polys = [g.polynomial_coefficients for g in gs]
    if all(p is not None for p in polys):
        size = max(p.size for p in polys)  # type: ignore[union-attr]
        b = np.zeros(size, dtype=complex)
        for m_k, p in zip(mu, polys):
            b[: p.size] += m_k * p  # type: ignore[union-attr]
        out = AnalyticMap.from_pre_schwarzian_polynomial(
            b, order=gs[0].order,
            lineage={"kind": "derived", "transform": desc, "sources": [g.describe() for g in gs]},
        )
    else:
        backing = PointwiseForm(
            lambda z: sum(m_k * g.q(z) for m_k, g in zip(mu, gs)),
            lambda z: sum(m_k * g.dq(z) for m_k, g in zip(mu, gs)),
            lambda order: sum((g.series(order).scale(m_k) for m_k, g in zip(mu[1:], gs[1:])),
                              gs[0].series(order).scale(mu[0])),
            lambda order: float(sum(m_k * g.backing.tail_bound(order) for m_k, g in zip(mu, gs))),
            {"kind": "derived", "transform": desc, "sources": [g.describe() for g in gs]},
        )
        out = AnalyticMap(backing, order=gs[0].order)
    _require_nonvanishing(out, "ConvexCombination")
    return out


# ============================================================================
# n 次根
# ============================================================================

def continued_root(q: Callable[[np.ndarray], np.ndarray], w: np.ndarray, n: int) -> np.ndarray:
    """
    q(w)^{1/n}, 沿 0 -> w 的射线连续延拓辐角 (q(0) = 1 锚定主值)
    """
    t = np.linspace(0.0, 1.0, ROOT_RAY_SAMPLES)
    ray = np.asarray(w, dtype=complex)[..., None] * t
    vals = np.asarray(q(ray), dtype=complex)
    arg = np.unwrap(np.angle(vals), axis=-1)[..., -1]
    log_end = np.log(np.abs(vals[..., -1])) + 1j * arg
    return np.exp(log_end / n)


def nth_root_transform(f: AnalyticMap, n: int) -> AnalyticMap:
    """
    g(z) = (f(zⁿ))^{1/n}, z/g = q(zⁿ)^{1/n}

    不对结果做成员断言: U 对任何 n ≥ 2 都不在此变换下保持。

    Raises:
        BranchBase: z/f 在圆盘内有零点, 主值分支无法延拓
    """
    kind = NthRoot(n)
    n = int(n)
    try:
        count, radius = nonvanishing_zero_count(f)
    except BoundaryZero as exc:
        raise BranchBase(f"z/f vanishes near |z|={exc.radius}; no root branch") from exc
    if count > 0:
        raise BranchBase(f"z/f has {count} zero(s) in |z|<{radius}; no root branch", zero_count=count)

    def q_fn(z: np.ndarray) -> np.ndarray:
        return continued_root(f.q, np.asarray(z, dtype=complex) ** n, n)

    def dq_fn(z: np.ndarray) -> np.ndarray:
        zz = np.asarray(z, dtype=complex)
        w = zz ** n
        return q_fn(zz) * f.dq(w) * zz ** (n - 1) / f.q(w)

    def series_fn(order: int) -> TruncatedSeries:
        source = f.series(order // n + 1)
        return nth_root(compose_zpow(source, n, "substitute"), n).truncate(order)

    return _pointwise_map(f, q_fn, dq_fn, series_fn, lambda order: float("inf"), kind.to_dict())


# ============================================================================
# 区域变差辅助映射
# ============================================================================

def region_variability_map(f: AnalyticMap, lam: Union[float, ClassParameter]) -> AnalyticMap:
    """
    G = λg, z/G = (z/f − (1−λ)(1+z))/λ, U_G = U_f/λ

    f ∈ U(λ) 且 z/f ≠ (1−λ)(1+z) 时 G ∈ U。
    """
    lam_v = lambda_value(lam)
    shift = 1.0 - lam_v
    desc = {"tag": "RegionVariability", "lambda": lam_v}
    poly = f.polynomial_coefficients
    if poly is not None:
        b = np.zeros(max(poly.size, 2), dtype=complex)
        b[: poly.size] = poly
        b[0] -= shift
        b[1] -= shift
        return _polynomial_map(f, b / lam_v, desc)

    def series_fn(order: int) -> TruncatedSeries:
        s = f.series(order) - TruncatedSeries([shift, shift], order=order)
        return s.scale(1.0 / lam_v)

    return _pointwise_map(
        f,
        lambda z: (f.q(z) - shift * (1.0 + z)) / lam_v,
        lambda z: (f.dq(z) - shift) / lam_v,
        series_fn,
        lambda order: f.backing.tail_bound(order) / lam_v,
        desc,
    )


# ============================================================================
# 分派
# ============================================================================

def apply_transform(f: AnalyticMap, kind: TransformKind,
                    lam: Union[float, ClassParameter, None] = None) -> AnalyticMap:
    """按 ``kind`` 的类型分派到对应构造"""
    if isinstance(kind, (Rotate, Conjugate, Dilate)):
        return basic_transform(f, kind)
    if isinstance(kind, OmittedValue):
        return omitted_value_transform(f, kind.c)
    if isinstance(kind, MobiusShift):
        return mobius_shift(f, kind.mu, lam)
    if isinstance(kind, SymmetrizeN):
        return symmetrize_n(f, kind.n)
    if isinstance(kind, (Cosine, Sine, RealPart, EvenSqueeze)):
        return coefficient_filter(f, kind)
    if isinstance(kind, NthRoot):
        return nth_root_transform(f, kind.n)
    raise ParameterOutOfRange(f"unsupported transform: {kind!r}")


def apply_pipeline(f: AnalyticMap, kinds: Sequence[TransformKind],
                   lam: Union[float, ClassParameter, None] = None) -> AnalyticMap:
    """依次应用一串变换"""
    for kind in kinds:
        f = apply_transform(f, kind, lam)
    return f


__all__ = [
    "TransformKind",
    "Rotate",
    "Conjugate",
    "Dilate",
    "OmittedValue",
    "MobiusShift",
    "SymmetrizeN",
    "Cosine",
    "Sine",
    "RealPart",
    "EvenSqueeze",
    "NthRoot",
    "TRANSFORM_KINDS",
    "continued_root",
    "transform_from_dict",
    "basic_transform",
    "omitted_value_transform",
    "mobius_shift",
    "symmetrize_n",
    "coefficient_filter",
    "convex_combine",
    "nth_root_transform",
    "region_variability_map",
    "apply_transform",
    "apply_pipeline",
]
