"""
内置函数目录

每个条目都是 z/f 为多项式的归一化映射 (平方根反例除外), 供 CLI 的
``{"kind": "builtin"}`` 规格文件和验收测试直接使用。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from ..shared.errors import ParameterOutOfRange, SpecFileError
from .analytic_map import AnalyticMap
from .schwarz import lambda_value
from .transforms import nth_root_transform

NTH_ROOT_DEGREES: Tuple[int, ...] = (2, 3, 4, 5, 6)


def _poly(b: Sequence[complex], name: str, order: Optional[int]) -> AnalyticMap:
    return AnalyticMap.from_pre_schwarzian_polynomial(b, order=order, name=name)


# ============================================================================
# 具名函数
# ============================================================================

def identity(order: Optional[int] = None) -> AnalyticMap:
    return _poly([1.0], "identity", order)


def koebe(order: Optional[int] = None) -> AnalyticMap:
    """z/(1−z)², a_n = n"""
    return _poly([1.0, -2.0, 1.0], "koebe", order)


def f1(order: Optional[int] = None) -> AnalyticMap:
    """z/(1 + z/2 + z³/3), U_f = −(2/3)z³"""
    return _poly([1.0, 0.5, 0.0, 1.0 / 3.0], "f1", order)


def nth_root_source(n: int, order: Optional[int] = None) -> AnalyticMap:
    """z/(1 + z/n + (−1)ⁿ z^{n+1}/(n+1)); n = 2 即 f1"""
    n = int(n)
    if n < 2:
        raise ParameterOutOfRange(f"nth-root family needs n >= 2, got {n}")
    b = np.zeros(n + 2, dtype=complex)
    b[0] = 1.0
    b[1] = 1.0 / n
    b[n + 1] = (-1.0) ** n / (n + 1)
    return _poly(b, f"nth_root_source_{n}", order)


def nth_root_counterexample(n: int, order: Optional[int] = None) -> AnalyticMap:
    """nth_root_source(n) 的 n 次根变换, 不属于 U"""
    g = nth_root_transform(nth_root_source(n, order), n)
    g.name = "g1" if n == 2 else f"nth_root_counterexample_{n}"
    return g


def g1(order: Optional[int] = None) -> AnalyticMap:
    """g₁(z) = √(f₁(z²))"""
    return nth_root_counterexample(2, order)


def g1_u_closed_form(z: Any) -> Any:
    """U_{g₁}(z) = (1 − (2/3)z⁶) / √(1 + z²/2 + z⁶/3) − 1, z → i 时趋于 (5√6 − 3)/3"""
    zz = np.asarray(z, dtype=complex)
    z2 = zz * zz
    z6 = z2 ** 3
    out = (1.0 - 2.0 / 3.0 * z6) / np.sqrt(1.0 + z2 / 2.0 + z6 / 3.0) - 1.0
    return complex(out) if out.ndim == 0 else out


G1_LIMIT_AT_I = (5.0 * np.sqrt(6.0) - 3.0) / 3.0


def f_lambda(lam: float, order: Optional[int] = None) -> AnalyticMap:
    """z/((1+λz)(1+z)), 区域变差定理的取等函数, a₂ = −(1+λ)"""
    lam = lambda_value(lam)
    return _poly([1.0, 1.0 + lam, lam], f"f_lambda({lam!r})", order)


def extremal(lam: float, phi: float = 0.0, order: Optional[int] = None) -> AnalyticMap:
    """z/(1 − (1+λ)e^{iφ}z + λe^{2iφ}z²), |a₂| = 1+λ 的唯一极值形式"""
    lam = lambda_value(lam)
    u = complex(np.exp(1j * phi))
    return _poly([1.0, -(1.0 + lam) * u, lam * u * u], f"extremal({lam!r}, {phi!r})", order)


# ============================================================================
# 集合 L: S 中系数全为整数的函数
# ============================================================================

L_SET_PRE_SCHWARZIAN: Dict[str, Tuple[float, ...]] = {
    "identity": (1.0,),
    "koebe": (1.0, -2.0, 1.0),
    "koebe_rotated": (1.0, 2.0, 1.0),
    "one_minus_z": (1.0, -1.0),
    "one_plus_z": (1.0, 1.0),
    "one_minus_z2": (1.0, 0.0, -1.0),
    "one_plus_z2": (1.0, 0.0, 1.0),
    "one_minus_z_plus_z2": (1.0, -1.0, 1.0),
    "one_plus_z_plus_z2": (1.0, 1.0, 1.0),
}

L_SET: Tuple[str, ...] = tuple(L_SET_PRE_SCHWARZIAN)


def l_member(name: str, order: Optional[int] = None) -> AnalyticMap:
    try:
        b = L_SET_PRE_SCHWARZIAN[name]
    except KeyError as exc:
        raise SpecFileError(f"{name!r} is not in the set L") from exc
    return _poly(b, name, order)


# ============================================================================
# 名称查找
# ============================================================================

@dataclass(frozen=True)
class CatalogEntry:
    name: str
    factory: Callable[..., AnalyticMap]
    # sup|U_f|, 即 f ∈ U(λ) 的最小 λ; None 表示不在 U 中或依赖参数
    member_lambda: Optional[float]
    description: str


def _entries() -> Dict[str, CatalogEntry]:
    entries: Dict[str, CatalogEntry] = {}
    for name, b in L_SET_PRE_SCHWARZIAN.items():
        # 单项 U: sup|U| 恰为 Σ(n−1)|b_n|
        sup_u = float(sum((n - 1) * abs(c) for n, c in enumerate(b) if n >= 2))
        entries[name] = CatalogEntry(
            name, lambda order=None, _n=name: l_member(_n, order), sup_u, "member of the set L"
        )
    entries["koebe"] = CatalogEntry("koebe", koebe, 1.0, "z/(1-z)^2")
    entries["f1"] = CatalogEntry("f1", f1, 2.0 / 3.0, "z/(1+z/2+z^3/3)")
    entries["g1"] = CatalogEntry("g1", g1, None, "sqrt(f1(z^2))")
    for n in NTH_ROOT_DEGREES:
        entries[f"nth_root_source_{n}"] = CatalogEntry(
            f"nth_root_source_{n}", lambda order=None, _n=n: nth_root_source(_n, order),
            n / (n + 1.0), f"z/(1+z/{n}+(-1)^{n} z^{n + 1}/{n + 1})",
        )
        entries[f"nth_root_counterexample_{n}"] = CatalogEntry(
            f"nth_root_counterexample_{n}", lambda order=None, _n=n: nth_root_counterexample(_n, order),
            None, f"{n}-th root transform of nth_root_source_{n}",
        )
    entries["f_lambda"] = CatalogEntry("f_lambda", f_lambda, None, "z/((1+lambda z)(1+z)); needs lambda")
    entries["extremal"] = CatalogEntry("extremal", extremal, None, "Fekete extremal; needs lambda, phi")
    return entries


CATALOG: Dict[str, CatalogEntry] = _entries()


def builtin(name: str, order: Optional[int] = None, **params: Any) -> AnalyticMap:
    """
    按名称构造目录函数

    Args:
        name: 目录名称
        order: 截断阶数
        **params: 带参数条目的参数 (f_lambda: lam; extremal: lam, phi)

    Raises:
        SpecFileError: 未知名称或缺少参数
    """
    entry = CATALOG.get(name)
    if entry is None:
        raise SpecFileError(f"unknown builtin function {name!r}; known: {sorted(CATALOG)}")
    try:
        return entry.factory(order=order, **params)
    except TypeError as exc:
        raise SpecFileError(f"bad parameters for builtin {name!r}: {exc}") from exc


def catalog_members(lam: float = 1.0, order: Optional[int] = None) -> List[AnalyticMap]:
    """已知属于 U(λ) 的无参数目录函数"""
    return [
        entry.factory(order=order)
        for entry in CATALOG.values()
        if entry.member_lambda is not None and entry.member_lambda <= lam + 1e-15
    ]


__all__ = [
    "NTH_ROOT_DEGREES",
    "identity",
    "koebe",
    "f1",
    "nth_root_source",
    "nth_root_counterexample",
    "g1",
    "g1_u_closed_form",
    "G1_LIMIT_AT_I",
    "f_lambda",
    "extremal",
    "L_SET",
    "L_SET_PRE_SCHWARZIAN",
    "l_member",
    "CatalogEntry",
    "CATALOG",
    "builtin",
    "catalog_members",
]
