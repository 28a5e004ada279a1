"""
pyschlicht 核心模块

提供:
- 截断幂级数代数 (series)
- Schwarz 函数与类参数 (schwarz)
- 规范化解析映射与 U 算子 (analytic_map)
- 成员判定 (membership) 与保持类的变换 (transforms)
- 蜗线几何与从属检验 (limacon)
- 标量上界与半径方程 (bounds)
- 内置函数目录 (catalog)
- 运行目录与组件日志 (run_manager, logging_system)
"""

from .series import TruncatedSeries, evaluate, mul, nth_root, reciprocal

from .schwarz import (
    BlaschkeGenerator,
    ClassParameter,
    ConstantGenerator,
    PolynomialGenerator,
    SchwarzGenerator,
    generator_from_descriptor,
    lambda_value,
)

from .analytic_map import (
    AnalyticMap,
    from_characterization,
    map_from_descriptor,
    u_eval,
    u_eval_alt,
    zero_count_in_disk,
)

from .membership import (
    MembershipVerdict,
    certify_by_coefficients,
    fekete_check,
    fixed_point_zero_locator,
    membership_radius,
    verdict,
)

from .transforms import TransformKind, apply_pipeline, apply_transform, transform_from_dict

from .limacon import (
    Limacon,
    beta1_closed_form,
    growth_bound_check,
    q_min_modulus,
    region_contains,
    subordination_check,
)

from .bounds import (
    abc_check,
    conjecture_bound,
    extremal_theta_bound,
    marx_alpha,
    solve_radius,
    tail_sum,
)

from .catalog import CATALOG, builtin

from .run_manager import SchlichtRunManager, get_default_run_manager

from .logging_system import SchlichtLogManager, get_log_manager

__all__ = [
    "TruncatedSeries",
    "evaluate",
    "mul",
    "nth_root",
    "reciprocal",
    "BlaschkeGenerator",
    "ClassParameter",
    "ConstantGenerator",
    "PolynomialGenerator",
    "SchwarzGenerator",
    "generator_from_descriptor",
    "lambda_value",
    "AnalyticMap",
    "from_characterization",
    "map_from_descriptor",
    "u_eval",
    "u_eval_alt",
    "zero_count_in_disk",
    "MembershipVerdict",
    "certify_by_coefficients",
    "fekete_check",
    "fixed_point_zero_locator",
    "membership_radius",
    "verdict",
    "TransformKind",
    "apply_pipeline",
    "apply_transform",
    "transform_from_dict",
    "Limacon",
    "beta1_closed_form",
    "growth_bound_check",
    "q_min_modulus",
    "region_contains",
    "subordination_check",
    "abc_check",
    "conjecture_bound",
    "extremal_theta_bound",
    "marx_alpha",
    "solve_radius",
    "tail_sum",
    "CATALOG",
    "builtin",
    "SchlichtRunManager",
    "get_default_run_manager",
    "SchlichtLogManager",
    "get_log_manager",
]
