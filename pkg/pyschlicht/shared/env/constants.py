"""
环境变量常量定义

所有运行期可调参数统一用 ``SCHLICHT_U_`` 前缀。
"""

# 并行度上限 (fuzz 的线程数)
SCHLICHT_U_THREADS = "SCHLICHT_U_THREADS"
# 默认截断阶数 N
SCHLICHT_U_ORDER = "SCHLICHT_U_ORDER"
# 日志级别
SCHLICHT_U_LOG_LEVEL = "SCHLICHT_U_LOG_LEVEL"
# 运行产物目录 (log/ fuzz/ figures/ report/)
SCHLICHT_U_RUN_DIR = "SCHLICHT_U_RUN_DIR"

# 默认值
DEFAULT_ORDER = 64
DEFAULT_THREADS = 1
DEFAULT_RUN_DIR_NAME = "schlicht_run"

# 数值阈值
ZERO_CONSTANT_TOL = 1e-12     # 级数常数项近零
POLE_TOL = 1e-13              # |f(z)| 近零 -> PoleOrZeroHit
BOUNDARY_TOL = 1e-8           # 辐角原理圆周最小模
SCHWARZ_SAMPLE_COUNT = 4096   # ω∈B 的边界采样点数
SCHWARZ_SAMPLE_EPS = 1e-3     # 采样圆 |z| = 1 - eps
SCHWARZ_SUP_SLACK = 1e-9

# 成员判定扫描
SWEEP_RADII = (0.9, 0.99, 0.999)
SWEEP_SAMPLES = 8192
NONVANISHING_RADIUS = 0.999

ALL_ENV_KEYS = [
    SCHLICHT_U_THREADS,
    SCHLICHT_U_ORDER,
    SCHLICHT_U_LOG_LEVEL,
    SCHLICHT_U_RUN_DIR,
]
