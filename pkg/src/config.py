"""
配置管理 - 从 .env 文件加载环境变量
"""

import os
from pathlib import Path
from dotenv import load_dotenv

# 加载 .env 文件 (从项目根目录)
env_path = Path(__file__).parent.parent / ".env"
load_dotenv(env_path)


# ============================================================================
# 格点扫描配置
# ============================================================================

# 暴力扫描 (colength, partition, oracle) 允许的最大格点数
SCARF_MAX_BOX = int(os.getenv("SCARF_MAX_BOX", "10000000"))

# oracle_scarf 枚举全部子集时允许的最大生成元个数
SCARF_MAX_GENERATORS = int(os.getenv("SCARF_MAX_GENERATORS", "20"))


# ============================================================================
# 随机检验配置
# ============================================================================

SCARF_SEED = int(os.getenv("SCARF_SEED", "20240521"))

# 正合性检验的随机取值点坐标范围, 避开 0 和 1 以减少偶然消失
SCARF_EVAL_LOW = int(os.getenv("SCARF_EVAL_LOW", "2"))
SCARF_EVAL_HIGH = int(os.getenv("SCARF_EVAL_HIGH", "97"))
SCARF_EXACTNESS_RETRIES = int(os.getenv("SCARF_EXACTNESS_RETRIES", "3"))


# ============================================================================
# Fixture 目录
# ============================================================================

# 解析为绝对路径，避免因工作目录不同导致读到不同文件
def resolve_fixtures_dir(value: str) -> str:
    """相对路径以项目根目录为基准"""
    if os.path.isabs(value):
        return value
    return str((Path(__file__).parent.parent / value).resolve())


FIXTURES_DIR = resolve_fixtures_dir(os.getenv("SCARF_FIXTURES_DIR", "./data/fixtures"))


# ============================================================================
# 日志配置
# ============================================================================

LOG_LEVEL = os.getenv("SCARF_LOG_LEVEL", "WARNING").upper()
