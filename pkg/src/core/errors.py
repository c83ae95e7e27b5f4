"""
异常定义 - 所有核心计算抛出的错误都继承自 ScarfError
"""

from typing import Optional


class ScarfError(ValueError):
    """核心计算错误的基类 (CLI 映射为退出码 2)"""


class DimensionMismatchError(ScarfError):
    """指数向量维度不一致"""


class EmptyIdealError(ScarfError):
    """生成元集合为空"""


class NotArtinianError(ScarfError):
    """理想不是 Artinian (staircase 无界)"""


class NotGenericError(ScarfError):
    """理想不是 generic, 或 top face 的 x_ℓ-vertex 不唯一"""


class ComplexError(ScarfError):
    """带标签胞腔复形不合法 (标签、符号或维度)"""


class BoxTooLargeError(ScarfError):
    """格点扫描超过 SCARF_MAX_BOX 上限"""


class SigmaError(ScarfError):
    """σ 不是 {1..n} 的置换"""


class FixtureError(ScarfError):
    """fixture 文件无法识别"""


class ParseError(ScarfError):
    """理想文本语法错误, position 为出错字符的 0-based 位置"""

    def __init__(self, message: str, position: Optional[int] = None):
        self.position = position
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
