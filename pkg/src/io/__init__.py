"""
scarfdz IO - 解析、fixture 与报告模型
"""

from .parser import parse_ideal, format_ideal
from .fixtures import load_source, load_fixture, FIXTURE_NAMES

__all__ = ["parse_ideal", "format_ideal", "load_source", "load_fixture", "FIXTURE_NAMES"]
