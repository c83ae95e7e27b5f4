"""
scarfdz Render
"""

from .svg import render_partition_svg

__all__ = ["render_partition_svg"]
