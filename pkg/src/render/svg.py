"""
二维 staircase 的 SVG 输出

每个单位格一个 rect, 颜色表示它属于哪个 S_{σ,α}; 多个 σ 时并排多个面板。
<metadata> 中记录每个外角的格数, 与划分体积一致。
"""

import json
from typing import List, Sequence

from ..core.errors import ScarfError
from ..core.monomial import MonomialIdeal
from ..core.staircase import Sigma, partition_bruteforce, validate_sigma

PREAMBLE = """\
<?xml version="1.0" encoding="UTF-8"?>
<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="%(width)d" height="%(height)d" viewBox="0 0 %(width)d %(height)d">
<metadata>%(metadata)s</metadata>
<rect x="0" y="0" width="%(width)d" height="%(height)d" style="fill:#ffffff"/>
"""

POSTAMBLE = """\
</svg>
"""

PALETTE = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f",
    "#edc948", "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac",
]

UNIT = 40
MARGIN = 30


class SVG:
    """按面板累积 SVG 元素"""

    def __init__(self, width: int, height: int):
        self.width = width
        self.height = height
        self.commands: List[str] = []

    def rect(self, x: int, y: int, w: int, h: int, color: str, title: str = "") -> None:
        inner = f"<title>{title}</title>" if title else ""
        self.commands.append(
            f'<rect x="{x}" y="{y}" width="{w}" height="{h}" '
            f'style="fill:{color};stroke:#333333;stroke-width:1">{inner}</rect>'
        )

    def line(self, x1: int, y1: int, x2: int, y2: int, width: int = 2) -> None:
        self.commands.append(
            f'<line x1="{x1}" y1="{y1}" x2="{x2}" y2="{y2}" style="stroke:#000000;stroke-width:{width}"/>'
        )

    def text(self, x: int, y: int, body: str) -> None:
        self.commands.append(
            f'<text x="{x}" y="{y}" font-family="monospace" font-size="14">{body}</text>'
        )

    def render(self, metadata: str) -> str:
        values = {"width": self.width, "height": self.height, "metadata": metadata}
        return PREAMBLE % values + "\n".join(self.commands) + "\n" + POSTAMBLE


def render_partition_svg(M: MonomialIdeal, sigmas: Sequence[Sigma]) -> str:
    """
    绘制 n = 2 的 staircase 划分

    Args:
        M: 二维 Artinian 理想
        sigmas: 一个或多个 σ, 每个一个面板

    Returns:
        SVG 文本 (同样输入得到同样的字节)
    """
    if M.n != 2:
        raise ScarfError(f"render supports n = 2 only, got n = {M.n}")
    if not sigmas:
        raise ScarfError("render needs at least one sigma")
    box_x, box_y = M.bounding_box
    panel_w = box_x * UNIT + 2 * MARGIN
    panel_h = box_y * UNIT + 2 * MARGIN
    svg = SVG(width=panel_w * len(sigmas), height=panel_h + MARGIN)

    panels = []
    for p, sigma in enumerate(sigmas):
        sigma = validate_sigma(sigma, 2)
        parts = partition_bruteforce(M, sigma)
        left = p * panel_w + MARGIN
        bottom = MARGIN + box_y * UNIT
        svg.text(left, MARGIN - 10, f"sigma=({sigma[0]},{sigma[1]})")
        for color_index, (corner, cells) in enumerate(parts.items()):
            color = PALETTE[color_index % len(PALETTE)]
            for a1, a2 in sorted(cells):
                svg.rect(
                    left + a1 * UNIT,
                    bottom - (a2 + 1) * UNIT,
                    UNIT,
                    UNIT,
                    color,
                    title=f"corner ({corner[0]},{corner[1]})",
                )
        svg.line(left, bottom, left + box_x * UNIT, bottom)
        svg.line(left, bottom, left, bottom - box_y * UNIT)
        panels.append(
            {
                "sigma": list(sigma),
                "parts": [
                    {"corner": list(corner), "cells": len(cells)}
                    for corner, cells in parts.items()
                ],
            }
        )
    metadata = json.dumps({"n": 2, "gens": [list(g) for g in M.gens], "panels": panels})
    return svg.render(metadata)
