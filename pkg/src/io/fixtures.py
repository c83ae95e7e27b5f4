"""
输入来源 - JSON 文件、内置 fixture 名称或理想文本
"""

import json
import logging
from pathlib import Path
from typing import Optional, Union

from ..config import FIXTURES_DIR
from ..core.cellular import Cell, LabeledComplex, validate_complex
from ..core.errors import FixtureError
from ..core.monomial import MonomialIdeal, minimalize
from .parser import parse_ideal
from .schemas import ComplexModel, IdealModel

logger = logging.getLogger(__name__)

Source = Union[MonomialIdeal, LabeledComplex]

# 内置 fixture 名称 -> 文件名
FIXTURE_NAMES = {
    "genex": "genex.json",
    "amsterdam": "amsterdam.json",
    "motex": "motex.json",
    "dimtva": "dimtva.json",
    "amsterdam-hull": "amsterdam-hull.json",
    "motex-hull": "motex-hull.json",
    "motex-minimal": "motex-minimal.json",
}


def complex_from_model(model: ComplexModel) -> LabeledComplex:
    """ComplexModel -> 校验过的 LabeledComplex"""
    cells = tuple(
        tuple(
            Cell(
                vertices=tuple(cell.verts),
                label=tuple(cell.label),
                boundary=tuple((int(i), int(s)) for i, s in cell.boundary),
                sign=cell.sign,
            )
            for cell in level
        )
        for level in model.cells
    )
    X = LabeledComplex(n=model.n, cells=cells, name=model.name, comment=model.comment)
    validate_complex(X)
    return X


def parse_source_json(data: dict) -> Source:
    """按键识别: 含 "cells" 为复形, 含 "gens" 为理想"""
    if not isinstance(data, dict):
        raise FixtureError("fixture JSON must be an object")
    if "cells" in data:
        return complex_from_model(ComplexModel.model_validate(data))
    if "gens" in data:
        model = IdealModel.model_validate(data)
        return minimalize(model.gens)
    raise FixtureError("fixture JSON needs a 'gens' or a 'cells' key")


def load_json_file(path: Union[str, Path]) -> Source:
    path = Path(path)
    try:
        data = json.loads(path.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise FixtureError(f"{path}: invalid JSON ({exc})") from exc
    logger.info(f"Loaded fixture file {path}")
    return parse_source_json(data)


def load_fixture(name: str, fixtures_dir: Optional[str] = None) -> Source:
    """按名称加载内置 fixture"""
    if name not in FIXTURE_NAMES:
        raise FixtureError(f"unknown fixture '{name}', choose from {', '.join(FIXTURE_NAMES)}")
    return load_json_file(Path(fixtures_dir or FIXTURES_DIR) / FIXTURE_NAMES[name])


def load_source(arg: str, fixtures_dir: Optional[str] = None) -> Source:
    """
    解析命令行输入

    依次尝试: 已存在的文件路径 -> 内置 fixture 名称 -> 理想文本
    """
    if Path(arg).is_file():
        return load_json_file(arg)
    if arg in FIXTURE_NAMES:
        return load_fixture(arg, fixtures_dir)
    return parse_ideal(arg)
