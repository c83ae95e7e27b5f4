import json
import re

import pytest

from src.core.errors import ScarfError, SigmaError
from src.render.svg import render_partition_svg


def _metadata(svg: str) -> dict:
    match = re.search(r"<metadata>(.*)</metadata>", svg)
    assert match is not None
    return json.loads(match.group(1))


def test_dimtva_panels(dimtva):
    svg = render_partition_svg(dimtva, [(1, 2), (2, 1)])
    assert svg.startswith("<?xml")
    assert svg.rstrip().endswith("</svg>")
    meta = _metadata(svg)
    assert meta["gens"] == [[0, 3], [2, 1], [3, 0]]
    assert [p["sigma"] for p in meta["panels"]] == [[1, 2], [2, 1]]
    assert meta["panels"][0]["parts"] == [
        {"corner": [3, 1], "cells": 3},
        {"corner": [2, 3], "cells": 4},
    ]
    assert meta["panels"][1]["parts"] == [
        {"corner": [2, 3], "cells": 6},
        {"corner": [3, 1], "cells": 1},
    ]
    # 两个面板各 7 个单位格
    assert svg.count("<title>corner") == 14


def test_deterministic(dimtva):
    assert render_partition_svg(dimtva, [(1, 2)]) == render_partition_svg(dimtva, [(1, 2)])


def test_rejects_other_dimensions(genex, dimtva):
    with pytest.raises(ScarfError):
        render_partition_svg(genex, [(1, 2, 3)])
    with pytest.raises(ScarfError):
        render_partition_svg(dimtva, [])
    with pytest.raises(SigmaError):
        render_partition_svg(dimtva, [(1, 1)])
