import json
from pathlib import Path

import pytest
from pydantic import ValidationError

from src import config
from src.config import resolve_fixtures_dir
from src.core.cellular import LabeledComplex
from src.core.errors import FixtureError, ParseError, ScarfError
from src.core.monomial import minimalize
from src.io.fixtures import FIXTURE_NAMES, load_fixture, load_source, parse_source_json
from src.io.parser import format_ideal, parse_ideal
from src.io.schemas import RunConfig


def test_parse_genex(genex):
    text = "x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3"
    assert parse_ideal(text) == genex
    assert parse_ideal(format_ideal(genex)) == genex


def test_parse_details():
    assert parse_ideal("x1").gens == ((1,),)
    assert parse_ideal("x2^2").n == 2
    assert parse_ideal("x1*x1").gens == ((2,),)
    assert parse_ideal(" x1 ^ 2 ,x2 ").gens == ((0, 1), (2, 0))
    assert parse_ideal("x1", n=3).gens == ((1, 0, 0),)
    assert parse_ideal("x1^2, x1^3") == minimalize([(2,)])


@pytest.mark.parametrize(
    "text, position",
    [
        ("x1^0", 3),
        ("x1,,x2", 3),
        ("x0", 1),
        ("", 0),
        ("x1 + x2", 3),
        ("y1", 0),
    ],
)
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_ideal(text)
    assert info.value.position == position


def test_parse_dimension_too_small():
    with pytest.raises(ParseError):
        parse_ideal("x3", n=2)


def test_fixture_names(genex):
    assert set(FIXTURE_NAMES) >= {"genex", "amsterdam", "motex-hull"}
    assert load_source("genex") == genex
    assert load_source("x1^3, x2^3").gens == ((0, 3), (3, 0))
    with pytest.raises(FixtureError):
        load_fixture("nope")


def test_load_source_file(tmp_path, motex_minimal):
    path = tmp_path / "complex.json"
    path.write_text(json.dumps(motex_minimal.to_dict()), encoding="utf-8")
    loaded = load_source(str(path))
    assert isinstance(loaded, LabeledComplex)
    assert loaded == motex_minimal

    bad = tmp_path / "bad.json"
    bad.write_text("{", encoding="utf-8")
    with pytest.raises(FixtureError):
        load_source(str(bad))


def test_parse_source_json():
    M = parse_source_json({"n": 2, "gens": [[2, 0], [0, 2], [2, 1]]})
    assert M.gens == ((0, 2), (2, 0))
    with pytest.raises(FixtureError):
        parse_source_json({"n": 2})
    with pytest.raises(ValidationError):
        parse_source_json({"n": 2, "gens": [[1, 0, 0]]})
    with pytest.raises(ScarfError):
        parse_source_json({"n": 1, "cells": [[{"verts": [0], "label": [1], "boundary": [[0, 1]]}]]})


def test_run_config_sigmas():
    config = RunConfig(source="genex", command="dphi", sigmas=[(1, 2, 3)], seed=1)
    assert config.sigmas_for(3) == [(1, 2, 3)]
    with pytest.raises(ScarfError):
        config.sigmas_for(2)
    with pytest.raises(ValidationError):
        RunConfig(source="genex", command="dphi", sigmas=[(1, 1, 2)], seed=1)


def test_fixtures_dir_resolution(tmp_path):
    root = Path(config.__file__).resolve().parent.parent
    assert Path(resolve_fixtures_dir("./data/fixtures")) == root / "data" / "fixtures"
    assert Path(resolve_fixtures_dir("../fx")) == (root / ".." / "fx").resolve()
    assert Path(resolve_fixtures_dir(".hidden/fx")) == root / ".hidden" / "fx"
    assert resolve_fixtures_dir(str(tmp_path)) == str(tmp_path)
