"""
JSON 数据模型 - fixture 输入与命令报告
"""

from typing import Any, Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator, model_validator

from ..core.errors import SigmaError


# =============================================================================
# 输入
# =============================================================================


class IdealModel(BaseModel):
    """{"n": 3, "gens": [[3,0,0], ...]}"""
    name: Optional[str] = None
    comment: Optional[str] = None
    n: int = Field(ge=1)
    gens: List[List[int]] = Field(min_length=1)

    @model_validator(mode="after")
    def check_lengths(self):
        for g in self.gens:
            if len(g) != self.n:
                raise ValueError(f"generator {g} does not have length {self.n}")
            if any(x < 0 for x in g):
                raise ValueError(f"generator {g} has a negative exponent")
        return self


class CellModel(BaseModel):
    """胞腔: 顶点、标签、边界 [下标, 符号], top cell 可带定向符号"""
    verts: List[int]
    label: List[int]
    boundary: List[Tuple[int, int]] = []
    sign: Optional[Literal[-1, 1]] = None


class ComplexModel(BaseModel):
    """{"n": 3, "cells": [[cell, ...], ...]}, cells[k] 为 k 维胞腔"""
    name: Optional[str] = None
    comment: Optional[str] = None
    n: int = Field(ge=1)
    cells: List[List[CellModel]] = Field(min_length=1)


# =============================================================================
# 运行配置
# =============================================================================


class RunConfig(BaseModel):
    """一次 CLI 调用的参数"""
    source: str
    command: Literal["info", "scarf", "resolve", "partition", "dphi", "render", "verify"]
    sigmas: Optional[List[Tuple[int, ...]]] = None  # None 表示全部
    format: Literal["text", "json", "svg"] = "text"
    seed: int
    output: Optional[str] = None

    @field_validator("sigmas")
    @classmethod
    def check_permutations(cls, value):
        if value is None:
            return value
        for sigma in value:
            if sorted(sigma) != list(range(1, len(sigma) + 1)):
                raise ValueError(f"sigma {sigma} is not a permutation of 1..{len(sigma)}")
        return value

    def sigmas_for(self, n: int) -> Optional[List[Tuple[int, ...]]]:
        """按维数校验 σ 长度"""
        if self.sigmas is None:
            return None
        for sigma in self.sigmas:
            if len(sigma) != n:
                raise SigmaError(f"sigma {sigma} has length {len(sigma)}, expected {n}")
        return self.sigmas


# =============================================================================
# 报告
# =============================================================================


class InfoReport(BaseModel):
    """info 命令输出"""
    n: int
    gens: List[List[int]]
    ideal: str
    artinian: bool
    generic: bool
    witness: Optional[List[int]] = None
    outer_corners: List[List[int]] = []
    colength: Optional[int] = None


class ScarfReport(BaseModel):
    n: int
    gens: List[List[int]]
    f_vector: List[int]
    euler_characteristic: int
    faces: List[List[Dict[str, Any]]]


class ResolveReport(BaseModel):
    """resolve 命令输出"""
    n: int
    name: Optional[str] = None
    ranks: List[int]
    matrices: List[List[List[Any]]]
    is_complex: bool
    is_minimal: bool
    is_exact: bool


class PartitionPart(BaseModel):
    corner: List[int]
    cells: List[List[int]]
    volume: int
    cuboid: Optional[List[List[int]]] = None
    cuboid_matches: Optional[bool] = None
    is_cuboid: bool


class PartitionReport(BaseModel):
    sigma: List[int]
    parts: List[PartitionPart]
    total_volume: int
    colength: int


class DphiReport(BaseModel):
    """dphi 命令输出"""
    n: int
    source: str
    generic_scarf: bool
    colength: int
    runs: List[Dict[str, Any]]
    theorem: List[Dict[str, Any]] = []
    survivors: List[Dict[str, Any]] = []
    factorization: Dict[str, Any]
    all_match: bool


class CheckResult(BaseModel):
    name: str
    ok: bool
    required: bool
    detail: str = ""


class VerifyReport(BaseModel):
    source: str
    checks: List[CheckResult]
    random: List[Dict[str, Any]] = []
    passed: bool
