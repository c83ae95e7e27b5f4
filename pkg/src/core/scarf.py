"""
Scarf 复形 - lcm 唯一的生成元子集构成的单纯复形

对 generic Artinian 理想, Scarf 复形三角剖分 (n-1)-单形,
top face 的标签恰好是 staircase 的外角。
"""

import logging
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .errors import NotArtinianError, NotGenericError, ScarfError
from .monomial import ExponentVector, MonomialIdeal, divides, is_artinian, join_all
from .staircase import permutation_sign

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ScarfFace:
    """Scarf 复形的一个面: 顶点为升序生成元下标, exponents 为对应生成元指数"""

    vertices: Tuple[int, ...]
    exponents: Tuple[ExponentVector, ...]
    label: ExponentVector

    @property
    def dim(self) -> int:
        return len(self.vertices) - 1

    def to_dict(self) -> dict:
        return {"vertices": list(self.vertices), "label": list(self.label)}


@dataclass(frozen=True)
class ScarfComplex:
    """faces[k-1] 为 Δ(k), 即 k 个顶点的面, 每层按顶点元组排序"""

    ideal: MonomialIdeal
    faces: Tuple[Tuple[ScarfFace, ...], ...]

    @property
    def n(self) -> int:
        return self.ideal.n

    @property
    def f_vector(self) -> Tuple[int, ...]:
        return tuple(len(level) for level in self.faces)

    def level(self, k: int) -> Tuple[ScarfFace, ...]:
        """Δ(k), 超出范围时为空"""
        if 1 <= k <= len(self.faces):
            return self.faces[k - 1]
        return ()

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "gens": [list(g) for g in self.ideal.gens],
            "faces": [[face.to_dict() for face in level] for level in self.faces],
        }


def _has_unique_lcm(M: MonomialIdeal, subset: Tuple[int, ...], label: ExponentVector) -> bool:
    # 其它子集 I' 与 I 同 lcm, 当且仅当某个 g ∉ I 整除 m_I 或去掉某个顶点后 lcm 不变
    members = set(subset)
    for g, exponent in enumerate(M.gens):
        if g not in members and divides(exponent, label):
            return False
    if len(subset) > 1:
        for v in subset:
            rest = [M.gens[i] for i in subset if i != v]
            if join_all(rest) == label:
                return False
    return True


def _make_face(M: MonomialIdeal, subset: Tuple[int, ...]) -> ScarfFace:
    exponents = tuple(M.gens[i] for i in subset)
    return ScarfFace(vertices=subset, exponents=exponents, label=join_all(exponents))


def build_scarf(M: MonomialIdeal) -> ScarfComplex:
    """
    构造 Scarf 复形

    从单点开始逐层扩展: 只在末尾追加更大的下标, 候选子集的所有余维 1
    子集都必须已是面 (单纯闭性), 再做 lcm 唯一性检验。

    Args:
        M: Artinian 单项式理想 (不要求 generic)

    Returns:
        ScarfComplex, faces 按顶点数分层
    """
    if not is_artinian(M):
        raise NotArtinianError(f"ideal ({M}) is not Artinian")

    levels: List[Tuple[ScarfFace, ...]] = []
    current = []
    for i in range(M.r):
        face = _make_face(M, (i,))
        if _has_unique_lcm(M, face.vertices, face.label):
            current.append(face)

    while current:
        levels.append(tuple(current))
        known = {face.vertices for face in current}
        extended = []
        for face in current:
            for g in range(face.vertices[-1] + 1, M.r):
                candidate = face.vertices + (g,)
                boundary_ok = all(
                    candidate[:j] + candidate[j + 1:] in known for j in range(len(candidate))
                )
                if not boundary_ok:
                    continue
                new_face = _make_face(M, candidate)
                if _has_unique_lcm(M, candidate, new_face.label):
                    extended.append(new_face)
        current = sorted(extended, key=lambda f: f.vertices)

    logger.info(f"Built Scarf complex with f-vector {tuple(len(level) for level in levels)}")
    return ScarfComplex(ideal=M, faces=tuple(levels))


def top_faces(delta: ScarfComplex) -> Tuple[ScarfFace, ...]:
    """Δ(n)"""
    return delta.level(delta.n)


def face_by_label(delta: ScarfComplex, alpha: ExponentVector) -> ScarfFace:
    """按标签查找 top face"""
    for face in top_faces(delta):
        if face.label == tuple(alpha):
            return face
    raise ScarfError(f"no top face labeled {tuple(alpha)}")


def euler_characteristic(delta: ScarfComplex) -> int:
    """Σ_k (-1)^{k-1} |Δ(k)|, 三角剖分单形时为 1"""
    return sum((-1) ** k * count for k, count in enumerate(delta.f_vector))


def x_vertex(face: ScarfFace, ell: int) -> int:
    """
    top face 的 x_ℓ-vertex: 唯一满足 a^i_ℓ = α_ℓ 的顶点 i (ℓ 为 1-based)

    不唯一或不存在时说明理想不是 generic。
    """
    n = len(face.label)
    if not 1 <= ell <= n:
        raise ScarfError(f"variable index {ell} out of range 1..{n}")
    hits = [
        v for v, exponent in zip(face.vertices, face.exponents)
        if exponent[ell - 1] == face.label[ell - 1]
    ]
    if len(hits) != 1:
        raise NotGenericError(
            f"face {face.vertices} has {len(hits)} candidates for the x{ell}-vertex"
        )
    return hits[0]


def eta(face: ScarfFace) -> Tuple[Tuple[int, ...], int]:
    """
    置换 η 与符号 sgn(η)

    顶点升序为 i_1 < ... < i_n, η 满足 i_{η(ℓ)} = x_ℓ-vertex。

    Returns:
        (η 的 1-based 元组, ±1)
    """
    n = len(face.label)
    if len(face.vertices) != n:
        raise ScarfError(f"face {face.vertices} is not top-dimensional")
    positions: Dict[int, int] = {v: p for p, v in enumerate(face.vertices, start=1)}
    perm = tuple(positions[x_vertex(face, ell)] for ell in range(1, n + 1))
    if len(set(perm)) != n:
        raise NotGenericError(f"x-vertices of face {face.vertices} are not distinct")
    return perm, permutation_sign(perm)
