"""
Staircase 几何 - 外角 (不可约分解)、colength、按 ≥_σ 的划分 S_{σ,α}

区域都表示在单位格上: 格点 a 代表半开单位格 (a, a+1]。连续的 staircase
就是所有标准单项式 z^a ∉ M 对应单位格的并, 因此所有体积都是整数。
"""

import logging
from dataclasses import dataclass
from itertools import combinations, permutations, product
from math import prod
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from ..config import SCARF_MAX_BOX
from .errors import BoxTooLargeError, NotArtinianError, NotGenericError, ScarfError, SigmaError
from .monomial import (
    ExponentVector,
    MonomialIdeal,
    contains,
    divides,
    is_artinian,
    is_generic,
    join,
    minimalize,
    pure_power,
)

logger = logging.getLogger(__name__)

Sigma = Tuple[int, ...]
CellSet = FrozenSet[ExponentVector]

# inclusion-exclusion 的子集枚举上限
MAX_IE_CORNERS = 20


# =============================================================================
# 置换 σ
# =============================================================================


def validate_sigma(sigma: Sequence[int], n: int) -> Sigma:
    """σ 必须是 {1..n} 的置换 (1-based)"""
    sigma = tuple(sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise SigmaError(f"sigma {sigma} is not a permutation of 1..{n}")
    return sigma


def all_sigmas(n: int) -> List[Sigma]:
    """全部 n! 个置换, itertools 顺序"""
    return list(permutations(range(1, n + 1)))


def permutation_sign(perm: Sequence[int]) -> int:
    """置换的符号 (逆序数的奇偶性)"""
    inversions = sum(
        1 for i in range(len(perm)) for j in range(i + 1, len(perm)) if perm[i] > perm[j]
    )
    return -1 if inversions % 2 else 1


def lex_key(alpha: ExponentVector, sigma: Sigma) -> Tuple[int, ...]:
    """≥_σ 的比较键: 先比 σ(1) 坐标, 再比 σ(2) 坐标..."""
    return tuple(alpha[s - 1] for s in sigma)


def lex_order(corners: Iterable[ExponentVector], sigma: Sigma) -> List[ExponentVector]:
    """按 >_σ 降序排列"""
    corners = list(corners)
    if len(set(corners)) != len(corners):
        raise ScarfError("corners must be pairwise distinct")
    if corners:
        sigma = validate_sigma(sigma, len(corners[0]))
    return sorted(corners, key=lambda a: lex_key(a, sigma), reverse=True)


# =============================================================================
# 区域: Cuboid / CellSet
# =============================================================================


@dataclass(frozen=True)
class Cuboid:
    """半开长方体 (lo_1, hi_1] × ... × (lo_n, hi_n], 按坐标存储"""

    intervals: Tuple[Tuple[int, int], ...]

    def __post_init__(self):
        for lo, hi in self.intervals:
            if not 0 <= lo < hi:
                raise ScarfError(f"invalid cuboid interval ({lo}, {hi}]")

    @property
    def volume(self) -> int:
        return prod(hi - lo for lo, hi in self.intervals)

    def cells(self) -> CellSet:
        return frozenset(product(*(range(lo, hi) for lo, hi in self.intervals)))

    def to_dict(self) -> dict:
        return {"intervals": [list(iv) for iv in self.intervals], "volume": self.volume}

    def __str__(self) -> str:
        return "×".join(f"]{lo},{hi}]" for lo, hi in self.intervals)


def volume(region: Union[Cuboid, CellSet]) -> int:
    """长方体取边长乘积, 格集合取格数"""
    if isinstance(region, Cuboid):
        return region.volume
    return len(region)


def is_cuboid(cells: CellSet) -> bool:
    """非空格集合是否恰好等于它的包围长方体"""
    if not cells:
        return False
    n = len(next(iter(cells)))
    lows = [min(c[i] for c in cells) for i in range(n)]
    highs = [max(c[i] for c in cells) + 1 for i in range(n)]
    return len(cells) == prod(h - l for l, h in zip(lows, highs))


# =============================================================================
# Staircase
# =============================================================================


@dataclass(frozen=True)
class Staircase:
    """Artinian 理想的 staircase: 内角 = 极小生成元, 外角 = 不可约分解指数"""

    ideal: MonomialIdeal
    inner_corners: Tuple[ExponentVector, ...]
    outer_corners: Tuple[ExponentVector, ...]
    bounding_box: ExponentVector


def _require_artinian(M: MonomialIdeal) -> None:
    if not is_artinian(M):
        raise NotArtinianError(f"ideal ({M}) is not Artinian, its staircase is unbounded")


def iter_box(box: Sequence[int], max_box: Optional[int] = None) -> Iterator[ExponentVector]:
    """遍历 0 <= a < box 的全部格点, 超过上限时报错"""
    limit = max_box or SCARF_MAX_BOX
    size = prod(box)
    if size > limit:
        raise BoxTooLargeError(f"lattice scan of {size} cells exceeds SCARF_MAX_BOX={limit}")
    return product(*(range(b) for b in box))


def staircase_cells(M: MonomialIdeal, max_box: Optional[int] = None) -> CellSet:
    """S 的全部单位格, 即标准单项式 z^a ∉ M 的指数"""
    _require_artinian(M)
    return frozenset(a for a in iter_box(M.bounding_box, max_box) if not contains(M, a))


def outer_corners(M: MonomialIdeal, max_box: Optional[int] = None) -> List[ExponentVector]:
    """
    外角 (不可约分解 M = ∩ m^α 的指数)

    α 是外角当且仅当 z^{α-1} ∉ M 且对每个 i 都有 z^{α-1+e_i} ∈ M。
    返回按字典序升序排列的列表。
    """
    corners = []
    for a in staircase_cells(M, max_box):
        if all(contains(M, tuple(x + (k == i) for k, x in enumerate(a))) for i in range(M.n)):
            corners.append(tuple(x + 1 for x in a))
    corners.sort()
    logger.info(f"Found {len(corners)} outer corners for ideal with {M.r} generators")
    return corners


def build_staircase(M: MonomialIdeal, max_box: Optional[int] = None) -> Staircase:
    """组装 Staircase"""
    return Staircase(
        ideal=M,
        inner_corners=M.gens,
        outer_corners=tuple(outer_corners(M, max_box)),
        bounding_box=M.bounding_box,
    )


def colength(M: MonomialIdeal, max_box: Optional[int] = None) -> int:
    """dim A/M = 标准单项式个数 = Vol(S)"""
    return len(staircase_cells(M, max_box))


def irreducible_components(M: MonomialIdeal) -> List[MonomialIdeal]:
    """M = ∩ m^α 中的不可约理想 m^α = (z_1^{α_1}, ..., z_n^{α_n})"""
    return [
        minimalize(pure_power(M.n, i, alpha[i - 1]) for i in range(1, M.n + 1))
        for alpha in outer_corners(M)
    ]


def cells_from_corners(corners: Iterable[ExponentVector]) -> CellSet:
    """外角表示: S = ∪_α {x <= α}, 每个盒子贡献格点 a <= α - 1"""
    cells = set()
    for alpha in corners:
        cells.update(product(*(range(x) for x in alpha)))
    return frozenset(cells)


def colength_inclusion_exclusion(corners: Sequence[ExponentVector]) -> int:
    """对盒子 {x <= α} 做容斥计数, 与格点扫描互为独立校验"""
    corners = list(corners)
    if len(corners) > MAX_IE_CORNERS:
        raise ScarfError(f"inclusion-exclusion over {len(corners)} corners is too large")
    total = 0
    for k in range(1, len(corners) + 1):
        for subset in combinations(corners, k):
            meet = [min(c[i] for c in subset) for i in range(len(subset[0]))]
            total += (-1) ** (k + 1) * prod(meet)
    return total


# =============================================================================
# 划分 S_{σ,α}
# =============================================================================


def partition_bruteforce(
    M: MonomialIdeal, sigma: Sigma, max_box: Optional[int] = None
) -> Dict[ExponentVector, CellSet]:
    """
    按 ≥_σ 顺序贪心划分 S

    每个单位格 (a, a+1] 归入第一个满足 a + 1 <= α 的外角 α。
    返回的 dict 按 ≥_σ 降序排列外角, 空块也保留。
    """
    sigma = validate_sigma(sigma, M.n)
    ordered = lex_order(outer_corners(M, max_box), sigma)
    parts: Dict[ExponentVector, set] = {alpha: set() for alpha in ordered}
    for a in staircase_cells(M, max_box):
        upper = tuple(x + 1 for x in a)
        for alpha in ordered:
            if divides(upper, alpha):
                parts[alpha].add(a)
                break
    return {alpha: frozenset(cells) for alpha, cells in parts.items()}


def partition_cuboid(M: MonomialIdeal, sigma: Sigma, top_face) -> Cuboid:
    """
    generic 情形下 S_{σ,α} 的长方体公式

    设 top_face 的顶点按 τ = η∘σ 依次为 x_{σ(1)}-vertex, ..., x_{σ(n)}-vertex,
    第 ℓ 条边位于坐标 σ(ℓ), 区间为
    ((a^{τ(1)} ∨ ... ∨ a^{τ(ℓ-1)})_{σ(ℓ)}, (a^{τ(1)} ∨ ... ∨ a^{τ(ℓ)})_{σ(ℓ)}]。
    """
    from .scarf import x_vertex

    sigma = validate_sigma(sigma, M.n)
    generic, witness = is_generic(M)
    if not generic:
        raise NotGenericError(f"ideal is not generic (witness {witness})")
    if len(top_face.vertices) != M.n:
        raise ScarfError(f"face {top_face.vertices} is not top-dimensional")

    intervals: List[Tuple[int, int]] = [(0, 0)] * M.n
    running = (0,) * M.n
    for coord in sigma:
        vertex = x_vertex(top_face, coord)
        current = join(running, M.gens[vertex])
        intervals[coord - 1] = (running[coord - 1], current[coord - 1])
        running = current
    return Cuboid(intervals=tuple(intervals))


def partition_cuboids(M: MonomialIdeal, sigma: Sigma) -> Dict[ExponentVector, Cuboid]:
    """generic 理想全部 top face 的长方体, 按 ≥_σ 降序排列外角"""
    from .scarf import build_scarf, top_faces

    sigma = validate_sigma(sigma, M.n)
    generic, witness = is_generic(M)
    if not generic:
        raise NotGenericError(f"ideal is not generic (witness {witness})")
    faces = {face.label: face for face in top_faces(build_scarf(M))}
    return {alpha: partition_cuboid(M, sigma, faces[alpha]) for alpha in lex_order(faces, sigma)}
