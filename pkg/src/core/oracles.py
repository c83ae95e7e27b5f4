"""
暴力参照实现

只依赖 monomial 的基础运算, 与 staircase / scarf 模块没有共享逻辑,
两边的错误不会互相抵消。指数级复杂度, 仅用于小规模检验。
"""

from collections import defaultdict
from itertools import combinations, product
from math import prod
from typing import Dict, FrozenSet, List, Sequence, Set, Tuple

from ..config import SCARF_MAX_BOX, SCARF_MAX_GENERATORS
from .errors import BoxTooLargeError, ScarfError
from .monomial import ExponentVector, MonomialIdeal, contains, join_all


def _standard_points(M: MonomialIdeal) -> List[ExponentVector]:
    box = [max(g[i] for g in M.gens) for i in range(M.n)]
    if prod(box) > SCARF_MAX_BOX:
        raise BoxTooLargeError(f"oracle scan of {prod(box)} cells exceeds SCARF_MAX_BOX")
    return [a for a in product(*(range(b) for b in box)) if not contains(M, a)]


def oracle_scarf(M: MonomialIdeal) -> Set[Tuple[int, ...]]:
    """枚举全部非空子集, 按 lcm 分组, 保留 lcm 只出现一次的子集"""
    if M.r > SCARF_MAX_GENERATORS:
        raise ScarfError(f"{M.r} generators exceed SCARF_MAX_GENERATORS={SCARF_MAX_GENERATORS}")
    groups: Dict[ExponentVector, List[Tuple[int, ...]]] = defaultdict(list)
    for size in range(1, M.r + 1):
        for subset in combinations(range(M.r), size):
            groups[join_all(M.gens[i] for i in subset)].append(subset)
    return {subsets[0] for subsets in groups.values() if len(subsets) == 1}


def oracle_outer_corners(M: MonomialIdeal) -> Set[ExponentVector]:
    """z^{α-1} 为标准单项式且所有 z^{α-1+e_i} ∈ M"""
    corners = set()
    for a in _standard_points(M):
        bumped = [tuple(a[k] + (k == i) for k in range(M.n)) for i in range(M.n)]
        if all(contains(M, b) for b in bumped):
            corners.add(tuple(x + 1 for x in a))
    return corners


def oracle_colength(M: MonomialIdeal) -> int:
    return len(_standard_points(M))


def oracle_partition(M: MonomialIdeal, sigma: Sequence[int]) -> Dict[ExponentVector, FrozenSet[ExponentVector]]:
    """按 σ 字典序从大到小依次认领 a + 1 <= α 的格"""
    if sorted(sigma) != list(range(1, M.n + 1)):
        raise ScarfError(f"sigma {tuple(sigma)} is not a permutation of 1..{M.n}")
    order = sorted(
        oracle_outer_corners(M),
        key=lambda alpha: [alpha[s - 1] for s in sigma],
        reverse=True,
    )
    claimed: Dict[ExponentVector, Set[ExponentVector]] = {alpha: set() for alpha in order}
    remaining = set(_standard_points(M))
    for alpha in order:
        taken = {a for a in remaining if all(x < y for x, y in zip(a, alpha))}
        claimed[alpha] = taken
        remaining -= taken
    return {alpha: frozenset(cells) for alpha, cells in claimed.items()}
