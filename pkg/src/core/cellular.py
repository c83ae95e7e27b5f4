"""
胞腔分解 (cellular resolution) - 带单项式标签的胞腔复形到自由模微分

E_k 的基为 (k-1) 维胞腔, E_0 ≅ A。
φ_k: e_γ ↦ Σ_{δ ⊂ γ} sgn(δ, γ) · z^{label(γ) - label(δ)} e_δ,
φ_1 把顶点 e_a 映到 z^a。
"""

import logging
import random
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from sympy import Matrix

from ..config import SCARF_EVAL_HIGH, SCARF_EVAL_LOW, SCARF_EXACTNESS_RETRIES, SCARF_SEED
from .errors import ComplexError
from .monomial import ExponentVector, MonomialIdeal, divides, is_generic, join_all, minimalize
from .polynomial import IntPolynomial
from .scarf import ScarfComplex, eta

logger = logging.getLogger(__name__)

MonoEntry = Tuple[int, ExponentVector]


@dataclass(frozen=True)
class Cell:
    """
    一个胞腔

    vertices: 升序顶点下标; boundary: (低一维胞腔下标, ±1);
    sign: top cell 的定向符号 (Scarf 情形为 sgn(η)), 其余为 None
    """

    vertices: Tuple[int, ...]
    label: ExponentVector
    boundary: Tuple[Tuple[int, int], ...] = ()
    sign: Optional[int] = None

    def to_dict(self) -> dict:
        data = {
            "verts": list(self.vertices),
            "label": list(self.label),
            "boundary": [list(pair) for pair in self.boundary],
        }
        if self.sign is not None:
            data["sign"] = self.sign
        return data


@dataclass(frozen=True)
class LabeledComplex:
    """cells[k] 为 k 维胞腔, d = len(cells) - 1"""

    n: int
    cells: Tuple[Tuple[Cell, ...], ...]
    name: Optional[str] = None
    comment: Optional[str] = None

    @property
    def dim(self) -> int:
        return len(self.cells) - 1

    @property
    def top_cells(self) -> Tuple[Cell, ...]:
        return self.cells[-1]

    def vertex_labels(self) -> List[ExponentVector]:
        return [cell.label for cell in self.cells[0]]

    def to_dict(self) -> dict:
        data = {"n": self.n}
        if self.name is not None:
            data["name"] = self.name
        if self.comment is not None:
            data["comment"] = self.comment
        data["cells"] = [[cell.to_dict() for cell in level] for level in self.cells]
        return data


@dataclass
class SparseMonoMatrix:
    """entries[(row, col)] = (±1, γ) 表示 ±z^γ"""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], MonoEntry]

    def evaluate(self, point: Sequence[int]) -> Matrix:
        """在整数点上取值为 sympy 矩阵"""
        values = [[0] * self.cols for _ in range(self.rows)]
        for (row, col), (sign, exponent) in self.entries.items():
            value = sign
            for x, e in zip(point, exponent):
                value *= x**e
            values[row][col] = value
        return Matrix(self.rows, self.cols, lambda i, j: values[i][j])


# =============================================================================
# 构造
# =============================================================================


def scarf_to_complex(delta: ScarfComplex) -> LabeledComplex:
    """
    Scarf 复形转为带标签胞腔复形

    单纯关联符号: 去掉升序第 j 个顶点得到的面带符号 (-1)^{j-1}。
    理想 generic 时 top cell 的 sign 取 sgn(η)。
    """
    levels: List[Tuple[Cell, ...]] = []
    index_of: Dict[Tuple[int, ...], int] = {}
    for k, faces in enumerate(delta.faces):
        level = []
        next_index = {}
        for idx, face in enumerate(faces):
            boundary = ()
            if k > 0:
                boundary = tuple(
                    (index_of[face.vertices[:j] + face.vertices[j + 1:]], (-1) ** j)
                    for j in range(len(face.vertices))
                )
            level.append(Cell(vertices=face.vertices, label=face.label, boundary=boundary))
            next_index[face.vertices] = idx
        levels.append(tuple(level))
        index_of = next_index

    if len(levels) == delta.n and is_generic(delta.ideal)[0]:
        levels[-1] = tuple(
            replace(cell, sign=eta(face)[1])
            for cell, face in zip(levels[-1], delta.faces[-1])
        )
    elif len(levels) == delta.n:
        logger.info("Ideal is not generic, top cells carry no eta sign")
    return LabeledComplex(n=delta.n, cells=tuple(levels))


def differentials(X: LabeledComplex) -> List[SparseMonoMatrix]:
    """
    计算 [φ_1, ..., φ_{d+1}]

    Returns:
        φ_1 为 1 × |顶点| 矩阵, φ_k 为 |(k-2) 维胞腔| × |(k-1) 维胞腔|
    """
    mats = [
        SparseMonoMatrix(
            rows=1,
            cols=len(X.cells[0]),
            entries={(0, col): (1, cell.label) for col, cell in enumerate(X.cells[0])},
        )
    ]
    for k in range(1, len(X.cells)):
        lower = X.cells[k - 1]
        entries = {}
        for col, cell in enumerate(X.cells[k]):
            for row, sign in cell.boundary:
                diff = tuple(a - b for a, b in zip(cell.label, lower[row].label))
                if any(x < 0 for x in diff):
                    raise ComplexError(
                        f"label {lower[row].label} of a face does not divide coface label {cell.label}"
                    )
                entries[(row, col)] = (sign, diff)
        mats.append(SparseMonoMatrix(rows=len(lower), cols=len(X.cells[k]), entries=entries))
    return mats


# =============================================================================
# 校验
# =============================================================================


def validate_complex(X: LabeledComplex) -> None:
    """标签为顶点标签的 join, 面标签整除余面标签, ∂∂ 符号抵消; 失败抛 ComplexError"""
    if not X.cells or not X.cells[0]:
        raise ComplexError("complex has no vertices")
    for idx, cell in enumerate(X.cells[0]):
        if cell.vertices != (idx,):
            raise ComplexError(f"vertex cell {idx} must have verts [{idx}]")
        if cell.boundary:
            raise ComplexError(f"vertex cell {idx} must have an empty boundary")
    vertex_labels = X.vertex_labels()
    for label in vertex_labels:
        if len(label) != X.n:
            raise ComplexError(f"label {label} does not have length {X.n}")

    for k, level in enumerate(X.cells):
        for idx, cell in enumerate(level):
            where = f"cell {idx} of dimension {k}"
            if list(cell.vertices) != sorted(set(cell.vertices)):
                raise ComplexError(f"{where}: vertices must be sorted and distinct")
            if any(not 0 <= v < len(vertex_labels) for v in cell.vertices):
                raise ComplexError(f"{where}: unknown vertex")
            if join_all(vertex_labels[v] for v in cell.vertices) != cell.label:
                raise ComplexError(f"{where}: label is not the join of its vertex labels")
            if cell.sign not in (None, 1, -1):
                raise ComplexError(f"{where}: orientation sign must be +1 or -1")
            if k == 0:
                continue
            if not cell.boundary:
                raise ComplexError(f"{where}: empty boundary")
            for row, sign in cell.boundary:
                if not 0 <= row < len(X.cells[k - 1]):
                    raise ComplexError(f"{where}: boundary index {row} out of range")
                if sign not in (1, -1):
                    raise ComplexError(f"{where}: incidence sign must be +1 or -1")
                face = X.cells[k - 1][row]
                if not set(face.vertices) <= set(cell.vertices):
                    raise ComplexError(f"{where}: boundary cell {row} is not a face")
                if not divides(face.label, cell.label):
                    raise ComplexError(f"{where}: face label does not divide cell label")

            # ∂∂ = 0; 对边而言是增广 Σ sgn = 0
            totals: Dict[int, int] = {}
            for row, sign in cell.boundary:
                if k == 1:
                    totals[-1] = totals.get(-1, 0) + sign
                    continue
                for sub, sub_sign in X.cells[k - 1][row].boundary:
                    totals[sub] = totals.get(sub, 0) + sign * sub_sign
            if any(totals.values()):
                raise ComplexError(f"{where}: boundary of boundary does not vanish")


def ranks(X: LabeledComplex) -> Tuple[int, ...]:
    """(rank E_0, rank E_1, ...) = (1, |顶点|, |边|, ...)"""
    return (1,) + tuple(len(level) for level in X.cells)


def alternating_rank_sum(X: LabeledComplex) -> int:
    """Σ_k (-1)^k rank E_k, 对 A/M 的分解为 0"""
    return sum((-1) ** k * r for k, r in enumerate(ranks(X)))


def complex_ideal(X: LabeledComplex) -> MonomialIdeal:
    """顶点标签生成的理想"""
    return minimalize(X.vertex_labels())


def flip_incidence(X: LabeledComplex, dim: int, cell: int, k: int) -> LabeledComplex:
    """翻转 cells[dim][cell] 第 k 个边界项的符号, 返回新复形"""
    if not 1 <= dim < len(X.cells):
        raise ComplexError(f"no boundary entries in dimension {dim}")
    target = X.cells[dim][cell]
    if not 0 <= k < len(target.boundary):
        raise ComplexError(f"cell {cell} has no boundary entry {k}")
    boundary = list(target.boundary)
    row, sign = boundary[k]
    boundary[k] = (row, -sign)
    level = list(X.cells[dim])
    level[cell] = replace(target, boundary=tuple(boundary))
    cells = list(X.cells)
    cells[dim] = tuple(level)
    return replace(X, cells=tuple(cells))


def matrix_to_triplets(phi: SparseMonoMatrix) -> List[list]:
    """[[row, col, sign, [指数...]], ...], 按 (row, col) 排序"""
    return [
        [row, col, sign, list(exponent)]
        for (row, col), (sign, exponent) in sorted(phi.entries.items())
    ]


def _product_poly(left: SparseMonoMatrix, right: SparseMonoMatrix) -> Dict[Tuple[int, int], IntPolynomial]:
    by_row: Dict[int, List[Tuple[int, MonoEntry]]] = {}
    for (row, col), entry in right.entries.items():
        by_row.setdefault(row, []).append((col, entry))
    product: Dict[Tuple[int, int], IntPolynomial] = {}
    for (row, mid), (s1, e1) in left.entries.items():
        for col, (s2, e2) in by_row.get(mid, []):
            term = IntPolynomial.monomial(s1 * s2, tuple(a + b for a, b in zip(e1, e2)))
            product[(row, col)] = product.get((row, col), IntPolynomial()) + term
    return {key: poly for key, poly in product.items() if poly}


def check_complex(mats: Sequence[SparseMonoMatrix]) -> bool:
    """φ_k ∘ φ_{k+1} = 0 (± 单项式符号抵消)"""
    for k in range(len(mats) - 1):
        if mats[k].cols != mats[k + 1].rows:
            raise ComplexError(f"phi_{k + 1} and phi_{k + 2} are not conformable")
        nonzero = _product_poly(mats[k], mats[k + 1])
        if nonzero:
            logger.info(f"phi_{k + 1} * phi_{k + 2} has {len(nonzero)} nonzero entries")
            return False
    return True


def check_minimal(mats: Sequence[SparseMonoMatrix]) -> bool:
    """没有非零常数项"""
    return all(any(exponent) for phi in mats for _, exponent in phi.entries.values())


def _exact_at(mats: Sequence[SparseMonoMatrix], point: Tuple[int, ...]) -> Optional[bool]:
    # None 表示秩条件在该点失败 (可能是取值点不好)
    values = [phi.evaluate(point) for phi in mats]
    for k in range(len(values) - 1):
        if not (values[k] * values[k + 1]).is_zero_matrix:
            return False
    rank = [m.rank() for m in values] + [0]
    if rank[0] != 1:
        return None
    for k in range(len(mats)):
        if rank[k] + rank[k + 1] != mats[k].cols:
            return None
    return True


def check_generic_exactness(
    mats: Sequence[SparseMonoMatrix],
    seed: Optional[int] = None,
    retries: Optional[int] = None,
) -> bool:
    """
    在随机整数点上检验正合性

    Artinian 理想的分解在原点之外正合: rank φ_1 = 1,
    rank φ_k + rank φ_{k+1} = rank E_k (k >= 1, φ_{d+2} = 0)。
    数值上 φ_k φ_{k+1} ≠ 0 直接判负; 秩条件失败则换点重试。
    """
    if not mats:
        return False
    n = len(next(iter(mats[0].entries.values()))[1])
    rng = random.Random(SCARF_SEED if seed is None else seed)
    attempts = retries or SCARF_EXACTNESS_RETRIES
    for attempt in range(attempts):
        point = tuple(rng.randint(SCARF_EVAL_LOW, SCARF_EVAL_HIGH) for _ in range(n))
        result = _exact_at(mats, point)
        if result is not None:
            return result
        logger.warning(f"Rank test failed at point {point} (attempt {attempt + 1}/{attempts})")
    return False
