"""
微分形式 d_σφ - 逐项求导的分解微分之积, 与有符号体积比较, 以及基本类配对

d_σφ = (∂φ_1/∂z_{σ(1)}) (∂φ_2/∂z_{σ(2)}) ... (∂φ_n/∂z_{σ(n)}) 是一个
1 × |top cells| 的行向量。dz_{σ(1)}∧...∧dz_{σ(n)} 相对 dz = dz_n∧...∧dz_1
的符号折进 orientation_sign, dz 系数 = orientation_sign · 行向量元素。
"""

import logging
from dataclasses import dataclass
from math import factorial
from typing import Dict, List, Optional, Sequence, Tuple

from .cellular import (
    LabeledComplex,
    SparseMonoMatrix,
    complex_ideal,
    differentials,
    scarf_to_complex,
)
from .errors import ComplexError, NotGenericError
from .monomial import ExponentVector, MonomialIdeal, is_generic
from .polynomial import IntPolynomial, PolyMatrix
from .scarf import ScarfFace, build_scarf, eta, top_faces
from .staircase import (
    Sigma,
    all_sigmas,
    colength,
    partition_bruteforce,
    partition_cuboid,
    permutation_sign,
    validate_sigma,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DerivativeForm:
    """coeffs[i] 为第 i 个 top cell 的行向量元素, labels[i] 为其标签"""

    sigma: Sigma
    coeffs: Tuple[IntPolynomial, ...]
    orientation_sign: int
    labels: Tuple[ExponentVector, ...] = ()

    def dz_coefficients(self) -> List[IntPolynomial]:
        """相对 dz = dz_n∧...∧dz_1 的系数"""
        return [c * self.orientation_sign for c in self.coeffs]

    def to_dict(self) -> dict:
        return {
            "sigma": list(self.sigma),
            "orientation_sign": self.orientation_sign,
            "coefficients": [
                {"label": list(label) if label else None, "dz": str(c)}
                for label, c in zip(self.labels or [None] * len(self.coeffs), self.dz_coefficients())
            ],
        }


def orientation_sign(sigma: Sigma) -> int:
    """dz_{σ(1)}∧...∧dz_{σ(n)} = sgn(σ)·(-1)^{n(n-1)/2} · dz_n∧...∧dz_1"""
    n = len(sigma)
    return permutation_sign(sigma) * (-1) ** (n * (n - 1) // 2)


def derivative_matrix(phi: SparseMonoMatrix, j: int) -> PolyMatrix:
    """逐项 ∂/∂z_j: ±z^γ ↦ ±γ_j z^{γ-e_j}, γ_j = 0 时为零"""
    result = PolyMatrix(rows=phi.rows, cols=phi.cols)
    for key, (sign, exponent) in phi.entries.items():
        poly = IntPolynomial.monomial(sign, exponent).derivative(j)
        if poly:
            result.entries[key] = poly
    return result


def d_sigma_phi(
    mats: Sequence[SparseMonoMatrix],
    sigma: Sequence[int],
    labels: Optional[Sequence[ExponentVector]] = None,
) -> DerivativeForm:
    """
    计算 d_σφ

    从 φ_1 的唯一一行开始, 逐个右乘求导后的矩阵, 始终只保存一个稀疏行向量。
    n 取自 φ_1 的指数向量长度; len(mats) 必须等于 n (否则说明理想不是 Artinian 或复形被截断)。
    """
    if not mats or not mats[0].entries:
        raise ComplexError("resolution has no vertices")
    n = len(next(iter(mats[0].entries.values()))[1])
    sigma = validate_sigma(sigma, n)
    if len(mats) != n:
        raise ComplexError(f"resolution has length {len(mats)}, expected {n}")

    first = derivative_matrix(mats[0], sigma[0])
    row: Dict[int, IntPolynomial] = {col: poly for (_, col), poly in first.entries.items()}
    for phi, j in zip(mats[1:], sigma[1:]):
        nxt: Dict[int, IntPolynomial] = {}
        for (r, c), poly in derivative_matrix(phi, j).entries.items():
            if r in row:
                nxt[c] = nxt.get(c, IntPolynomial()) + row[r] * poly
        row = {c: p for c, p in nxt.items() if p}

    coeffs = tuple(row.get(c, IntPolynomial()) for c in range(mats[-1].cols))
    return DerivativeForm(
        sigma=sigma,
        coeffs=coeffs,
        orientation_sign=orientation_sign(sigma),
        labels=tuple(labels or ()),
    )


def _alpha_minus_one(alpha: ExponentVector) -> ExponentVector:
    return tuple(a - 1 for a in alpha)


def _require_generic(M: MonomialIdeal) -> None:
    generic, witness = is_generic(M)
    if not generic:
        raise NotGenericError(f"ideal is not generic (witness {tuple(witness)})")


def _form_for_complex(X: LabeledComplex, sigma: Sigma, mats=None) -> DerivativeForm:
    mats = mats if mats is not None else differentials(X)
    return d_sigma_phi(mats, sigma, labels=[cell.label for cell in X.top_cells])


# =============================================================================
# generic 情形: Scarf 分解
# =============================================================================


def theorem_main_predicted(M: MonomialIdeal, sigma: Sequence[int]) -> DerivativeForm:
    """
    预测值: 每个 top face α 的 dz 系数为 sgn(η)·Vol(S_{σ,α})·z^{α-1}

    coeffs 按 Scarf 分解的 top cell 顺序存放, 已除去 orientation_sign,
    可与 d_sigma_phi 的结果逐项直接比较。
    """
    _require_generic(M)
    sigma = validate_sigma(sigma, M.n)
    sign = orientation_sign(sigma)
    faces = top_faces(build_scarf(M))
    coeffs = []
    for face in faces:
        volume = partition_cuboid(M, sigma, face).volume
        coeffs.append(IntPolynomial.monomial(sign * eta(face)[1] * volume, _alpha_minus_one(face.label)))
    return DerivativeForm(
        sigma=sigma,
        coeffs=tuple(coeffs),
        orientation_sign=sign,
        labels=tuple(face.label for face in faces),
    )


def verify_theorem_main(M: MonomialIdeal, sigma: Sequence[int]) -> dict:
    """
    比较 Scarf 分解的 d_σφ 与预测值

    Returns:
        {
            "sigma": [...],
            "orientation_sign": ±1,
            "match": bool,
            "faces": [{"label", "eta_sign", "volume", "computed", "predicted", "match"}, ...]
        }
    """
    predicted = theorem_main_predicted(M, sigma)
    X = scarf_to_complex(build_scarf(M))
    computed = _form_for_complex(X, predicted.sigma)

    faces = []
    for cell, got, want in zip(X.top_cells, computed.dz_coefficients(), predicted.dz_coefficients()):
        faces.append(
            {
                "label": list(cell.label),
                "eta_sign": cell.sign,
                "volume": abs(want.coefficient(_alpha_minus_one(cell.label))),
                "computed": str(got),
                "predicted": str(want),
                "match": got == want,
            }
        )
    match = all(f["match"] for f in faces)
    if not match:
        logger.warning(f"Computed form differs from the volume prediction for sigma={predicted.sigma}")
    return {
        "sigma": list(predicted.sigma),
        "orientation_sign": predicted.orientation_sign,
        "match": match,
        "faces": faces,
    }


def _chain_index(X: LabeledComplex) -> List[Dict[Tuple[int, ...], int]]:
    return [{cell.vertices: idx for idx, cell in enumerate(level)} for level in X.cells]


def kivas_survivor_check(X: LabeledComplex, sigma: Sequence[int], top_index: int) -> dict:
    """
    沿 top face 的旗链展开 d_σφ 的元素

    τ 为顶点位置被加入链的顺序, F_τ 为沿链求导元素之积。
    generic Scarf 情形下只有 τ = η∘σ 非零, 且 F_{η∘σ} 等于该 face 的元素。

    Returns:
        {"sigma", "label", "expected", "survivors", "terms", "entry_match", "ok"}
    """
    n = X.n
    sigma = validate_sigma(sigma, n)
    cell = X.top_cells[top_index]
    if len(cell.vertices) != n:
        raise ComplexError(f"top cell {top_index} is not a simplex")
    vertex_labels = X.vertex_labels()
    face = ScarfFace(
        vertices=cell.vertices,
        exponents=tuple(vertex_labels[v] for v in cell.vertices),
        label=cell.label,
    )
    eta_perm, _ = eta(face)
    expected = tuple(eta_perm[s - 1] for s in sigma)

    mats = differentials(X)
    derived = [derivative_matrix(phi, j) for phi, j in zip(mats, sigma)]
    index = _chain_index(X)

    terms: Dict[Tuple[int, ...], IntPolynomial] = {}
    for tau in all_sigmas(n):
        value = IntPolynomial.monomial(1, (0,) * n)
        previous = 0
        for k in range(1, n + 1):
            chain_cell = tuple(sorted(cell.vertices[p - 1] for p in tau[:k]))
            if chain_cell not in index[k - 1]:
                raise ComplexError(f"chain cell {chain_cell} missing from the complex")
            current = index[k - 1][chain_cell]
            value = value * derived[k - 1].get(previous, current)
            previous = current
        terms[tau] = value

    entry = _form_for_complex(X, sigma, mats).coeffs[top_index]
    survivors = [tau for tau, value in terms.items() if value]
    entry_match = terms[expected] == entry
    return {
        "sigma": list(sigma),
        "label": list(cell.label),
        "expected": list(expected),
        "survivors": [list(tau) for tau in survivors],
        "terms": {"".join(map(str, tau)): str(value) for tau, value in terms.items()},
        "entry_match": entry_match,
        "ok": survivors == [expected] and entry_match,
    }


# =============================================================================
# 一般胞腔分解
# =============================================================================


def _top_signs(X: LabeledComplex) -> List[int]:
    signs = [cell.sign for cell in X.top_cells]
    if any(s is None for s in signs):
        raise ComplexError("top cells need orientation signs")
    return signs


def verify_against_partition(X: LabeledComplex, sigma: Sequence[int], mats=None) -> dict:
    """
    与暴力划分的体积比较 (不要求 generic)

    预测 dz 系数为 sgn(cell)·Vol(S_{σ,label})·z^{label-1}; 标签不是外角的
    cell 预测为 0。

    Returns:
        {"sigma", "orientation_sign", "match", "faces": [{"label", "sign", "volume",
         "corner", "computed", "predicted", "match"}, ...]}
    """
    M = complex_ideal(X)
    sigma = validate_sigma(sigma, X.n)
    signs = _top_signs(X)
    parts = partition_bruteforce(M, sigma)
    form = _form_for_complex(X, sigma, mats)

    faces = []
    for cell, sign, got in zip(X.top_cells, signs, form.dz_coefficients()):
        is_corner = cell.label in parts
        volume = len(parts[cell.label]) if is_corner else 0
        want = IntPolynomial.monomial(sign * volume, _alpha_minus_one(cell.label))
        faces.append(
            {
                "label": list(cell.label),
                "sign": sign,
                "corner": is_corner,
                "volume": volume,
                "computed": str(got),
                "predicted": str(want),
                "match": got == want,
            }
        )
    match = all(f["match"] for f in faces)
    if not match:
        logger.warning(f"Form differs from signed partition volumes for sigma={sigma}")
    return {
        "sigma": list(sigma),
        "orientation_sign": form.orientation_sign,
        "match": match,
        "faces": faces,
    }


def pairing_multiplicity(form: DerivativeForm, X: LabeledComplex) -> Tuple[int, dict]:
    """
    基本类配对

    对每个 top cell α: 去掉某个 b_i >= α_i 的项 z^b, 取 z^{α-1} 的系数,
    乘以 cell 的符号后求和。其余 b <= α-1, b ≠ α-1 的项列为 residual。

    Returns:
        (配对值, {"sigma", "pairing", "residual_free", "cells": [...]})
    """
    signs = _top_signs(X)
    if len(form.coeffs) != len(X.top_cells):
        raise ComplexError("form and complex have a different number of top cells")

    total = 0
    cells = []
    for cell, sign, poly in zip(X.top_cells, signs, form.dz_coefficients()):
        target = _alpha_minus_one(cell.label)
        kept = [
            (b, c) for b, c in poly.items()
            if all(bi < ai for bi, ai in zip(b, cell.label))
        ]
        coefficient = sum(c for b, c in kept if b == target)
        residual = [[c, list(b)] for b, c in kept if b != target]
        total += sign * coefficient
        cells.append(
            {
                "label": list(cell.label),
                "sign": sign,
                "coefficient": coefficient,
                "contribution": sign * coefficient,
                "residual": residual,
            }
        )
    report = {
        "sigma": list(form.sigma),
        "pairing": total,
        "residual_free": all(not c["residual"] for c in cells),
        "cells": cells,
    }
    return total, report


def full_factorization_check(X: LabeledComplex, mats=None) -> dict:
    """
    Σ_σ pairing = n! · colength

    Returns:
        {"n", "colength", "pairings": {"123": 22, ...}, "total", "expected", "ok"}
    """
    mats = mats if mats is not None else differentials(X)
    length = colength(complex_ideal(X))
    pairings = {}
    for sigma in all_sigmas(X.n):
        value, _ = pairing_multiplicity(_form_for_complex(X, sigma, mats), X)
        pairings["".join(map(str, sigma))] = value
    total = sum(pairings.values())
    expected = factorial(X.n) * length
    return {
        "n": X.n,
        "colength": length,
        "pairings": pairings,
        "total": total,
        "expected": expected,
        "ok": total == expected,
    }


def d_phi_total(X: LabeledComplex, mats=None) -> List[IntPolynomial]:
    """Σ_σ d_σφ 的 dz 系数, 按 top cell 排列"""
    mats = mats if mats is not None else differentials(X)
    totals = [IntPolynomial() for _ in X.top_cells]
    for sigma in all_sigmas(X.n):
        for i, poly in enumerate(_form_for_complex(X, sigma, mats).dz_coefficients()):
            totals[i] = totals[i] + poly
    return totals


def sweep(X: LabeledComplex, sigmas: Optional[Sequence[Sigma]] = None) -> dict:
    """
    对一组 σ (默认全部) 做体积比较与配对

    Returns:
        {"colength", "runs": [{"sigma", "comparison", "pairing"}, ...], "factorization"}
    """
    mats = differentials(X)
    sigmas = list(sigmas) if sigmas else all_sigmas(X.n)
    runs = []
    for sigma in sigmas:
        comparison = verify_against_partition(X, sigma, mats)
        _, pairing = pairing_multiplicity(_form_for_complex(X, tuple(sigma), mats), X)
        runs.append({"sigma": list(sigma), "comparison": comparison, "pairing": pairing})
    factorization = full_factorization_check(X, mats)
    logger.info(f"Swept {len(runs)} permutations, colength {factorization['colength']}")
    return {"colength": factorization["colength"], "runs": runs, "factorization": factorization}
