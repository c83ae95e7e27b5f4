"""
不变量检验套件 - verify 命令与性质测试共用

每项检验返回 {"name", "ok", "required", "detail"}; required 为 False 的项
只作为报告内容 (例如非极小 hull 分解上体积公式本来就可能不成立)。
"""

import logging
import random
from typing import Callable, Dict, List, Optional, Union

from .cellular import (
    LabeledComplex,
    alternating_rank_sum,
    check_complex,
    check_generic_exactness,
    check_minimal,
    complex_ideal,
    differentials,
    flip_incidence,
    scarf_to_complex,
    validate_complex,
)
from .derivative import (
    d_sigma_phi,
    full_factorization_check,
    kivas_survivor_check,
    pairing_multiplicity,
    verify_against_partition,
    verify_theorem_main,
)
from .errors import ComplexError
from .monomial import MonomialIdeal, is_artinian, is_generic, minimalize, pure_power
from .oracles import oracle_colength, oracle_outer_corners, oracle_partition, oracle_scarf
from .scarf import build_scarf, euler_characteristic, top_faces
from .staircase import (
    MAX_IE_CORNERS,
    all_sigmas,
    colength,
    colength_inclusion_exclusion,
    outer_corners,
    partition_bruteforce,
    partition_cuboids,
    staircase_cells,
)

logger = logging.getLogger(__name__)

MAX_DEGREE = 6
MAX_GENERATORS = 10


def _check(name: str, ok: bool, detail: str = "", required: bool = True) -> Dict:
    return {"name": name, "ok": bool(ok), "required": required, "detail": detail}


def _sigma_str(sigma) -> str:
    return "".join(map(str, sigma))


def random_generic_ideal(
    rng: random.Random,
    n: Optional[int] = None,
    max_degree: int = MAX_DEGREE,
    max_generators: int = MAX_GENERATORS,
) -> MonomialIdeal:
    """
    随机 generic Artinian 理想

    先取纯幂 z_i^{d_i}, 再加入额外生成元, 每个变量上出现过的正次数互不相同,
    最后极小化。这保证没有两个生成元在同一变量上有相同正次数。
    """
    n = n or rng.choice([2, 3, 4])
    used = [set() for _ in range(n)]
    gens = []
    for i in range(1, n + 1):
        degree = rng.randint(1, max_degree)
        used[i - 1].add(degree)
        gens.append(pure_power(n, i, degree))

    for _ in range(rng.randint(0, max_generators - n)):
        vec = []
        for i in range(n):
            free = sorted(set(range(1, max_degree + 1)) - used[i])
            if not free or rng.random() < 0.3:
                vec.append(0)
            else:
                vec.append(rng.choice(free))
        if not any(vec):
            continue
        for i, value in enumerate(vec):
            if value:
                used[i].add(value)
        gens.append(tuple(vec))
    return minimalize(gens)


# =============================================================================
# 理想
# =============================================================================


def run_ideal_suite(M: MonomialIdeal, seed: Optional[int] = None) -> List[Dict]:
    """Artinian 理想的全部不变量; generic 相关的检验只在 generic 时执行"""
    checks: List[Dict] = []
    if not is_artinian(M):
        return [_check("artinian", False, "ideal is not Artinian")]
    generic, witness = is_generic(M)
    checks.append(_check("generic", generic, f"witness {tuple(witness)}" if witness else "", required=False))

    delta = build_scarf(M)
    faces = {face.vertices for level in delta.faces for face in level}
    checks.append(_check("scarf_oracle", faces == oracle_scarf(M)))

    corners = outer_corners(M)
    checks.append(_check("outer_corners_oracle", set(corners) == oracle_outer_corners(M)))

    length = colength(M)
    checks.append(_check("colength_oracle", length == oracle_colength(M), f"colength {length}"))
    if len(corners) <= MAX_IE_CORNERS:
        checks.append(_check("colength_inclusion_exclusion", colength_inclusion_exclusion(corners) == length))

    cells = staircase_cells(M)
    for sigma in all_sigmas(M.n):
        parts = partition_bruteforce(M, sigma)
        pieces = list(parts.values())
        cover = frozenset().union(*pieces) == cells and sum(map(len, pieces)) == len(cells)
        checks.append(_check(f"partition_{_sigma_str(sigma)}", cover))
        checks.append(_check(f"partition_oracle_{_sigma_str(sigma)}", parts == oracle_partition(M, sigma)))

    if not generic:
        return checks

    labels = sorted(face.label for face in top_faces(delta))
    checks.append(_check("top_labels", labels == corners))
    checks.append(_check("euler_characteristic", euler_characteristic(delta) == 1))

    X = scarf_to_complex(delta)
    mats = differentials(X)
    checks.append(_check("phi_complex", check_complex(mats)))
    checks.append(_check("minimal", check_minimal(mats)))
    checks.append(_check("exactness", check_generic_exactness(mats, seed)))

    for sigma in all_sigmas(M.n):
        tag = _sigma_str(sigma)
        parts = partition_bruteforce(M, sigma)
        cuboids = partition_cuboids(M, sigma)
        checks.append(_check(
            f"cuboids_{tag}",
            all(cuboids[alpha].cells() == parts[alpha] for alpha in parts),
        ))
        report = verify_theorem_main(M, sigma)
        checks.append(_check(f"theorem_{tag}", report["match"]))
        survivors = [kivas_survivor_check(X, sigma, i)["ok"] for i in range(len(X.top_cells))]
        checks.append(_check(f"survivor_{tag}", all(survivors)))
        pairing, _ = pairing_multiplicity(d_sigma_phi(mats, sigma, [c.label for c in X.top_cells]), X)
        checks.append(_check(f"pairing_{tag}", pairing == length, f"{pairing} vs {length}"))

    factorization = full_factorization_check(X, mats)
    checks.append(_check("factorization", factorization["ok"], f"{factorization['total']} vs {factorization['expected']}"))
    return checks


# =============================================================================
# 胞腔复形
# =============================================================================


def run_complex_suite(X: LabeledComplex, seed: Optional[int] = None) -> List[Dict]:
    """用户给出的复形: 体积比较只作报告, 配对等于 colength 为必须项"""
    try:
        validate_complex(X)
    except ComplexError as exc:
        return [_check("complex_valid", False, str(exc))]
    checks = [_check("complex_valid", True)]
    checks.append(_check("alternating_ranks", alternating_rank_sum(X) == 0))

    mats = differentials(X)
    checks.append(_check("phi_complex", check_complex(mats)))
    checks.append(_check("exactness", check_generic_exactness(mats, seed)))
    checks.append(_check("minimal", check_minimal(mats), required=False))

    length = colength(complex_ideal(X))
    labels = [cell.label for cell in X.top_cells]
    for sigma in all_sigmas(X.n):
        tag = _sigma_str(sigma)
        comparison = verify_against_partition(X, sigma, mats)
        checks.append(_check(f"volumes_{tag}", comparison["match"], required=False))
        pairing, _ = pairing_multiplicity(d_sigma_phi(mats, sigma, labels), X)
        checks.append(_check(f"pairing_{tag}", pairing == length, f"{pairing} vs {length}"))

    factorization = full_factorization_check(X, mats)
    checks.append(_check("factorization", factorization["ok"], f"{factorization['total']} vs {factorization['expected']}"))
    return checks


def run_suite(source: Union[MonomialIdeal, LabeledComplex], seed: Optional[int] = None) -> List[Dict]:
    if isinstance(source, LabeledComplex):
        return run_complex_suite(source, seed)
    return run_ideal_suite(source, seed)


def suite_passed(checks: List[Dict]) -> bool:
    return all(c["ok"] for c in checks if c["required"])


def run_random_suite(
    count: int,
    seed: int,
    progress: Optional[Callable[[int], None]] = None,
) -> List[Dict]:
    """
    对 count 个随机 generic 理想运行套件

    Returns:
        [{"gens": [...], "passed": bool, "failed": [检验名...]}, ...]
    """
    rng = random.Random(seed)
    results = []
    for i in range(count):
        M = random_generic_ideal(rng)
        checks = run_ideal_suite(M, seed + i)
        failed = [c["name"] for c in checks if c["required"] and not c["ok"]]
        if failed:
            logger.warning(f"Random ideal ({M}) failed: {failed}")
        results.append({"gens": [list(g) for g in M.gens], "passed": not failed, "failed": failed})
        if progress:
            progress(1)
    return results


# =============================================================================
# 变异检验
# =============================================================================


def mutation_sensitivity(X: LabeledComplex, count: int, seed: int) -> List[Dict]:
    """
    随机翻转单个关联符号, 检查 φφ=0、体积比较或配对是否失败

    Returns:
        [{"dim", "cell", "entry", "detected", "by"}, ...]
    """
    sites = [
        (dim, idx, k)
        for dim in range(1, len(X.cells))
        for idx, cell in enumerate(X.cells[dim])
        for k in range(len(cell.boundary))
    ]
    rng = random.Random(seed)
    chosen = rng.sample(sites, min(count, len(sites)))
    length = colength(complex_ideal(X))
    labels = [cell.label for cell in X.top_cells]

    results = []
    for dim, idx, k in chosen:
        mutated = flip_incidence(X, dim, idx, k)
        mats = differentials(mutated)
        by = None
        if not check_complex(mats):
            by = "phi_complex"
        else:
            for sigma in all_sigmas(X.n):
                pairing, _ = pairing_multiplicity(d_sigma_phi(mats, sigma, labels), mutated)
                if pairing != length:
                    by = f"pairing_{_sigma_str(sigma)}"
                    break
                if not verify_against_partition(mutated, sigma, mats)["match"]:
                    by = f"volumes_{_sigma_str(sigma)}"
                    break
        results.append({"dim": dim, "cell": idx, "entry": k, "detected": by is not None, "by": by})
    return results
