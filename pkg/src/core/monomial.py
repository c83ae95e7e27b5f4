"""
单项式理想基础运算

指数向量 (ExponentVector) 用 tuple 表示, z^a = z_1^{a_1} ... z_n^{a_n}。
MonomialIdeal 保存按字典序升序排列的极小生成元, 之后所有模块中的
生成元下标 (Scarf face 顶点、基元素) 都指向这个规范顺序。
"""

from dataclasses import dataclass
from itertools import product
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, EmptyIdealError, ScarfError

ExponentVector = Tuple[int, ...]

# 每个坐标限制在 32 位有符号整数内; 体积和 colength 用 Python int
MAX_EXPONENT = 2**31 - 1


class GenericWitness(NamedTuple):
    """is_generic 失败时的证据: 生成元下标 i < j 与共享正次数的变量 (1-based)"""

    i: int
    j: int
    variable: int


def as_exponent(values: Iterable[int]) -> ExponentVector:
    """校验并转换为指数向量"""
    vec = tuple(values)
    if not vec:
        raise ScarfError("exponent vector must have length >= 1")
    for v in vec:
        if isinstance(v, bool) or not isinstance(v, int):
            raise ScarfError(f"exponent entries must be integers, got {v!r}")
        if v < 0:
            raise ScarfError(f"exponent entries must be >= 0, got {v}")
        if v > MAX_EXPONENT:
            raise ScarfError(f"exponent {v} does not fit in 32 bits")
    return vec


def _check_dims(a: Sequence[int], b: Sequence[int]) -> None:
    if len(a) != len(b):
        raise DimensionMismatchError(f"dimension mismatch: {len(a)} != {len(b)}")


def join(a: ExponentVector, b: ExponentVector) -> ExponentVector:
    """a ∨ b: 逐坐标取最大值 (lcm 的指数)"""
    _check_dims(a, b)
    return tuple(max(x, y) for x, y in zip(a, b))


def join_all(vectors: Iterable[ExponentVector]) -> ExponentVector:
    """非空向量列表的 join"""
    vectors = list(vectors)
    if not vectors:
        raise EmptyIdealError("join of an empty collection")
    result = vectors[0]
    for vec in vectors[1:]:
        result = join(result, vec)
    return result


def divides(a: ExponentVector, b: ExponentVector) -> bool:
    """z^a | z^b, 即 a <= b"""
    _check_dims(a, b)
    return all(x <= y for x, y in zip(a, b))


def strictly_divides(c: ExponentVector, m: ExponentVector) -> bool:
    """
    z^c 严格整除 z^m: 对每个 z_ℓ | z^m 都有 z^c | z^m / z_ℓ

    m_ℓ = 0 的坐标上要求 c_ℓ = 0 (c 必须先整除 m)。
    """
    _check_dims(c, m)
    for cl, ml in zip(c, m):
        if ml > 0:
            if cl >= ml:
                return False
        elif cl != 0:
            return False
    return True


def monomial_str(a: ExponentVector) -> str:
    """(2, 0, 1) -> 'x1^2*x3'"""
    factors = []
    for i, e in enumerate(a, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    return "*".join(factors) if factors else "1"


@dataclass(frozen=True)
class MonomialIdeal:
    """单项式理想的规范极小生成元集合"""

    n: int
    gens: Tuple[ExponentVector, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ScarfError(f"dimension must be >= 1, got {self.n}")
        if not self.gens:
            raise EmptyIdealError("ideal needs at least one generator")
        for g in self.gens:
            if len(g) != self.n:
                raise DimensionMismatchError(
                    f"generator {g} has length {len(g)}, expected {self.n}"
                )
        if list(self.gens) != sorted(set(self.gens)):
            raise ScarfError("generators must be deduplicated and sorted ascending")
        for i, g in enumerate(self.gens):
            for j, h in enumerate(self.gens):
                if i != j and divides(h, g):
                    raise ScarfError(f"generator {g} is divisible by {h}")

    @property
    def r(self) -> int:
        return len(self.gens)

    @property
    def bounding_box(self) -> ExponentVector:
        return join_all(self.gens)

    def __len__(self) -> int:
        return len(self.gens)

    def __str__(self) -> str:
        return ", ".join(monomial_str(g) for g in self.gens)

    def to_dict(self) -> dict:
        return {"n": self.n, "gens": [list(g) for g in self.gens]}


def minimalize(gens: Iterable[Iterable[int]]) -> MonomialIdeal:
    """去掉被其他生成元整除的元素, 返回规范极小生成集"""
    vectors = sorted({as_exponent(g) for g in gens})
    if not vectors:
        raise EmptyIdealError("cannot build an ideal from no generators")
    n = len(vectors[0])
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatchError(f"generator {v} has length {len(v)}, expected {n}")

    minimal: List[ExponentVector] = []
    for v in vectors:
        if not any(divides(h, v) for h in vectors if h != v):
            minimal.append(v)
    return MonomialIdeal(n=n, gens=tuple(minimal))


def contains(M: MonomialIdeal, a: ExponentVector) -> bool:
    """z^a ∈ M 当且仅当某个生成元整除 z^a"""
    _check_dims(M.gens[0], a)
    return any(divides(g, a) for g in M.gens)


def is_artinian(M: MonomialIdeal) -> bool:
    """每个变量都有纯幂生成元"""
    for i in range(M.n):
        if not any(all(g[j] == 0 for j in range(M.n) if j != i) for g in M.gens):
            return False
    return True


def is_generic(M: MonomialIdeal) -> Tuple[bool, Optional[GenericWitness]]:
    """
    Generic 判定

    若两个不同生成元在某变量上有相同的正次数, 必须存在第三个生成元
    严格整除它们的 lcm。按 (i, j, 变量) 顺序返回第一个反例。
    """
    gens = M.gens
    for i in range(len(gens)):
        for j in range(i + 1, len(gens)):
            lcm = join(gens[i], gens[j])
            shared = [
                ell for ell in range(M.n)
                if gens[i][ell] == gens[j][ell] and gens[i][ell] > 0
            ]
            if not shared:
                continue
            if any(strictly_divides(g, lcm) for g in gens):
                continue
            return False, GenericWitness(i, j, shared[0] + 1)
    return True, None


def lcm_label(M: MonomialIdeal, indices: Iterable[int]) -> ExponentVector:
    """m_I = lcm(m_i : i ∈ I) 的指数"""
    return join_all(M.gens[i] for i in indices)


def pure_power(n: int, i: int, degree: int) -> ExponentVector:
    """z_i^degree (i 为 1-based)"""
    vec = [0] * n
    vec[i - 1] = degree
    return tuple(vec)


def staircase_ideal_2d(a: Sequence[int], b: Sequence[int]) -> MonomialIdeal:
    """
    二维 Artinian 理想 (z1^{a_j} z2^{b_j})

    要求 a_1 > ... > a_r = 0, 0 = b_1 < ... < b_r, r >= 2。
    """
    if len(a) != len(b) or len(a) < 2:
        raise ScarfError("need two sequences of equal length >= 2")
    if a[-1] != 0 or b[0] != 0:
        raise ScarfError("need a_r = 0 and b_1 = 0")
    if any(x <= y for x, y in zip(a, a[1:])) or any(x >= y for x, y in zip(b, b[1:])):
        raise ScarfError("a must be strictly decreasing and b strictly increasing")
    return minimalize(zip(a, b))


def ideal_from_corners(corners: Iterable[ExponentVector]) -> MonomialIdeal:
    """
    由不可约分解 M = ∩ m^α 还原理想

    z^a ∈ m^α 当且仅当存在 i 使 a_i >= α_i。极小生成元的每个坐标只能
    取 0 或某个 α_i, 所以在这些候选值的乘积上枚举即可。
    """
    corners = [as_exponent(c) for c in corners]
    if not corners:
        raise EmptyIdealError("no corners given")
    n = len(corners[0])
    for c in corners:
        _check_dims(corners[0], c)
        if any(x == 0 for x in c):
            raise ScarfError(f"corner {c} has a zero coordinate")

    candidates = [sorted({0} | {c[i] for c in corners}) for i in range(n)]
    members = [
        a for a in product(*candidates)
        if all(any(a[i] >= c[i] for i in range(n)) for c in corners)
    ]
    return minimalize(members)
