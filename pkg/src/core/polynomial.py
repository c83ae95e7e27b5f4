"""
整系数稀疏多项式

IntPolynomial 用 {指数向量: 非零整数系数} 存储, 加法与乘法精确。
PolyMatrix 为稀疏多项式矩阵, 只保存非零元素。
"""

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Tuple, Union

from .errors import DimensionMismatchError, ScarfError
from .monomial import ExponentVector, monomial_str


class IntPolynomial:
    """整系数多项式, 不存储零系数"""

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping[ExponentVector, int], None] = None):
        self._terms: Dict[ExponentVector, int] = {}
        for exponent, coeff in (terms or {}).items():
            self._add_term(tuple(exponent), coeff)

    @classmethod
    def monomial(cls, coeff: int, exponent: ExponentVector) -> "IntPolynomial":
        """coeff · z^exponent"""
        return cls({tuple(exponent): coeff})

    def _add_term(self, exponent: ExponentVector, coeff: int) -> None:
        if coeff == 0:
            return
        if self._terms:
            any_exp = next(iter(self._terms))
            if len(any_exp) != len(exponent):
                raise DimensionMismatchError(
                    f"term {exponent} does not match dimension {len(any_exp)}"
                )
        total = self._terms.get(exponent, 0) + coeff
        if total:
            self._terms[exponent] = total
        else:
            del self._terms[exponent]

    # ------------------------------------------------------------------
    # 访问
    # ------------------------------------------------------------------

    @property
    def terms(self) -> Dict[ExponentVector, int]:
        return dict(self._terms)

    def items(self) -> List[Tuple[ExponentVector, int]]:
        """按指数升序排列的 (指数, 系数)"""
        return sorted(self._terms.items())

    def coefficient(self, exponent: ExponentVector) -> int:
        return self._terms.get(tuple(exponent), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    # ------------------------------------------------------------------
    # 运算
    # ------------------------------------------------------------------

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        result = IntPolynomial(self._terms)
        for exponent, coeff in other._terms.items():
            result._add_term(exponent, coeff)
        return result

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial({e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: Union["IntPolynomial", int]) -> "IntPolynomial":
        if isinstance(other, int):
            return IntPolynomial({e: c * other for e, c in self._terms.items()})
        result = IntPolynomial()
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                if len(e1) != len(e2):
                    raise DimensionMismatchError(f"cannot multiply {e1} by {e2}")
                result._add_term(tuple(a + b for a, b in zip(e1, e2)), c1 * c2)
        return result

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return other == 0 and not self._terms
        if not isinstance(other, IntPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def derivative(self, j: int) -> "IntPolynomial":
        """∂/∂z_j (j 为 1-based)"""
        if j < 1:
            raise ScarfError(f"variable index must be >= 1, got {j}")
        result = IntPolynomial()
        for exponent, coeff in self._terms.items():
            if j > len(exponent):
                raise DimensionMismatchError(f"variable x{j} out of range for {exponent}")
            power = exponent[j - 1]
            if power:
                lowered = exponent[: j - 1] + (power - 1,) + exponent[j:]
                result._add_term(lowered, coeff * power)
        return result

    # ------------------------------------------------------------------
    # 输出
    # ------------------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exponent, coeff in sorted(self._terms.items(), reverse=True):
            mono = monomial_str(exponent)
            magnitude = abs(coeff)
            if mono == "1":
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            sign = "-" if coeff < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        text = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"IntPolynomial({self})"


@dataclass
class PolyMatrix:
    """稀疏多项式矩阵, entries 中不保存零多项式"""

    rows: int
    cols: int
    entries: Dict[Tuple[int, int], IntPolynomial] = field(default_factory=dict)

    def get(self, row: int, col: int) -> IntPolynomial:
        return self.entries.get((row, col), IntPolynomial())
