"""
理想文本格式

    list     := monomial (',' monomial)*
    monomial := factor ('*' factor)*
    factor   := 'x' INT ('^' INT)?

例: "x1^3, x1^2*x2, x1*x2^2*x3^2, x2^4, x2^3*x3, x3^3"。维数取最大变量下标。
"""

from typing import Dict, List, Optional

from ..core.errors import ParseError, ScarfError
from ..core.monomial import MonomialIdeal, minimalize, monomial_str


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> Optional[str]:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else None

    def expect(self, char: str) -> None:
        if self.peek() != char:
            found = self.peek()
            raise ParseError(f"expected '{char}', found {repr(found) if found else 'end of input'}", self.pos)
        self.pos += 1

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an integer", start)
        return int(self.text[start:self.pos])


def _factor(scanner: _Scanner, powers: Dict[int, int]) -> None:
    scanner.expect("x")
    start = scanner.pos
    index = scanner.integer()
    if index < 1:
        raise ParseError("variable index must be >= 1", start)
    degree = 1
    if scanner.peek() == "^":
        scanner.pos += 1
        scanner.skip_ws()
        start = scanner.pos
        degree = scanner.integer()
        if degree == 0:
            raise ParseError("zero exponent is not allowed", start)
    powers[index] = powers.get(index, 0) + degree


def parse_ideal(text: str, n: Optional[int] = None) -> MonomialIdeal:
    """
    解析理想文本, 返回极小化后的 MonomialIdeal

    Args:
        text: 逗号分隔的单项式
        n: 指定维数 (默认取最大变量下标)
    """
    scanner = _Scanner(text)
    if scanner.peek() is None:
        raise ParseError("empty generator list", 0)

    monomials: List[Dict[int, int]] = []
    while True:
        powers: Dict[int, int] = {}
        _factor(scanner, powers)
        while scanner.peek() == "*":
            scanner.pos += 1
            _factor(scanner, powers)
        monomials.append(powers)

        nxt = scanner.peek()
        if nxt is None:
            break
        if nxt != ",":
            raise ParseError(f"unexpected character {nxt!r}", scanner.pos)
        scanner.pos += 1

    top = max(max(m) for m in monomials)
    if n is None:
        n = top
    elif n < top:
        raise ParseError(f"variable x{top} exceeds dimension {n}", 0)
    return minimalize(tuple(m.get(i, 0) for i in range(1, n + 1)) for m in monomials)


def format_ideal(M: MonomialIdeal) -> str:
    """parse_ideal 的逆"""
    if any(not any(g) for g in M.gens):
        raise ScarfError("the unit ideal has no text form")
    return ", ".join(monomial_str(g) for g in M.gens)
