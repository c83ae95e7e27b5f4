import pytest

from src.core.errors import DimensionMismatchError
from src.core.polynomial import IntPolynomial, PolyMatrix


def test_cancellation():
    p = IntPolynomial.monomial(3, (1, 2)) + IntPolynomial.monomial(-3, (1, 2))
    assert p.is_zero()
    assert p == 0
    assert str(p) == "0"


def test_product_and_derivative():
    p = IntPolynomial({(1, 0): 2, (0, 1): -1})
    q = IntPolynomial.monomial(1, (1, 1))
    assert (p * q).items() == [((1, 2), -1), ((2, 1), 2)]
    assert (p * q).derivative(1) == IntPolynomial({(0, 2): -1, (1, 1): 4})
    assert IntPolynomial.monomial(5, (0, 3)).derivative(1).is_zero()
    assert (p * 3).coefficient((1, 0)) == 6


def test_str():
    assert str(IntPolynomial.monomial(3, (2, 0))) == "3*x1^2"
    assert str(IntPolynomial.monomial(-4, (1, 1))) == "-4*x1*x2"
    assert str(IntPolynomial({(0, 0): 1, (1, 0): -1})) == "-x1 + 1"


def test_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        IntPolynomial({(1,): 1, (1, 2): 1})


def test_poly_matrix():
    m = PolyMatrix(rows=2, cols=2, entries={(0, 1): IntPolynomial.monomial(1, (1,))})
    assert m.get(1, 1).is_zero()
    assert m.get(0, 1) == IntPolynomial.monomial(1, (1,))
