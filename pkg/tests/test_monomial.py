import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import DimensionMismatchError, EmptyIdealError, ScarfError
from src.core.monomial import (
    MonomialIdeal,
    as_exponent,
    contains,
    divides,
    ideal_from_corners,
    is_artinian,
    is_generic,
    join,
    join_all,
    lcm_label,
    minimalize,
    monomial_str,
    staircase_ideal_2d,
    strictly_divides,
)
from src.core.staircase import outer_corners
from src.io.parser import parse_ideal

from conftest import generic_ideals

vectors3 = st.tuples(*(st.integers(0, 8) for _ in range(3)))


def test_join_examples():
    assert join((2, 1, 0), (1, 2, 2)) == (2, 2, 2)
    assert join((3, 0, 0), (0, 0, 3)) == (3, 0, 3)
    assert join((1, 4), (1, 4)) == (1, 4)


def test_join_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        join((1, 2), (1, 2, 3))
    with pytest.raises(DimensionMismatchError):
        divides((1,), (1, 2))


def test_strictly_divides():
    assert strictly_divides((1, 1, 0), (2, 2, 0))
    assert not strictly_divides((1, 1, 1), (2, 2, 0))
    assert not strictly_divides((2, 1, 0), (2, 2, 0))


def test_amsterdam_pair_has_no_strict_divisor(amsterdam):
    lcm = join((1, 0, 1), (0, 1, 1))
    assert lcm == (1, 1, 1)
    assert not any(strictly_divides(g, lcm) for g in amsterdam.gens)


@given(vectors3, vectors3, vectors3)
@settings(max_examples=100, deadline=None, derandomize=True)
def test_join_lattice_laws(a, b, c):
    assert join(a, join(b, c)) == join(join(a, b), c)
    assert join(a, b) == join(b, a)
    assert join(a, a) == a
    assert divides(a, join(a, b)) and divides(b, join(a, b))


@given(vectors3, vectors3, vectors3)
@settings(max_examples=100, deadline=None, derandomize=True)
def test_divides_is_partial_order(a, b, c):
    assert divides(a, a)
    if divides(a, b) and divides(b, a):
        assert a == b
    if divides(a, b) and divides(b, c):
        assert divides(a, c)


def test_minimalize_examples(genex):
    assert minimalize([(2, 0), (3, 0), (0, 1)]).gens == ((0, 1), (2, 0))
    listed = [(3, 0, 0), (2, 1, 0), (1, 2, 2), (0, 4, 0), (0, 3, 1), (0, 0, 3)]
    assert minimalize(listed) == genex
    assert minimalize(genex.gens) == genex


def test_minimalize_rejects_empty():
    with pytest.raises(EmptyIdealError):
        minimalize([])


@given(st.lists(vectors3, min_size=1, max_size=8), st.randoms(use_true_random=False))
@settings(max_examples=60, deadline=None, derandomize=True)
def test_minimalize_idempotent_and_order_free(gens, rnd):
    M = minimalize(gens)
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert minimalize(M.gens) == M
    assert minimalize(shuffled) == M


def test_ideal_invariants_enforced():
    with pytest.raises(ScarfError):
        MonomialIdeal(n=2, gens=((2, 0), (0, 1)))
    with pytest.raises(ScarfError):
        MonomialIdeal(n=2, gens=((0, 1), (1, 1)))
    with pytest.raises(ScarfError):
        as_exponent([1, -1])
    with pytest.raises(ScarfError):
        as_exponent([2**31])


def test_contains(genex):
    assert contains(genex, (1, 2, 2))
    assert not contains(genex, (2, 0, 2))
    assert contains(genex, genex.bounding_box)


@given(generic_ideals(n=3), vectors3)
@settings(max_examples=50, deadline=None, derandomize=True)
def test_contains_matches_bruteforce(M, a):
    assert contains(M, a) == any(all(g[i] <= a[i] for i in range(3)) for g in M.gens)


def test_is_artinian(genex):
    assert is_artinian(genex)
    assert not is_artinian(minimalize([(1, 1)]))
    assert is_artinian(minimalize([(5,)]))


def test_is_generic_examples(genex, amsterdam):
    assert is_generic(genex) == (True, None)
    generic, witness = is_generic(amsterdam)
    assert not generic
    assert (amsterdam.gens[witness.i], amsterdam.gens[witness.j]) == ((0, 1, 1), (1, 0, 1))
    assert witness.variable == 3


def test_printed_amsterdam_list():
    # 按原样书写的生成元列表: 见证对是 x1*x3 与 x1*x2, 外角与修正后的理想不同
    M = parse_ideal("x1^2, x1*x2, x1*x3, x2^2, x3^2")
    generic, witness = is_generic(M)
    assert not generic
    assert (M.gens[witness.i], M.gens[witness.j], witness.variable) == ((1, 0, 1), (1, 1, 0), 1)
    assert outer_corners(M) == [(1, 2, 2), (2, 1, 1)]


@given(generic_ideals())
@settings(max_examples=50, deadline=None, derandomize=True)
def test_random_distinct_degrees_are_generic(M):
    assert is_artinian(M)
    assert is_generic(M)[0]


def test_lcm_label(genex):
    assert lcm_label(genex, [0, 4, 5]) == (3, 1, 3)


def test_staircase_ideal_2d():
    M = staircase_ideal_2d([3, 2, 0], [0, 1, 3])
    assert M.gens == ((0, 3), (2, 1), (3, 0))
    with pytest.raises(ScarfError):
        staircase_ideal_2d([3, 3, 0], [0, 1, 3])


def test_ideal_from_corners(genex, amsterdam):
    assert ideal_from_corners(outer_corners(genex)) == genex
    assert ideal_from_corners([(2, 2, 1), (1, 1, 2)]) == amsterdam


def test_monomial_str():
    assert monomial_str((2, 0, 1)) == "x1^2*x3"
    assert monomial_str((0, 0)) == "1"
    assert str(minimalize([(1, 1), (3, 0)])) == "x1*x2, x1^3"
    assert join_all([(1, 0), (0, 2)]) == (1, 2)
