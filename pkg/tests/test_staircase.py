import pytest
from hypothesis import given, settings

from src.core.errors import BoxTooLargeError, NotArtinianError, NotGenericError, ScarfError, SigmaError
from src.core.monomial import minimalize
from src.core.scarf import build_scarf, face_by_label
from src.core.staircase import (
    Cuboid,
    all_sigmas,
    build_staircase,
    cells_from_corners,
    colength,
    colength_inclusion_exclusion,
    irreducible_components,
    is_cuboid,
    lex_order,
    outer_corners,
    partition_bruteforce,
    partition_cuboid,
    partition_cuboids,
    staircase_cells,
    validate_sigma,
    volume,
)

from conftest import GENEX_ALPHA, generic_ideals


def test_outer_corners(genex, amsterdam, motex):
    assert outer_corners(genex) == sorted(GENEX_ALPHA.values())
    assert outer_corners(amsterdam) == [(1, 1, 2), (2, 2, 1)]
    assert outer_corners(motex) == [(1, 1, 2), (2, 3, 1), (3, 2, 1)]
    assert outer_corners(minimalize([(4,)])) == [(4,)]


def test_non_artinian_rejected():
    M = minimalize([(2, 0), (1, 1)])
    with pytest.raises(NotArtinianError):
        outer_corners(M)
    with pytest.raises(NotArtinianError):
        colength(M)


def test_colength(genex, amsterdam, motex, dimtva):
    assert colength(minimalize([(3,)])) == 3
    assert colength(amsterdam) == 5
    assert colength(motex) == 9
    assert colength(genex) == 22
    assert colength(dimtva) == 7


def test_box_cap(genex):
    with pytest.raises(BoxTooLargeError):
        staircase_cells(genex, max_box=10)


def test_build_staircase(genex):
    S = build_staircase(genex)
    assert S.inner_corners == genex.gens
    assert S.bounding_box == (3, 4, 3)
    assert all(all(x > 0 for x in alpha) for alpha in S.outer_corners)


def test_lex_order(genex):
    a = GENEX_ALPHA
    assert lex_order(a.values(), (1, 2, 3)) == [a[1], a[2], a[3], a[4], a[5]]
    assert lex_order(a.values(), (2, 3, 1)) == [a[2], a[5], a[3], a[4], a[1]]
    assert lex_order([(1, 2)], (2, 1)) == [(1, 2)]
    with pytest.raises(ScarfError):
        lex_order([(1, 2), (1, 2)], (1, 2))


def test_sigma_validation():
    assert validate_sigma([2, 1], 2) == (2, 1)
    with pytest.raises(SigmaError):
        validate_sigma((1, 1, 2), 3)
    assert len(all_sigmas(3)) == 6


def test_amsterdam_partition(amsterdam):
    alpha1, alpha2 = (2, 2, 1), (1, 1, 2)
    parts = partition_bruteforce(amsterdam, (1, 2, 3))
    assert list(parts) == [alpha1, alpha2]
    assert parts[alpha1] == Cuboid(((0, 2), (0, 2), (0, 1))).cells()
    assert parts[alpha2] == Cuboid(((0, 1), (0, 1), (1, 2))).cells()

    for sigma in all_sigmas(3):
        parts = partition_bruteforce(amsterdam, sigma)
        volumes = {alpha: volume(cells) for alpha, cells in parts.items()}
        if sigma[0] == 3:
            assert volumes == {alpha1: 3, alpha2: 2}
            assert not is_cuboid(parts[alpha1])
        else:
            assert volumes == {alpha1: 4, alpha2: 1}


def test_amsterdam_sigma3_piece_is_l_shaped(amsterdam):
    piece = partition_bruteforce(amsterdam, (3, 1, 2))[(2, 2, 1)]
    box = Cuboid(((0, 2), (0, 2), (0, 1))).cells()
    assert piece == box - {(0, 0, 0)}


def test_one_dimensional_partition():
    M = minimalize([(5,)])
    assert partition_bruteforce(M, (1,)) == {(5,): frozenset((a,) for a in range(5))}


def test_genex_cuboids(genex):
    delta = build_scarf(genex)
    expected = {
        1: ((0, 3), (0, 1), (0, 3)),
        2: ((0, 2), (1, 4), (0, 1)),
        3: ((0, 2), (1, 3), (1, 2)),
        4: ((0, 2), (1, 2), (2, 3)),
        5: ((0, 1), (2, 3), (2, 3)),
    }
    volumes = {1: 9, 2: 6, 3: 4, 4: 2, 5: 1}
    for k, alpha in GENEX_ALPHA.items():
        cuboid = partition_cuboid(genex, (1, 2, 3), face_by_label(delta, alpha))
        assert cuboid.intervals == expected[k]
        assert cuboid.volume == volumes[k]
    assert str(Cuboid(expected[1])) == "]0,3]×]0,1]×]0,3]"


def test_genex_cuboids_match_bruteforce(genex):
    for sigma in all_sigmas(3):
        parts = partition_bruteforce(genex, sigma)
        cuboids = partition_cuboids(genex, sigma)
        assert list(cuboids) == list(parts)
        for alpha, cells in parts.items():
            assert cuboids[alpha].cells() == cells


def test_cuboid_requires_generic(amsterdam):
    with pytest.raises(NotGenericError):
        partition_cuboids(amsterdam, (1, 2, 3))


def test_cuboid_validation():
    with pytest.raises(ScarfError):
        Cuboid(((1, 1), (0, 2)))
    assert volume(frozenset()) == 0
    assert volume(Cuboid(((0, 3), (0, 1), (0, 3)))) == 9


def test_dimtva_slicing(dimtva):
    vertical = partition_bruteforce(dimtva, (1, 2))
    horizontal = partition_bruteforce(dimtva, (2, 1))
    assert {a: len(c) for a, c in vertical.items()} == {(3, 1): 3, (2, 3): 4}
    assert {a: len(c) for a, c in horizontal.items()} == {(2, 3): 6, (3, 1): 1}


def test_outer_corner_representation(genex, motex):
    for M in (genex, motex):
        corners = outer_corners(M)
        assert cells_from_corners(corners) == staircase_cells(M)
        assert colength_inclusion_exclusion(corners) == colength(M)


def test_irreducible_components(amsterdam):
    components = irreducible_components(amsterdam)
    assert [c.gens for c in components] == [
        ((0, 0, 2), (0, 1, 0), (1, 0, 0)),
        ((0, 0, 1), (0, 2, 0), (2, 0, 0)),
    ]


@given(generic_ideals())
@settings(max_examples=25, deadline=None, derandomize=True)
def test_partition_properties(M):
    cells = staircase_cells(M)
    length = len(cells)
    for sigma in all_sigmas(M.n):
        parts = partition_bruteforce(M, sigma)
        pieces = list(parts.values())
        assert sum(len(p) for p in pieces) == length
        assert frozenset().union(*pieces) == cells
        cuboids = partition_cuboids(M, sigma)
        for alpha, piece in parts.items():
            assert cuboids[alpha].cells() == piece


@given(generic_ideals(n=3))
@settings(max_examples=25, deadline=None, derandomize=True)
def test_inclusion_exclusion_agrees(M):
    assert colength_inclusion_exclusion(outer_corners(M)) == colength(M)
