import pytest
from hypothesis import given, settings

from src.config import SCARF_SEED
from src.core.errors import ScarfError
from src.core.monomial import is_generic, minimalize
from src.core.oracles import oracle_colength, oracle_outer_corners, oracle_partition, oracle_scarf
from src.core.staircase import all_sigmas, partition_bruteforce
from src.core.suite import (
    mutation_sensitivity,
    random_generic_ideal,
    run_complex_suite,
    run_ideal_suite,
    run_random_suite,
    suite_passed,
)

from conftest import GENEX_ALPHA, generic_ideals


def test_oracle_examples(genex, amsterdam, dimtva):
    assert oracle_outer_corners(genex) == set(GENEX_ALPHA.values())
    assert oracle_colength(genex) == 22
    assert oracle_colength(amsterdam) == 5
    assert oracle_outer_corners(dimtva) == {(3, 1), (2, 3)}
    assert {(0,), (1,), (0, 1)} <= oracle_scarf(minimalize([(2, 0), (0, 2)]))


def test_oracle_partition_order(amsterdam):
    parts = oracle_partition(amsterdam, (3, 1, 2))
    assert list(parts) == [(1, 1, 2), (2, 2, 1)]
    assert parts == partition_bruteforce(amsterdam, (3, 1, 2))
    with pytest.raises(ScarfError):
        oracle_partition(amsterdam, (1, 2))


def test_oracle_generator_cap():
    gens = [(i, 21 - i) for i in range(22)]
    with pytest.raises(ScarfError):
        oracle_scarf(minimalize(gens))


def test_random_generic_ideal_is_reproducible(rng):
    import random

    first = [random_generic_ideal(rng) for _ in range(5)]
    again = random.Random(20240521)
    assert first == [random_generic_ideal(again) for _ in range(5)]
    assert all(is_generic(M)[0] for M in first)


def test_ideal_suite_fixtures(genex, amsterdam, motex):
    genex_checks = run_ideal_suite(genex, seed=1)
    assert suite_passed(genex_checks)
    assert "factorization" in {c["name"] for c in genex_checks}

    for M in (amsterdam, motex):
        checks = run_ideal_suite(M, seed=1)
        assert suite_passed(checks)
        generic = next(c for c in checks if c["name"] == "generic")
        assert not generic["ok"] and not generic["required"]
        assert "theorem_123" not in {c["name"] for c in checks}


def test_ideal_suite_rejects_non_artinian():
    checks = run_ideal_suite(minimalize([(1, 1), (2, 0)]))
    assert not suite_passed(checks)


def test_complex_suite(amsterdam_hull, motex_hull, motex_minimal):
    for X in (amsterdam_hull, motex_hull, motex_minimal):
        assert suite_passed(run_complex_suite(X, seed=3))
    checks = {c["name"]: c for c in run_complex_suite(motex_hull, seed=3)}
    assert not checks["volumes_312"]["ok"]
    assert not checks["minimal"]["ok"]
    assert checks["pairing_312"]["ok"]


@pytest.mark.parametrize("name", ["amsterdam_hull", "motex_hull", "motex_minimal"])
def test_mutations_are_detected(name, request):
    X = request.getfixturevalue(name)
    results = mutation_sensitivity(X, count=10, seed=11)
    assert len(results) == 10
    assert all(r["detected"] for r in results)


def test_random_suite():
    seen = []
    results = run_random_suite(3, seed=5, progress=seen.append)
    assert seen == [1, 1, 1]
    assert all(r["passed"] for r in results)


@pytest.mark.slow
def test_random_suite_two_hundred_ideals():
    results = run_random_suite(200, seed=SCARF_SEED)
    assert len(results) == 200
    failed = [r for r in results if not r["passed"]]
    assert not failed, failed[:3]


@given(generic_ideals())
@settings(max_examples=10, deadline=None, derandomize=True)
def test_ideal_suite_random(M):
    checks = run_ideal_suite(M, seed=0)
    assert suite_passed(checks), [c["name"] for c in checks if not c["ok"]]


@given(generic_ideals(n=3))
@settings(max_examples=20, deadline=None, derandomize=True)
def test_partition_matches_oracle(M):
    for sigma in all_sigmas(3):
        assert partition_bruteforce(M, sigma) == oracle_partition(M, sigma)
