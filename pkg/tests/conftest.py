import random

import pytest
from hypothesis import strategies as st

from src.core.monomial import minimalize
from src.core.suite import random_generic_ideal
from src.io.fixtures import load_fixture


# 固定种子, 保证可复现
SEED = 20240521


@pytest.fixture(scope="session")
def genex():
    return load_fixture("genex")


@pytest.fixture(scope="session")
def amsterdam():
    return load_fixture("amsterdam")


@pytest.fixture(scope="session")
def motex():
    return load_fixture("motex")


@pytest.fixture(scope="session")
def dimtva():
    return load_fixture("dimtva")


@pytest.fixture(scope="session")
def amsterdam_hull():
    return load_fixture("amsterdam-hull")


@pytest.fixture(scope="session")
def motex_hull():
    return load_fixture("motex-hull")


@pytest.fixture(scope="session")
def motex_minimal():
    return load_fixture("motex-minimal")


@pytest.fixture
def rng():
    return random.Random(SEED)


# genex 的外角, 按 σ = (1,2,3) 的字典序降序编号
GENEX_ALPHA = {
    1: (3, 1, 3),
    2: (2, 4, 1),
    3: (2, 3, 2),
    4: (2, 2, 3),
    5: (1, 3, 3),
}


def generic_ideals(n=None):
    """随机 generic Artinian 理想, 由整数种子生成"""
    return st.integers(min_value=0, max_value=10**6).map(
        lambda seed: random_generic_ideal(random.Random(seed), n=n)
    )


@st.composite
def artinian_ideals(draw, max_n=3, max_degree=4):
    """任意 (不一定 generic) 的小 Artinian 理想"""
    n = draw(st.integers(min_value=1, max_value=max_n))
    degrees = draw(st.lists(st.integers(1, max_degree), min_size=n, max_size=n))
    gens = []
    for i, d in enumerate(degrees):
        vec = [0] * n
        vec[i] = d
        gens.append(vec)
    extras = draw(
        st.lists(
            st.lists(st.integers(0, max_degree), min_size=n, max_size=n),
            max_size=5,
        )
    )
    gens.extend(e for e in extras if any(e))
    return minimalize(gens)
