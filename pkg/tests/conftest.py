import json
from pathlib import Path
from typing import Dict, List, Tuple

import pytest
from hypothesis import assume
from hypothesis import strategies as st

from pcalc.core.embeddings import EmbeddingSet, Restriction
from pcalc.core.halfint import HalfInt
from pcalc.core.types import InfinityType
from pcalc.errors import CollisionError
from pcalc.indices.split import check_regular_pair
from pcalc.periods.registry import CharacterRegistry, Representation

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture
def data_dir() -> Path:
    return DATA_DIR


@pytest.fixture
def field1() -> EmbeddingSet:
    return EmbeddingSet.create(["s1"])


@pytest.fixture
def field2() -> EmbeddingSet:
    return EmbeddingSet.create(["s1", "s2"], galois={"g": ["s2", "s1"]})


@pytest.fixture
def quadratic_extension() -> Restriction:
    """Two labels t1, t2 of the larger field over the single label s1."""
    small = EmbeddingSet.create(["s1"], name="F")
    large = EmbeddingSet.create(["t1", "t2"], galois={"g": ["t2", "t1"]}, name="E")
    return Restriction.create(large, small, {"t1": "s1", "t2": "s1"}, deck="g", name="E/F")


@pytest.fixture
def registry() -> CharacterRegistry:
    return CharacterRegistry()


def infinity(embeddings: EmbeddingSet, rows: Dict[str, List[object]], weight: object = 0) -> InfinityType:
    return InfinityType.create(embeddings, rows, weight).require_valid()


def representation(rep_id: str, embeddings: EmbeddingSet, rows: Dict[str, List[object]]) -> Representation:
    return Representation(rep_id, infinity(embeddings, rows))


def write_problem(tmp_path: Path, payload: dict, name: str = "problem.json") -> Path:
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return path


# hypothesis strategies


@st.composite
def embedding_sets(draw, max_d: int = 3) -> EmbeddingSet:
    d = draw(st.integers(min_value=1, max_value=max_d))
    return EmbeddingSet.create([f"s{i}" for i in range(1, d + 1)])


@st.composite
def exponent_rows(draw, n: int, bound: int = 40) -> List[HalfInt]:
    """n strictly decreasing values of Z + (n-1)/2 with absolute value at most ``bound``."""
    parity = (n - 1) % 2
    doubled = draw(
        st.lists(
            st.integers(min_value=-bound, max_value=bound - parity).map(lambda k: 2 * k + parity),
            min_size=n,
            max_size=n,
            unique=True,
        )
    )
    return [HalfInt(v) for v in sorted(doubled, reverse=True)]


@st.composite
def infinity_types(draw, embeddings: EmbeddingSet, n: int, bound: int = 40) -> InfinityType:
    rows = {label: draw(exponent_rows(n, bound)) for label in embeddings.labels}
    return InfinityType.create(embeddings, rows, 0)


@st.composite
def regular_pairs(draw, max_n: int = 8, max_d: int = 3, bound: int = 40) -> Tuple[InfinityType, InfinityType]:
    """Weight-0 pairs with no a_i + b_j = 0."""
    embeddings = draw(embedding_sets(max_d))
    n = draw(st.integers(min_value=1, max_value=max_n))
    n_other = draw(st.integers(min_value=1, max_value=max_n))
    pi = draw(infinity_types(embeddings, n, bound))
    other = draw(infinity_types(embeddings, n_other, bound))
    try:
        check_regular_pair(pi, other)
    except CollisionError:
        assume(False)
    return pi, other


@st.composite
def cyclic_extensions(draw, max_d: int = 2, max_l: int = 3) -> Restriction:
    """Labels t{i}_{k} of E over s{i} of F; the deck generator cycles each fibre."""
    small = draw(embedding_sets(max_d))
    l = draw(st.integers(min_value=1, max_value=max_l))
    mapping = {f"t{i}_{k}": label for i, label in enumerate(small.labels, start=1) for k in range(l)}
    large = EmbeddingSet.create(list(mapping), name="E")
    return Restriction.create(large, small, mapping, name="E/F")


@st.composite
def induction_data(draw, max_d: int = 2, max_n: int = 4, bound: int = 16) -> Tuple[InfinityType, Restriction]:
    """An infinity type over E whose exponents above each place of F are pairwise distinct."""
    restriction = draw(cyclic_extensions(max_d))
    l = restriction.degree()
    n = draw(st.integers(min_value=1, max_value=max_n))
    parity = (n - 1) % 2
    rows: Dict[str, List[HalfInt]] = {}
    for fiber in restriction.fibers().values():
        doubled = draw(
            st.lists(
                st.integers(min_value=-bound, max_value=bound - parity).map(lambda k: 2 * k + parity),
                min_size=n * l,
                max_size=n * l,
                unique=True,
            )
        )
        for k, sigma in enumerate(fiber):
            rows[sigma] = [HalfInt(v) for v in sorted(doubled[k * n:(k + 1) * n], reverse=True)]
    return InfinityType.create(restriction.source, rows, 0), restriction
