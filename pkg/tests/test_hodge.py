from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import embedding_sets
from pcalc.errors import BoundExceededError, ParityError, ValidationError
from pcalc.hodge.weights import (
    HighestWeight,
    enumerate_W1,
    hodge_number,
    hodge_number_w0,
    identity_element,
    longest_element,
    shimura_dimension,
    star_action,
)
from pcalc.indices.signs import SignMap


@st.composite
def weighted_signatures(draw, max_n: int = 4):
    emb = draw(embedding_sets(max_d=2))
    n = draw(st.integers(min_value=1, max_value=max_n))
    rows = {
        label: sorted(draw(st.lists(st.integers(-6, 6), min_size=n, max_size=n)), reverse=True)
        for label in emb.labels
    }
    total = sum(sum(row) for row in rows.values())
    lambda0 = 2 * draw(st.integers(-5, 5)) + total % 2
    signs = SignMap.create(emb, {label: draw(st.integers(0, n)) for label in emb.labels}, n)
    return HighestWeight.create(emb, lambda0, rows), signs


class TestHighestWeight:
    def test_rows_must_decrease(self, field1):
        with pytest.raises(ValidationError):
            HighestWeight.create(field1, 0, {"s1": [0, 1]})

    def test_rows_share_a_length(self, field2):
        with pytest.raises(ValidationError):
            HighestWeight.create(field2, 0, {"s1": [1, 0], "s2": [0]})

    def test_parity(self, field1):
        assert HighestWeight.create(field1, 1, {"s1": [2, -1]}).parity_ok
        assert not HighestWeight.create(field1, 0, {"s1": [2, -1]}).parity_ok


class TestWOne:
    def test_enumeration_size_and_order(self, field2):
        signs = SignMap.create(field2, {"s1": 1, "s2": 2}, 4)
        elements = enumerate_W1(4, signs)
        assert len(elements) == comb(4, 3) * comb(4, 2)
        assert elements[0] == identity_element(4, signs)
        assert longest_element(4, signs) in elements
        assert all(w.is_valid() for w in elements)

    def test_longest_element(self, field1):
        signs = SignMap.create(field1, {"s1": 1}, 3)
        w0 = longest_element(3, signs)
        assert w0.at("s1") == (2, 3, 1)
        assert w0.length == 2
        assert max(w.length for w in enumerate_W1(3, signs)) == w0.length

    def test_bound(self, field1):
        signs = SignMap.create(field1, {"s1": 2}, 5)
        with pytest.raises(BoundExceededError):
            enumerate_W1(5, signs, bound=4)

    def test_star_action_of_identity(self, field1):
        weight = HighestWeight.create(field1, 0, {"s1": [3, 1, -4]})
        signs = SignMap.create(field1, {"s1": 1}, 3)
        assert star_action(identity_element(3, signs), weight) == weight
        assert star_action(longest_element(3, signs), weight).at("s1") == (0, -5, 5)


class TestHodgeNumbers:
    def test_trivial_weight(self, field2):
        weight = HighestWeight.create(field2, 0, {"s1": [0, 0, 0], "s2": [0, 0, 0]})
        signs = SignMap.create(field2, {"s1": 1, "s2": 2}, 3)
        dimension = shimura_dimension(3, signs)
        assert dimension == 8
        assert hodge_number(identity_element(3, signs), weight, signs) == 0
        assert hodge_number(longest_element(3, signs), weight, signs) == dimension // 2

    def test_shimura_dimension(self, field1):
        assert shimura_dimension(3, SignMap.create(field1, {"s1": 1}, 3)) == 4
        assert shimura_dimension(3, SignMap.create(field1, {"s1": 0}, 3)) == 0

    def test_parity_is_required(self, field1):
        weight = HighestWeight.create(field1, 0, {"s1": [1, 0]})
        signs = SignMap.create(field1, {"s1": 1}, 2)
        with pytest.raises(ParityError):
            hodge_number(identity_element(2, signs), weight, signs)
        with pytest.raises(ParityError):
            hodge_number_w0(weight, signs)

    def test_element_for_another_signature(self, field1):
        weight = HighestWeight.create(field1, 0, {"s1": [0, 0]})
        with pytest.raises(ValidationError):
            hodge_number(
                identity_element(2, SignMap.create(field1, {"s1": 0}, 2)),
                weight,
                SignMap.create(field1, {"s1": 1}, 2),
            )

    @settings(max_examples=500, deadline=None)
    @given(weighted_signatures(max_n=5))
    def test_extremes_sit_at_identity_and_w0(self, data):
        weight, signs = data
        n = weight.n
        w0 = longest_element(n, signs)
        identity = identity_element(n, signs)
        values = {w: hodge_number(w, weight, signs) for w in enumerate_W1(n, signs)}

        assert values[w0] == hodge_number_w0(weight, signs)
        top = max(values.values())
        bottom = min(values.values())
        assert [w for w, p in values.items() if p == top] == [w0]
        assert [w for w, p in values.items() if p == bottom] == [identity]
