import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import cyclic_extensions, embedding_sets, induction_data, infinity, infinity_types, regular_pairs
from pcalc.core.embeddings import EmbeddingSet, Restriction
from pcalc.core.types import CharacterType
from pcalc.errors import CollisionError, RangeError, TieError
from pcalc.indices.functoriality import ai_global_index, ai_local_index, bc_index
from pcalc.indices.signs import SignMap, character_for_sign_map, galois_transport, sign_map
from pcalc.indices.split import (
    gap_positions,
    is_good_position,
    split_index_properties_check,
    split_indices,
)


class TestSplitIndices:
    def test_worked_example(self, field1):
        pi = infinity(field1, {"s1": [10, 9, 7, 6, 5]})
        other = infinity(field1, {"s1": ["-11/2", "-15/2", "-17/2", "-21/2"]})
        assert split_indices(pi, other, "s1").entries == (0, 2, 0, 2, 1)
        assert not is_good_position(pi, other)

    def test_single_point(self, field1):
        pi = infinity(field1, {"s1": [1]})
        other = infinity(field1, {"s1": [0]})
        assert split_indices(pi, other, "s1").entries == (1, 0)

    def test_interlaced_pair_is_all_ones(self, field1):
        pi = infinity(field1, {"s1": ["9/2", "3/2", "-3/2", "-9/2"]})
        other = infinity(field1, {"s1": [3, 0, -3]})
        assert split_indices(pi, other, "s1").entries == (1, 1, 1, 1)
        assert split_indices(other, pi, "s1").entries == (0, 1, 1, 1, 0)
        assert is_good_position(pi, other)

    def test_collision(self, field1):
        pi = infinity(field1, {"s1": [1]})
        other = infinity(field1, {"s1": [-1]})
        with pytest.raises(CollisionError):
            split_indices(pi, other, "s1")

    @settings(max_examples=1000, deadline=None)
    @given(regular_pairs())
    def test_split_lemma(self, pair):
        pi, other = pair
        for label in pi.embeddings.labels:
            results = split_index_properties_check(pi, other, label)
            assert results == {"sum": True, "reversal": True, "norm_twist": True, "character_exchange": True}

    def test_gap_positions(self, field1):
        t = infinity(field1, {"s1": [3, 0, -3]})
        assert gap_positions(t, [-4, "1/2", 5], "s1") == (0, 2, 3)
        with pytest.raises(CollisionError):
            gap_positions(t, [0], "s1")


class TestSignMaps:
    def test_sign_map_counts_negative_quantities(self, field1):
        t = infinity(field1, {"s1": ["3/2", "-3/2"]})
        assert sign_map(t, CharacterType.trivial(field1)).as_dict() == {"s1": 1}
        assert sign_map(t, CharacterType.uniform(field1, 2, -2)).as_dict() == {"s1": 0}
        assert sign_map(t, CharacterType.uniform(field1, -2, 2)).as_dict() == {"s1": 2}

    def test_general_position_required(self, field1):
        t = infinity(field1, {"s1": [1, 0, -1]})
        with pytest.raises(CollisionError):
            sign_map(t, CharacterType.trivial(field1))

    def test_values_must_be_in_range(self, field1):
        with pytest.raises(RangeError):
            SignMap.create(field1, {"s1": 3}, 2)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_character_realizes_any_sign_map(self, data):
        emb = data.draw(embedding_sets())
        n = data.draw(st.integers(1, 6))
        t = data.draw(infinity_types(emb, n))
        target = SignMap.create(emb, {label: data.draw(st.integers(0, n)) for label in emb.labels}, n)
        eta = character_for_sign_map(t, target)
        assert eta.is_conjugate_self_dual
        assert sign_map(t, eta) == target

    def test_galois_transport(self, field2):
        signs = SignMap.create(field2, {"s1": 0, "s2": 3}, 3)
        moved = galois_transport(signs, field2.permutation("g"))
        assert moved.as_dict() == {"s1": 3, "s2": 0}
        assert galois_transport(moved, field2.permutation("g")) == signs


class TestFunctorialityIndices:
    def test_local_index_splits_the_smallest_exponents(self):
        blocks = {"t1": [5, 1], "t2": [3, -2]}
        assert ai_local_index(blocks, 0) == {"t1": 0, "t2": 0}
        assert ai_local_index(blocks, 2) == {"t1": 1, "t2": 1}
        assert ai_local_index(blocks, 3) == {"t1": 1, "t2": 2}
        assert ai_local_index(blocks, 4) == {"t1": 2, "t2": 2}

    def test_local_index_errors(self):
        with pytest.raises(TieError):
            ai_local_index({"t1": [1, 0], "t2": [1, -1]}, 1)
        with pytest.raises(RangeError):
            ai_local_index({"t1": [1], "t2": [0]}, 3)

    def test_global_index(self, quadratic_extension):
        res = quadratic_extension
        upstairs = infinity(res.source, {"t1": [3], "t2": [-1]})
        for s, expected in [(0, {"t1": 0, "t2": 0}), (1, {"t1": 0, "t2": 1}), (2, {"t1": 1, "t2": 1})]:
            signs = SignMap.create(res.target, {"s1": s}, 2)
            assert ai_global_index(signs, upstairs, res).as_dict() == expected

    def test_global_index_rank(self, quadratic_extension):
        res = quadratic_extension
        upstairs = infinity(res.source, {"t1": [3], "t2": [-1]})
        with pytest.raises(RangeError):
            ai_global_index(SignMap.create(res.target, {"s1": 1}, 3), upstairs, res)

    def test_base_change_index(self, quadratic_extension):
        signs = SignMap.create(quadratic_extension.target, {"s1": 2}, 3)
        assert bc_index(signs, quadratic_extension).as_dict() == {"t1": 2, "t2": 2}

    def test_base_change_index_over_two_places(self):
        small = EmbeddingSet.create(["s1", "s2"])
        large = EmbeddingSet.create(["t1", "t2", "t3", "t4"], name="E")
        res = Restriction.create(large, small, {"t1": "s1", "t2": "s2", "t3": "s1", "t4": "s2"})
        signs = SignMap.create(small, {"s1": 1, "s2": 0}, 2)
        assert bc_index(signs, res).as_dict() == {"t1": 1, "t2": 0, "t3": 1, "t4": 0}

    @settings(max_examples=500, deadline=None)
    @given(induction_data(), st.data())
    def test_global_index_sums_over_fibres(self, data, draws):
        upstairs, res = data
        rank = upstairs.n * res.degree()
        values = {tau: draws.draw(st.integers(0, rank)) for tau in res.target.labels}
        signs = SignMap.create(res.target, values, rank)
        upstairs_signs = ai_global_index(signs, upstairs, res)
        for tau, fiber in res.fibers().items():
            assert sum(upstairs_signs(sigma) for sigma in fiber) == signs(tau)
            assert all(0 <= upstairs_signs(sigma) <= upstairs.n for sigma in fiber)

    @settings(max_examples=500, deadline=None)
    @given(cyclic_extensions(), st.integers(1, 4), st.data())
    def test_base_change_index_is_galois_invariant(self, res, n, draws):
        signs = SignMap.create(res.target, {tau: draws.draw(st.integers(0, n)) for tau in res.target.labels}, n)
        lifted = bc_index(signs, res)
        assert all(lifted(sigma) == signs(res(sigma)) for sigma in res.source.labels)
        for perm in res.deck_powers():
            assert galois_transport(lifted, perm) == lifted
