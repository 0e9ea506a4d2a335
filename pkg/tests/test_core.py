from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import embedding_sets, infinity, infinity_types
from pcalc.core.embeddings import EmbeddingSet, Restriction, compose, invert
from pcalc.core.halfint import HALF, ONE, ZERO, HalfInt, lattice_offset, on_lattice
from pcalc.core.types import CharacterType, InfinityType, direct_sum, is_conjugate_self_dual, validate
from pcalc.errors import EmbeddingMismatchError, FiberError, NonIntegralExponentError, ValidationError


class TestHalfInt:
    @pytest.mark.parametrize(
        "raw, doubled",
        [(3, 6), ("-11/2", -11), ("7/2", 7), (Fraction(-1, 2), -1), ("0", 0)],
    )
    def test_parses_exact_values(self, raw, doubled):
        assert HalfInt.of(raw).doubled == doubled

    @pytest.mark.parametrize("raw", [1.5, True, "1/3", "abc", None])
    def test_rejects_anything_else(self, raw):
        with pytest.raises(ValidationError):
            HalfInt.of(raw)

    def test_arithmetic_stays_exact(self):
        assert HALF + HALF == ONE
        assert HalfInt.of("3/2") * 2 == 3
        assert -HALF == HalfInt.of("-1/2")
        assert 1 - HALF == HALF
        assert HalfInt(1) < 1
        assert str(HalfInt(-11)) == "-11/2"
        assert str(HalfInt(4)) == "2"

    def test_to_int_refuses_halves(self):
        assert HalfInt(6).to_int() == 3
        with pytest.raises(NonIntegralExponentError):
            HALF.to_int()

    def test_lattice_helpers(self):
        assert lattice_offset(2) == HALF
        assert lattice_offset(3) == ZERO
        assert on_lattice(HalfInt.of("5/2"), HALF)
        assert not on_lattice(HalfInt.of(2), HALF)


class TestEmbeddings:
    def test_default_conjugates(self):
        emb = EmbeddingSet.create(["s1", "s2"])
        assert emb.conj("s1") == "~s1"
        assert emb.conj("~s2") == "s2"
        assert emb.places == ("s1", "s2", "~s1", "~s2")
        assert emb.upper("~s1") == "s1"

    def test_galois_action_commutes_with_conjugation(self, field2):
        perm = field2.permutation("g")
        assert field2.act(perm, "s1") == "s2"
        assert field2.act(perm, "~s1") == "~s2"
        assert compose(perm, invert(perm)) == {"s1": "s1", "s2": "s2"}

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"labels": []},
            {"labels": ["s1", "s1"]},
            {"labels": ["s1"], "conjugates": ["s1"]},
            {"labels": ["s1", "s2"], "galois": {"g": ["s1", "s1"]}},
        ],
    )
    def test_invalid_sets(self, kwargs):
        with pytest.raises(ValidationError):
            EmbeddingSet.create(**kwargs)

    def test_unknown_galois_element(self, field2):
        with pytest.raises(ValidationError):
            field2.permutation("h")


class TestRestriction:
    def test_fibres_and_deck(self, quadratic_extension):
        res = quadratic_extension
        assert res.degree() == 2
        assert res.fiber("s1") == ("t1", "t2")
        assert res("~t2") == "~s1"
        assert res.deck_powers() == [{"t1": "t1", "t2": "t2"}, {"t1": "t2", "t2": "t1"}]
        res.check_fibers(2)
        with pytest.raises(FiberError):
            res.check_fibers(3)

    def test_unequal_fibres(self):
        small = EmbeddingSet.create(["s1", "s2"])
        large = EmbeddingSet.create(["t1", "t2", "t3"], name="E")
        res = Restriction.create(large, small, {"t1": "s1", "t2": "s1", "t3": "s2"})
        with pytest.raises(FiberError):
            res.degree()

    def test_deck_must_preserve_fibres(self):
        small = EmbeddingSet.create(["s1", "s2"])
        large = EmbeddingSet.create(["t1", "t2", "t3", "t4"], galois={"g": ["t3", "t4", "t1", "t2"]}, name="E")
        with pytest.raises(FiberError):
            Restriction.create(large, small, {"t1": "s1", "t2": "s1", "t3": "s2", "t4": "s2"}, deck="g")

    def test_must_be_total(self):
        small = EmbeddingSet.create(["s1"])
        large = EmbeddingSet.create(["t1", "t2"], name="E")
        with pytest.raises(ValidationError):
            Restriction.create(large, small, {"t1": "s1"})

    def test_default_deck_cycles_fibres(self):
        small = EmbeddingSet.create(["s1"])
        large = EmbeddingSet.create(["t1", "t2", "t3"], name="E")
        res = Restriction.create(large, small, {"t1": "s1", "t2": "s1", "t3": "s1"})
        assert res.deck_permutation() == {"t1": "t2", "t2": "t3", "t3": "t1"}
        assert len(res.deck_powers()) == 3


class TestInfinityTypes:
    def test_validate_reports_every_violation(self, field1):
        bad = InfinityType.create(field1, {"s1": ["1/2", "3/2"]}, "1/2")
        violations = validate(bad)
        assert any("strict decrease" in v for v in violations)
        assert any("weight" in v for v in violations)

        off_lattice = InfinityType.create(field1, {"s1": [1, 0]})
        assert any("algebraicity" in v for v in validate(off_lattice))
        with pytest.raises(ValidationError) as err:
            off_lattice.require_valid()
        assert err.value.violations

    def test_exponents_at_the_conjugate_place(self, field1):
        t = InfinityType.create(field1, {"s1": ["3/2", "-1/2"]}, 2)
        assert t.at("~s1") == (HalfInt.of("-3/2"), HalfInt.of("-7/2"))

    def test_weight_zero_is_conjugate_self_dual(self, field1):
        assert is_conjugate_self_dual(infinity(field1, {"s1": ["5/2", "-1/2"]}))
        assert not is_conjugate_self_dual(infinity(field1, {"s1": ["5/2", "-1/2"]}, 2))

    def test_regularity(self, field1):
        t = infinity(field1, {"s1": ["5/2", "-1/2"]})
        assert t.is_n_regular(3)
        assert not t.is_n_regular(4)

    def test_twist_by_norm(self, field1):
        t = infinity(field1, {"s1": [2, 0, -2]})
        twisted = t.twist(CharacterType.norm(field1))
        assert twisted.at("s1") == (3, 1, -1)
        assert twisted.weight == -2

    def test_direct_sum_merges_and_sorts(self, field1):
        first = CharacterType.uniform(field1, 3, -3).as_infinity_type()
        second = infinity(field1, {"s1": ["1/2", "-1/2"]})
        total = direct_sum([first, second])
        assert total.n == 3
        assert total.at("s1") == (3, HALF, -HALF)

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_dual_and_conjugate_are_involutions(self, data):
        emb = data.draw(embedding_sets())
        t = data.draw(infinity_types(emb, data.draw(st.integers(1, 6))))
        assert t.dual().dual() == t
        assert t.conjugate().conjugate() == t
        assert t.is_conjugate_self_dual()

    @settings(max_examples=200, deadline=None)
    @given(st.data())
    def test_dual_of_twist(self, data):
        emb = data.draw(embedding_sets())
        t = data.draw(infinity_types(emb, data.draw(st.integers(1, 6))))
        k = data.draw(st.integers(-5, 5))
        eta = CharacterType.uniform(emb, k, -k + 2)
        assert t.twist(eta).dual() == t.dual().twist(eta.inverse())
        assert t.twist(CharacterType.trivial(emb)) == t


class TestCharacterTypes:
    def test_weight_must_be_constant(self, field2):
        with pytest.raises(ValidationError):
            CharacterType.create(field2, {"s1": 1, "s2": 0}, {"s1": 0, "s2": 0})

    def test_arithmetic(self, field1):
        eta = CharacterType.uniform(field1, 2, -2)
        assert eta.is_conjugate_self_dual
        assert eta.omega == 0
        assert eta.conjugate() == eta.inverse()
        assert (eta * eta.inverse()) == CharacterType.trivial(field1)
        assert CharacterType.norm(field1).omega == -2
        assert not CharacterType.uniform(field1, "1/2", "-1/2").is_algebraic

    def test_pullback_through_restriction(self, quadratic_extension):
        eta = CharacterType.uniform(quadratic_extension.target, 2, -1)
        pulled = eta.pullback(quadratic_extension)
        assert pulled.embeddings.name == "E"
        assert pulled.at("t2") == (2, -1)
        assert pulled.at("~t1") == (-1, 2)

    def test_mismatched_embeddings(self, field1, field2):
        with pytest.raises(EmbeddingMismatchError):
            CharacterType.trivial(field1) * CharacterType.trivial(field2)
