import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import infinity, regular_pairs
from pcalc.core.halfint import HALF, ZERO, HalfInt
from pcalc.core.types import CharacterType
from pcalc.critical.sets import (
    CriticalSet,
    HodgeTypeList,
    critical_set_character,
    critical_set_motive,
    critical_set_pair,
    critical_set_pair_via_motive,
    is_critical_pair,
    motive_hodge_data,
    motivic_triple_critical,
)
from pcalc.errors import BoundExceededError, MiddleClassError
from pcalc.hodge.weights import HighestWeight
from pcalc.indices.signs import SignMap


def deligne_oracle(weight: int, ps, m: int) -> bool:
    """Both Gamma factors finite at m and w + 1 - m, checked pair by pair."""
    for p in ps:
        low, high = sorted((p, weight - p))
        if not low < m <= high:
            return False
    return True


@st.composite
def hodge_lists(draw):
    weight = draw(st.integers(min_value=-6, max_value=6))
    ps = draw(
        st.lists(
            st.integers(min_value=-8, max_value=8).filter(lambda p: 2 * p != weight),
            min_size=1,
            max_size=5,
            unique=True,
        )
    )
    return weight, ps


class TestCriticalSetValues:
    def test_between_rounds_inwards(self):
        points = CriticalSet.between(HalfInt(1), HalfInt(7), ZERO)
        assert points.members() == [1, 2, 3]
        assert CriticalSet.between(HalfInt(4), HalfInt(3)).is_empty

    def test_intersect_and_shift(self):
        first = CriticalSet.between(HalfInt(-4), HalfInt(4))
        second = CriticalSet.between(HalfInt(0), None)
        assert first.intersect(second).members() == [0, 1, 2]
        assert first.intersect(CriticalSet.between(None, None, HALF)).is_empty
        moved = first.shift("1/2")
        assert moved.offset == HALF
        assert moved.describe() == "[-3/2, 5/2] in Z+1/2"

    def test_membership_is_exact(self):
        points = CriticalSet.between(HalfInt(-2), HalfInt(2))
        assert 1 in points
        assert "1/2" not in points
        assert "abc" not in points
        assert 3 not in points

    def test_unbounded_sets_cannot_be_listed(self):
        with pytest.raises(BoundExceededError):
            CriticalSet.between(ZERO, None).members()


class TestMotives:
    @settings(max_examples=1000, deadline=None)
    @given(hodge_lists())
    def test_agrees_with_gamma_factor_oracle(self, data):
        weight, ps = data
        points = critical_set_motive(HodgeTypeList.create(weight, ps))
        for m in range(-20, 21):
            assert (m in points) == deligne_oracle(weight, ps, m)

    def test_middle_class(self):
        with pytest.raises(MiddleClassError):
            critical_set_motive(HodgeTypeList.create(2, [1, 3]))

    def test_motive_of_an_infinity_type(self, field1):
        t = infinity(field1, {"s1": ["5/2", "-5/2"]})
        hodge = motive_hodge_data(t)["s1"]
        assert hodge.weight == 1
        assert hodge.ps == (3, -2)


class TestPairs:
    def test_small_pair(self, field1):
        pi = infinity(field1, {"s1": ["5/2", "-5/2"]})
        other = infinity(field1, {"s1": [0]})
        points = critical_set_pair(pi, other)
        assert points.describe() == "[-3/2, 5/2] in Z+1/2"
        assert critical_set_pair_via_motive(pi, other) == points
        assert is_critical_pair(pi, other, "3/2")
        assert not is_critical_pair(pi, other, "7/2")
        assert not is_critical_pair(pi, other, 1)

    def test_collision_gives_no_points(self, field1):
        pi = infinity(field1, {"s1": ["1/2", "-1/2"]})
        assert critical_set_pair(pi, pi).is_empty
        assert critical_set_pair_via_motive(pi, pi).is_empty

    @settings(max_examples=1000, deadline=None)
    @given(regular_pairs())
    def test_motive_route_agrees(self, pair):
        pi, other = pair
        direct = critical_set_pair(pi, other)
        via_motive = critical_set_pair_via_motive(pi, other)
        for doubled in range(-200, 201):
            assert (HalfInt(doubled) in direct) == (HalfInt(doubled) in via_motive)

    @settings(max_examples=150, deadline=None)
    @given(regular_pairs())
    def test_symmetric_under_functional_equation(self, pair):
        pi, other = pair
        points = critical_set_pair(pi, other)
        assert critical_set_pair(other, pi) == points
        for m in points.members():
            assert 1 - m in points


class TestCharacters:
    def test_conjugate_self_dual_character(self, field1):
        points = critical_set_character(CharacterType.uniform(field1, 2, -2))
        assert points.members() == [-1, 0, 1, 2]

    def test_norm_has_a_middle_class(self, field1):
        with pytest.raises(MiddleClassError):
            critical_set_character(CharacterType.norm(field1))


class TestMotivicTriples:
    @pytest.fixture
    def weight(self, field1):
        return HighestWeight.create(field1, 0, {"s1": [0]})

    def test_shift_opens_the_window(self, field1, weight):
        signs = SignMap.create(field1, {"s1": 0}, 1)
        assert motivic_triple_critical(weight, signs, {"s1": 1}, 0, 0)
        assert motivic_triple_critical(weight, signs, {"s1": 1}, 0, 1)
        assert not motivic_triple_critical(weight, signs, {"s1": 1}, 0, 2)

    @pytest.mark.parametrize("m", range(-3, 4))
    def test_no_shift_no_points(self, field1, weight, m):
        signs = SignMap.create(field1, {"s1": 0}, 1)
        assert not motivic_triple_critical(weight, signs, {"s1": 0}, 0, m)
