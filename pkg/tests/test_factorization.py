import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import representation
from pcalc.errors import AnchorError, ExchangeFailure, MissingFactorizationError, ValidationError
from pcalc.factorization.arithmetic import (
    compact_value,
    conjugate_relations,
    essential_twist_relations,
    factorize_arithmetic_periods,
    galois_invariance_relations,
    local,
)
from pcalc.factorization.tables import ProductTable, exchange_condition, exchange_witness, factorize
from pcalc.indices.signs import SignMap
from pcalc.periods.lattice import RelationLattice
from pcalc.periods.monomial import PeriodMonomial, two_pi_i
from pcalc.periods.relations import cm, cm_relation_pack, register_relations
from pcalc.periods.symbols import PeriodSymbol, SymbolKind


def atom(name: str, exp: int = 1) -> PeriodMonomial:
    return PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, (name,)), exp)


@st.composite
def product_tables(draw, min_d: int = 1, min_size: int = 1, max_size: int = 5):
    d = draw(st.integers(min_value=min_d, max_value=3))
    axes = [tuple(range(draw(st.integers(min_value=min_size, max_value=max_size)))) for _ in range(d)]
    factors = [
        {x: atom(f"f{k}_{x}", draw(st.integers(-3, 3))) * atom("shared", draw(st.integers(-2, 2))) for x in axis}
        for k, axis in enumerate(axes)
    ]
    values = {
        point: PeriodMonomial.product(f[x] for f, x in zip(factors, point))
        for point in itertools.product(*axes)
    }
    return ProductTable.create(axes, values), factors


class TestProductTables:
    @settings(max_examples=500, deadline=None)
    @given(product_tables())
    def test_generated_tables_are_recovered(self, data):
        table, factors = data
        anchors = [(axis[0], f[axis[0]]) for axis, f in zip(table.axes, factors)]
        lattice = RelationLattice()
        assert exchange_condition(table, lattice)
        result = factorize(table, lattice, anchors)
        assert list(result.factors) == factors

    def test_perturbed_entry_breaks_exchange(self):
        values = {(x, y): atom(f"a{x}") * atom(f"b{y}") for x in (0, 1) for y in (0, 1)}
        values[(1, 1)] = values[(1, 1)] * atom("w")
        table = ProductTable.create([(0, 1), (0, 1)], values)
        assert not exchange_condition(table, RelationLattice())
        with pytest.raises(ExchangeFailure) as err:
            factorize(table, RelationLattice(), [(0, atom("a0")), (0, atom("b0"))])
        assert err.value.witness == ((0, 0), (1, 1), 0)

    @settings(max_examples=500, deadline=None)
    @given(product_tables(min_d=2, min_size=2), st.data())
    def test_perturbed_tables_are_rejected(self, data, draws):
        table, factors = data
        point = draws.draw(st.sampled_from(list(table.points())))
        noise = atom("noise", draws.draw(st.integers(1, 3)) * draws.draw(st.sampled_from((-1, 1))))
        values = table.as_dict()
        values[point] = values[point] * noise
        perturbed = ProductTable.create(table.axes, values)
        witness = exchange_witness(perturbed, RelationLattice())
        assert witness is not None
        anchors = [(axis[0], f[axis[0]]) for axis, f in zip(table.axes, factors)]
        if point != tuple(axis[0] for axis in table.axes):
            with pytest.raises(ExchangeFailure) as err:
                factorize(perturbed, RelationLattice(), anchors)
            assert err.value.witness == witness

    def test_perturbation_absorbed_by_relations(self):
        values = {(x, y): atom(f"a{x}") * atom(f"b{y}") for x in (0, 1) for y in (0, 1)}
        values[(1, 1)] = values[(1, 1)] * atom("w")
        table = ProductTable.create([(0, 1), (0, 1)], values)
        lattice = RelationLattice().add_relation(atom("w"), "w is algebraic")
        result = factorize(table, lattice, [(0, atom("a0")), (0, atom("b0"))])
        assert result.factors[0][1] == atom("a1")

    def test_anchor_errors(self):
        table = ProductTable.create([(0, 1)], {(0,): atom("a0"), (1,): atom("a1")})
        with pytest.raises(AnchorError):
            factorize(table, RelationLattice(), [])
        with pytest.raises(AnchorError):
            factorize(table, RelationLattice(), [(5, atom("a0"))])
        with pytest.raises(AnchorError):
            factorize(table, RelationLattice(), [(0, atom("a1"))])

    def test_table_must_be_total(self):
        with pytest.raises(ValidationError):
            ProductTable.create([(0, 1)], {(0,): atom("a0")})


class TestArithmeticPeriods:
    @pytest.fixture
    def anchored(self, field1, registry):
        rep = registry.ensure_central(representation("Pi", field1, {"s1": [3]}))
        lattice = register_relations(RelationLattice(), cm_relation_pack(registry))
        return rep, lattice

    def test_rank_one_periods_are_the_table(self, anchored):
        rep, lattice = anchored
        xi = rep.central
        table = {(0,): cm(xi, "~s1"), (1,): cm(xi, "s1")}
        result = factorize_arithmetic_periods(rep, table, lattice)
        assert result("s1", 0) == cm(xi, "~s1")
        assert result("s1", 1) == cm(xi, "s1")
        assert lattice.equivalent(local(rep, "s1", 1), cm(xi, "s1"))
        assert "factorization.p0_pn[Pi]" in {relation.tag for relation in result.relations}

    def test_middle_entries(self, field1, registry):
        rep = registry.ensure_central(representation("Pi", field1, {"s1": ["1/2", "-1/2"]}))
        lattice = register_relations(RelationLattice(), cm_relation_pack(registry))
        xi = rep.central
        table = {(0,): cm(xi, "~s1"), (1,): atom("G"), (2,): cm(xi, "s1")}
        result = factorize_arithmetic_periods(rep, table, lattice)
        assert result("s1", 1) == atom("G")
        assert lattice.equivalent(local(rep, "s1", 1), atom("G"))

    def test_compact_entries_are_checked(self, anchored):
        rep, lattice = anchored
        with pytest.raises(AnchorError):
            factorize_arithmetic_periods(rep, {(0,): cm(rep.central, "~s1"), (1,): two_pi_i()}, lattice)
        with pytest.raises(ValidationError):
            factorize_arithmetic_periods(rep, {(0,): cm(rep.central, "~s1")}, lattice)

    def test_needs_a_central_character(self, field1):
        rep = representation("Pi", field1, {"s1": [3]})
        with pytest.raises(MissingFactorizationError):
            factorize_arithmetic_periods(rep, {}, RelationLattice())

    def test_compact_value(self, field2, registry):
        rep = registry.ensure_central(representation("Pi", field2, {"s1": ["1/2", "-1/2"], "s2": ["3/2", "-3/2"]}))
        signs = SignMap.create(field2, {"s1": 2, "s2": 0}, 2)
        assert compact_value(rep, signs) == cm(rep.central, "s1") * cm(rep.central, "~s2")
        with pytest.raises(ValidationError):
            compact_value(rep, SignMap.create(field2, {"s1": 1, "s2": 0}, 2))


class TestLocalRelations:
    def test_essential_twist(self, field1):
        rep = representation("Pi", field1, {"s1": ["1/2", "-1/2"]})
        twisted = representation("Pi.eta", field1, {"s1": ["5/2", "3/2"]})
        relations = essential_twist_relations(rep, twisted, "eta")
        assert len(relations) == 3
        expected = local(rep, "s1", 1) * cm("eta", "s1") * cm("eta", "~s1")
        assert relations[1].monomial == local(twisted, "s1", 1) / expected

    def test_conjugate(self, field1):
        rep = representation("Pi", field1, {"s1": ["1/2", "-1/2"]})
        conjugate = representation("Pi.c", field1, {"s1": ["1/2", "-1/2"]})
        relations = conjugate_relations(rep, conjugate)
        assert [r.monomial for r in relations][0] == local(conjugate, "s1", 0) / local(rep, "s1", 2)
        assert {r.tag for r in relations} == {"factorization.conjugate[Pi.c]"}

    def test_galois_invariance(self, field2):
        rep = representation("Pi", field2, {"s1": [1], "s2": [4]})
        relations = galois_invariance_relations(rep, [field2.permutation("g")])
        assert len(relations) == 4
        lattice = RelationLattice()
        for relation in relations:
            lattice.add_relation(relation.monomial, relation.tag)
        assert lattice.equivalent(local(rep, "s1", 1), local(rep, "s2", 1))
