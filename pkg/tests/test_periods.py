import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import representation
from pcalc.core.types import CharacterType
from pcalc.errors import (
    CharacterArithmeticError,
    LatticeSealedError,
    MiddleClassError,
    NonCriticalError,
    ValidationError,
)
from pcalc.periods.lattice import RelationLattice, add_relation, equivalent, xgcd
from pcalc.periods.monomial import ONE, PeriodMonomial, mono_inv, mono_mul, mono_pow, two_pi_i
from pcalc.periods.registry import CharacterDecl
from pcalc.periods.relations import (
    blasius_cm_type,
    blasius_monomial,
    cm,
    cm_relation_pack,
    register_relations,
)
from pcalc.periods.symbols import PeriodSymbol, SymbolKind, cm_period, l_value, l_value_label

X = PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, ("x",)))
Y = PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, ("y",)))
Z = PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, ("z",)))


class TestMonomials:
    def test_normal_form(self):
        assert X * X.inverse() == ONE
        assert not ONE
        assert PeriodMonomial.of({PeriodSymbol(SymbolKind.TWO_PI_I): 0}) == ONE
        assert (X * Y) ** 2 == Y ** 2 * X ** 2
        assert (X ** 3 / X).exponent(X.symbols()[0]) == 2

    def test_functional_forms(self):
        assert mono_mul(X, mono_inv(X)) == ONE
        assert mono_mul(two_pi_i(2), two_pi_i(3)) == two_pi_i(5)
        assert mono_pow(X, 0) == ONE

    def test_text(self):
        assert str(ONE) == "1"
        assert str(two_pi_i(3)) == "2πi^3"
        assert str(cm("chi", "~s1")) == "p(chiˇ,~s1)"
        assert str(l_value(l_value_label("Pi'", "Pi"), "3/2")) == "L(3/2,Pi x Pi')"

    def test_json(self):
        mono = two_pi_i(-2) * cm("chi", "s1", 3)
        assert PeriodMonomial.from_json(mono.to_json()) == mono
        assert mono.to_json()[-1]["symbol"] == {"kind": "TWO_PI_I", "args": []}


class TestRelationLattice:
    def test_gcd_of_powers(self):
        lattice = RelationLattice()
        lattice.add_relation(X ** 4, "four").add_relation(X ** 6, "six")
        assert lattice.is_trivial(X ** 2)
        assert not lattice.is_trivial(X)
        assert lattice.equivalent(X ** 3, X)
        assert lattice.residue(X ** 3) == X

    def test_equivalence_and_unknown_symbols(self):
        lattice = RelationLattice().add_equivalence(X, Y * Y, "x=y^2")
        assert lattice.equivalent(X * Z, Y ** 2 * Z)
        assert not lattice.is_trivial(Z)
        assert lattice.residue(X * Z) == Y ** 2 * Z

    def test_equivalent_power(self):
        lattice = RelationLattice().add_relation((X / Y) ** 2, "square")
        assert not lattice.equivalent(X, Y)
        assert lattice.equivalent_power(X, Y, 2)

    def test_duplicates_are_recorded_once(self):
        lattice = RelationLattice()
        lattice.add_relation(X, "a").add_relation(X, "b")
        assert len(lattice) == 1
        assert lattice.rank == 1

    def test_functional_forms(self):
        lattice = add_relation(add_relation(RelationLattice(), X / Y, "x=y"), X / Y, "again")
        assert len(lattice) == 1
        assert equivalent(lattice, X * Z, Y * Z)

    def test_seal_and_fork(self):
        lattice = RelationLattice().add_relation(X).seal()
        with pytest.raises(LatticeSealedError):
            lattice.add_relation(Y)
        private = lattice.fork()
        private.add_relation(Y)
        assert private.is_trivial(X * Y)
        assert not lattice.is_trivial(Y)

    @given(st.integers(-1000, 1000), st.integers(-1000, 1000))
    def test_xgcd(self, a, b):
        x, y, g = xgcd(a, b)
        assert x * a + y * b == g
        if a or b:
            assert abs(g) > 0 and a % g == 0 and b % g == 0

    @settings(max_examples=200, deadline=None)
    @given(
        st.lists(st.tuples(*[st.integers(-6, 6)] * 3), min_size=1, max_size=4),
        st.data(),
    )
    def test_span_membership(self, rows, data):
        atoms = (X, Y, Z)

        def monomial(vector):
            return PeriodMonomial.product(atom ** e for atom, e in zip(atoms, vector))

        lattice = RelationLattice()
        for row in rows:
            lattice.add_relation(monomial(row))
        coefficients = data.draw(st.lists(st.integers(-4, 4), min_size=len(rows), max_size=len(rows)))
        combined = [sum(c * row[k] for c, row in zip(coefficients, rows)) for k in range(3)]
        assert lattice.is_trivial(monomial(combined))


class TestRegistry:
    def test_declare_is_idempotent_for_one_type(self, field1, registry):
        chi = CharacterType.uniform(field1, 2, -2)
        first = registry.declare_type("chi", chi, csd=True)
        assert registry.declare_type("chi", chi, csd=True) is first
        with pytest.raises(CharacterArithmeticError):
            registry.declare_type("chi", CharacterType.uniform(field1, 1, -1))

    def test_declared_arithmetic_must_match_types(self, field1, registry):
        registry.declare_type("chi", CharacterType.uniform(field1, 2, -2), csd=True)
        with pytest.raises(CharacterArithmeticError):
            registry.declare_type("bad", CharacterType.uniform(field1, 2, -2), conjugate_of="chi")
        with pytest.raises(CharacterArithmeticError):
            registry.declare_type("skew", CharacterType.uniform(field1, 2, -1), csd=True)
        with pytest.raises(CharacterArithmeticError):
            registry.declare_type("sq", CharacterType.uniform(field1, 2, -2), product=(("chi", 2),))
        registry.declare_type("sq", CharacterType.uniform(field1, 4, -4), product=(("chi", 2),))

    def test_unknown_ids(self, registry):
        with pytest.raises(ValidationError):
            registry.character("nope")
        with pytest.raises(ValidationError):
            registry.representation("nope")

    def test_ensure_central(self, field1, registry):
        rep = registry.ensure_central(representation("Pi", field1, {"s1": ["5/2", "-5/2"]}))
        assert rep.central == "xi[Pi]"
        assert registry.character("xi[Pi]").type == CharacterType.trivial(field1)
        assert registry.representation("Pi").central == "xi[Pi]"

    def test_fork_is_private(self, field1, registry):
        private = registry.fork()
        private.declare_type("chi", CharacterType.uniform(field1, 2, -2))
        assert "chi" not in registry.ids()
        assert private.describe() == {"chi": CharacterType.uniform(field1, 2, -2).key()}


class TestCmRelations:
    @pytest.fixture
    def declared(self, field1, registry):
        chi = CharacterType.uniform(field1, 2, -2)
        registry.declare_type("chi", chi, csd=True)
        registry.declare_type("chic", chi.conjugate(), conjugate_of="chi")
        registry.declare_type("chiinv", chi.inverse(), inverse_of="chi")
        registry.declare_type("N", CharacterType.norm(field1), norm=True)
        registry.declare_type("one", CharacterType.trivial(field1), trivial=True)
        registry.declare_type("eps", CharacterType.trivial(field1), finite_order=3)
        return registry

    def test_pack_relations(self, declared):
        lattice = register_relations(RelationLattice(), cm_relation_pack(declared))
        assert lattice.is_trivial(cm("chi", "s1") * cm("chi", "~s1"))
        assert lattice.equivalent(cm("chic", "s1"), cm("chi", "~s1"))
        assert lattice.is_trivial(cm("chiinv", "~s1") * cm("chi", "~s1"))
        assert lattice.equivalent(cm("N", "s1"), two_pi_i())
        assert lattice.is_trivial(cm("one", "~s1"))
        assert lattice.is_trivial(cm("eps", "s1", 3))
        assert not lattice.is_trivial(cm("eps", "s1"))
        assert not lattice.is_trivial(cm("chi", "s1"))

    def test_pack_for_selected_characters(self, declared):
        tags = {relation.tag for relation in cm_relation_pack(declared, ["N"])}
        assert tags == {"cm.norm_character[N]"}

    def test_norm_functoriality(self, quadratic_extension, registry):
        registry.add_restriction(quadratic_extension)
        chi = CharacterType.uniform(quadratic_extension.target, 2, -2)
        registry.declare_type("chi", chi, csd=True)
        registry.declare_type("chiE", chi.pullback(quadratic_extension), norm_of="chi", restriction="E/F")
        lattice = register_relations(RelationLattice(), cm_relation_pack(registry))
        assert lattice.equivalent(cm("chiE", "~t2"), cm("chi", "~s1"))
        assert lattice.equivalent(cm("chiE", "t1"), cm("chiE", "t2"))


class TestBlasius:
    def test_cm_type_and_monomial(self, field1):
        chi = CharacterType.uniform(field1, 2, -2)
        assert blasius_cm_type(chi) == ("~s1",)
        assert blasius_cm_type(chi.conjugate()) == ("s1",)
        assert blasius_monomial("chi", chi, 1) == two_pi_i(1) * cm("chi", "~s1")
        assert blasius_monomial("chi", chi, 2, ["s1"]) == two_pi_i(2) * PeriodMonomial.atom(cm_period("chi", "s1"))

    def test_non_critical_points(self, field1):
        chi = CharacterType.uniform(field1, 2, -2)
        with pytest.raises(NonCriticalError):
            blasius_monomial("chi", chi, 3)
        with pytest.raises(MiddleClassError):
            blasius_monomial("N", CharacterType.norm(field1), 1)

    def test_decl_embeddings(self, field2):
        decl = CharacterDecl(id="chi", type=CharacterType.trivial(field2))
        assert decl.embeddings == field2


@settings(max_examples=500, deadline=None)
@given(st.lists(st.lists(st.integers(-5, 5), min_size=4, max_size=4), max_size=40))
def test_fresh_atoms_are_never_equated(rows):
    others = [PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, (f"o{k}",))) for k in range(4)]
    lattice = RelationLattice()
    for row in rows:
        lattice.add_relation(PeriodMonomial.product(atom ** e for atom, e in zip(others, row)))
    fresh_a = PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, ("fresh_a",)))
    fresh_b = PeriodMonomial.atom(PeriodSymbol(SymbolKind.WHITTAKER, ("fresh_b",)))
    assert not lattice.equivalent(fresh_a, fresh_b)
    assert not lattice.is_trivial(fresh_a)
