"""Critical values of L(s, Π × Π') for a pair in good position.

The pair is completed to Π × Π^# with Π^# an isobaric sum of Π' and auxiliary
conjugate self-dual characters placed in the free gaps of −a(σ). The value of
L(1/2+m, Π × Π^#) is then written twice, once as a product of L-values of Π × Π'
and Π ⊗ χ_j and once through Whittaker periods, and the two are compared in the
relation lattice.
"""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Tuple

from ..core.embeddings import EmbeddingSet
from ..core.halfint import HALF, ZERO, HalfInt, HalfIntLike, on_lattice
from ..core.types import CharacterType, InfinityType, direct_sum
from ..critical.sets import critical_set_pair
from ..errors import NonCriticalError, ParityError, PlacementError, RegularityError, ValidationError
from ..factorization.arithmetic import essential_twist_relations, local_anchor_relations
from ..indices.split import gap_positions, is_good_position, split_indices
from ..periods.lattice import Relation, RelationLattice
from ..periods.monomial import ONE, PeriodMonomial, two_pi_i
from ..periods.registry import CharacterDecl, CharacterRegistry, Representation
from ..periods.relations import blasius_monomial, cm, cm_relation_pack, register_relations
from ..periods.symbols import l_value, l_value_label
from .conjecture import main_conjecture_rhs, printed_range_note
from .models import FormulaReport
from .n_times_one import n_times_one_relations, twisted_l_value
from .whittaker import (
    IsobaricPart,
    archimedean_p,
    csd_twist_lemma_holds,
    csd_twist_lemma_relation,
    divise_relation,
    omega,
    p_whittaker,
    threeproduct_relation,
    whittaker_langlands_sum,
    whittaker_relation,
    z_factor,
)

logger = logging.getLogger(__name__)

CASES = {(0, 1): "A", (0, 0): "B", (1, 0): "C", (1, 1): "D"}

PSI = "psi"
PSI_C = "psi^c"
PSI_NORM = "psi.psi^c"
TWIST_PROBE = "eta[twist]"


@dataclass(frozen=True)
class ParityCase:
    """Case letter with the shifts T1 (for Π') and T2 (for the χ_j)."""

    letter: str
    t1: HalfInt
    t2: HalfInt

    @property
    def twists_other(self) -> bool:
        return self.t1 != ZERO

    @property
    def twists_characters(self) -> bool:
        return self.t2 != ZERO


def parity_case(n: int, n_other: int, case: Optional[str] = None) -> ParityCase:
    letter = CASES[(n % 2, n_other % 2)]
    if case is not None and case.upper() != letter:
        raise ParityError(f"n={n}, n'={n_other} is case {letter}, not {case}")
    t1 = HALF if (n - n_other) % 2 == 0 else ZERO
    t2 = HALF if n % 2 else ZERO
    return ParityCase(letter, t1, t2)


def mu_type(embeddings: EmbeddingSet) -> CharacterType:
    """||·||^{-1/2} ψ, of type z^{1/2} z̄^{-1/2}."""
    return CharacterType.uniform(embeddings, "1/2", "-1/2")


def lattice_points(lower: HalfInt, upper: HalfInt, offset: HalfInt) -> List[HalfInt]:
    """Points of ℤ + offset strictly between two bounds."""
    candidates = (HalfInt(doubled) for doubled in range(lower.doubled + 1, upper.doubled))
    return [x for x in candidates if on_lattice(x, offset)]


def occupied_gaps(pi: InfinityType, other: InfinityType, t1: HalfInt, place: str) -> Tuple[int, ...]:
    return gap_positions(pi, [b + t1 for b in other.at(place)], place)


def place_auxiliaries(
    pi: InfinityType, other: InfinityType, case: ParityCase, alternative: bool = False
) -> Dict[str, List[HalfInt]]:
    """Exponents k_1(σ) > … > k_l(σ) of the auxiliary characters.

    k_j + T2 sits in the j-th highest inner gap of −a(σ) not holding any b + T1;
    the middle lattice point of the gap is used, or the lowest one with ``alternative``.
    """
    n, l = pi.n, pi.n - other.n - 1
    placements: Dict[str, List[HalfInt]] = {}
    for place in pi.embeddings.labels:
        negated = sorted(-x for x in pi.at(place))
        occupied = set(occupied_gaps(pi, other, case.t1, place))
        free = [g for g in range(n - 1, 0, -1) if g not in occupied]
        if len(free) < l:
            raise PlacementError(f"Only {len(free)} free gaps at {place} for {l} auxiliary characters")
        values = []
        for gap in free[:l]:
            points = lattice_points(negated[gap - 1], negated[gap], case.t2)
            if not points:
                raise PlacementError(f"Gap {gap} at {place} holds no point of Z+{case.t2}")
            values.append((points[0] if alternative else points[len(points) // 2]) - case.t2)
        placements[place] = values
    return placements


def s_and_t(
    pi: InfinityType, other: InfinityType, case: ParityCase, placements: Dict[str, List[HalfInt]]
) -> Dict[str, Tuple[List[int], List[int]]]:
    """s_j = #{i : k_j + T2 < −a_i} and t_j = #{i : b_i + T1 < k_j + T2}."""
    table = {}
    for place, ks in placements.items():
        s = [sum(1 for x in pi.at(place) if k + case.t2 < -x) for k in ks]
        t = [sum(1 for y in other.at(place) if y + case.t1 < k + case.t2) for k in ks]
        table[place] = (s, t)
    return table


def w_values(pi: InfinityType, other: InfinityType, case: ParityCase, place: str) -> List[int]:
    """w(i) with −a_{n+1−w(i)} > b_{n'+1−i} + T1 > −a_{n−w(i)}, for i = 1..n'."""
    gaps = occupied_gaps(pi, other, case.t1, place)
    n_other = other.n
    return [pi.n - gaps[n_other - i] for i in range(1, n_other + 1)]


def declare_psi(registry: CharacterRegistry, embeddings: EmbeddingSet) -> CharacterDecl:
    """ψ of type z, its conjugate and ψψ^c = ||·||, so that CM(ψ,σ)CM(ψ,σ̄) ~ 2πi."""
    psi = registry.declare_type(PSI, CharacterType.uniform(embeddings, 1, 0))
    registry.declare_type(PSI_C, psi.type.conjugate(), conjugate_of=PSI)
    registry.declare_type(
        PSI_NORM, CharacterType.norm(embeddings), product=((PSI, 1), (PSI_C, 1)), norm=True
    )
    return psi


def twist_by_psi(rep: Representation) -> Representation:
    psi = CharacterType.uniform(rep.infinity.embeddings, 1, 0)
    return Representation(f"{rep.id}(x){PSI}", rep.infinity.twist(psi))


def _declare_characters(
    registry: CharacterRegistry, embeddings: EmbeddingSet, placements: Dict[str, List[HalfInt]], l: int
) -> None:
    declare_psi(registry, embeddings)
    for j in range(1, l + 1):
        ks = {place: values[j - 1] for place, values in placements.items()}
        chi = registry.declare_type(
            f"chi_{j}", CharacterType.create(embeddings, ks, {p: -k for p, k in ks.items()}), csd=True
        )
        chi_c = registry.declare_type(f"chi_{j}^c", chi.type.conjugate(), conjugate_of=chi.id)
        for factor, extra in ((chi, PSI), (chi_c, PSI), (chi_c, PSI_C)):
            registry.declare_type(
                f"{factor.id}*{extra}",
                factor.type * registry.character(extra).type,
                product=((factor.id, 1), (extra, 1)),
            )
    for i in range(1, l + 1):
        for j in range(i + 1, l + 1):
            first, second = registry.character(f"chi_{i}"), registry.character(f"chi_{j}^c")
            registry.declare_type(
                f"chi_{i}*chi_{j}^c", first.type * second.type, product=((first.id, 1), (second.id, 1))
            )


def central_reflection(registry: CharacterRegistry, rep: Representation) -> List[Relation]:
    """CM(ξ,σ)CM(ξ,σ̄) ~ 1 for a central character of conjugate self-dual type."""
    if rep.central is None:
        return []
    decl = registry.character(rep.central)
    if decl.csd or not decl.type.is_conjugate_self_dual:
        return []
    embeddings = decl.embeddings
    return [
        Relation(cm(decl.id, label) * cm(decl.id, embeddings.conj(label)), f"cm.csd_reflection[{decl.id}]")
        for label in embeddings.labels
    ]


def derive_critical_value(
    pi: Representation,
    other: Representation,
    m: HalfIntLike,
    case: Optional[str] = None,
    registry: Optional[CharacterRegistry] = None,
    lattice: Optional[RelationLattice] = None,
    assume_nonvanishing: bool = False,
) -> FormulaReport:
    """Derive L(1/2+m, Π × Π') (or L(m, Π × Π'ψ) when n ≡ n' mod 2) and compare it
    with main_conjecture_rhs.

    Π and Π' must be conjugate self-dual of weight 0 with n' < n and in good
    position; m is an integer, and m = 0 needs ``assume_nonvanishing``.
    """
    point = HalfInt.of(m)
    if not point.is_integral or point < 0:
        raise ValidationError(f"m must be a non-negative integer, got {point}")
    if point == 0 and not assume_nonvanishing:
        raise NonCriticalError("m = 0 is the central point; set the nonvanishing flag to use it")
    for rep in (pi, other):
        if rep.infinity.weight != 0 or not rep.infinity.is_conjugate_self_dual():
            raise ValidationError(f"{rep.id} must be conjugate self-dual of weight 0")
    if not other.n < pi.n:
        raise ValidationError(f"Need n' < n, got n={pi.n}, n'={other.n}")

    parity = parity_case(pi.n, other.n, case)
    embeddings = pi.infinity.embeddings
    d, n, n_other = embeddings.d, pi.n, other.n
    l = n - n_other - 1
    report = FormulaReport(f"critical_value[{pi.id},{other.id},{point},{parity.letter}]")
    report.outputs["case"] = parity.letter

    mu = mu_type(embeddings)
    shifted_other = other.infinity.twist(mu) if parity.twists_other else other.infinity
    good = is_good_position(pi.infinity, shifted_other) and all(
        len(set(gaps)) == len(gaps) and all(1 <= g <= n - 1 for g in gaps)
        for gaps in (occupied_gaps(pi.infinity, other.infinity, parity.t1, p) for p in embeddings.labels)
    )
    report.check("good_position", good)
    if not good:
        raise RegularityError(f"{pi.id} and {other.id} are not in good position")

    registry = registry.fork() if registry is not None else CharacterRegistry()
    pi, other = registry.ensure_central(pi), registry.ensure_central(other)
    lattice = lattice.fork() if lattice is not None else RelationLattice()

    placements = place_auxiliaries(pi.infinity, other.infinity, parity)
    _declare_characters(registry, embeddings, placements, l)
    chars = [registry.character(f"chi_{j}") for j in range(1, l + 1)]

    # target
    if parity.twists_other:
        target_rep = twist_by_psi(other)
        target_point = point
        register_relations(lattice, essential_twist_relations(other, target_rep, PSI))
    else:
        target_rep = other
        target_point = point + HALF
    target = PeriodMonomial.atom(l_value(l_value_label(pi.id, target_rep.id), target_point))
    critical = critical_set_pair(pi.infinity, target_rep.infinity)
    if target_point not in critical:
        raise NonCriticalError(f"{target_point} is not critical for {pi.id} x {target_rep.id}: {critical.describe()}")

    # Π^# = (Π' or Π'μ) ⊞ (χ_j or χ_jμ)
    other_part = (
        IsobaricPart(f"{other.id}(x)mu", other.infinity.twist(mu)) if parity.twists_other
        else IsobaricPart(other.id, other.infinity)
    )
    char_parts = [
        IsobaricPart(f"{chi.id}(x)mu", (chi.type * mu).as_infinity_type()) if parity.twists_characters
        else IsobaricPart(chi.id, chi.type.as_infinity_type())
        for chi in chars
    ]
    parts = [other_part] + char_parts
    sharp = direct_sum([part.infinity for part in parts])
    sharp_id = f"{other.id}#"
    sharp_point = point + HALF
    sharp_value = PeriodMonomial.atom(l_value(l_value_label(pi.id, sharp_id), sharp_point))
    report.check("ingredient_critical", sharp_point in critical_set_pair(pi.infinity, sharp))

    # Whittaker periods of Π and Π^# at the critical point
    lattice.add_relation(
        sharp_value / (p_whittaker(pi.id) * p_whittaker(sharp_id) * archimedean_p(pi.infinity, sharp, point)),
        f"theorem.whittaker_cm[{pi.id},{sharp_id}]",
        axiom=True,
    )

    # left hand side: L(1/2+m, Π × Π^#) = L(target) Π_j L(aux_j)
    aux_values = ONE
    for chi in chars:
        if parity.twists_characters:
            eta = registry.character(f"{chi.id}*{PSI}")
            aux_point = point
        else:
            eta, aux_point = chi, point + HALF
        aux_values = aux_values * twisted_l_value(pi.id, eta.id, aux_point)
        register_relations(lattice, n_times_one_relations(pi, eta.id, eta.type, aux_point, strict=False))
    lattice.add_relation(sharp_value / (target * aux_values), f"l_function.isobaric[{pi.id},{sharp_id}]")

    # right hand side: p(Π) and p(Π^#)
    cross: Dict[Tuple[int, int], PeriodMonomial] = {}
    for j, chi in enumerate(chars, start=1):
        if parity.letter == "B":
            eta_id, cross_point = f"{chi.id}^c*{PSI}", HALF
        elif parity.letter == "C":
            eta_id, cross_point = f"{chi.id}^c*{PSI_C}", HALF
        else:
            eta_id, cross_point = f"{chi.id}^c", HalfInt.of(1)
        eta = registry.character(eta_id)
        cross[(0, j)] = twisted_l_value(other.id, eta_id, cross_point)
        register_relations(lattice, n_times_one_relations(other, eta_id, eta.type, cross_point, strict=False))
        for i in range(1, j):
            pair = registry.character(f"chi_{i}*chi_{j}^c")
            atom = PeriodMonomial.atom(l_value(l_value_label(pair.id), 1))
            cross[(i, j)] = atom
            lattice.add_relation(atom / blasius_monomial(pair.id, pair.type, 1), f"theorem.blasius[{pair.id}]")
    register_relations(lattice, whittaker_langlands_sum(sharp_id, parts, cross))

    register_relations(lattice, [whittaker_relation(pi), whittaker_relation(other), divise_relation(other.infinity)])
    for part in char_parts:
        register_relations(
            lattice, [whittaker_relation(Representation(part.id, part.infinity)), divise_relation(part.infinity)]
        )
    if parity.twists_other:
        register_relations(
            lattice, [csd_twist_lemma_relation(other.id, other.infinity, other_part.id, other_part.infinity)]
        )
        registry.declare_type(TWIST_PROBE, CharacterType.uniform(embeddings, 1, -1), csd=True)
        report.check("twist_lemma_verified", csd_twist_lemma_holds(other, TWIST_PROBE, registry))
    register_relations(lattice, [threeproduct_relation(pi.infinity, sharp, point)])

    register_relations(lattice, cm_relation_pack(registry))
    for rep in (pi, other):
        register_relations(lattice, local_anchor_relations(rep))
        register_relations(lattice, central_reflection(registry, rep))

    _bookkeeping_checks(report, pi, other, parity, placements, point, sharp, lattice)
    rhs = main_conjecture_rhs(pi, target_rep, target_point)
    report.compare(lattice, target, rhs)
    note = printed_range_note(pi, other)
    if note:
        report.note(note)
    report.outputs.update(
        {
            "target": str(target),
            "l": l,
            "placements": {p: [str(k) for k in ks] for p, ks in placements.items()},
            "sp": {
                p: list(split_indices(target_rep.infinity, pi.infinity, p).entries) for p in embeddings.labels
            },
        }
    )
    logger.info("%s: %s", report.name, report.verdict)
    return report


def _bookkeeping_checks(
    report: FormulaReport,
    pi: Representation,
    other: Representation,
    parity: ParityCase,
    placements: Dict[str, List[HalfInt]],
    point: HalfInt,
    sharp: InfinityType,
    lattice: RelationLattice,
) -> None:
    n, n_other = pi.n, other.n
    l = n - n_other - 1
    d = pi.infinity.embeddings.d
    report.check("binomial_ledger", comb(n - 1, 2) == comb(l, 2) + l * n_other + comb(n_other, 2))

    table = s_and_t(pi.infinity, other.infinity, parity, placements)
    alternative = s_and_t(
        pi.infinity, other.infinity, parity, place_auxiliaries(pi.infinity, other.infinity, parity, True)
    )
    report.check("placement_stable", table == alternative)

    shifted = other.infinity.twist(mu_type(pi.infinity.embeddings)) if parity.twists_other else other.infinity
    s_plus_t, complement, w_ok, psi_ok = True, True, True, True
    for place, (s, t) in table.items():
        s_plus_t &= all(sj + tj == n_other + j for j, (sj, tj) in enumerate(zip(s, t), start=1))
        w = w_values(pi.infinity, other.infinity, parity, place)
        complement &= sorted(s) == sorted(set(range(1, n)) - set(w))
        sp = split_indices(pi.infinity, shifted, place)
        w_ok &= all(w[j - 1] == sp.tail_sum(j) for j in range(1, n_other + 1))
        s_sum, t_sum = sum(s), sum(t)
        if parity.letter == "C":
            psi_ok &= n_other * l - t_sum - s_sum == t_sum + s_sum - n * l
        elif parity.letter in ("B", "D"):
            psi_ok &= n * (n - 1) // 2 - s_sum == sum(k * sp[k] for k in range(n_other + 1))
    report.check("s_plus_t", s_plus_t)
    report.check("s_complement", complement)
    report.check("w_from_gaps", w_ok)
    if parity.letter != "A":
        report.check("psi_exponent_sum", psi_ok)
    report.outputs["s_t"] = {p: {"s": s, "t": t} for p, (s, t) in table.items()}

    residual = (
        z_factor(pi.infinity)
        * omega(sharp)
        * archimedean_p(pi.infinity, sharp, point)
        * z_factor(other.infinity)
        / omega(other.infinity)
        * two_pi_i(d * (n_other * l + comb(l, 2)))
    )
    pure = two_pi_i(((point + HALF) * (n * (n - 1))).to_int() * d)
    report.check("archimedean_pure", lattice.equivalent(residual, pure))
