"""L(1, Π₁ × Π₂) for very regular pairs, through an auxiliary Π of rank r₁+r₂+1."""

import logging
from dataclasses import dataclass
from math import comb
from typing import Dict, List, Optional, Sequence

from ..core.halfint import HALF, ZERO, HalfInt
from ..core.types import InfinityType, direct_sum
from ..critical.sets import critical_set_pair
from ..errors import ParityError, RegularityError, ValidationError
from ..factorization.arithmetic import conjugate_relations, essential_twist_relations, local_anchor_relations
from ..indices.split import split_indices
from ..periods.lattice import RelationLattice
from ..periods.monomial import PeriodMonomial
from ..periods.registry import CharacterRegistry, Representation
from ..periods.relations import cm_relation_pack, register_relations
from ..periods.symbols import l_value, l_value_label
from .conjecture import main_conjecture_rhs
from .critical_values import (
    PSI,
    central_reflection,
    declare_psi,
    derive_critical_value,
    lattice_points,
    mu_type,
    twist_by_psi,
)
from .models import FormulaReport
from .whittaker import (
    IsobaricPart,
    archimedean_p,
    csd_twist_lemma_relation,
    divise_relation,
    p_whittaker,
    threeproduct_relation,
    whittaker_langlands_sum,
    whittaker_relation,
)

logger = logging.getLogger(__name__)

AUXILIARY_ID = "Pi[aux]"
SEPARATION = HalfInt(3)  # 3/2, so that 1 + 1/2 stays critical


@dataclass(frozen=True)
class PairCase:
    """Case letter with the shifts T3 (for Π₁) and T4 (for Π₂^c)."""

    letter: str
    t3: HalfInt
    t4: HalfInt


def pair_case(r1: int, r2: int, case: Optional[str] = None) -> PairCase:
    """A: both ranks even, B: both odd, C: r₁ even and r₂ odd."""
    if r1 % 2 == 0 and r2 % 2 == 0:
        found = PairCase("A", ZERO, ZERO)
    elif r1 % 2 and r2 % 2:
        found = PairCase("B", HALF, HALF)
    elif r1 % 2 == 0:
        found = PairCase("C", HALF, ZERO)
    else:
        raise ParityError(f"r1={r1} odd and r2={r2} even; swap the pair")
    if case is not None and case.upper() != found.letter:
        raise ParityError(f"r1={r1}, r2={r2} is case {found.letter}, not {case}")
    return found


def shifted(t: InfinityType, shift: HalfInt) -> InfinityType:
    return t.twist(mu_type(t.embeddings)) if shift != ZERO else t


def very_regular(first: InfinityType, second: InfinityType) -> bool:
    """|x − y| ≥ 3 for every x of ``first`` and y of ``second``, with both 3-regular."""
    if not (first.is_n_regular(3) and second.is_n_regular(3)):
        return False
    return all(
        abs((x - y).doubled) >= 6
        for label in first.embeddings.labels
        for x in first.at(label)
        for y in second.at(label)
    )


def thread_gaps(values: Sequence[HalfInt], n: int) -> List[HalfInt]:
    """n points of ℤ + (n−1)/2, one below, one above and one inside each gap of ``values``.

    Every point keeps a distance of at least 3/2 from the values.
    """
    ordered = sorted(values)
    offset = HalfInt((n - 1) % 2)
    points = [ordered[0] - SEPARATION]
    for lower, upper in zip(ordered, ordered[1:]):
        inside = lattice_points(lower + SEPARATION - HalfInt(1), upper - SEPARATION + HalfInt(1), offset)
        if not inside:
            raise RegularityError(f"No room for an exponent between {lower} and {upper}")
        points.append(inside[(len(inside) - 1) // 2])
    points.append(ordered[-1] + SEPARATION)
    return points


def auxiliary_representation(first: InfinityType, second: InfinityType) -> Representation:
    """Π with −a(σ) threading the n−1 exponents of Π₁' ⊞ Π₂' at each label."""
    n = first.n + second.n + 1
    rows: Dict[str, List[HalfInt]] = {}
    for label in first.embeddings.labels:
        threaded = thread_gaps(list(first.at(label)) + list(second.at(label)), n)
        rows[label] = sorted((-u for u in threaded), reverse=True)
    return Representation(AUXILIARY_ID, InfinityType.create(first.embeddings, rows, 0))


def derive_central_value(
    first: Representation,
    second: Representation,
    case: Optional[str] = None,
    registry: Optional[CharacterRegistry] = None,
    lattice: Optional[RelationLattice] = None,
) -> FormulaReport:
    """Derive L(1, Π₁ × Π₂), or L(1/2, (Π₁⊗ψ) × Π₂) for ranks of different parity."""
    for rep in (first, second):
        if rep.infinity.weight != 0 or not rep.infinity.is_conjugate_self_dual():
            raise ValidationError(f"{rep.id} must be conjugate self-dual of weight 0")
    notes = []
    if first.n % 2 and second.n % 2 == 0:
        first, second = second, first
        notes.append(f"swapped the pair so that {first.id} has the even rank")
    parity = pair_case(first.n, second.n, case)
    r1, r2 = first.n, second.n
    n = r1 + r2 + 1
    embeddings = first.infinity.embeddings
    report = FormulaReport(f"central_value[{first.id},{second.id},{parity.letter}]")
    report.outputs["case"] = parity.letter
    for text in notes:
        report.note(text)

    second_conj = Representation(f"{second.id}^c", second.infinity.conjugate())
    left = shifted(first.infinity, parity.t3)
    right = shifted(second_conj.infinity, parity.t4)
    regular = very_regular(left, right)
    report.check("very_regular", regular)
    if not regular:
        raise RegularityError(f"{first.id} and {second.id} are not very regular")

    aux = auxiliary_representation(left, right)
    subreports = [
        derive_critical_value(aux, first, 1, registry=registry, lattice=lattice),
        derive_critical_value(aux, second_conj, 1, registry=registry, lattice=lattice),
    ]
    report.subreports.extend(subreports)

    registry = registry.fork() if registry is not None else CharacterRegistry()
    declare_psi(registry, embeddings)
    first, second = registry.ensure_central(first), registry.ensure_central(second)
    second_conj, aux = registry.ensure_central(second_conj), registry.ensure_central(aux)
    lattice = lattice.fork() if lattice is not None else RelationLattice()

    for sub in subreports:
        if sub.ok and sub.lhs is not None and sub.rhs is not None:
            lattice.add_relation(sub.lhs / sub.rhs, f"derived.critical_value[{sub.name}]")
        else:
            report.note(f"{sub.name} did not close; its conclusion is not used")

    parts = [
        IsobaricPart(f"{first.id}(x)mu" if parity.t3 != ZERO else first.id, left),
        IsobaricPart(f"{second_conj.id}(x)mu" if parity.t4 != ZERO else second_conj.id, right),
    ]
    sharp = direct_sum([part.infinity for part in parts])
    sharp_id = f"{first.id}#{second.id}"
    point = HalfInt.of(1)
    sharp_value = PeriodMonomial.atom(l_value(l_value_label(aux.id, sharp_id), point + HALF))
    report.check("ingredient_critical", point + HALF in critical_set_pair(aux.infinity, sharp))

    if parity.letter == "C":
        target_first, target_point = twist_by_psi(first), HALF
    else:
        target_first, target_point = first, point
    target = PeriodMonomial.atom(l_value(l_value_label(target_first.id, second.id), target_point))

    lattice.add_relation(
        sharp_value / (p_whittaker(aux.id) * p_whittaker(sharp_id) * archimedean_p(aux.infinity, sharp, point)),
        f"theorem.whittaker_cm[{aux.id},{sharp_id}]",
        axiom=True,
    )
    lattice.add_relation(
        sharp_value / PeriodMonomial.product(sub.lhs for sub in subreports if sub.lhs is not None),
        f"l_function.isobaric[{aux.id},{sharp_id}]",
    )
    register_relations(lattice, whittaker_langlands_sum(sharp_id, parts, {(0, 1): target}))
    register_relations(
        lattice,
        [
            whittaker_relation(aux),
            whittaker_relation(first),
            whittaker_relation(second_conj),
            divise_relation(first.infinity),
            divise_relation(second_conj.infinity),
            threeproduct_relation(aux.infinity, sharp, point),
        ],
    )
    for base, part, shift in ((first, parts[0], parity.t3), (second_conj, parts[1], parity.t4)):
        if shift != ZERO:
            register_relations(lattice, [csd_twist_lemma_relation(base.id, base.infinity, part.id, part.infinity)])
            register_relations(lattice, essential_twist_relations(base, twist_by_psi(base), PSI))
    register_relations(lattice, conjugate_relations(second, second_conj))
    register_relations(lattice, cm_relation_pack(registry))
    for rep in (aux, first, second, second_conj):
        register_relations(lattice, local_anchor_relations(rep))
        register_relations(lattice, central_reflection(registry, rep))

    _split_checks(report, aux.infinity, left, right)
    rhs = main_conjecture_rhs(target_first, second, target_point)
    report.compare(lattice, target, rhs)
    report.outputs.update(
        {
            "target": str(target),
            "auxiliary": aux.infinity.key(),
            "sp": {
                label: {
                    "first": list(split_indices(second.infinity, target_first.infinity, label).entries),
                    "second": list(split_indices(target_first.infinity, second.infinity, label).entries),
                }
                for label in embeddings.labels
            },
        }
    )
    logger.info("%s: %s", report.name, report.verdict)
    return report


def _split_checks(report: FormulaReport, aux: InfinityType, left: InfinityType, right: InfinityType) -> None:
    """Split-index facts of the threaded construction, per label."""
    n, r1, r2 = aux.n, left.n, right.n
    report.check("binomial_ledger", comb(n - 1, 2) == comb(r1, 2) + comb(r2, 2) + r1 * r2)
    shift_ok, complement_ok, weighted_ok, runs_ok = True, True, True, True
    for label in aux.embeddings.labels:
        sp_left = split_indices(aux, left, label)
        sp_right = split_indices(aux, right, label)
        shift_ok &= all(
            sp_left[j] == split_indices(right.dual(), left, label)[j] + 1 for j in range(r1 + 1)
        ) and all(sp_right[k] == split_indices(left.dual(), right, label)[k] + 1 for k in range(r2 + 1))

        on_aux_left = split_indices(left, aux, label)
        on_aux_right = split_indices(right, aux, label)
        complement_ok &= all(on_aux_left[i] + on_aux_right[i] == 1 for i in range(1, n)) and all(
            on_aux_left[i] == on_aux_right[i] == 0 for i in (0, n)
        )

        weighted = sum(j * sp_left[j] for j in range(r1 + 1)) + sum(k * sp_right[k] for k in range(r2 + 1))
        weighted_ok &= weighted == n * (n - 1) // 2

        runs = [sp_left.tail_sum(j) for j in range(1, r1 + 1)] + [sp_right.tail_sum(k) for k in range(1, r2 + 1)]
        runs_ok &= sorted(runs) == list(range(1, n))
    report.check("sp_shift", shift_ok)
    report.check("sp_complement", complement_ok)
    report.check("weighted_sum", weighted_ok)
    report.check("w_runs", runs_ok)
