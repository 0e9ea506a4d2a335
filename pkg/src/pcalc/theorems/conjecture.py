"""The split-index shape of critical values and its compatibility checks."""

import logging
from typing import Dict, Iterator, List, Optional, Tuple

from ..core.embeddings import EmbeddingSet
from ..core.halfint import HalfInt, HalfIntLike
from ..core.types import InfinityType
from ..critical.sets import critical_set_pair, critical_set_pair_via_motive
from ..errors import DictionaryGapError, NonCriticalError
from ..factorization.arithmetic import local
from ..indices.split import split_indices
from ..periods.lattice import RelationLattice
from ..periods.monomial import ONE, PeriodMonomial
from ..periods.registry import CharacterRegistry, Representation
from ..periods.relations import cm, register_relations
from .models import FormulaReport, MotiveHodgeData
from .motivic import (
    conjugate_motive_relations,
    delta,
    delta_relations,
    deligne_period,
    motive_critical_shift,
    q_period,
    qj_relations,
    regrouped_deligne_period,
    regrouping_holds,
)
from .n_times_one import power_of_two_pi_i

logger = logging.getLogger(__name__)

# place, local index j of Π, exponent change
Perturbation = Tuple[str, int, int]


def require_critical_pair(pi: InfinityType, other: InfinityType, point: HalfInt, what: str) -> None:
    critical = critical_set_pair(pi, other)
    if point not in critical:
        raise NonCriticalError(f"{point} is not critical for {what}: {critical.describe()}")


def main_conjecture_rhs(
    pi: Representation, other: Representation, m: HalfIntLike, strict: bool = True
) -> PeriodMonomial:
    """(2πi)^{nn'md} Π_σ Π_j P^{(j)}(Π,σ)^{sp(j,Π;Π')} Π_k P^{(k)}(Π',σ)^{sp(k,Π';Π)}."""
    point = HalfInt.of(m)
    if strict:
        require_critical_pair(pi.infinity, other.infinity, point, f"{pi.id} x {other.id}")
    embeddings = pi.infinity.embeddings
    monomial = power_of_two_pi_i(point, pi.n * other.n * embeddings.d)
    for place in embeddings.labels:
        sp = split_indices(other.infinity, pi.infinity, place)
        sp_other = split_indices(pi.infinity, other.infinity, place)
        for j in range(pi.n + 1):
            monomial = monomial * local(pi, place, j, sp[j])
        for k in range(other.n + 1):
            monomial = monomial * local(other, place, k, sp_other[k])
    return monomial


def printed_range_note(pi: Representation, other: Representation) -> Optional[str]:
    """Flag the interlaced case, where the Π' product runs over k = 1..n'−1."""
    if other.n != pi.n - 1 or other.n < 2:
        return None
    for place in pi.infinity.embeddings.labels:
        sp_other = split_indices(pi.infinity, other.infinity, place)
        if any(entry != 1 for entry in sp_other.entries):
            return None
    note = (
        f"{pi.id} and {other.id} interlace: after P^(0)P^({other.n}) ~ 1 the {other.id} product "
        f"runs over k=1..{other.n - 1}; a printed range k=2..{other.n - 1} is a suspected typo"
    )
    logger.warning(note)
    return note


def dictionary_relations(
    pi: Representation, motive: MotiveHodgeData, places: Tuple[str, ...]
) -> Iterator[PeriodMonomial]:
    """P^{(j)}(Π,σ) ~ Q_{n−j+1}(M^c,σ) … Q_n(M^c,σ) · δ(ξ_Π,σ)."""
    if pi.central is None:
        raise DictionaryGapError(f"{pi.id} has no central character")
    conjugate = motive.conjugate()
    n = pi.n
    for place in places:
        for j in range(n + 1):
            rhs = delta(pi.central, place)
            for i in range(n - j + 1, n + 1):
                rhs = rhs * q_period(conjugate, i, place)
            yield local(pi, place, j) / rhs


def deligne_compatibility_check(
    pi: Representation,
    other: Representation,
    m: HalfIntLike,
    perturb: Optional[Perturbation] = None,
    registry: Optional[CharacterRegistry] = None,
    lattice: Optional[RelationLattice] = None,
) -> FormulaReport:
    """Compare Deligne's prediction for M(Π) ⊗ M(Π') with main_conjecture_rhs.

    ``perturb`` shifts one split-index exponent on the automorphic side; the
    comparison must then fail with a witness.
    """
    point = HalfInt.of(m)
    report = FormulaReport(f"deligne_compatibility[{pi.id},{other.id},{point}]")
    for rep in (pi, other):
        if not rep.infinity.is_conjugate_self_dual():
            raise DictionaryGapError(f"{rep.id} is not conjugate self-dual; no motivic dictionary applies")
    registry = registry.fork() if registry is not None else CharacterRegistry()
    pi, other = registry.ensure_central(pi), registry.ensure_central(other)
    lattice = lattice.fork() if lattice is not None else RelationLattice()

    places = pi.infinity.embeddings.labels
    motive = MotiveHodgeData.from_representation(pi)
    motive_other = MotiveHodgeData.from_representation(other)
    for current in (motive, motive_other):
        register_relations(lattice, delta_relations(current, places))
        register_relations(lattice, qj_relations(current, places))
        register_relations(lattice, conjugate_motive_relations(current, places))
    for rep, current in ((pi, motive), (other, motive_other)):
        for monomial in dictionary_relations(rep, current, places):
            lattice.add_relation(monomial, f"dictionary.p_to_q[{rep.id}]", axiom=True)

    shift = motive_critical_shift(pi, other)
    motive_point = point + shift
    lhs = power_of_two_pi_i(motive_point, pi.n * other.n * pi.infinity.embeddings.d)
    lhs = lhs * deligne_period(motive, motive_other)
    d = pi.infinity.embeddings.d
    if d > 1:
        # E is assumed to contain the roots of unity the tensor product introduces
        logger.warning("Dropped a %d-th root of unity from the Deligne period of %s", d, report.name)
        report.note(f"dropped a {d}-th root of unity from the Deligne period of the tensor product")
    rhs = main_conjecture_rhs(pi, other, point)
    if perturb is not None:
        place, j, change = perturb
        rhs = rhs * local(pi, place, j, change)
        report.note(f"perturbed the exponent of P^({j})({pi.id},{place}) by {change}")

    regrouping = regrouping_holds(pi, other)
    report.check("regrouping", all(regrouping.values()))
    report.check(
        "qj_expansion",
        lattice.equivalent(deligne_period(motive, motive_other), regrouped_deligne_period(pi, other)),
    )
    report.check(
        "critical_via_motive",
        critical_set_pair(pi.infinity, other.infinity)
        == critical_set_pair_via_motive(pi.infinity, other.infinity),
    )
    report.compare(lattice, lhs, rhs)
    report.outputs["motive_point"] = str(motive_point)
    logger.info("%s: %s", report.name, report.verdict)
    return report


def _lift(embeddings: EmbeddingSet, place: str, tag: str) -> str:
    """Name of a place of a larger CM field lying over ``place``."""
    if embeddings.is_upper(place):
        return f"{place}#{tag}"
    return f"{embeddings.conj(place)}#{tag}~"


def cm_model_check(
    pi_inf: InfinityType, other_inf: InfinityType, m: HalfIntLike, strict: bool = True
) -> FormulaReport:
    """Check the split-index shape on automorphic inductions AI(χ), AI(χ').

    L(m, AI(χ) × AI(χ')) is a Hecke L-value of χ_𝓛 = (χ∘N)(χ'∘N) and so a CM
    monomial; the local periods of AI(χ) are CM periods of χ at the places above σ.
    """
    point = HalfInt.of(m)
    if strict:
        require_critical_pair(pi_inf, other_inf, point, "the CM model pair")
    embeddings = pi_inf.embeddings
    n, n_other = pi_inf.n, other_inf.n
    total = pi_inf.weight + other_inf.weight
    report = FormulaReport(f"cm_model[{point}]")
    lattice = RelationLattice()
    induced = Representation("AI(chi)", pi_inf)
    induced_other = Representation("AI(chi')", other_inf)

    blasius = power_of_two_pi_i(point, n * n_other * embeddings.d)
    partial_sums: Dict[str, bool] = {}
    for label in embeddings.labels:
        bar = embeddings.conj(label)
        a, b = pi_inf.at(label), other_inf.at(label)
        for i in range(1, n + 1):
            for j in range(1, n_other + 1):
                for place in (label, bar):
                    lattice.add_relation(
                        cm("chi_L", _lift(embeddings, place, f"{i},{j}"))
                        / cm("chi", _lift(embeddings, place, str(i)))
                        / cm("chi'", _lift(embeddings, place, str(j))),
                        "cm.norm_functoriality[chi_L]",
                    )
                below = (a[i - 1] + b[j - 1]) * 2 < -total
                blasius = blasius * cm("chi_L", _lift(embeddings, label if below else bar, f"{i},{j}"))

        for rep, count, tag in ((induced, n, "chi"), (induced_other, n_other, "chi'")):
            for level in range(count + 1):
                model = ONE
                for i in range(1, count + 1):
                    place = label if i > count - level else bar
                    model = model * cm(tag, _lift(embeddings, place, str(i)))
                lattice.add_relation(local(rep, label, level) / model, f"cm_model.local[{rep.id}]")

        sp = split_indices(other_inf, pi_inf, label)
        partial_sums[label] = all(
            sp.tail_sum(n - i + 1) == sum(1 for y in b if (a[i - 1] + y) * 2 < -total)
            for i in range(1, n + 1)
        )

    report.check("partial_sums", all(partial_sums.values()))
    report.compare(lattice, blasius, main_conjecture_rhs(induced, induced_other, point, strict=False))
    return report


def sp_exponents(pi: Representation, other: Representation) -> Dict[str, List[int]]:
    """sp(j, Π; Π', σ) per label, as reported next to main_conjecture_rhs."""
    return {
        place: list(split_indices(other.infinity, pi.infinity, place).entries)
        for place in pi.infinity.embeddings.labels
    }
