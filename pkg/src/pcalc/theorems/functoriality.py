"""Arithmetic periods across a cyclic extension 𝓕/F: automorphic induction and base change."""

import itertools
import logging
from typing import Dict, List, Optional, Tuple

from ..config import get_settings
from ..core.embeddings import EmbeddingSet, Restriction, invert
from ..core.halfint import HALF, ZERO, HalfInt
from ..core.types import CharacterType, InfinityType
from ..errors import ParityError, TieError
from ..factorization.arithmetic import (
    galois_invariance_relations,
    global_symbol,
    local,
    local_anchor_relations,
)
from ..indices.functoriality import ai_global_index, bc_index
from ..indices.signs import SignMap, character_for_sign_map, galois_transport, sign_map
from ..periods.lattice import Relation, RelationLattice
from ..periods.monomial import PeriodMonomial, two_pi_i
from ..periods.registry import CharacterRegistry, Representation
from ..periods.relations import cm, cm_relation_pack, register_relations
from .models import FormulaReport
from .n_times_one import n_times_one_relations, twisted_l_value

logger = logging.getLogger(__name__)

# Formal evaluation point; the identities do not depend on it.
FORMAL_POINT = HalfInt.of(1)


def enumerate_sign_maps(embeddings: EmbeddingSet, n: int, limit: int) -> List[SignMap]:
    values = itertools.islice(itertools.product(range(n + 1), repeat=embeddings.d), limit)
    return [SignMap.create(embeddings, dict(zip(embeddings.labels, row)), n) for row in values]


def concentrated(embeddings: EmbeddingSet, place: str, s: int, n: int) -> SignMap:
    """s at one label and 0 elsewhere."""
    return SignMap.create(embeddings, {label: s if label == place else 0 for label in embeddings.labels}, n)


def needs_correction(n: int, degree: int) -> bool:
    """AI(Π_𝓕) is algebraic only after ||·||^{-1/2} when l is even and n odd."""
    return degree % 2 == 0 and n % 2 == 1


def induced_infinity_type(upstairs: InfinityType, restriction: Restriction, corrected: bool) -> InfinityType:
    """Exponents of AI(Π_𝓕) at τ: the union of the exponents above τ."""
    rows: Dict[str, List[HalfInt]] = {}
    for tau, fiber in restriction.fibers().items():
        union = [x for sigma in fiber for x in upstairs.at(sigma)]
        if len(set(union)) != len(union):
            raise TieError(f"Exponents above {tau} coincide; automorphic induction is not regular there")
        rows[tau] = sorted(union, reverse=True)
    induced = InfinityType.create(restriction.target, rows, upstairs.weight)
    if corrected:
        induced = induced.twist(CharacterType.norm(restriction.target, "-1/2"))
    return induced


def _fiber_sum_holds(signs: SignMap, upstairs_signs: SignMap, restriction: Restriction) -> bool:
    return all(
        sum(upstairs_signs(sigma) for sigma in fiber) == signs(tau)
        for tau, fiber in restriction.fibers().items()
    )


def _galois_product(
    char_id: str, embeddings: EmbeddingSet, perms: List[Dict[str, str]], place: str
) -> PeriodMonomial:
    """Π_i CM(χ, g^{-i}σ), the CM period of Π_i χ^{g^i} at σ."""
    return PeriodMonomial.product(cm(char_id, embeddings.act(invert(perm), place)) for perm in perms)


def central_pullback_relations(
    registry: CharacterRegistry,
    induced: Representation,
    upstairs: Representation,
    restriction: Restriction,
    shift: HalfInt,
) -> Tuple[List[Relation], bool]:
    """ξ_{AI}∘N = Π_i ξ^{g^i} · ||·||^{shift}, with a check that the declared types agree."""
    source = restriction.source
    xi_up = registry.character(upstairs.central or "")
    xi_down = registry.character(induced.central or "")
    pulled = registry.declare_type(
        f"{xi_down.id}oN",
        xi_down.type.pullback(restriction),
        norm_of=xi_down.id,
        restriction=restriction.name,
    )
    norm = registry.declare_type(f"||.||[{source.name}]", CharacterType.norm(source), norm=True)
    powers = restriction.deck_powers()

    moved_a = {
        label: sum((xi_up.type.at(source.act(invert(perm), label))[0] for perm in powers), ZERO) + shift
        for label in source.labels
    }
    moved_b = {
        label: sum((xi_up.type.at(source.act(invert(perm), source.conj(label)))[0] for perm in powers), ZERO)
        + shift
        for label in source.labels
    }
    types_agree = CharacterType.create(source, moved_a, moved_b) == pulled.type

    relations = []
    for place in source.places:
        rhs = _galois_product(xi_up.id, source, powers, place)
        if shift != ZERO:
            rhs = rhs * cm(norm.id, place, shift.to_int())
        tag = f"functoriality.central_pullback[{induced.id}]"
        relations.append(Relation(cm(pulled.id, place) / rhs, tag))
    return relations, types_agree


def ai_relation_check(
    upstairs: Representation,
    restriction: Restriction,
    corrected: Optional[bool] = None,
    signs: Optional[SignMap] = None,
    registry: Optional[CharacterRegistry] = None,
    lattice: Optional[RelationLattice] = None,
) -> FormulaReport:
    """P^{(I_F)}(AI(Π_𝓕)) ~ P^{(I_𝓕)}(Π_𝓕) and its local form over each τ.

    When l is even and n odd the induced representation is twisted by
    ||·||^{-1/2}; the L-functions then match at s and s − 1/2 and both sides
    pick up (2πi)^{-nld/2} globally, (2πi)^{-nl/2} per place.
    """
    l = restriction.degree()
    n = upstairs.n
    needed = needs_correction(n, l)
    if corrected is not None and corrected != needed:
        raise ParityError(f"n={n}, l={l} {'needs' if needed else 'takes no'} ||.||^(-1/2) correction")
    target = restriction.target
    shift = HALF if needed else ZERO
    induced_id = f"AI({upstairs.id})" + ("(x)|.|^-1/2" if needed else "")
    induced = Representation(induced_id, induced_infinity_type(upstairs.infinity, restriction, needed))
    rank = n * l
    report = FormulaReport(f"ai_relation[{upstairs.id},{restriction.name}]")
    report.outputs["degree"] = l
    report.outputs["corrected"] = needed
    if needed:
        report.note(f"l={l} even and n={n} odd: compared with {induced_id}, L-argument shifted by -1/2")

    registry = registry.fork() if registry is not None else CharacterRegistry()
    registry.add_restriction(restriction)
    upstairs, induced = registry.ensure_central(upstairs), registry.ensure_central(induced)
    lattice = lattice.fork() if lattice is not None else RelationLattice()

    limit = get_settings().subset_limit
    main = signs if signs is not None else SignMap.constant(target, rank // 2, rank)
    locals_needed = [concentrated(target, tau, s, rank) for tau in target.labels for s in range(rank + 1)]
    candidates: Dict[str, SignMap] = {}
    for current in [main] + locals_needed + enumerate_sign_maps(target, rank, limit):
        candidates.setdefault(current.key(), current)

    upstairs_point = FORMAL_POINT - shift
    correction = two_pi_i(-(shift * (rank * target.d)).to_int())
    fiber_ok, index_ok = True, True
    pairs: Dict[str, SignMap] = {}
    for key, current in candidates.items():
        eta = character_for_sign_map(induced.infinity, current)
        eta_id = f"eta[{key}]"
        registry.declare_type(eta_id, eta)
        pulled, pulled_id = eta.pullback(restriction), f"{eta_id}oN"
        registry.declare_type(pulled_id, pulled, norm_of=eta_id, restriction=restriction.name)

        upstairs_signs = ai_global_index(current, upstairs.infinity, restriction)
        fiber_ok &= _fiber_sum_holds(current, upstairs_signs, restriction)
        index_ok &= sign_map(induced.infinity, eta) == current
        index_ok &= sign_map(upstairs.infinity, pulled) == upstairs_signs
        pairs[key] = upstairs_signs

        register_relations(lattice, n_times_one_relations(induced, eta_id, eta, FORMAL_POINT, strict=False))
        register_relations(
            lattice,
            n_times_one_relations(upstairs, pulled_id, pulled, upstairs_point, strict=False),
        )
        lattice.add_relation(
            twisted_l_value(induced.id, eta_id, FORMAL_POINT)
            / twisted_l_value(upstairs.id, pulled_id, upstairs_point),
            f"l_function.induction[{induced.id},{eta_id}]",
        )

    pullback, types_agree = central_pullback_relations(
        registry, induced, upstairs, restriction, -(shift * rank)
    )
    register_relations(lattice, pullback)
    register_relations(lattice, cm_relation_pack(registry))
    for rep in (induced, upstairs):
        register_relations(lattice, local_anchor_relations(rep))

    report.check("fiber_sum", fiber_ok)
    report.check("index_matches", index_ok)
    report.check("central_pullback_type", types_agree)
    report.check(
        "global",
        all(
            lattice.equivalent(global_symbol(induced, current), correction * global_symbol(upstairs, pairs[key]))
            for key, current in candidates.items()
        ),
    )
    per_place = two_pi_i(-(shift * rank).to_int())
    local_ok = True
    for tau in target.labels:
        for s in range(rank + 1):
            upstairs_signs = pairs[concentrated(target, tau, s, rank).key()]
            above = PeriodMonomial.product(
                local(upstairs, sigma, upstairs_signs(sigma)) for sigma in restriction.fiber(tau)
            )
            local_ok &= lattice.equivalent(local(induced, tau, s), per_place * above)
    report.check("local", local_ok)

    upstairs_main = pairs[main.key()]
    report.compare(lattice, global_symbol(induced, main), correction * global_symbol(upstairs, upstairs_main))
    report.outputs.update(
        {
            "induced": induced.infinity.key(),
            "signs": main.as_dict(),
            "upstairs_signs": pairs[main.key()].as_dict(),
            "enumerated": len(candidates),
        }
    )
    logger.info("%s: %s over %d sign maps", report.name, report.verdict, len(candidates))
    return report


def base_change_infinity_type(pi: InfinityType, restriction: Restriction) -> InfinityType:
    rows = {sigma: pi.at(restriction(sigma)) for sigma in restriction.source.labels}
    return InfinityType.create(restriction.source, rows, pi.weight)


def bc_relation_check(
    pi: Representation,
    restriction: Restriction,
    l: Optional[int] = None,
    signs: Optional[SignMap] = None,
    registry: Optional[CharacterRegistry] = None,
    lattice: Optional[RelationLattice] = None,
) -> FormulaReport:
    """P^{(I_𝓕)}(BC(π)) ~ P^{(I_F)}(π)^l, and the local relation in l-th powers."""
    if l is not None:
        restriction.check_fibers(l)
    degree = restriction.degree()
    source, target = restriction.source, restriction.target
    n = pi.n
    report = FormulaReport(f"bc_relation[{pi.id},{restriction.name}]")
    report.outputs["degree"] = degree

    registry = registry.fork() if registry is not None else CharacterRegistry()
    registry.add_restriction(restriction)
    pi = registry.ensure_central(pi)
    xi = registry.character(pi.central or "")
    xi_bc = registry.declare_type(
        f"xi[BC({pi.id})]", xi.type.pullback(restriction), norm_of=xi.id, restriction=restriction.name
    )
    bc = registry.add_representation(
        Representation(f"BC({pi.id})", base_change_infinity_type(pi.infinity, restriction), xi_bc.id)
    )
    lattice = lattice.fork() if lattice is not None else RelationLattice()

    quadratic = registry.declare_type(
        f"eta[{source.name}/{target.name}]", CharacterType.trivial(target), finite_order=degree, csd=True
    )
    if degree % 2 == 0:
        logger.warning("Even degree %d: assuming CM(%s)^%d ~ 1", degree, quadratic.id, degree // 2)
        report.note(f"assumed CM({quadratic.id})^{degree // 2} ~ 1 for the even degree {degree}")
        for place in target.places:
            lattice.add_relation(
                cm(quadratic.id, place, degree // 2), f"functoriality.half_order[{quadratic.id}]", axiom=True
            )

    limit = get_settings().subset_limit
    main = signs if signs is not None else SignMap.constant(target, n // 2, n)
    locals_needed = [concentrated(target, tau, s, n) for tau in target.labels for s in range(n + 1)]
    candidates: Dict[str, SignMap] = {}
    for current in [main] + locals_needed + enumerate_sign_maps(target, n, limit):
        candidates.setdefault(current.key(), current)

    index_ok = True
    pairs: Dict[str, SignMap] = {}
    for key, current in candidates.items():
        eta = character_for_sign_map(pi.infinity, current)
        eta_id = f"eta[{key}]"
        registry.declare_type(eta_id, eta)
        pulled, pulled_id = eta.pullback(restriction), f"{eta_id}oN"
        registry.declare_type(pulled_id, pulled, norm_of=eta_id, restriction=restriction.name)

        upstairs_signs = bc_index(current, restriction)
        index_ok &= sign_map(bc.infinity, pulled) == upstairs_signs
        pairs[key] = upstairs_signs

        register_relations(lattice, n_times_one_relations(bc, pulled_id, pulled, FORMAL_POINT, strict=False))
        factors = []
        for i in range(degree):
            twist_id = eta_id if i == 0 else f"{eta_id}*{quadratic.id}^{i}"
            if i:
                registry.declare_type(twist_id, eta, product=((eta_id, 1), (quadratic.id, i)))
            register_relations(lattice, n_times_one_relations(pi, twist_id, eta, FORMAL_POINT, strict=False))
            factors.append(twisted_l_value(pi.id, twist_id, FORMAL_POINT))
        lattice.add_relation(
            twisted_l_value(bc.id, pulled_id, FORMAL_POINT) / PeriodMonomial.product(factors),
            f"l_function.base_change[{bc.id},{eta_id}]",
        )

    register_relations(lattice, cm_relation_pack(registry))
    for rep in (bc, pi):
        register_relations(lattice, local_anchor_relations(rep))
    powers = restriction.deck_powers()
    register_relations(lattice, galois_invariance_relations(bc, powers))

    report.check("index_matches", index_ok)
    report.check(
        "index_composition",
        all(pairs[key] == bc_index(current, restriction) for key, current in candidates.items())
        and all(galois_transport(pairs[key], perm) == pairs[key] for key in pairs for perm in powers),
    )
    report.check(
        "global",
        all(
            lattice.equivalent(global_symbol(bc, pairs[key]), global_symbol(pi, current) ** degree)
            for key, current in candidates.items()
        ),
    )
    invariant_ok, local_ok = True, True
    for tau in target.labels:
        fiber = restriction.fiber(tau)
        for s in range(n + 1):
            lead = local(bc, fiber[0], s)
            invariant_ok &= lattice.equivalent(
                PeriodMonomial.product(local(bc, sigma, s) for sigma in fiber), lead ** degree
            )
            local_ok &= lattice.equivalent_power(lead, local(pi, tau, s), degree)
    report.check("galois_invariance", invariant_ok)
    report.check("local", local_ok)

    report.compare(lattice, global_symbol(bc, pairs[main.key()]), global_symbol(pi, main) ** degree)
    report.outputs.update(
        {
            "base_change": bc.infinity.key(),
            "signs": main.as_dict(),
            "upstairs_signs": pairs[main.key()].as_dict(),
            "enumerated": len(candidates),
        }
    )
    logger.info("%s: %s over %d sign maps", report.name, report.verdict, len(candidates))
    return report

