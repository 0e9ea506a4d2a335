"""Critical values of Π ⊗ η through arithmetic automorphic periods."""

import logging
from typing import List

from ..core.halfint import HalfInt, HalfIntLike
from ..core.types import CharacterType
from ..critical.sets import critical_set_pair
from ..errors import NonCriticalError
from ..factorization.arithmetic import global_local_relation, global_symbol
from ..indices.signs import SignMap, sign_map
from ..periods.lattice import Relation
from ..periods.monomial import PeriodMonomial, two_pi_i
from ..periods.registry import Representation
from ..periods.relations import cm
from ..periods.symbols import l_value, l_value_label

logger = logging.getLogger(__name__)


def _require_critical(rep: Representation, eta: CharacterType, point: HalfInt) -> None:
    critical = critical_set_pair(rep.infinity, eta.as_infinity_type())
    if point not in critical:
        raise NonCriticalError(f"{point} is not critical for {rep.id} (x) {eta.key()}: {critical.describe()}")
    if point * 2 < rep.infinity.weight + eta.omega + 1:
        raise NonCriticalError(f"{point} lies left of the centre for {rep.id} (x) {eta.key()}")


def power_of_two_pi_i(point: HalfIntLike, factor: int) -> PeriodMonomial:
    """(2πi)^{point·factor}; the product must be an integer."""
    return two_pi_i((HalfInt.of(point) * factor).to_int())


def rhs_n_times_one(
    rep: Representation, eta_id: str, eta: CharacterType, m: HalfIntLike, strict: bool = True
) -> PeriodMonomial:
    """(2πi)^{mnd} P^{(I)}(Π) Π_σ p(η̌,σ)^{I(σ)} p(η̌,σ̄)^{n−I(σ)} with I = I(Π, η)."""
    point = HalfInt.of(m)
    if strict:
        _require_critical(rep, eta, point)
    signs = sign_map(rep.infinity, eta)
    embeddings = rep.infinity.embeddings
    n = rep.n
    monomial = power_of_two_pi_i(point, n * embeddings.d) * global_symbol(rep, signs)
    for label in embeddings.labels:
        value = signs(label)
        monomial = monomial * cm(eta_id, label, value) * cm(eta_id, embeddings.conj(label), n - value)
    return monomial


def twisted_l_value(rep_id: str, eta_id: str, m: HalfIntLike) -> PeriodMonomial:
    return PeriodMonomial.atom(l_value(l_value_label(rep_id, eta_id), m))


def n_times_one_relations(
    rep: Representation, eta_id: str, eta: CharacterType, m: HalfIntLike, strict: bool = True
) -> List[Relation]:
    """L(m, Π ⊗ η) ~ rhs_n_times_one, with the factorization of the global period."""
    signs: SignMap = sign_map(rep.infinity, eta)
    rhs = rhs_n_times_one(rep, eta_id, eta, m, strict)
    logger.debug("n x 1 relation for %s (x) %s at %s with %s", rep.id, eta_id, m, signs.key())
    return [
        Relation(twisted_l_value(rep.id, eta_id, m) / rhs, f"theorem.n_times_one[{rep.id},{eta_id}]"),
        global_local_relation(rep, signs),
    ]
