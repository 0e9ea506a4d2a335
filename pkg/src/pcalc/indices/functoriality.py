"""Index maps for automorphic induction and base change."""

import logging
from typing import Dict, Mapping, Sequence

from ..core.embeddings import Restriction
from ..core.halfint import HalfInt, HalfIntLike
from ..core.types import InfinityType, check_same
from ..errors import RangeError, TieError
from .signs import SignMap

logger = logging.getLogger(__name__)


def ai_local_index(blocks: Mapping[str, Sequence[HalfIntLike]], s: int) -> Dict[str, int]:
    """How many of the s smallest exponents over τ each block above τ holds."""
    union = [(HalfInt.of(x), label) for label, row in blocks.items() for x in row]
    values = [x for x, _ in union]
    if len(set(values)) != len(values):
        repeated = sorted({str(x) for x in values if values.count(x) > 1})
        raise TieError(f"Exponents over one place coincide: {', '.join(repeated)}")
    if not 0 <= s <= len(union):
        raise RangeError(f"s={s} is outside 0..{len(union)}")

    counts = {label: 0 for label in blocks}
    for _, label in sorted(union)[:s]:
        counts[label] += 1
    return counts


def ai_global_index(signs: SignMap, upstairs: InfinityType, restriction: Restriction) -> SignMap:
    """Sign map over the larger field induced by ``signs`` through automorphic induction."""
    check_same(signs.embeddings, restriction.target)
    check_same(upstairs.embeddings, restriction.source)
    degree = restriction.degree()

    values: Dict[str, int] = {}
    for tau, fiber in restriction.fibers().items():
        blocks = {sigma: upstairs.at(sigma) for sigma in fiber}
        local = ai_local_index(blocks, signs(tau))
        values.update(local)
        logger.debug("AI index over %s: %s", tau, local)
    if signs.n != upstairs.n * degree:
        raise RangeError(f"Sign map rank {signs.n} differs from n*l = {upstairs.n * degree}")
    return SignMap.create(restriction.source, values, upstairs.n)


def bc_index(signs: SignMap, restriction: Restriction) -> SignMap:
    """I_F composed with the restriction map."""
    check_same(signs.embeddings, restriction.target)
    return SignMap.create(
        restriction.source,
        {sigma: signs(restriction(sigma)) for sigma in restriction.source.labels},
        signs.n,
    )
