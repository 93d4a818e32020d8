"""
Weak Acyclic Matching Property Sweep

For pairs with A ∩ (A ⊕ B) = ∅ every bijection is a matching, so the
greedy bijection must be an acyclic matching. This holds in every
abelian group (and every quasigroup table), so a failure is a bug.
"""

from typing import Optional, Sequence, Tuple

from core.greedy import construct_acyclic_matching
from core.matching import SetPair
from core.oracle import (
    SearchReport, Witness, WitnessReason, collect_evidence, enumerate_matchings,
)
from core.searches.base import MultiOperatorSearch


class WeakAcyclicSearch(MultiOperatorSearch):
    """Certify the greedy matching on every weak-condition pair."""

    weak_only = True

    def __init__(self, operators: Sequence, max_size: int, samples: Optional[int] = None,
                 seed: Optional[int] = None, order=None, mode: str = 'auto'):
        super().__init__(
            'weak', "every pair with A∩(A+B)=∅ is acyclically matched",
            operators, max_size, samples, seed, order, mode,
        )

    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        f = construct_acyclic_matching(pair, order=self.order)
        census = enumerate_matchings(pair)
        census_class = census.class_of(f)
        if census_class is not None and census_class.size == 1:
            return None, census.total
        reason = WitnessReason.GREEDY_NOT_ACYCLIC
        return Witness(reason, pair, collect_evidence(reason, pair, self.order)), census.total


def verify_weak_acyclic_everywhere(groups: Sequence, max_size: int, samples: Optional[int] = None,
                                   seed: Optional[int] = None, order=None,
                                   mode: str = 'auto') -> SearchReport:
    return WeakAcyclicSearch(groups, max_size, samples, seed, order, mode).run()
