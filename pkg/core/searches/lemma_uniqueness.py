"""
Unique Multiplicity Sweep

For any equal-size A, B under a cancellative operator, the greedy
bijection is the only bijection with its multiplicity function. Checked
against the full bijection census; no 0 ∉ B or weak filtering.
"""

from typing import Optional, Sequence, Tuple

from core.greedy import greedy_construct
from core.matching import SetPair
from core.oracle import (
    SearchReport, Witness, WitnessReason, collect_evidence, enumerate_bijections,
)
from core.searches.base import MultiOperatorSearch


class LemmaUniquenessSearch(MultiOperatorSearch):
    """Certify that no other bijection shares the greedy multiplicity function."""

    def __init__(self, operators: Sequence, max_size: int, samples: Optional[int] = None,
                 seed: Optional[int] = None, order=None, mode: str = 'auto'):
        super().__init__(
            'lemma', "the greedy bijection has a unique multiplicity function",
            operators, max_size, samples, seed, order, mode,
        )

    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        f, _ = greedy_construct(pair, order=self.order)
        census = enumerate_bijections(pair)
        census_class = census.class_of(f)
        if census_class is not None and census_class.size == 1:
            return None, census.total
        reason = WitnessReason.GREEDY_NOT_UNIQUE
        return Witness(reason, pair, collect_evidence(reason, pair, self.order)), census.total


def verify_lemma_uniqueness(operators: Sequence, max_size: int, samples: Optional[int] = None,
                            seed: Optional[int] = None, order=None,
                            mode: str = 'auto') -> SearchReport:
    return LemmaUniquenessSearch(operators, max_size, samples, seed, order, mode).run()
