"""
Matching Property Sweep

Every pair with |A| = |B| and 0 ∉ B should be matched; this holds exactly
for torsion-free groups and cyclic groups of prime order. Existence is
decided by augmenting paths; a failing pair is re-checked with a census.
"""

from typing import Optional, Tuple, Union

from core.algebra import GroupSpec, Operator
from core.bipartite import exists_matching
from core.matching import SetPair
from core.oracle import (
    SearchReport, Witness, WitnessReason, collect_evidence, enumerate_matchings,
)
from core.searches.base import BaseSearch, as_operator, require_exhaustive
from core.sweep import run_exhaustive


class MatchingPropertySearch(BaseSearch):
    """Sweep all pairs with 0 ∉ B for one lacking a matching."""

    def __init__(self, group: Union[GroupSpec, Operator], max_size: int,
                 cross_check: bool = False):
        super().__init__(
            kind='matching',
            description="every pair with 0 ∉ B admits a matching",
            cross_check=cross_check,
        )
        self.op = as_operator(group)
        self.max_size = max_size

    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        exists = exists_matching(pair).exists
        enumerated = 0
        if self.cross_check:
            census = enumerate_matchings(pair)
            enumerated = census.total
            witness = self.disagreement(pair, census)
            if witness is not None:
                return witness, enumerated
        if exists:
            return None, enumerated
        reason = WitnessReason.NO_MATCHING
        return Witness(reason, pair, collect_evidence(reason, pair)), enumerated

    def run(self) -> SearchReport:
        require_exhaustive(self.op, self.max_size, census=self.cross_check)
        report = SearchReport(scope={
            'kind': self.kind,
            'group': self.op.name,
            'max_size': self.max_size,
            'mode': 'exhaustive',
            'cross_check': self.cross_check,
        })
        witness = run_exhaustive(self, self.op, self.max_size, exclude_zero=True,
                                 weak_only=False, stats=report.stats,
                                 workers=self.workers)
        return self.finish(report, witness)


def verify_matching_property(group: Union[GroupSpec, Operator], max_size: int,
                             cross_check: bool = False) -> SearchReport:
    return MatchingPropertySearch(group, max_size, cross_check).run()
