"""
Acyclic Matching Property Sweep

Every pair with |A| = |B| and 0 ∉ B should admit at least one acyclic
matching. A pair with no matching at all is reported as a counterexample
too, under its own reason so both readings stay recoverable.
"""

from typing import Optional, Tuple, Union

from core.algebra import GroupSpec, Operator
from core.bipartite import exists_matching
from core.matching import SetPair
from core.oracle import (
    SearchReport, Witness, WitnessReason, enumerate_matchings,
)
from core.searches.base import BaseSearch, as_operator, require_exhaustive
from core.sweep import run_exhaustive


class AcyclicPropertySearch(BaseSearch):
    """Sweep pairs with 0 ∉ B for one without a singleton census class."""

    def __init__(self, group: Union[GroupSpec, Operator], max_size: int,
                 cross_check: bool = False):
        super().__init__(
            kind='acyclic',
            description="every pair with 0 ∉ B admits an acyclic matching",
            cross_check=cross_check,
        )
        self.op = as_operator(group)
        self.max_size = max_size

    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        census = enumerate_matchings(pair)
        witness = self.disagreement(pair, census)
        if witness is not None:
            return witness, census.total
        if census.is_empty:
            evidence = {'matchings': 0, 'maximum_matching': exists_matching(pair).maximum_size}
            return Witness(WitnessReason.NO_MATCHING, pair, evidence), 0
        if not census.singletons():
            evidence = {'matchings': census.total, 'class_sizes': census.class_sizes()}
            return Witness(WitnessReason.NO_ACYCLIC_MATCHING, pair, evidence), census.total
        return None, census.total

    def run(self) -> SearchReport:
        require_exhaustive(self.op, self.max_size)
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


def verify_acyclic_property(group: Union[GroupSpec, Operator], max_size: int,
                            cross_check: bool = False) -> SearchReport:
    return AcyclicPropertySearch(group, max_size, cross_check).run()
