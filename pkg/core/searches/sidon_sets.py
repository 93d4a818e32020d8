"""
Sidon Target Sweep

Pairs with A ∩ (A + B) = ∅ and B a Sidon set always admit an acyclic
matching. Non-Sidon B are skipped and counted.
"""

from typing import Optional, Tuple, Union

from core.algebra import GroupSpec, Operator
from core.matching import SetPair, is_sidon
from core.oracle import (
    SearchReport, Witness, WitnessReason, collect_evidence, enumerate_matchings,
)
from core.searches.base import BaseSearch, as_operator, require_exhaustive
from core.sweep import run_exhaustive


class SidonSearch(BaseSearch):
    """Certify an acyclic matching on every weak pair with Sidon B."""

    theorem_backed = True

    def __init__(self, group: Union[GroupSpec, Operator], max_size: int):
        super().__init__('sidon', "weak pairs with Sidon B are acyclically matched")
        self.op = as_operator(group)
        self.max_size = max_size

    def accepts(self, pair: SetPair) -> bool:
        return is_sidon(pair.B, self.op)

    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        census = enumerate_matchings(pair)
        if census.singletons():
            return None, census.total
        reason = WitnessReason.NO_MATCHING if census.is_empty else WitnessReason.NO_ACYCLIC_MATCHING
        return Witness(reason, pair, collect_evidence(reason, pair)), census.total

    def run(self) -> SearchReport:
        require_exhaustive(self.op, self.max_size)
        report = SearchReport(scope={
            'kind': self.kind,
            'group': self.op.name,
            'max_size': self.max_size,
            'mode': 'exhaustive',
        })
        witness = run_exhaustive(self, self.op, self.max_size, exclude_zero=True,
                                 weak_only=True, stats=report.stats,
                                 workers=self.workers)
        return self.finish(report, witness)


def verify_theorem_sidon(group: Union[GroupSpec, Operator], max_size: int) -> SearchReport:
    return SidonSearch(group, max_size).run()
