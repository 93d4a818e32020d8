"""
Identity Map Sweep

In Z/p with A ∩ 2A = ∅ and k * 2^(k-1) < p for k = |A|, the identity
map A -> A is an acyclic matching. Every qualifying A is certified by
census.
"""

from itertools import combinations
from typing import List, Optional, Tuple

from sympy import isprime

from core.algebra import GroupAdd, GroupSpec
from core.matching import Matching, SetPair, identity_premise
from core.oracle import (
    SearchReport, Witness, WitnessReason, collect_evidence, enumerate_matchings,
)
from core.searches.base import BaseSearch


def qualifying_sizes(p: int, max_k: int) -> List[int]:
    """Sizes k <= max_k with k * 2^(k-1) < p."""
    return [k for k in range(1, max_k + 1) if k * 2 ** (k - 1) < p]


class IdentityMapSearch(BaseSearch):
    """Certify the identity matching on every A with A ∩ 2A = ∅."""

    theorem_backed = True

    def __init__(self, p: int, max_k: int):
        super().__init__('identity', "the identity map on A with A∩2A=∅ is acyclic")
        if not isprime(p):
            raise ValueError(f"p must be prime, got {p}")
        self.p = p
        self.max_k = max_k
        self.op = GroupAdd(GroupSpec((p,)))

    def accepts(self, pair: SetPair) -> bool:
        return identity_premise(pair.A, self.op)

    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        identity = Matching((a, a) for a in pair.A)
        census = enumerate_matchings(pair)
        census_class = census.class_of(identity)
        if census_class is not None and census_class.size == 1:
            return None, census.total
        reason = WitnessReason.IDENTITY_NOT_ACYCLIC
        return Witness(reason, pair, collect_evidence(reason, pair)), census.total

    def run(self) -> SearchReport:
        sizes = qualifying_sizes(self.p, self.max_k)
        report = SearchReport(scope={
            'kind': self.kind,
            'group': self.op.name,
            'max_k': self.max_k,
            'sizes': sizes,
            'mode': 'exhaustive',
        })
        for k in sizes:
            for A in combinations(self.op.carrier(), k):
                pair = SetPair(A, A, self.op)
                if not self.accepts(pair):
                    report.stats['pairs_skipped'] += 1
                    continue
                report.stats['pairs_examined'] += 1
                witness, enumerated = self.check_pair(pair)
                report.stats['matchings_enumerated'] += enumerated
                if witness is not None:
                    return self.finish(report, witness)
        return self.finish(report, None)


def verify_theorem_identity_map(p: int, max_k: int) -> SearchReport:
    return IdentityMapSearch(p, max_k).run()
