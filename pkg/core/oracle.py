"""
Brute-Force Oracle

Ground truth for everything the greedy constructor claims:
- backtracking census of all matchings (or all bijections) grouped by
  multiplicity function
- acyclicity = singleton census class
- SearchReport / Witness types shared by every theorem sweep, with
  independent witness re-verification
"""

import os
import sys
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Hashable, Iterator, List, Optional, Tuple

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import Config
from core.algebra import Operator
from core.bipartite import exists_matching
from core.greedy import ASCENDING, OrderPolicy, greedy_construct
from core.matching import (
    Matching, MatchingError, MultiplicityFunction, SetPair, is_matching,
)


class SearchBoundError(ValueError):
    """Census or sweep size beyond the configured feasibility bound."""


@dataclass
class CensusClass:
    multiplicity: MultiplicityFunction
    members: List[Matching]

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass
class MatchingCensus:
    """Partition of all matchings (or bijections) A -> B by multiplicity function."""
    classes: List[CensusClass]
    bijections: bool = False

    @property
    def total(self) -> int:
        return sum(c.size for c in self.classes)

    @property
    def is_empty(self) -> bool:
        return not self.classes

    def class_of(self, f: Matching) -> Optional[CensusClass]:
        for census_class in self.classes:
            if f in census_class.members:
                return census_class
        return None

    def singletons(self) -> List[Matching]:
        """Members of singleton classes, i.e. the acyclic ones."""
        return [c.members[0] for c in self.classes if c.size == 1]

    def class_sizes(self) -> List[int]:
        return sorted(c.size for c in self.classes)

    def summary(self) -> Dict[str, int]:
        """Counts of members, classes and singleton classes."""
        sizes = self.class_sizes()
        return {
            'matchings': self.total,
            'classes': len(sizes),
            'singleton_classes': sizes.count(1),
            'largest_class': max(sizes) if sizes else 0,
        }


def _check_bound(pair: SetPair, bound: Optional[int]) -> None:
    bound = Config.MAX_CENSUS_SIZE if bound is None else bound
    if pair.size > bound:
        raise SearchBoundError(f"|A| = {pair.size} exceeds the census bound {bound}")


def _assignments(pair: SetPair, op: Operator, require_matching: bool) -> Iterator[Tuple[Tuple[Hashable, Hashable], ...]]:
    """Backtracking over bijections in canonical order, pruning a ⊕ b ∈ A."""
    members = set(pair.A)
    A, B = pair.A, pair.B
    allowed = [
        [b for b in B if not (require_matching and op.apply(a, b) in members)]
        for a in A
    ]
    used = set()
    chosen: List[Tuple[Hashable, Hashable]] = []

    def extend(i: int) -> Iterator[Tuple[Tuple[Hashable, Hashable], ...]]:
        if i == len(A):
            yield tuple(chosen)
            return
        for b in allowed[i]:
            if b in used:
                continue
            used.add(b)
            chosen.append((A[i], b))
            yield from extend(i + 1)
            chosen.pop()
            used.discard(b)

    yield from extend(0)


def _census(pair: SetPair, op: Operator, require_matching: bool) -> MatchingCensus:
    grouped: Dict[MultiplicityFunction, List[Matching]] = {}
    for pairs in _assignments(pair, op, require_matching):
        m = MultiplicityFunction.from_values((op.apply(a, b) for a, b in pairs), op)
        grouped.setdefault(m, []).append(Matching(pairs))
    return MatchingCensus(
        [CensusClass(m, members) for m, members in grouped.items()],
        bijections=not require_matching,
    )


def enumerate_matchings(pair: SetPair, op: Optional[Operator] = None,
                        bound: Optional[int] = None) -> MatchingCensus:
    """All matchings A -> B grouped by multiplicity function."""
    _check_bound(pair, bound)
    return _census(pair, op or pair.op, require_matching=True)


def enumerate_bijections(pair: SetPair, op: Optional[Operator] = None,
                         bound: Optional[int] = None) -> MatchingCensus:
    """All bijections A -> B grouped by multiplicity function."""
    _check_bound(pair, bound)
    return _census(pair, op or pair.op, require_matching=False)


def is_acyclic(f: Matching, pair: SetPair, op: Optional[Operator] = None,
               bound: Optional[int] = None) -> bool:
    """True iff no other matching shares f's multiplicity function."""
    op = op or pair.op
    if not is_matching(f, pair, op):
        raise MatchingError(f"{f.render(op)} is not a matching for {pair.describe()}")
    census_class = enumerate_matchings(pair, op, bound).class_of(f)
    return census_class is not None and census_class.size == 1


# ═══════════════════════════════════════════════════════════════════
# REPORTS AND WITNESSES
# ═══════════════════════════════════════════════════════════════════

class Verdict(Enum):
    HOLDS = 'property-holds'
    COUNTEREXAMPLE = 'counterexample'


class WitnessReason(Enum):
    NO_MATCHING = 'no_matching'
    NO_ACYCLIC_MATCHING = 'no_acyclic_matching'
    GREEDY_NOT_ACYCLIC = 'greedy_not_acyclic'
    GREEDY_NOT_UNIQUE = 'greedy_not_unique'
    IDENTITY_NOT_ACYCLIC = 'identity_not_acyclic'
    ORACLE_DISAGREEMENT = 'oracle_disagreement'


@dataclass
class Witness:
    reason: WitnessReason
    pair: SetPair
    evidence: Dict[str, Any]

    def to_dict(self) -> Dict[str, Any]:
        op = self.pair.op
        return {
            'reason': self.reason.value,
            'operator': op.name,
            'A': [op.to_json(x) for x in self.pair.A],
            'B': [op.to_json(x) for x in self.pair.B],
            'evidence': self.evidence,
        }


def _new_stats() -> Dict[str, int]:
    return {'pairs_examined': 0, 'pairs_skipped': 0, 'matchings_enumerated': 0}


@dataclass
class SearchReport:
    """Outcome of a sweep; a counterexample always carries its witness."""
    scope: Dict[str, Any]
    verdict: Verdict = Verdict.HOLDS
    witness: Optional[Witness] = None
    stats: Dict[str, int] = field(default_factory=_new_stats)
    seed: Optional[int] = None
    implementation_bug: bool = False

    @property
    def holds(self) -> bool:
        return self.verdict is Verdict.HOLDS

    def to_dict(self) -> Dict[str, Any]:
        result: Dict[str, Any] = {
            'scope': self.scope,
            'verdict': self.verdict.value,
            'witness': self.witness.to_dict() if self.witness else None,
            'stats': dict(self.stats),
            'implementation_bug': self.implementation_bug,
        }
        if self.seed is not None:
            result['seed'] = self.seed
        return result


def _matching_json(f: Matching, op: Operator) -> List[List[Any]]:
    return [[op.to_json(a), op.to_json(b)] for a, b in f.pairs]


def _class_size(census: MatchingCensus, f: Matching) -> int:
    census_class = census.class_of(f)
    return census_class.size if census_class else 0


def collect_evidence(reason: WitnessReason, pair: SetPair,
                     order: OrderPolicy = ASCENDING) -> Dict[str, Any]:
    """Recompute, from scratch, the evidence a witness of this kind records."""
    op = pair.op
    if reason is WitnessReason.NO_MATCHING:
        census = enumerate_matchings(pair)
        return {'matchings': census.total, 'maximum_matching': exists_matching(pair).maximum_size}
    if reason is WitnessReason.NO_ACYCLIC_MATCHING:
        census = enumerate_matchings(pair)
        return {'matchings': census.total, 'class_sizes': census.class_sizes()}
    if reason in (WitnessReason.GREEDY_NOT_ACYCLIC, WitnessReason.GREEDY_NOT_UNIQUE):
        f, _ = greedy_construct(pair, order=order)
        census = (enumerate_matchings(pair) if reason is WitnessReason.GREEDY_NOT_ACYCLIC
                  else enumerate_bijections(pair))
        return {'candidate': _matching_json(f, op), 'class_size': _class_size(census, f)}
    if reason is WitnessReason.IDENTITY_NOT_ACYCLIC:
        identity = Matching((a, a) for a in pair.A)
        census = enumerate_matchings(pair)
        return {'candidate': _matching_json(identity, op), 'class_size': _class_size(census, identity)}
    census = enumerate_matchings(pair)
    return {'exists_matching': exists_matching(pair).exists, 'census_matchings': census.total}


def evidence_fails(reason: WitnessReason, evidence: Dict[str, Any]) -> bool:
    """Whether the evidence actually shows the property failing."""
    if reason is WitnessReason.NO_MATCHING:
        return evidence['matchings'] == 0
    if reason is WitnessReason.NO_ACYCLIC_MATCHING:
        return evidence['matchings'] > 0 and min(evidence['class_sizes']) >= 2
    if reason is WitnessReason.ORACLE_DISAGREEMENT:
        return evidence['exists_matching'] != (evidence['census_matchings'] > 0)
    return evidence['class_size'] != 1


def recheck_witness(report: SearchReport) -> bool:
    """Re-run the census on the witness and confirm its recorded evidence."""
    if report.witness is None:
        return report.holds
    witness = report.witness
    order = OrderPolicy.parse(report.scope.get('order', 'asc'))
    evidence = collect_evidence(witness.reason, witness.pair, order)
    return evidence == witness.evidence and evidence_fails(witness.reason, evidence)
