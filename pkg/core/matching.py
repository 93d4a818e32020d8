"""
Set Pairs, Matchings and Multiplicity Functions

A matching from A to B is a bijection f with a ⊕ f(a) ∉ A for every a.
Its multiplicity function counts how many a land on each sum value.
Special-set predicates (Sidon, A ∩ 2A = ∅) and the degenerate-pair
diagnosis live here too.
"""

from collections import Counter, defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

from core.algebra import GroupAdd, Operator


class MatchingError(ValueError):
    """A matching that is not a bijection A -> B."""


@dataclass(frozen=True)
class SetPair:
    """
    Equal-size finite subsets A and B under an operator.

    Both sets are deduplicated and canonically ordered on construction.
    0 ∉ B and the weak condition are predicates, not invariants.
    """
    A: Tuple[Hashable, ...]
    B: Tuple[Hashable, ...]
    op: Operator = field(compare=False)

    def __post_init__(self):
        A = self.op.sort(self.op.canonical(x) for x in self.A)
        B = self.op.sort(self.op.canonical(x) for x in self.B)
        if not A or not B:
            raise ValueError("A and B must be nonempty")
        if len(A) != len(B):
            raise ValueError(f"|A| = {len(A)} but |B| = {len(B)}")
        object.__setattr__(self, 'A', A)
        object.__setattr__(self, 'B', B)

    @property
    def size(self) -> int:
        return len(self.A)

    @property
    def zero_in_B(self) -> bool:
        """0 ∈ B (groups only; always False for tables)."""
        if not isinstance(self.op, GroupAdd):
            return False
        return self.op.group.zero in self.B

    def describe(self) -> str:
        return f"A={format_set(self.A, self.op)}, B={format_set(self.B, self.op)}"


class Matching:
    """
    Bijection stored as ordered (a, b) pairs.

    Pair order is kept as given (the greedy constructor records its
    assignment order); equality ignores it.
    """

    def __init__(self, pairs: Iterable[Tuple[Hashable, Hashable]]):
        self.pairs: Tuple[Tuple[Hashable, Hashable], ...] = tuple((a, b) for a, b in pairs)
        firsts = [a for a, _ in self.pairs]
        seconds = [b for _, b in self.pairs]
        if len(set(firsts)) != len(firsts):
            raise MatchingError(f"domain element repeated in {self}")
        if len(set(seconds)) != len(seconds):
            raise MatchingError(f"image element repeated in {self}")
        self._map: Dict[Hashable, Hashable] = dict(self.pairs)

    @classmethod
    def from_mapping(cls, mapping: Dict[Hashable, Hashable], op: Operator) -> 'Matching':
        """Build with pairs ordered canonically by domain element."""
        return cls((a, mapping[a]) for a in sorted(mapping, key=op.key))

    def __call__(self, a: Hashable) -> Hashable:
        return self._map[a]

    def __len__(self) -> int:
        return len(self.pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Matching):
            return NotImplemented
        return self._map == other._map

    def __hash__(self) -> int:
        return hash(frozenset(self.pairs))

    def __repr__(self) -> str:
        return f"Matching({list(self.pairs)!r})"

    def __str__(self) -> str:
        return '{' + ', '.join(f"{a}->{b}" for a, b in self.pairs) + '}'

    def as_dict(self) -> Dict[Hashable, Hashable]:
        return dict(self._map)

    def check_bijection(self, pair: SetPair) -> None:
        """Raise MatchingError unless this is a bijection pair.A -> pair.B."""
        if set(self._map) != set(pair.A) or set(self._map.values()) != set(pair.B):
            raise MatchingError(f"{self} is not a bijection from A to B ({pair.describe()})")

    def render(self, op: Operator) -> str:
        return '{' + ', '.join(
            f"{op.format_element(a)}->{op.format_element(b)}" for a, b in self.pairs
        ) + '}'


@dataclass(frozen=True)
class MultiplicityFunction:
    """Sparse map from attained sum values to positive counts."""
    counts: Tuple[Tuple[Hashable, int], ...]

    @classmethod
    def from_values(cls, values: Iterable[Hashable], op: Operator) -> 'MultiplicityFunction':
        tally = Counter(values)
        return cls(tuple((x, tally[x]) for x in sorted(tally, key=op.key)))

    def get(self, x: Hashable) -> int:
        return dict(self.counts).get(x, 0)

    @property
    def total(self) -> int:
        return sum(count for _, count in self.counts)

    def as_dict(self) -> Dict[Hashable, int]:
        return dict(self.counts)

    def render(self, op: Operator) -> str:
        return '{' + ', '.join(f"{op.format_element(x)}:{n}" for x, n in self.counts) + '}'


def format_set(items: Sequence[Hashable], op: Operator) -> str:
    return '{' + ','.join(op.format_element(x) for x in items) + '}'


# ═══════════════════════════════════════════════════════════════════
# PREDICATES
# ═══════════════════════════════════════════════════════════════════

def sumset(A: Iterable[Hashable], B: Iterable[Hashable], op: Operator) -> Tuple[Hashable, ...]:
    """{a ⊕ b : a ∈ A, b ∈ B}, deduplicated and canonically ordered."""
    B = list(B)
    return op.sort(op.apply(a, b) for a in A for b in B)


def weak_condition(pair: SetPair) -> bool:
    """A ∩ (A ⊕ B) = ∅."""
    members = set(pair.A)
    return not any(pair.op.apply(a, b) in members for a in pair.A for b in pair.B)


def is_matching(f: Matching, pair: SetPair, op: Optional[Operator] = None) -> bool:
    """True iff a ⊕ f(a) ∉ A for every a."""
    op = op or pair.op
    f.check_bijection(pair)
    members = set(pair.A)
    return all(op.apply(a, b) not in members for a, b in f.pairs)


def multiplicity(f: Matching, op: Operator) -> MultiplicityFunction:
    """m_f(x) = |{a : a ⊕ f(a) = x}|, attained values only."""
    return MultiplicityFunction.from_values((op.apply(a, b) for a, b in f.pairs), op)


def _require_group(op: Operator) -> GroupAdd:
    if not isinstance(op, GroupAdd):
        raise ValueError(f"{op.name} is not a group addition")
    return op


def is_sidon(B: Iterable[Hashable], op: Operator) -> bool:
    """
    No x + y = z + w in B with {x, y} ∩ {z, w} = ∅.

    Unordered pairs (x = y allowed) are bucketed by their sum; a bucket
    with two disjoint pairs is a violation.
    """
    _require_group(op)
    items = op.sort(B)
    buckets: Dict[Hashable, List[frozenset]] = defaultdict(list)
    for i, x in enumerate(items):
        for y in items[i:]:
            buckets[op.apply(x, y)].append(frozenset((x, y)))
    for pairs in buckets.values():
        for i, first in enumerate(pairs):
            if any(first.isdisjoint(second) for second in pairs[i + 1:]):
                return False
    return True


def identity_premise(A: Iterable[Hashable], op: Operator) -> bool:
    """A ∩ 2A = ∅, which makes the identity map A -> A a matching."""
    group = _require_group(op).group
    items = set(A)
    return not any(group.double(a) in items for a in items)


# ═══════════════════════════════════════════════════════════════════
# DEGENERATE PAIRS
# ═══════════════════════════════════════════════════════════════════

class DiagnosisKind(Enum):
    """Where a pair sits between the two extremes of matchability."""
    BLOCKED = 'blocked'            # A + B = A, no matching at all
    FULLY_FREE = 'fully_free'      # A ∩ (A + B) = ∅, every bijection matches
    INTERMEDIATE = 'intermediate'
    ANOMALY = 'anomaly'            # A + B = A yet B is no subgroup


@dataclass
class Diagnosis:
    kind: DiagnosisKind
    subgroup: Optional[bool] = None
    coset_representative: Optional[Hashable] = None
    is_coset: Optional[bool] = None
    detail: str = ''

    def to_dict(self, op: Operator) -> Dict[str, Any]:
        result: Dict[str, Any] = {'kind': self.kind.value, 'detail': self.detail}
        if self.subgroup is not None:
            result['subgroup'] = self.subgroup
            result['is_coset'] = self.is_coset
            result['coset_representative'] = (
                None if self.coset_representative is None else op.to_json(self.coset_representative)
            )
        return result


def is_subgroup(B: Sequence[Hashable], op: GroupAdd) -> bool:
    """Finite nonempty subset closed under addition and containing 0."""
    members = set(B)
    if op.group.zero not in members:
        return False
    return all(op.apply(x, y) in members for x in members for y in members)


def degenerate_diagnosis(pair: SetPair) -> Diagnosis:
    """
    Classify a pair against the extremes A + B = A and A ∩ (A + B) = ∅.

    In the blocked case B must be a subgroup and A a coset of B; both
    claims are checked and reported. Failing them yields ANOMALY.
    """
    op = _require_group(pair.op)
    if not op.group.is_finite:
        raise ValueError(f"degenerate diagnosis needs a finite group, got {op.group}")

    total = set(sumset(pair.A, pair.B, op))
    members = set(pair.A)

    if total == members:
        subgroup = is_subgroup(pair.B, op)
        rep = pair.A[0]
        coset = set(sumset([rep], pair.B, op)) == members
        if not (subgroup and coset):
            return Diagnosis(
                DiagnosisKind.ANOMALY, subgroup, rep, coset,
                detail="A+B=A but B is not a subgroup with A a coset",
            )
        return Diagnosis(
            DiagnosisKind.BLOCKED, True, rep, True,
            detail=f"A+B=A: B is a subgroup and A = {op.format_element(rep)}+B",
        )

    if not (total & members):
        return Diagnosis(DiagnosisKind.FULLY_FREE, detail="A∩(A+B)=∅: every bijection is a matching")

    return Diagnosis(DiagnosisKind.INTERMEDIATE, detail="A+B meets A but A+B≠A")
