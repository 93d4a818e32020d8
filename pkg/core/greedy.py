"""
Greedy Unique-Multiplicity Constructor

Walks the sum values c_1..c_k of A ⊕ B in a chosen order. At step j every
still-active a whose partner c_j ⊖ a is still active in B is assigned to
it, and both sides are retired. The resulting bijection is the only one
with its multiplicity function; under A ∩ (A ⊕ B) = ∅ it is an acyclic
matching.
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, Hashable, List, Optional, Tuple

import numpy as np

from core.algebra import CancellationError, Operator
from core.matching import Matching, SetPair, sumset, weak_condition

logger = logging.getLogger(__name__)


class WeakConditionError(ValueError):
    """construct_acyclic_matching called on a pair with A ∩ (A ⊕ B) ≠ ∅."""


@dataclass(frozen=True)
class OrderPolicy:
    """How the sum values are labelled c_1..c_k: asc, desc or seed:<n>."""
    mode: str = 'asc'
    seed: Optional[int] = None

    @classmethod
    def parse(cls, text: str) -> 'OrderPolicy':
        cleaned = text.strip().lower()
        if cleaned in ('asc', 'desc'):
            return cls(cleaned)
        if cleaned.startswith('seed:'):
            try:
                return cls('seed', int(cleaned[5:]))
            except ValueError:
                pass
        raise ValueError(f"order must be asc, desc or seed:<n>, got {text!r}")

    def arrange(self, values: Tuple[Hashable, ...]) -> Tuple[Hashable, ...]:
        """Reorder canonically sorted values."""
        if self.mode == 'asc':
            return tuple(values)
        if self.mode == 'desc':
            return tuple(reversed(values))
        rng = np.random.default_rng(self.seed)
        return tuple(values[i] for i in rng.permutation(len(values)))

    def __str__(self) -> str:
        return f"seed:{self.seed}" if self.mode == 'seed' else self.mode


ASCENDING = OrderPolicy('asc')


@dataclass(frozen=True)
class GreedyStep:
    """One pass over c_j: active sets at entry, selected A'_j and its assignments."""
    j: int
    c: Hashable
    active_A: Tuple[Hashable, ...]
    active_B: Tuple[Hashable, ...]
    selected: Tuple[Hashable, ...]
    assigned: Tuple[Tuple[Hashable, Hashable], ...]

    def to_dict(self, op: Operator) -> Dict[str, Any]:
        return {
            'j': self.j,
            'c': op.to_json(self.c),
            'A': [op.to_json(x) for x in self.active_A],
            'B': [op.to_json(x) for x in self.active_B],
            'selected': [op.to_json(x) for x in self.selected],
            'assigned': [[op.to_json(a), op.to_json(b)] for a, b in self.assigned],
        }


@dataclass(frozen=True)
class GreedyTrace:
    cs: Tuple[Hashable, ...]
    steps: Tuple[GreedyStep, ...]

    def is_consistent(self) -> bool:
        """Replaying the set differences reproduces every recorded active set."""
        if not self.steps:
            return False
        active_A = list(self.steps[0].active_A)
        active_B = list(self.steps[0].active_B)
        for step, c in zip(self.steps, self.cs):
            if step.c != c or list(step.active_A) != active_A or list(step.active_B) != active_B:
                return False
            if [a for a, _ in step.assigned] != list(step.selected):
                return False
            taken = {b for _, b in step.assigned}
            active_A = [a for a in active_A if a not in set(step.selected)]
            active_B = [b for b in active_B if b not in taken]
        return len(self.steps) == len(self.cs) and not active_A and not active_B

    def to_dict(self, op: Operator) -> Dict[str, Any]:
        return {
            'cs': [op.to_json(c) for c in self.cs],
            'steps': [step.to_dict(op) for step in self.steps],
        }


def greedy_construct(pair: SetPair, op: Optional[Operator] = None,
                     order: OrderPolicy = ASCENDING) -> Tuple[Matching, GreedyTrace]:
    """
    Build the bijection f0 with a unique multiplicity function.

    Args:
        pair: the sets A and B (|A| = |B|)
        op: operator, defaults to the pair's own
        order: labelling of the sum values

    Returns:
        (f0, trace) with f0's pairs in assignment order

    Raises:
        CancellationError: the table breaks cancellation on the active sets
    """
    op = op or pair.op
    cs = order.arrange(sumset(pair.A, pair.B, op))

    active_A: List[Hashable] = list(pair.A)
    active_B: Dict[Hashable, None] = dict.fromkeys(pair.B)
    assignments: List[Tuple[Hashable, Hashable]] = []
    steps: List[GreedyStep] = []

    for j, c in enumerate(cs, start=1):
        selected: List[Hashable] = []
        assigned: List[Tuple[Hashable, Hashable]] = []
        claimed: Dict[Hashable, Hashable] = {}
        for a in active_A:
            b = op.unapply(c, a)
            if b is None or b not in active_B:
                continue
            if b in claimed:
                raise CancellationError(
                    f"{op.format_element(claimed[b])} and {op.format_element(a)} "
                    f"both reach {op.format_element(c)} through {op.format_element(b)}"
                )
            claimed[b] = a
            selected.append(a)
            assigned.append((a, b))

        steps.append(GreedyStep(j, c, tuple(active_A), tuple(active_B),
                                tuple(selected), tuple(assigned)))
        assignments.extend(assigned)
        retired = set(selected)
        active_A = [a for a in active_A if a not in retired]
        for _, b in assigned:
            del active_B[b]

    if active_A or active_B:
        raise RuntimeError(f"greedy left {len(active_A)} elements unassigned")

    logger.debug(f"🔧 greedy on {pair.describe()}: {len(cs)} sum values, order {order}")
    return Matching(assignments), GreedyTrace(tuple(cs), tuple(steps))


def construct_acyclic_matching(pair: SetPair, op: Optional[Operator] = None,
                               order: OrderPolicy = ASCENDING) -> Matching:
    """
    Acyclic matching for a pair with A ∩ (A ⊕ B) = ∅.

    Every bijection is then a matching, so the greedy bijection is an
    acyclic matching.
    """
    if not weak_condition(pair if op is None else SetPair(pair.A, pair.B, op)):
        raise WeakConditionError(
            f"A∩(A+B)≠∅ for {pair.describe()}; see degenerate_diagnosis"
        )
    matching, _ = greedy_construct(pair, op, order)
    return matching
