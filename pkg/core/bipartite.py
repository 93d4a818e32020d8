"""
Bipartite Matching Existence

The conflict graph of a pair joins x_a to y_b iff a ⊕ b ∉ A. Perfect
matchings of this graph are exactly the matchings A -> B, so existence
is a maximum-matching question (Hopcroft-Karp). When no perfect
matching exists a Hall violator S ⊆ A with |N(S)| < |S| is returned.
"""

from collections import deque
from dataclasses import dataclass
from typing import Deque, Dict, Generic, Hashable, List, Optional, Tuple, TypeVar

from core.algebra import Operator
from core.matching import Matching, SetPair

THLeft = TypeVar('THLeft', bound=Hashable)
THRight = TypeVar('THRight', bound=Hashable)

FAKE_INFINITY = -1


class HopcroftKarp(Generic[THLeft, THRight]):
    """
    Hopcroft-Karp on a bipartite graph given as left vertex -> right neighbours.

    Lists (not sets) keep results identical across runs.
    """

    def __init__(self, graph_left: Dict[THLeft, List[THRight]]):
        self._graph_left = graph_left
        self._left: List[THLeft] = list(graph_left.keys())
        self._pair_left: Dict[THLeft, THRight] = {}
        self._pair_right: Dict[THRight, THLeft] = {}
        self._dist_left: Dict[THLeft, int] = {}
        self._reference_distance = FAKE_INFINITY

    def maximum_matching(self) -> Dict[THLeft, THRight]:
        self._pair_left.clear()
        self._pair_right.clear()
        while self._bfs():
            for left in self._left:
                if left not in self._pair_left:
                    self._dfs(left)
        return dict(self._pair_left)

    def _bfs(self) -> bool:
        queue: Deque[THLeft] = deque()
        for left in self._left:
            if left not in self._pair_left:
                queue.append(left)
                self._dist_left[left] = 0
            else:
                self._dist_left[left] = FAKE_INFINITY
        self._reference_distance = FAKE_INFINITY
        while queue:
            left = queue.popleft()
            if self._reference_distance != FAKE_INFINITY and self._dist_left[left] >= self._reference_distance:
                continue
            for right in self._graph_left[left]:
                if right not in self._pair_right:
                    if self._reference_distance == FAKE_INFINITY:
                        self._reference_distance = self._dist_left[left] + 1
                else:
                    other = self._pair_right[right]
                    if self._dist_left[other] == FAKE_INFINITY:
                        self._dist_left[other] = self._dist_left[left] + 1
                        queue.append(other)
        return self._reference_distance != FAKE_INFINITY

    def _dfs(self, left: THLeft) -> bool:
        for right in self._graph_left[left]:
            if right not in self._pair_right:
                if self._reference_distance == self._dist_left[left] + 1:
                    self._link(left, right)
                    return True
            else:
                other = self._pair_right[right]
                if self._dist_left[other] == self._dist_left[left] + 1 and self._dfs(other):
                    self._link(left, right)
                    return True
        self._dist_left[left] = FAKE_INFINITY
        return False

    def _link(self, left: THLeft, right: THRight) -> None:
        self._pair_left[left] = right
        self._pair_right[right] = left


def hall_violator(graph_left: Dict[THLeft, List[THRight]],
                  matched: Dict[THLeft, THRight]) -> Optional[Tuple[List[THLeft], List[THRight]]]:
    """
    Alternating-path closure from an unmatched left vertex.

    With a maximum matching, the left vertices reachable from an exposed
    left vertex form S with |N(S)| = |S| - 1.
    """
    exposed = [v for v in graph_left if v not in matched]
    if not exposed:
        return None
    matched_right = {r: l for l, r in matched.items()}
    start = exposed[0]
    left_seen = {start: None}
    right_seen: Dict[THRight, None] = {}
    queue: Deque[THLeft] = deque([start])
    while queue:
        left = queue.popleft()
        for right in graph_left[left]:
            if right in right_seen:
                continue
            right_seen[right] = None
            partner = matched_right.get(right)
            if partner is not None and partner not in left_seen:
                left_seen[partner] = None
                queue.append(partner)
    return list(left_seen), list(right_seen)


@dataclass
class ExistenceResult:
    """Answer of exists_matching with its certificate."""
    exists: bool
    matching: Optional[Matching] = None
    violator: Optional[Tuple[Tuple[Hashable, ...], Tuple[Hashable, ...]]] = None
    maximum_size: int = 0


def conflict_graph(pair: SetPair, op: Operator) -> Dict[Hashable, List[Hashable]]:
    """x_a -- y_b iff a ⊕ b ∉ A."""
    members = set(pair.A)
    return {a: [b for b in pair.B if op.apply(a, b) not in members] for a in pair.A}


def exists_matching(pair: SetPair, op: Optional[Operator] = None) -> ExistenceResult:
    """
    Decide whether A is matched to B.

    Returns:
        ExistenceResult carrying a matching certificate or a Hall violator
        (S ⊆ A, N(S) ⊆ B) with |N(S)| < |S|.
    """
    op = op or pair.op
    graph = conflict_graph(pair, op)
    matched = HopcroftKarp(graph).maximum_matching()
    if len(matched) == pair.size:
        return ExistenceResult(True, Matching.from_mapping(matched, op), maximum_size=len(matched))
    left, right = hall_violator(graph, matched)
    return ExistenceResult(
        False,
        violator=(op.sort(left), op.sort(right)),
        maximum_size=len(matched),
    )
