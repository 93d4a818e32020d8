"""
Pair-Space Sweeps

Exhaustive sweeps walk pairs (A, B) in combinatorial-rank order:
size k ascending, then A by combination rank, then B by combination rank.
The space is cut into one chunk per (k, A); chunks are pure and may run
in a process pool. Results are merged in chunk order, so the first
witness found is the minimum-rank witness no matter how many workers run.

Randomized sweeps draw pairs from a numpy Generator seeded explicitly.
"""

import logging
import os
import sys
from functools import partial
from itertools import combinations
from multiprocessing import Pool
from typing import Dict, Hashable, Iterator, List, Optional, Sequence, Tuple

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import Config
from core.algebra import GroupAdd, Operator
from core.matching import SetPair

logger = logging.getLogger(__name__)

Chunk = Tuple[int, Tuple[Hashable, ...]]


def allowed_partners(A: Sequence[Hashable], op: Operator,
                     candidates: Sequence[Hashable]) -> List[Hashable]:
    """Candidates b with (A ⊕ b) ∩ A = ∅; B ⊆ this set iff the weak condition holds."""
    members = set(A)
    return [b for b in candidates if all(op.apply(a, b) not in members for a in A)]


def partner_candidates(op: Operator, exclude_zero: bool) -> List[Hashable]:
    items = op.carrier()
    if exclude_zero and isinstance(op, GroupAdd):
        zero = op.group.zero
        items = [x for x in items if x != zero]
    return items


def chunks(op: Operator, max_size: int) -> Iterator[Chunk]:
    items = op.carrier()
    for k in range(1, max_size + 1):
        for A in combinations(items, k):
            yield k, A


def _run_chunk(checker, op: Operator, exclude_zero: bool, weak_only: bool,
               chunk: Chunk):
    """Evaluate every B for one (k, A); stop at the first witness."""
    k, A = chunk
    stats = {'pairs_examined': 0, 'pairs_skipped': 0, 'matchings_enumerated': 0}
    candidates = partner_candidates(op, exclude_zero)
    if weak_only:
        candidates = allowed_partners(A, op, candidates)
    for B in combinations(candidates, k):
        pair = SetPair(A, B, op)
        if not checker.accepts(pair):
            stats['pairs_skipped'] += 1
            continue
        stats['pairs_examined'] += 1
        witness, enumerated = checker.check_pair(pair)
        stats['matchings_enumerated'] += enumerated
        if witness is not None:
            return witness, stats
    return None, stats


def _merge(total: Dict[str, int], stats: Dict[str, int]) -> None:
    for name, value in stats.items():
        total[name] = total.get(name, 0) + value


def run_exhaustive(checker, op: Operator, max_size: int, exclude_zero: bool,
                   weak_only: bool, stats: Dict[str, int],
                   workers: Optional[int] = None):
    """
    Sweep every pair up to max_size and return the minimum-rank witness.

    Args:
        checker: object with accepts(pair) and check_pair(pair)
        op: finite operator
        max_size: largest |A| = |B|
        exclude_zero: drop the group identity from B candidates
        weak_only: restrict B to allowed_partners(A)
        stats: counters updated in place
        workers: process count (defaults to Config.SWEEP_WORKERS)
    """
    workers = Config.SWEEP_WORKERS if workers is None else workers
    task = partial(_run_chunk, checker, op, exclude_zero, weak_only)

    if workers <= 1:
        for chunk in chunks(op, max_size):
            witness, chunk_stats = task(chunk)
            _merge(stats, chunk_stats)
            if witness is not None:
                return witness
        return None

    logger.info(f"⚙️ Sweeping {op.name} with {workers} workers")
    with Pool(processes=workers) as pool:
        for witness, chunk_stats in pool.imap(task, chunks(op, max_size), chunksize=8):
            _merge(stats, chunk_stats)
            if witness is not None:
                pool.terminate()
                return witness
    return None


# ═══════════════════════════════════════════════════════════════════
# RANDOM SAMPLING
# ═══════════════════════════════════════════════════════════════════

def _draw_elements(op: Operator, k: int, rng: np.random.Generator,
                   pool: Optional[List[Hashable]] = None) -> Optional[List[Hashable]]:
    if pool is not None:
        if len(pool) < k:
            return None
        return [pool[i] for i in rng.choice(len(pool), size=k, replace=False)]

    group = op.group
    radius = Config.FREE_SAMPLE_RADIUS
    drawn: Dict[Hashable, None] = {}
    for _ in range(Config.SAMPLE_ATTEMPTS):
        coords = [
            int(rng.integers(-radius, radius + 1)) if n == 0 else int(rng.integers(0, n))
            for n in group.moduli
        ]
        drawn[group.element(coords)] = None
        if len(drawn) == k:
            return list(drawn)
    return None


def sample_pair(op: Operator, k: int, rng: np.random.Generator,
                weak: bool = False, exclude_zero: bool = False) -> Optional[SetPair]:
    """
    Draw a random pair of size k.

    Finite carriers sample without replacement; free Z factors sample
    from the box [-FREE_SAMPLE_RADIUS, FREE_SAMPLE_RADIUS]. Returns None
    when no pair satisfying the filters is found.
    """
    items = op.carrier()
    for _ in range(Config.SAMPLE_ATTEMPTS):
        A = _draw_elements(op, k, rng, items)
        if A is None:
            return None
        if items is not None:
            candidates = partner_candidates(op, exclude_zero)
            if weak:
                candidates = allowed_partners(A, op, candidates)
            B = _draw_elements(op, k, rng, candidates)
            if B is None:
                continue
            return SetPair(A, B, op)

        B = _draw_elements(op, k, rng)
        if B is None:
            continue
        if exclude_zero and op.group.zero in B:
            continue
        if weak and allowed_partners(A, op, B) != B:
            continue
        return SetPair(A, B, op)
    return None


def run_sampled(checker, op: Operator, max_size: int, samples: int, seed: int,
                exclude_zero: bool, weak_only: bool, stats: Dict[str, int]):
    """Check `samples` seeded random pairs with 1 <= |A| <= max_size."""
    rng = np.random.default_rng(seed)
    for _ in range(samples):
        k = int(rng.integers(1, max_size + 1))
        pair = sample_pair(op, k, rng, weak=weak_only, exclude_zero=exclude_zero)
        if pair is None:
            stats['pairs_skipped'] += 1
            continue
        if not checker.accepts(pair):
            stats['pairs_skipped'] += 1
            continue
        stats['pairs_examined'] += 1
        witness, enumerated = checker.check_pair(pair)
        stats['matchings_enumerated'] += enumerated
        if witness is not None:
            return witness
    return None
