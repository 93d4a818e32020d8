"""
Base class for theorem sweeps.

A search owns the pair space it sweeps and a per-pair check. The sweep
engine (core.sweep) drives accepts() / check_pair() and the search wraps
the outcome into a SearchReport.
"""

import logging
import os
import sys
from abc import ABC, abstractmethod
from typing import Optional, Tuple, Union

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__)))))

from config import Config
from core.algebra import GroupAdd, GroupSpec, Operator
from core.bipartite import exists_matching
from core.greedy import OrderPolicy
from core.matching import SetPair
from core.oracle import (
    MatchingCensus, SearchBoundError, SearchReport, Verdict, Witness, WitnessReason,
)
from core.sweep import run_exhaustive, run_sampled

logger = logging.getLogger(__name__)


def as_operator(target: Union[GroupSpec, Operator]) -> Operator:
    if isinstance(target, GroupSpec):
        return GroupAdd(target)
    return target


def require_exhaustive(op: Operator, max_size: int, census: bool = True) -> None:
    """Raise SearchBoundError unless an exhaustive sweep of op is feasible."""
    if op.order is None:
        raise SearchBoundError(f"{op.name} is infinite; exhaustive sweeps need a finite group")
    if op.order > Config.MAX_SWEEP_ORDER:
        raise SearchBoundError(f"{op.name} has order {op.order} > MAX_SWEEP_ORDER={Config.MAX_SWEEP_ORDER}")
    if max_size < 1:
        raise SearchBoundError(f"max_size must be at least 1, got {max_size}")
    if census and max_size > Config.MAX_CENSUS_SIZE:
        raise SearchBoundError(f"max_size {max_size} > MAX_CENSUS_SIZE={Config.MAX_CENSUS_SIZE}")


def exhaustive_feasible(op: Operator) -> bool:
    return op.order is not None and op.order <= Config.MAX_SWEEP_ORDER


class BaseSearch(ABC):
    """Base class for all theorem sweeps."""

    # a counterexample to a theorem-backed search means the code is wrong
    theorem_backed = False
    # process pool size for exhaustive sweeps; None defers to Config.SWEEP_WORKERS
    workers: Optional[int] = None

    def __init__(self, kind: str, description: str, cross_check: bool = False):
        self.kind = kind
        self.description = description
        self.cross_check = cross_check

    def accepts(self, pair: SetPair) -> bool:
        """Whether the pair belongs to the swept space."""
        return True

    @abstractmethod
    def check_pair(self, pair: SetPair) -> Tuple[Optional[Witness], int]:
        """
        Check one pair.

        Returns:
            (witness or None, number of matchings enumerated)
        """
        pass

    @abstractmethod
    def run(self) -> SearchReport:
        pass

    def disagreement(self, pair: SetPair, census: MatchingCensus) -> Optional[Witness]:
        """Compare the augmenting-path answer against census nonemptiness."""
        if not self.cross_check:
            return None
        exists = exists_matching(pair).exists
        if exists == (not census.is_empty):
            return None
        return Witness(
            WitnessReason.ORACLE_DISAGREEMENT, pair,
            {'exists_matching': exists, 'census_matchings': census.total},
        )

    def finish(self, report: SearchReport, witness: Optional[Witness]) -> SearchReport:
        if witness is None:
            logger.info(f"✅ {self.kind}: property holds ({report.stats['pairs_examined']} pairs)")
            return report
        report.verdict = Verdict.COUNTEREXAMPLE
        report.witness = witness
        report.implementation_bug = (
            self.theorem_backed or witness.reason is WitnessReason.ORACLE_DISAGREEMENT
        )
        if report.implementation_bug:
            logger.error(f"❌ {self.kind}: {witness.reason.value} on {witness.pair.describe()} contradicts a proven result")
        else:
            logger.info(f"🎯 {self.kind}: counterexample {witness.pair.describe()} ({witness.reason.value})")
        return report


class MultiOperatorSearch(BaseSearch):
    """
    Sweep several operators in turn, exhaustively when feasible and by
    seeded sampling otherwise ('auto'), or as forced by `mode`.
    """

    theorem_backed = True
    exclude_zero = False
    weak_only = False

    def __init__(self, kind: str, description: str, operators, max_size: int,
                 samples: Optional[int] = None, seed: Optional[int] = None,
                 order=None, mode: str = 'auto'):
        super().__init__(kind, description)
        self.operators = [as_operator(target) for target in operators]
        self.max_size = max_size
        self.samples = Config.DEFAULT_SAMPLES if samples is None else samples
        self.seed = Config.DEFAULT_SEED if seed is None else seed
        self.order = order or OrderPolicy.parse(Config.DEFAULT_ORDER)
        if mode not in ('auto', 'exhaustive', 'sampled'):
            raise ValueError(f"mode must be auto, exhaustive or sampled, got {mode!r}")
        self.mode = mode

    def mode_for(self, op: Operator) -> str:
        if self.mode != 'auto':
            return self.mode
        return 'exhaustive' if exhaustive_feasible(op) else 'sampled'

    def run(self) -> SearchReport:
        if self.max_size > Config.MAX_CENSUS_SIZE:
            raise SearchBoundError(f"max_size {self.max_size} > MAX_CENSUS_SIZE={Config.MAX_CENSUS_SIZE}")
        modes = {op.name: self.mode_for(op) for op in self.operators}
        report = SearchReport(scope={
            'kind': self.kind,
            'groups': [op.name for op in self.operators],
            'max_size': self.max_size,
            'order': str(self.order),
            'modes': modes,
        })
        if 'sampled' in modes.values():
            report.scope['samples'] = self.samples
            report.seed = self.seed

        for op in self.operators:
            if modes[op.name] == 'exhaustive':
                require_exhaustive(op, self.max_size)
                witness = run_exhaustive(self, op, self.max_size, self.exclude_zero,
                                         self.weak_only, report.stats, workers=self.workers)
            else:
                witness = run_sampled(self, op, self.max_size, self.samples, self.seed,
                                      self.exclude_zero, self.weak_only, report.stats)
            if witness is not None:
                return self.finish(report, witness)
        return self.finish(report, None)
