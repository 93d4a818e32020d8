"""Census, acyclicity and witness re-verification."""

from itertools import combinations
from math import factorial

import pytest
from hypothesis import given, settings

from core.greedy import OrderPolicy, greedy_construct
from core.matching import Matching, MatchingError, SetPair, weak_condition
from core.oracle import (
    SearchBoundError, SearchReport, Verdict, Witness, WitnessReason, collect_evidence,
    enumerate_bijections, enumerate_matchings, evidence_fails, is_acyclic, recheck_witness,
)
from strategies import cyclic, cyclic_pairs


class TestCensus:
    def test_weak_pair_counts_every_bijection(self, example_pair):
        census = enumerate_matchings(example_pair)
        assert census.total == 24
        assert sum(census.class_sizes()) == 24

    def test_greedy_results_are_singletons(self, example_pair):
        census = enumerate_matchings(example_pair)
        singles = census.singletons()
        for order in ("asc", "desc"):
            f, _ = greedy_construct(example_pair, order=OrderPolicy.parse(order))
            assert f in singles

    def test_classes_partition(self, example_pair):
        census = enumerate_matchings(example_pair)
        keys = [c.multiplicity for c in census.classes]
        assert len(keys) == len(set(keys))
        members = [f for c in census.classes for f in c.members]
        assert len(members) == len(set(members))

    def test_no_matchings(self, z4):
        census = enumerate_matchings(SetPair(z4.of(0, 2), z4.of(1, 2), z4))
        assert census.is_empty
        assert census.total == 0
        assert census.summary() == {
            'matchings': 0, 'classes': 0, 'singleton_classes': 0, 'largest_class': 0,
        }

    def test_bijection_census_ignores_the_matching_condition(self, z4):
        census = enumerate_bijections(SetPair(z4.of(0, 2), z4.of(1, 2), z4))
        assert census.bijections
        assert census.total == 2

    def test_singleton_pair(self, z13):
        census = enumerate_matchings(SetPair(z13.of(5), z13.of(3), z13))
        assert census.total == 1
        assert census.summary()['singleton_classes'] == 1

    def test_bound(self, example_pair):
        with pytest.raises(SearchBoundError):
            enumerate_matchings(example_pair, bound=3)


class TestAcyclic:
    def test_example_f0(self, example_pair):
        f0, _ = greedy_construct(example_pair)
        assert is_acyclic(f0, example_pair)

    def test_identity_on_1_3(self, z13):
        pair = SetPair(z13.of(1, 3), z13.of(1, 3), z13)
        identity = Matching((a, a) for a in pair.A)
        assert is_acyclic(identity, pair)

    def test_swap_shares_no_class_with_identity(self, z13):
        pair = SetPair(z13.of(1, 3), z13.of(1, 3), z13)
        swap = Matching(zip(z13.of(1, 3), z13.of(3, 1)))
        # {4:2} is attained only by the swap
        assert is_acyclic(swap, pair)

    def test_rejects_non_matchings(self, z4):
        pair = SetPair(z4.of(0, 2), z4.of(1, 2), z4)
        with pytest.raises(MatchingError):
            is_acyclic(Matching(zip(z4.of(0, 2), z4.of(2, 1))), pair)

    def test_two_element_pair(self, z13):
        pair = SetPair(z13.of(0, 1), z13.of(5, 6), z13)
        f = Matching(zip(z13.of(0, 1), z13.of(6, 5)))
        assert is_acyclic(f, pair)


def _no_matching_report(z4):
    pair = SetPair(z4.of(0, 2), z4.of(1, 2), z4)
    reason = WitnessReason.NO_MATCHING
    witness = Witness(reason, pair, collect_evidence(reason, pair))
    return SearchReport(scope={'kind': 'matching'}, verdict=Verdict.COUNTEREXAMPLE, witness=witness)


class TestWitnesses:
    def test_no_matching_evidence(self, z4):
        report = _no_matching_report(z4)
        assert report.witness.evidence == {'matchings': 0, 'maximum_matching': 1}
        assert evidence_fails(report.witness.reason, report.witness.evidence)
        assert recheck_witness(report)

    def test_tampered_evidence(self, z4):
        report = _no_matching_report(z4)
        report.witness.evidence['matchings'] = 3
        assert not recheck_witness(report)

    def test_holding_report(self):
        assert recheck_witness(SearchReport(scope={'kind': 'weak'}))

    def test_report_json(self, z4):
        data = _no_matching_report(z4).to_dict()
        assert data['verdict'] == 'counterexample'
        assert data['witness']['operator'] == 'Z4'
        assert data['witness']['A'] == [0, 2]
        assert data['witness']['B'] == [1, 2]
        assert 'seed' not in data

    def test_greedy_evidence(self, example_pair):
        evidence = collect_evidence(WitnessReason.GREEDY_NOT_UNIQUE, example_pair)
        assert evidence['class_size'] == 1
        assert evidence['candidate'] == [[0, 3], [7, 9], [1, 4], [2, 10]]
        assert not evidence_fails(WitnessReason.GREEDY_NOT_UNIQUE, evidence)

    def test_acyclic_evidence_on_cyclic_group(self):
        z3 = cyclic(3)
        pair = SetPair(z3.of(0), z3.of(1), z3)
        evidence = collect_evidence(WitnessReason.NO_ACYCLIC_MATCHING, pair)
        assert evidence == {'matchings': 1, 'class_sizes': [1]}
        assert not evidence_fails(WitnessReason.NO_ACYCLIC_MATCHING, evidence)


def test_weak_pairs_have_every_bijection_in_the_census():
    z7 = cyclic(7)
    checked = 0
    for k in range(1, 4):
        for A in combinations(z7.carrier(), k):
            for B in combinations(z7.carrier(), k):
                pair = SetPair(A, B, z7)
                if not weak_condition(pair):
                    continue
                assert enumerate_matchings(pair).total == factorial(k)
                checked += 1
    assert checked > 0


@pytest.mark.property_based
@given(cyclic_pairs(max_n=16, max_k=5, weak=True))
@settings(max_examples=100, deadline=None)
def test_weak_census_size_is_factorial(pair):
    assert enumerate_matchings(pair).total == factorial(len(pair.A))
