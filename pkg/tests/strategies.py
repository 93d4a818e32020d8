"""Hypothesis strategies shared by the property tests."""

import os
import sys

import numpy as np
from hypothesis import strategies as st

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from core.algebra import GroupAdd, GroupSpec
from core.matching import SetPair
from data.tables import random_latin_square


def cyclic(n: int) -> GroupAdd:
    return GroupAdd(GroupSpec((n,)))


@st.composite
def cyclic_pairs(draw, min_n=2, max_n=12, max_k=4, weak=False):
    """Equal-size pairs over Z/n; weak=True keeps only A ∩ (A+B) = ∅."""
    n = draw(st.integers(min_n, max_n))
    op = cyclic(n)
    k = draw(st.integers(1, min(max_k, n)))
    A = draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True))
    if weak:
        members = set(A)
        partners = [b for b in range(n) if all((a + b) % n not in members for a in A)]
        k = min(k, len(partners))
        if k == 0:
            A, partners, k = [0], list(range(1, n)), 1
        A = A[:k]
        members = set(A)
        partners = [b for b in range(n) if all((a + b) % n not in members for a in A)]
        B = draw(st.lists(st.sampled_from(partners), min_size=k, max_size=k, unique=True))
    else:
        B = draw(st.lists(st.integers(0, n - 1), min_size=k, max_size=k, unique=True))
    return SetPair(op.of(*A), op.of(*B), op)


@st.composite
def latin_pairs(draw, min_order=5, max_order=8, max_k=4):
    """Pairs over a seeded random Latin square used as a Cayley table."""
    order = draw(st.integers(min_order, max_order))
    seed = draw(st.integers(0, 2 ** 32 - 1))
    table = random_latin_square(order, np.random.default_rng(seed))
    labels = table.carrier()
    k = draw(st.integers(1, max_k))
    A = draw(st.lists(st.sampled_from(labels), min_size=k, max_size=k, unique=True))
    B = draw(st.lists(st.sampled_from(labels), min_size=k, max_size=k, unique=True))
    return SetPair(tuple(A), tuple(B), table)
