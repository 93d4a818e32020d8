"""
Theorem sweeps.

Includes:
- MatchingPropertySearch: pairs with 0 ∉ B admit a matching
- AcyclicPropertySearch: pairs with 0 ∉ B admit an acyclic matching
- WeakAcyclicSearch: weak-condition pairs are acyclically matched by greedy
- LemmaUniquenessSearch: greedy bijection has a unique multiplicity function
- IdentityMapSearch: identity on A with A∩2A=∅ is acyclic in Z/p
- SidonSearch: weak pairs with Sidon B are acyclically matched
"""

from .base import BaseSearch, MultiOperatorSearch
from .matching_property import MatchingPropertySearch, verify_matching_property
from .acyclic_property import AcyclicPropertySearch, verify_acyclic_property
from .weak_acyclic import WeakAcyclicSearch, verify_weak_acyclic_everywhere
from .lemma_uniqueness import LemmaUniquenessSearch, verify_lemma_uniqueness
from .identity_map import IdentityMapSearch, verify_theorem_identity_map
from .sidon_sets import SidonSearch, verify_theorem_sidon

SEARCH_KINDS = ('matching', 'acyclic', 'weak', 'identity', 'sidon', 'lemma')

__all__ = [
    'BaseSearch',
    'MultiOperatorSearch',
    'MatchingPropertySearch',
    'AcyclicPropertySearch',
    'WeakAcyclicSearch',
    'LemmaUniquenessSearch',
    'IdentityMapSearch',
    'SidonSearch',
    'SEARCH_KINDS',
    'verify_matching_property',
    'verify_acyclic_property',
    'verify_weak_acyclic_everywhere',
    'verify_lemma_uniqueness',
    'verify_theorem_identity_map',
    'verify_theorem_sidon',
]
