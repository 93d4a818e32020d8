"""
Ambient Groups and Operators

Groups are finite-rank products Z/n1 x ... x Z/nk where a modulus of 0
stands for a free Z factor. Operators wrap either the induced group
addition or an explicit Cayley table:
- apply(a, b)   -> a ⊕ b
- unapply(c, a) -> the unique b with a ⊕ b = c (or None)
- key(x)        -> canonical sort key (lexicographic / carrier order)
"""

import re
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from typing import Any, Dict, Hashable, Iterable, List, Optional, Sequence, Tuple

import numpy as np


class ParseError(ValueError):
    """Malformed group, element, set or table text."""


class OperandError(ValueError):
    """Operand outside the operator's carrier."""


class CancellationError(ValueError):
    """A row of the operation maps two operands to the same value."""


_GROUP_FACTOR = re.compile(r'^Z(\d*)$')
_INTEGER = re.compile(r'^[+-]?\d+$')
_LABEL = re.compile(r'^[^\s,{}()\[\]]+$')


@dataclass(frozen=True, order=True)
class Element:
    """Element of a GroupSpec as a coordinate vector."""
    coords: Tuple[int, ...]

    def __str__(self) -> str:
        if len(self.coords) == 1:
            return str(self.coords[0])
        return '(' + ','.join(str(c) for c in self.coords) + ')'


@dataclass(frozen=True)
class GroupSpec:
    """
    Direct product of cyclic factors.

    moduli[i] >= 1 means Z/moduli[i]Z, moduli[i] == 0 means a free Z factor.
    """
    moduli: Tuple[int, ...]

    def __post_init__(self):
        moduli = tuple(int(n) for n in self.moduli)
        if not moduli:
            raise ValueError("group needs at least one factor")
        if any(n < 0 for n in moduli):
            raise ValueError(f"moduli must be nonnegative, got {moduli}")
        object.__setattr__(self, 'moduli', moduli)

    @property
    def rank(self) -> int:
        return len(self.moduli)

    @property
    def is_finite(self) -> bool:
        return all(n >= 1 for n in self.moduli)

    @property
    def order(self) -> Optional[int]:
        """Group order, None for groups with a free factor."""
        if not self.is_finite:
            return None
        return int(np.prod(self.moduli))

    def element(self, coords: Iterable[int]) -> Element:
        """Build the canonical element for a coordinate vector."""
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.rank:
            raise OperandError(
                f"element {coords} has {len(coords)} coordinates, group {self} has rank {self.rank}"
            )
        return Element(tuple(c % n if n else c for c, n in zip(coords, self.moduli)))

    @property
    def zero(self) -> Element:
        return Element((0,) * self.rank)

    def elements(self) -> List[Element]:
        """All elements in lexicographic order (finite groups only)."""
        if not self.is_finite:
            raise ValueError(f"cannot enumerate the infinite group {self}")
        grid = np.indices(self.moduli).reshape(self.rank, -1).T
        return [Element(tuple(int(c) for c in row)) for row in grid]

    def add(self, a: Element, b: Element) -> Element:
        self._check(a)
        self._check(b)
        return self.element(x + y for x, y in zip(a.coords, b.coords))

    def sub(self, c: Element, a: Element) -> Element:
        self._check(c)
        self._check(a)
        return self.element(x - y for x, y in zip(c.coords, a.coords))

    def double(self, a: Element) -> Element:
        return self.add(a, a)

    def _check(self, x: Any) -> None:
        if not isinstance(x, Element) or len(x.coords) != self.rank:
            raise OperandError(f"{x!r} is not an element of {self}")

    def __str__(self) -> str:
        return 'x'.join(f"Z{n}" if n else 'Z' for n in self.moduli)


def parse_group(text: str) -> GroupSpec:
    """
    Parse the group grammar: factors `Z<n>` joined by `x`, bare `Z` is free.

    Example:
        >>> parse_group("ZxZ3").moduli
        (0, 3)
    """
    cleaned = text.strip()
    if not cleaned:
        raise ParseError("empty group string")
    moduli = []
    for factor in re.split(r'[x×]', cleaned):
        match = _GROUP_FACTOR.match(factor.strip())
        if not match:
            raise ParseError(f"malformed group factor {factor!r} in {text!r}")
        digits = match.group(1)
        if digits and int(digits) == 0:
            raise ParseError(f"use bare 'Z' for a free factor, got {factor!r}")
        moduli.append(int(digits) if digits else 0)
    return GroupSpec(tuple(moduli))


# ═══════════════════════════════════════════════════════════════════
# OPERATORS
# ═══════════════════════════════════════════════════════════════════

class Operator(ABC):
    """Left-cancellative binary operation ⊕ with its row inverse ⊖."""

    @property
    @abstractmethod
    def name(self) -> str:
        pass

    @abstractmethod
    def apply(self, a: Hashable, b: Hashable) -> Hashable:
        """Return a ⊕ b."""

    @abstractmethod
    def unapply(self, c: Hashable, a: Hashable) -> Optional[Hashable]:
        """Return the b with a ⊕ b = c, or None when c is outside row a."""

    @abstractmethod
    def key(self, x: Hashable) -> Any:
        """Canonical sort key."""

    @abstractmethod
    def canonical(self, x: Hashable) -> Hashable:
        """Validate an operand and return its canonical form."""

    @abstractmethod
    def carrier(self) -> Optional[List[Hashable]]:
        """All operands in canonical order, None when infinite."""

    @abstractmethod
    def parse_element(self, text: str) -> Hashable:
        pass

    def format_element(self, x: Hashable) -> str:
        return str(x)

    @abstractmethod
    def to_json(self, x: Hashable) -> Any:
        pass

    @abstractmethod
    def from_json(self, value: Any) -> Hashable:
        pass

    def sort(self, items: Iterable[Hashable]) -> Tuple[Hashable, ...]:
        """Deduplicate and order canonically."""
        return tuple(sorted(set(items), key=self.key))

    @property
    def order(self) -> Optional[int]:
        items = self.carrier()
        return None if items is None else len(items)


@dataclass(frozen=True)
class GroupAdd(Operator):
    """Group addition, reduced modulo each finite modulus."""
    group: GroupSpec

    @property
    def name(self) -> str:
        return str(self.group)

    def apply(self, a: Element, b: Element) -> Element:
        return self.group.add(a, b)

    def unapply(self, c: Element, a: Element) -> Element:
        return self.group.sub(c, a)

    def key(self, x: Element) -> Element:
        return x

    def canonical(self, x: Element) -> Element:
        self.group._check(x)
        return self.group.element(x.coords)

    def of(self, *values: Any) -> List[Element]:
        """Elements from bare ints (rank 1) or coordinate tuples."""
        return [self.group.element(v if isinstance(v, (tuple, list)) else (v,)) for v in values]

    def carrier(self) -> Optional[List[Element]]:
        return self.group.elements() if self.group.is_finite else None

    @property
    def order(self) -> Optional[int]:
        return self.group.order

    def parse_element(self, text: str) -> Element:
        cleaned = text.strip()
        if cleaned.startswith('(') and cleaned.endswith(')'):
            parts = [p.strip() for p in cleaned[1:-1].split(',')]
        else:
            parts = [cleaned]
        if not all(_INTEGER.match(p) for p in parts):
            raise ParseError(f"malformed element {text!r}")
        if len(parts) != self.group.rank:
            raise ParseError(f"element {text!r} does not have rank {self.group.rank}")
        return self.group.element(int(p) for p in parts)

    def to_json(self, x: Element) -> Any:
        if self.group.rank == 1:
            return x.coords[0]
        return list(x.coords)

    def from_json(self, value: Any) -> Element:
        if isinstance(value, bool):
            raise ParseError(f"malformed JSON element {value!r}")
        if isinstance(value, int):
            return self.group.element([value])
        if isinstance(value, str):
            return self.parse_element(value)
        if isinstance(value, list) and all(isinstance(v, int) for v in value):
            return self.group.element(value)
        raise ParseError(f"malformed JSON element {value!r}")


@dataclass(frozen=True)
class CayleyTable(Operator):
    """
    Explicit operation table on a common finite carrier.

    Row index is the left operand, column index the right operand. Only
    row-injectivity is needed for the greedy construction; the full
    Latin-square check is `is_latin`.
    """
    labels: Tuple[str, ...]
    cells: Tuple[Tuple[str, ...], ...]
    _index: Dict[str, int] = field(init=False, repr=False, compare=False)
    _grid: np.ndarray = field(init=False, repr=False, compare=False)
    _rows: Dict[str, Dict[str, List[str]]] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        labels = tuple(str(x) for x in self.labels)
        cells = tuple(tuple(str(x) for x in row) for row in self.cells)
        if not labels:
            raise ParseError("Cayley table carrier is empty")
        if len(set(labels)) != len(labels):
            raise ParseError(f"Cayley table carrier has repeated labels: {labels}")
        bad = [x for x in labels if not _LABEL.match(x)]
        if bad:
            raise ParseError(f"labels may not contain spaces, commas or brackets: {bad}")
        n = len(labels)
        if len(cells) != n or any(len(row) != n for row in cells):
            raise ParseError(f"Cayley table must be {n}x{n} for carrier {labels}")
        index = {label: i for i, label in enumerate(labels)}
        missing = sorted({x for row in cells for x in row if x not in index})
        if missing:
            raise ParseError(f"table entries outside the carrier: {missing}")

        rows: Dict[str, Dict[str, List[str]]] = {}
        for a, row in zip(labels, cells):
            inverse: Dict[str, List[str]] = {}
            for b, c in zip(labels, row):
                inverse.setdefault(c, []).append(b)
            rows[a] = inverse

        object.__setattr__(self, 'labels', labels)
        object.__setattr__(self, 'cells', cells)
        object.__setattr__(self, '_index', index)
        object.__setattr__(self, '_grid', np.array([[index[c] for c in row] for row in cells], dtype=int))
        object.__setattr__(self, '_rows', rows)

    @classmethod
    def from_indices(cls, grid: np.ndarray, labels: Optional[Sequence[str]] = None) -> 'CayleyTable':
        """Build a table from an integer grid whose entries index the carrier."""
        n = grid.shape[0]
        labels = tuple(labels) if labels is not None else tuple(f"q{i}" for i in range(n))
        return cls(labels, tuple(tuple(labels[int(v)] for v in row) for row in grid))

    @property
    def name(self) -> str:
        return f"table[{len(self.labels)}]"

    def _check(self, x: Hashable) -> int:
        try:
            return self._index[x]
        except (KeyError, TypeError):
            raise OperandError(f"{x!r} is not in the table carrier") from None

    def apply(self, a: str, b: str) -> str:
        return self.cells[self._check(a)][self._check(b)]

    def unapply(self, c: str, a: str) -> Optional[str]:
        self._check(a)
        self._check(c)
        found = self._rows[a].get(c, [])
        if not found:
            return None
        if len(found) > 1:
            raise CancellationError(f"row {a} maps both {found[0]} and {found[1]} to {c}")
        return found[0]

    def key(self, x: str) -> int:
        return self._check(x)

    def canonical(self, x: str) -> str:
        self._check(x)
        return x

    def carrier(self) -> List[str]:
        return list(self.labels)

    def parse_element(self, text: str) -> str:
        label = text.strip()
        self._check(label)
        return label

    def to_json(self, x: str) -> str:
        return x

    def from_json(self, value: Any) -> str:
        return self.parse_element(str(value))

    def is_latin(self) -> bool:
        """Every row and every column is a permutation of the carrier."""
        n = len(self.labels)
        rows_ok = all(len(np.unique(self._grid[i, :])) == n for i in range(n))
        cols_ok = all(len(np.unique(self._grid[:, j])) == n for j in range(n))
        return rows_ok and cols_ok


def validate_left_cancellation(op: Operator) -> Optional[Tuple[Hashable, Hashable, Hashable]]:
    """
    Check that every row of the operation is injective.

    Returns:
        None when valid, otherwise a witness (a, b1, b2) with b1 != b2
        and a ⊕ b1 = a ⊕ b2.
    """
    if isinstance(op, GroupAdd):
        return None
    items = op.carrier()
    if items is None:
        return None
    for a in items:
        seen: Dict[Hashable, Hashable] = {}
        for b in items:
            c = op.apply(a, b)
            if c in seen:
                return (a, seen[c], b)
            seen[c] = b
    return None
