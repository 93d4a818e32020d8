"""
Cayley Table Files and Random Latin Squares

Table file format (JSON, row index = left operand):
    {"carrier": ["x", "y"], "table": [["x", "y"], ["y", "x"]]}
"""

import json
import os
import sys
from pathlib import Path
from typing import Any, Dict, Optional, Union

import numpy as np

sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from config import Config
from core.algebra import CayleyTable, ParseError, validate_left_cancellation


def table_from_dict(data: Dict[str, Any], strict: Optional[bool] = None) -> CayleyTable:
    """
    Build a table from its JSON form.

    Args:
        data: {"carrier": [...], "table": [[...], ...]}
        strict: also require a Latin square (defaults to Config.STRICT_LATIN)
    """
    strict = Config.STRICT_LATIN if strict is None else strict
    if not isinstance(data, dict) or 'carrier' not in data or 'table' not in data:
        raise ParseError("table file needs 'carrier' and 'table' keys")
    carrier, rows = data['carrier'], data['table']
    if not isinstance(carrier, list) or not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
        raise ParseError("'carrier' must be a list and 'table' a list of lists")
    table = CayleyTable(tuple(carrier), tuple(tuple(row) for row in rows))
    if strict and not table.is_latin():
        raise ParseError("table is not a Latin square")
    return table


def table_to_dict(table: CayleyTable) -> Dict[str, Any]:
    return {'carrier': list(table.labels), 'table': [list(row) for row in table.cells]}


def load_table(path: Union[str, Path], strict: Optional[bool] = None) -> CayleyTable:
    try:
        data = json.loads(Path(path).read_text(encoding='utf-8'))
    except json.JSONDecodeError as e:
        raise ParseError(f"table file {path} is not valid JSON: {e}") from None
    return table_from_dict(data, strict)


def save_table(table: CayleyTable, path: Union[str, Path]) -> None:
    Path(path).write_text(json.dumps(table_to_dict(table)) + '\n', encoding='utf-8')


def random_latin_square(order: int, rng: np.random.Generator) -> CayleyTable:
    """
    Random Latin square of the given order as a table on q0..q{n-1}.

    Starts from the cyclic square (i + j) mod n and permutes rows,
    columns and symbols.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    base = np.add.outer(np.arange(order), np.arange(order)) % order
    square = base[rng.permutation(order), :][:, rng.permutation(order)]
    symbols = rng.permutation(order)
    return CayleyTable.from_indices(symbols[square])


def check_table(table: CayleyTable) -> Dict[str, Any]:
    """Left cancellation status (with witness) and the Latin-square flag."""
    witness = validate_left_cancellation(table)
    return {
        'order': len(table.labels),
        'left_cancellative': witness is None,
        'witness': None if witness is None else list(witness),
        'latin': table.is_latin(),
    }
