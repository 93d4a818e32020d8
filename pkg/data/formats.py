"""
Text and JSON Codecs

Text forms:
- set:      "{0,1,2,7}", "{(0,0),(1,0)}", "{x,y}"
- element:  "7", "(1,3)", or a table label

JSON forms:
- matching:     {"pairs": [[a, b], ...]}
- multiplicity: {"counts": {"<element literal>": count}}
- trace:        {"cs": [...], "steps": [{"j", "c", "A", "B", "selected", "assigned"}]}
- report:       {"scope", "verdict", "witness", "stats", "implementation_bug", "seed"?}

JSON elements are ints (rank 1), int lists (rank > 1) or label strings.
"""

import json
from pathlib import Path
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

from core.algebra import GroupAdd, Operator, ParseError, parse_group
from core.greedy import GreedyStep, GreedyTrace
from core.matching import Matching, MultiplicityFunction, SetPair
from core.oracle import SearchReport, Verdict, Witness, WitnessReason


def read_source(text: str) -> str:
    """Inline value, or the contents of a file when given as @path."""
    if text.startswith('@'):
        path = Path(text[1:])
        try:
            return path.read_text(encoding='utf-8').strip()
        except OSError as e:
            raise ParseError(f"cannot read {path}: {e}") from None
    return text


def parse_set(text: str, op: Operator) -> Tuple[Hashable, ...]:
    """
    Parse a set literal into canonically ordered elements.

    Braces may be omitted ("0,1,2,7") since shells brace-expand "{0,1}".
    """
    cleaned = text.strip()
    if cleaned.startswith('{') != cleaned.endswith('}'):
        raise ParseError(f"unbalanced braces in set literal {text!r}")
    body = cleaned[1:-1].strip() if cleaned.startswith('{') else cleaned
    if not body:
        return ()
    tokens = _split_top_level(body)
    if any(not token for token in tokens):
        raise ParseError(f"malformed set literal {text!r}")
    return op.sort(op.parse_element(token) for token in tokens)


def _split_top_level(body: str) -> List[str]:
    """Split on commas outside parentheses."""
    parts, current, depth = [], [], 0
    for ch in body:
        if ch == '(':
            depth += 1
        elif ch == ')':
            depth -= 1
            if depth < 0:
                raise ParseError(f"unbalanced parentheses in {body!r}")
        if ch == ',' and depth == 0:
            parts.append(''.join(current).strip())
            current = []
        else:
            current.append(ch)
    if depth:
        raise ParseError(f"unbalanced parentheses in {body!r}")
    parts.append(''.join(current).strip())
    return parts


def dump_json(data: Any) -> str:
    """UTF-8 friendly, newline-terminated JSON."""
    return json.dumps(data, ensure_ascii=False) + '\n'


# ═══════════════════════════════════════════════════════════════════
# MATCHINGS / MULTIPLICITY
# ═══════════════════════════════════════════════════════════════════

def matching_to_dict(f: Matching, op: Operator) -> Dict[str, Any]:
    return {'pairs': [[op.to_json(a), op.to_json(b)] for a, b in f.pairs]}


def matching_from_dict(data: Dict[str, Any], op: Operator) -> Matching:
    try:
        pairs = data['pairs']
        return Matching((op.from_json(a), op.from_json(b)) for a, b in pairs)
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed matching JSON: {e}") from None


def multiplicity_to_dict(m: MultiplicityFunction, op: Operator) -> Dict[str, Any]:
    return {'counts': {op.format_element(x): n for x, n in m.counts}}


def multiplicity_from_dict(data: Dict[str, Any], op: Operator) -> MultiplicityFunction:
    counts = data.get('counts') if isinstance(data, dict) else None
    if not isinstance(counts, dict):
        raise ParseError("multiplicity JSON needs a 'counts' object")
    values = []
    for literal, n in counts.items():
        if not isinstance(n, int) or n < 1:
            raise ParseError(f"count for {literal} must be a positive integer, got {n!r}")
        values.extend([op.parse_element(literal)] * n)
    return MultiplicityFunction.from_values(values, op)


# ═══════════════════════════════════════════════════════════════════
# TRACES
# ═══════════════════════════════════════════════════════════════════

def trace_to_dict(trace: GreedyTrace, op: Operator) -> Dict[str, Any]:
    return trace.to_dict(op)


def trace_from_dict(data: Dict[str, Any], op: Operator) -> GreedyTrace:
    def elements(values) -> Tuple[Hashable, ...]:
        return tuple(op.from_json(v) for v in values)

    try:
        steps = tuple(
            GreedyStep(
                j=int(step['j']),
                c=op.from_json(step['c']),
                active_A=elements(step['A']),
                active_B=elements(step['B']),
                selected=elements(step['selected']),
                assigned=tuple((op.from_json(a), op.from_json(b)) for a, b in step['assigned']),
            )
            for step in data['steps']
        )
        return GreedyTrace(elements(data['cs']), steps)
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed trace JSON: {e}") from None


# ═══════════════════════════════════════════════════════════════════
# REPORTS
# ═══════════════════════════════════════════════════════════════════

def report_to_dict(report: SearchReport) -> Dict[str, Any]:
    return report.to_dict()


def _resolve_by_name(name: str) -> Operator:
    return GroupAdd(parse_group(name))


def report_from_dict(data: Dict[str, Any],
                     resolve: Optional[Callable[[str], Operator]] = None) -> SearchReport:
    """
    Rebuild a SearchReport.

    Args:
        data: report JSON
        resolve: operator name -> Operator (group names parse by default;
            tables need an explicit resolver)
    """
    resolve = resolve or _resolve_by_name
    try:
        witness = None
        if data.get('witness'):
            w = data['witness']
            op = resolve(w['operator'])
            pair = SetPair(
                tuple(op.from_json(x) for x in w['A']),
                tuple(op.from_json(x) for x in w['B']),
                op,
            )
            witness = Witness(WitnessReason(w['reason']), pair, w['evidence'])
        return SearchReport(
            scope=data['scope'],
            verdict=Verdict(data['verdict']),
            witness=witness,
            stats=dict(data['stats']),
            seed=data.get('seed'),
            implementation_bug=bool(data.get('implementation_bug', False)),
        )
    except (KeyError, TypeError) as e:
        raise ParseError(f"malformed report JSON: {e}") from None
