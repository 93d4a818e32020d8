"""
Acyclic Matching Toolkit

Command-line front end: greedy construction, matching verification,
census enumeration, degenerate-pair diagnosis, theorem sweeps, Sidon
checks and Cayley table validation.

Exit codes: 0 success, 1 error, 2 precondition/verdict failure,
3 counterexample found by a search.
"""

import argparse
import json
import logging
import os
import sys
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

# Ensure we can import our modules
sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from config import Config
from core.algebra import CayleyTable, GroupAdd, Operator, ParseError, parse_group
from core.greedy import OrderPolicy, greedy_construct
from core.matching import (
    DiagnosisKind, SetPair, degenerate_diagnosis, format_set,
    is_matching, is_sidon, multiplicity, weak_condition,
)
from core.oracle import enumerate_bijections, enumerate_matchings, is_acyclic
from core.searches import (
    SEARCH_KINDS, AcyclicPropertySearch, IdentityMapSearch, LemmaUniquenessSearch,
    MatchingPropertySearch, SidonSearch, WeakAcyclicSearch,
)
from data.formats import (
    dump_json, matching_from_dict, matching_to_dict, multiplicity_to_dict,
    parse_set, read_source, report_to_dict, trace_to_dict,
)
from data.tables import check_table, load_table

logger = logging.getLogger('app')

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_FAILED = 2
EXIT_COUNTEREXAMPLE = 3

SUBCOMMANDS = ('construct', 'verify', 'enumerate', 'diagnose', 'search', 'sidon', 'table-check')


class _Parser(argparse.ArgumentParser):
    """Argument errors exit with status 1 like every other input error."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


# ═══════════════════════════════════════════════════════════════════════════
# INVOCATION
# ═══════════════════════════════════════════════════════════════════════════

@dataclass
class Invocation:
    """Parsed command: one subcommand, one operator source, parsed sets."""
    subcommand: str
    operators: List[Operator]
    A: Optional[Tuple] = None
    B: Optional[Tuple] = None
    as_json: bool = False

    @property
    def op(self) -> Operator:
        return self.operators[0]

    @property
    def pair(self) -> SetPair:
        if self.A is None or self.B is None:
            raise ParseError(f"{self.subcommand} needs both -A and -B")
        return SetPair(self.A, self.B, self.op)

    @classmethod
    def from_args(cls, args: argparse.Namespace) -> 'Invocation':
        if getattr(args, 'table', None):
            # table-check reports on Latin structure itself instead of refusing the file
            strict = False if args.command == 'table-check' else None
            operators: List[Operator] = [load_table(args.table, strict=strict)]
        elif getattr(args, 'group', None):
            source = read_source(args.group)
            names = source.split(',') if args.command == 'search' else [source]
            operators = [GroupAdd(parse_group(name)) for name in names]
        else:
            raise ParseError("give a group with -g or a Cayley table with --table")
        op = operators[0]
        A = parse_set(read_source(args.A), op) if getattr(args, 'A', None) else None
        B = parse_set(read_source(args.B), op) if getattr(args, 'B', None) else None
        return cls(args.command, operators, A, B, getattr(args, 'json', False))


def emit(text: str) -> None:
    sys.stdout.write(text if text.endswith('\n') else text + '\n')


# ═══════════════════════════════════════════════════════════════════════════
# COMMANDS
# ═══════════════════════════════════════════════════════════════════════════

def cmd_construct(inv: Invocation, args: argparse.Namespace) -> int:
    """Greedy bijection with its full trace; exit 2 when A∩(A+B)≠∅."""
    pair, op = inv.pair, inv.op
    order = OrderPolicy.parse(args.order)
    f0, trace = greedy_construct(pair, order=order)
    weak = weak_condition(pair)
    diagnosis = None
    if not weak and isinstance(op, GroupAdd) and op.group.is_finite:
        diagnosis = degenerate_diagnosis(pair)
    status = 'acyclic matching' if weak else 'bijection (not necessarily a matching)'

    if inv.as_json:
        emit(dump_json({
            'operator': op.name,
            'A': [op.to_json(x) for x in pair.A],
            'B': [op.to_json(x) for x in pair.B],
            'order': str(order),
            'weak_condition': weak,
            'status': status,
            'matching': matching_to_dict(f0, op),
            'multiplicity': multiplicity_to_dict(multiplicity(f0, op), op),
            'trace': trace_to_dict(trace, op),
            'diagnosis': diagnosis.to_dict(op) if diagnosis else None,
        }))
    else:
        lines = [
            f"🎯 Greedy construction on {op.name} (order {order})",
            f"A  = {format_set(pair.A, op)}",
            f"B  = {format_set(pair.B, op)}",
            f"C' = {format_set(trace.cs, op)}",
        ]
        for step in trace.steps:
            assigned = ', '.join(f"{op.format_element(a)}->{op.format_element(b)}" for a, b in step.assigned)
            lines.append(
                f"step {step.j}: c={op.format_element(step.c)}  A_j={format_set(step.active_A, op)}  "
                f"B_j={format_set(step.active_B, op)}  A'_j={format_set(step.selected, op)}  "
                + (f"assign {assigned}" if assigned else "no assignments")
            )
        lines.append(f"f0 = {f0.render(op)}")
        lines.append(f"m  = {multiplicity(f0, op).render(op)}")
        if weak:
            lines.append("✅ acyclic matching (A∩(A+B)=∅)")
        else:
            lines.append("⚠️ A∩(A+B)≠∅: f0 is a bijection (not necessarily a matching)")
            if diagnosis:
                lines.append(f"   diagnosis: {diagnosis.kind.value} ({diagnosis.detail})")
        emit('\n'.join(lines))
    return EXIT_OK if weak else EXIT_FAILED


def _load_matching(text: str, op: Operator):
    raw = text if text.lstrip().startswith('{') else read_source('@' + text.lstrip('@'))
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as e:
        raise ParseError(f"matching is not valid JSON: {e}") from None
    return matching_from_dict(data, op)


def cmd_verify(inv: Invocation, args: argparse.Namespace) -> int:
    """Matching validity, multiplicity and acyclicity; exit 0 iff acyclic matching."""
    pair, op = inv.pair, inv.op
    f = _load_matching(args.matching, op)
    f.check_bijection(pair)
    valid = is_matching(f, pair)
    m = multiplicity(f, op)
    acyclic = None
    census = None
    if valid and pair.size <= Config.MAX_CENSUS_SIZE:
        acyclic = is_acyclic(f, pair)
        census = enumerate_matchings(pair).summary()

    if inv.as_json:
        emit(dump_json({
            'matching': matching_to_dict(f, op),
            'valid_matching': valid,
            'multiplicity': multiplicity_to_dict(m, op),
            'acyclic': acyclic,
            'census': census,
        }))
    else:
        emit('\n'.join([
            f"f = {f.render(op)}",
            f"{'✅' if valid else '❌'} matching: {'valid' if valid else 'invalid'}",
            f"m = {m.render(op)}",
            "acyclic: " + ('n/a' if acyclic is None else ('✅ yes' if acyclic else '❌ no')),
        ]))
    return EXIT_OK if acyclic else EXIT_FAILED


def cmd_enumerate(inv: Invocation, args: argparse.Namespace) -> int:
    """Census of matchings (or bijections) grouped by multiplicity function."""
    pair, op = inv.pair, inv.op
    census = enumerate_bijections(pair) if args.bijections else enumerate_matchings(pair)
    summary = census.summary()

    if inv.as_json:
        emit(dump_json({
            'bijections': census.bijections,
            'summary': summary,
            'classes': [
                {
                    'multiplicity': multiplicity_to_dict(c.multiplicity, op),
                    'members': [matching_to_dict(f, op) for f in c.members],
                }
                for c in census.classes
            ],
        }))
    else:
        noun = 'bijections' if census.bijections else 'matchings'
        lines = [
            f"🔎 {summary['matchings']} {noun}, {summary['classes']} classes, "
            f"{summary['singleton_classes']} singleton (acyclic)"
        ]
        for c in census.classes:
            marker = '★' if c.size == 1 else ' '
            members = ' | '.join(f.render(op) for f in c.members)
            lines.append(f"{marker} {c.multiplicity.render(op)} x{c.size}: {members}")
        emit('\n'.join(lines))
    return EXIT_OK


def cmd_diagnose(inv: Invocation, args: argparse.Namespace) -> int:
    pair, op = inv.pair, inv.op
    diagnosis = degenerate_diagnosis(pair)
    if inv.as_json:
        emit(dump_json(diagnosis.to_dict(op)))
    else:
        emit(f"{diagnosis.kind.value}: {diagnosis.detail}")
    return EXIT_ERROR if diagnosis.kind is DiagnosisKind.ANOMALY else EXIT_OK


def _build_search(inv: Invocation, args: argparse.Namespace):
    kind, ops = args.kind, inv.operators
    order = OrderPolicy.parse(args.order)
    if kind in ('weak', 'lemma'):
        search_cls = WeakAcyclicSearch if kind == 'weak' else LemmaUniquenessSearch
        return search_cls(ops, args.max_size, args.samples, args.seed, order, args.mode)
    if len(ops) != 1:
        raise ParseError(f"--kind {kind} sweeps a single group")
    if kind == 'identity':
        op = ops[0]
        if not isinstance(op, GroupAdd) or op.group.rank != 1 or not op.group.is_finite:
            raise ParseError("--kind identity needs a cyclic group Z<p>")
        return IdentityMapSearch(op.group.moduli[0], args.max_k or args.max_size)
    if kind == 'sidon':
        return SidonSearch(ops[0], args.max_size)
    if kind == 'matching':
        return MatchingPropertySearch(ops[0], args.max_size, args.cross_check)
    return AcyclicPropertySearch(ops[0], args.max_size, args.cross_check)


def cmd_search(inv: Invocation, args: argparse.Namespace) -> int:
    """Run a sweep; exit 3 when a counterexample is found."""
    search = _build_search(inv, args)
    search.workers = args.workers
    report = search.run()
    emit(dump_json(report_to_dict(report)))
    if report.implementation_bug:
        logger.error("❌ counterexample contradicts a proven result (implementation bug)")
    return EXIT_OK if report.holds else EXIT_COUNTEREXAMPLE


def cmd_sidon(inv: Invocation, args: argparse.Namespace) -> int:
    op = inv.op
    items = inv.B if inv.B is not None else inv.A
    if items is None:
        raise ParseError("sidon needs a set via -B (or -A)")
    result = is_sidon(items, op)
    if inv.as_json:
        emit(dump_json({'set': [op.to_json(x) for x in items], 'sidon': result}))
    else:
        emit(f"{format_set(items, op)} is {'a Sidon set ✅' if result else 'not a Sidon set ❌'}")
    return EXIT_OK if result else EXIT_FAILED


def cmd_table_check(inv: Invocation, args: argparse.Namespace) -> int:
    table = inv.op
    if not isinstance(table, CayleyTable):
        raise ParseError("table-check needs --table")
    report = check_table(table)
    if inv.as_json:
        emit(dump_json(report))
    else:
        lines = [f"🔲 table of order {report['order']}"]
        if report['left_cancellative']:
            lines.append("✅ left cancellation holds")
        else:
            a, b1, b2 = report['witness']
            lines.append(f"❌ left cancellation fails: {a}⊕{b1} = {a}⊕{b2}")
        lines.append(f"{'✅' if report['latin'] else '⚪'} Latin square: {'yes' if report['latin'] else 'no'}")
        emit('\n'.join(lines))
    strict = args.strict or Config.STRICT_LATIN
    ok = report['left_cancellative'] and (report['latin'] or not strict)
    return EXIT_OK if ok else EXIT_FAILED


COMMANDS = {
    'construct': cmd_construct,
    'verify': cmd_verify,
    'enumerate': cmd_enumerate,
    'diagnose': cmd_diagnose,
    'search': cmd_search,
    'sidon': cmd_sidon,
    'table-check': cmd_table_check,
}


# ═══════════════════════════════════════════════════════════════════════════
# ARGUMENTS
# ═══════════════════════════════════════════════════════════════════════════

def _add_source(parser: argparse.ArgumentParser, group_help: str = "group, e.g. Z13 or ZxZ3 (or @file)") -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument('-g', '--group', help=group_help)
    source.add_argument('--table', help="Cayley table JSON file")


def _add_sets(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('-A', help="set literal, e.g. {0,1,2,7} (or @file)")
    parser.add_argument('-B', help="set literal (or @file)")


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument('--json', action='store_true', help="JSON output")
    parser.add_argument('-v', '--verbose', action='count', default=0, help="more logging on stderr")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog='app.py', description="Matchings, multiplicity functions and acyclic matchings")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=_Parser)

    construct = sub.add_parser('construct', help="greedy unique-multiplicity bijection with trace")
    _add_source(construct)
    _add_sets(construct)
    construct.add_argument('--order', default=Config.DEFAULT_ORDER, help="asc, desc or seed:<n>")
    _add_common(construct)

    verify = sub.add_parser('verify', help="check a matching file against a pair")
    _add_source(verify)
    _add_sets(verify)
    verify.add_argument('--matching', required=True, help='JSON file {"pairs": [[a, b], ...]} or inline JSON')
    _add_common(verify)

    enumerate_ = sub.add_parser('enumerate', help="census of matchings by multiplicity function")
    _add_source(enumerate_)
    _add_sets(enumerate_)
    enumerate_.add_argument('--bijections', action='store_true', help="census over all bijections")
    _add_common(enumerate_)

    diagnose = sub.add_parser('diagnose', help="classify a pair: blocked, fully free or intermediate")
    _add_source(diagnose)
    _add_sets(diagnose)
    _add_common(diagnose)

    search = sub.add_parser('search', help="theorem sweep; exit 3 on counterexample")
    _add_source(search, group_help="comma-separated groups, e.g. Z5,Z7,Z12 (or @file)")
    search.add_argument('--kind', required=True, choices=SEARCH_KINDS)
    search.add_argument('--max-size', type=int, default=4, help="largest |A| = |B|")
    search.add_argument('--max-k', type=int, default=None, help="identity sweep: largest |A|")
    search.add_argument('--samples', type=int, default=None, help="random pairs per sampled group")
    search.add_argument('--seed', type=int, default=None)
    search.add_argument('--order', default=Config.DEFAULT_ORDER, help="greedy order: asc, desc or seed:<n>")
    search.add_argument('--mode', default='auto', choices=('auto', 'exhaustive', 'sampled'))
    search.add_argument('--cross-check', action='store_true', help="compare augmenting paths against the census")
    search.add_argument('--workers', type=int, default=None, help="process pool size")
    _add_common(search)

    sidon = sub.add_parser('sidon', help="test whether a set is a Sidon set")
    _add_source(sidon)
    _add_sets(sidon)
    _add_common(sidon)

    table_check = sub.add_parser('table-check', help="validate a Cayley table file")
    _add_source(table_check)
    table_check.add_argument('--strict', action='store_true', help="also require a Latin square")
    _add_common(table_check)

    return parser


def configure_logging(verbosity: int) -> None:
    level = {0: Config.LOG_LEVEL, 1: 'INFO'}.get(verbosity, 'DEBUG')
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        stream=sys.stderr,
        format='%(levelname)s %(name)s: %(message)s',
        force=True,
    )


# ═══════════════════════════════════════════════════════════════════════════
# MAIN
# ═══════════════════════════════════════════════════════════════════════════

def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)

    configure_logging(args.verbose)
    for line in Config.describe():
        logger.debug(line)

    try:
        invocation = Invocation.from_args(args)
        return COMMANDS[args.command](invocation, args)
    except (ValueError, OSError) as e:
        # ParseError, OperandError, CancellationError, MatchingError,
        # WeakConditionError and SearchBoundError are all ValueErrors
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == '__main__':
    sys.exit(main())
