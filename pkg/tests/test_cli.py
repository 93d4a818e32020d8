"""Command-line surface: exit codes, text/JSON output and the help contract."""

import json
import re
import sys
from pathlib import Path
from subprocess import run as subprocess_run

import numpy as np
import pytest

import app
from config import Config
from data.tables import random_latin_square, save_table

APP = Path(__file__).resolve().parent.parent / 'app.py'

EXAMPLE = ['-g', 'Z13', '-A', '{0,1,2,7}', '-B', '{3,4,9,10}']


def call(capsys, *argv):
    code = app.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def call_json(capsys, *argv):
    code, out, _ = call(capsys, *argv, '--json')
    return code, json.loads(out)


def write_json(path: Path, data) -> str:
    path.write_text(json.dumps(data), encoding='utf-8')
    return str(path)


class TestConstruct:
    def test_example_json(self, capsys):
        code, data = call_json(capsys, 'construct', *EXAMPLE)
        assert code == 0
        assert data['status'] == 'acyclic matching'
        assert data['weak_condition'] is True
        assert data['matching'] == {'pairs': [[0, 3], [7, 9], [1, 4], [2, 10]]}
        assert data['multiplicity'] == {'counts': {'3': 2, '5': 1, '12': 1}}
        assert data['trace']['cs'] == [3, 4, 5, 6, 9, 10, 11, 12]
        assert data['diagnosis'] is None

    def test_example_text(self, capsys):
        code, out, _ = call(capsys, 'construct', *EXAMPLE)
        assert code == 0
        lines = out.splitlines()
        assert "C' = {3,4,5,6,9,10,11,12}" in lines
        assert any(line.startswith("step 1: c=3 ") and "A'_j={0,7}" in line
                   and line.endswith("assign 0->3, 7->9") for line in lines)
        assert any(line.startswith("step 2: c=4 ") and line.endswith("no assignments") for line in lines)
        assert any(line.startswith("step 3: c=5 ") and line.endswith("assign 1->4") for line in lines)
        assert any(line.startswith("step 8: c=12 ") and line.endswith("assign 2->10") for line in lines)
        assert "f0 = {0->3, 7->9, 1->4, 2->10}" in lines
        assert "m  = {3:2, 5:1, 12:1}" in lines

    def test_singleton(self, capsys):
        code, data = call_json(capsys, 'construct', '-g', 'Z2', '-A', '{0}', '-B', '{1}')
        assert code == 0
        assert data['matching'] == {'pairs': [[0, 1]]}

    def test_weak_condition_fails(self, capsys):
        code, data = call_json(capsys, 'construct', '-g', 'Z4', '-A', '{0,2}', '-B', '{1,2}')
        assert code == 2
        assert data['status'] == 'bijection (not necessarily a matching)'
        assert data['diagnosis']['kind'] == 'intermediate'
        assert len(data['matching']['pairs']) == 2

    def test_descending_order(self, capsys):
        code, data = call_json(capsys, 'construct', *EXAMPLE, '--order', 'desc')
        assert code == 0
        assert data['order'] == 'desc'
        assert data['matching'] == {'pairs': [[2, 10], [7, 4], [1, 9], [0, 3]]}

    def test_sets_from_files(self, capsys, tmp_path):
        a_file = tmp_path / 'a.txt'
        a_file.write_text('{0,1,2,7}', encoding='utf-8')
        code, data = call_json(capsys, 'construct', '-g', 'Z13', '-A', f'@{a_file}', '-B', '3,4,9,10')
        assert code == 0
        assert data['A'] == [0, 1, 2, 7]


class TestErrors:
    @pytest.mark.parametrize("argv", [
        ['construct', '-g', 'Z0', '-A', '{0}', '-B', '{1}'],
        ['construct', '-g', 'Z5', '-A', '{0,1', '-B', '{1}'],
        ['construct', '-g', 'Z5', '-A', '{0,1}', '-B', '{1}'],
        ['construct', '-A', '{0}', '-B', '{1}'],
        ['construct', '-g', 'Z5', '-A', '{0}'],
        ['construct', '-g', 'Z5', '--order', 'sideways', '-A', '{0}', '-B', '{1}'],
        ['frobnicate'],
        [],
    ])
    def test_exit_1(self, capsys, argv):
        code, _, err = call(capsys, *argv)
        assert code == 1
        assert err

    def test_group_and_table_are_exclusive(self, capsys, tmp_path):
        table = write_json(tmp_path / 't.json', {'carrier': ['a'], 'table': [['a']]})
        code, _, _ = call(capsys, 'diagnose', '-g', 'Z4', '--table', table, '-A', '{0}', '-B', '{1}')
        assert code == 1

    def test_missing_table_file(self, capsys, tmp_path):
        code, _, err = call(capsys, 'table-check', '--table', str(tmp_path / 'none.json'))
        assert code == 1
        assert err.startswith("❌")

    def test_help(self, capsys):
        code, out, _ = call(capsys, '--help')
        assert code == 0
        assert 'construct' in out


class TestVerify:
    def test_example_f0(self, capsys, tmp_path):
        f0 = write_json(tmp_path / 'f0.json', {'pairs': [[0, 3], [7, 9], [1, 4], [2, 10]]})
        code, data = call_json(capsys, 'verify', *EXAMPLE, '--matching', f0)
        assert code == 0
        assert data['valid_matching'] is True
        assert data['acyclic'] is True
        assert data['multiplicity'] == {'counts': {'3': 2, '5': 1, '12': 1}}
        assert data['census']['matchings'] == 24

    def test_other_matching(self, capsys):
        code, data = call_json(capsys, 'verify', *EXAMPLE,
                               '--matching', '{"pairs": [[0, 4], [1, 3], [2, 10], [7, 9]]}')
        assert data['valid_matching'] is True
        assert data['multiplicity'] == {'counts': {'3': 1, '4': 2, '12': 1}}
        # 2->10 and 7->9 are forced, the rest follows
        assert data['acyclic'] is True
        assert code == 0

    def test_identity_on_different_sets(self, capsys, tmp_path):
        identity = write_json(tmp_path / 'id.json', {'pairs': [[0, 0], [1, 1], [2, 2], [7, 7]]})
        code, _, err = call(capsys, 'verify', *EXAMPLE, '--matching', identity)
        assert code == 1
        assert 'not a bijection' in err

    def test_bijection_that_is_not_a_matching(self, capsys):
        code, out, _ = call(capsys, 'verify', '-g', 'Z4', '-A', '{0,2}', '-B', '{1,2}',
                            '--matching', '{"pairs": [[0, 1], [2, 2]]}')
        assert code == 2
        assert "invalid" in out
        assert "acyclic: n/a" in out


class TestEnumerate:
    def test_example(self, capsys):
        code, data = call_json(capsys, 'enumerate', *EXAMPLE)
        assert code == 0
        assert data['summary']['matchings'] == 24
        assert not data['bijections']
        assert sum(len(c['members']) for c in data['classes']) == 24

    def test_bijections(self, capsys):
        code, out, _ = call(capsys, 'enumerate', '-g', 'Z4', '-A', '{0,2}', '-B', '{1,2}', '--bijections')
        assert code == 0
        assert out.startswith("🔎 2 bijections")

    def test_empty_census(self, capsys):
        code, out, _ = call(capsys, 'enumerate', '-g', 'Z4', '-A', '{0,2}', '-B', '{1,2}')
        assert code == 0
        assert out.startswith("🔎 0 matchings, 0 classes")


class TestDiagnose:
    def test_intermediate(self, capsys):
        code, out, _ = call(capsys, 'diagnose', '-g', 'Z4', '-A', '{0,2}', '-B', '{1,2}')
        assert code == 0
        assert out.startswith('intermediate:')

    def test_blocked(self, capsys):
        code, data = call_json(capsys, 'diagnose', '-g', 'Z4', '-A', '{1,3}', '-B', '{0,2}')
        assert code == 0
        assert data['kind'] == 'blocked'
        assert data['is_coset'] is True


class TestSearch:
    def test_matching_counterexample(self, capsys):
        code, data = call_json(capsys, 'search', '--kind', 'matching', '-g', 'Z4', '--max-size', '2')
        assert code == 3
        assert data['verdict'] == 'counterexample'
        assert data['witness']['A'] == [0, 2]
        assert data['witness']['B'] == [1, 2]
        assert data['witness']['reason'] == 'no_matching'

    def test_workers_do_not_leak_into_config(self, capsys):
        before = Config.SWEEP_WORKERS
        code, data = call_json(capsys, 'search', '--kind', 'matching', '-g', 'Z4',
                               '--max-size', '2', '--workers', '2')
        assert code == 3
        assert data['witness']['B'] == [1, 2]
        assert Config.SWEEP_WORKERS == before

    def test_weak_holds(self, capsys):
        code, data = call_json(capsys, 'search', '--kind', 'weak', '-g', 'Z5,Z7', '--max-size', '3')
        assert code == 0
        assert data['verdict'] == 'property-holds'
        assert data['scope']['groups'] == ['Z5', 'Z7']

    def test_identity(self, capsys):
        code, data = call_json(capsys, 'search', '--kind', 'identity', '-g', 'Z13', '--max-k', '3')
        assert code == 0
        assert data['scope']['sizes'] == [1, 2, 3]

    def test_sidon(self, capsys):
        code, _ = call_json(capsys, 'search', '--kind', 'sidon', '-g', 'Z11', '--max-size', '3')
        assert code == 0

    def test_lemma_on_table(self, capsys, tmp_path):
        path = tmp_path / 'latin.json'
        save_table(random_latin_square(5, np.random.default_rng(0)), path)
        code, data = call_json(capsys, 'search', '--kind', 'lemma', '--table', str(path), '--max-size', '3')
        assert code == 0
        assert data['scope']['groups'] == ['table[5]']

    def test_sampled_report_records_seed(self, capsys):
        code, data = call_json(capsys, 'search', '--kind', 'weak', '-g', 'ZxZ', '--max-size', '3',
                               '--samples', '40', '--seed', '7')
        assert code == 0
        assert data['seed'] == 7

    @pytest.mark.parametrize("argv", [
        ['--kind', 'matching', '-g', 'Z17', '--max-size', '2'],
        ['--kind', 'matching', '-g', 'Z5,Z7', '--max-size', '2'],
        ['--kind', 'identity', '-g', 'Z12'],
        ['--kind', 'identity', '-g', 'ZxZ3'],
        ['--kind', 'nonsense', '-g', 'Z5'],
    ])
    def test_errors(self, capsys, argv):
        code, _, _ = call(capsys, 'search', *argv)
        assert code == 1

    @pytest.mark.slow
    def test_acyclic_z7(self, capsys):
        code, data = call_json(capsys, 'search', '--kind', 'acyclic', '-g', 'Z7', '--max-size', '6')
        assert code == 3
        assert data['witness']['reason'] == 'no_acyclic_matching'
        assert data['implementation_bug'] is False

    @pytest.mark.slow
    def test_weak_three_groups(self, capsys):
        code, _ = call_json(capsys, 'search', '--kind', 'weak', '-g', 'Z5,Z7,Z12', '--max-size', '4')
        assert code == 0


class TestSidon:
    def test_sidon_set(self, capsys):
        code, out, _ = call(capsys, 'sidon', '-g', 'Z13', '-B', '{1,2,5}')
        assert code == 0
        assert 'a Sidon set' in out

    def test_not_sidon(self, capsys):
        code, data = call_json(capsys, 'sidon', '-g', 'Z8', '-B', '{1,3,5,7}')
        assert code == 2
        assert data == {'set': [1, 3, 5, 7], 'sidon': False}


class TestTableCheck:
    def test_latin(self, capsys, tmp_path):
        path = tmp_path / 'latin.json'
        save_table(random_latin_square(6, np.random.default_rng(2)), path)
        code, data = call_json(capsys, 'table-check', '--table', str(path))
        assert code == 0
        assert data['latin'] is True

    def test_row_injective_only(self, capsys, tmp_path):
        path = write_json(tmp_path / 't.json', {'carrier': ['a', 'b'], 'table': [['a', 'b'], ['a', 'b']]})
        assert call(capsys, 'table-check', '--table', path)[0] == 0
        assert call(capsys, 'table-check', '--table', path, '--strict')[0] == 2

    def test_not_cancellative(self, capsys, tmp_path):
        path = write_json(tmp_path / 't.json', {'carrier': ['a', 'b'], 'table': [['a', 'a'], ['b', 'b']]})
        code, out, _ = call(capsys, 'table-check', '--table', path)
        assert code == 2
        assert "left cancellation fails" in out


# ═══════════════════════════════════════════════════════════════════
# HELP CONTRACT
# ═══════════════════════════════════════════════════════════════════

def run_help(*args: str) -> str:
    result = subprocess_run(
        [sys.executable, str(APP), *args, '--help'],
        capture_output=True,
        text=True,
        check=False,
    )
    assert result.returncode == 0, (
        f"help failed with return code {result.returncode}\n"
        f"STDOUT:\n{result.stdout}\n"
        f"STDERR:\n{result.stderr}"
    )
    return result.stdout


def extract_option_tokens(output: str) -> set:
    return set(re.findall(r"--[a-z0-9][a-z0-9-]*", output))


def test_root_contract_has_stable_subcommands():
    match = re.search(r"\{([^}]+)\}", run_help())
    assert match is not None
    subcommands = {item.strip() for item in match.group(1).split(",")}
    assert subcommands == set(app.SUBCOMMANDS)


def test_search_contract_has_stable_options():
    assert extract_option_tokens(run_help('search')) == {
        '--group', '--table', '--kind', '--max-size', '--max-k', '--samples', '--seed',
        '--order', '--mode', '--cross-check', '--workers', '--json', '--verbose', '--help',
    }


def test_construct_contract_has_stable_options():
    assert extract_option_tokens(run_help('construct')) == {
        '--group', '--table', '--order', '--json', '--verbose', '--help',
    }
