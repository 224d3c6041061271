#!/usr/bin/env python3
"""
Test script for discharge_lab.py: runs the CLI as a subprocess.
"""

import json
import os
import shutil
import subprocess
import sys
import tempfile
from pathlib import Path

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from fixtures import build_fixture  # type: ignore
from plane_graph import emit_planar_code  # type: ignore

# Colors for output
GREEN = '\033[0;32m'
RED = '\033[0;31m'
NC = '\033[0m'  # No Color

PASSED = 0
FAILED = 0

SCRIPT = Path(__file__).parent / 'discharge_lab.py'
FIXTURE_DIR = Path(__file__).parent.parent / 'fixtures'


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.update(env or {})
    return subprocess.run([sys.executable, str(SCRIPT), *map(str, args)],
                          capture_output=True, text=True, env=full_env)


def run_json(*args, env=None):
    result = run(*args, '--json', env=env)
    return result, json.loads(result.stdout) if result.stdout else None


def test_discharge_json():
    result, report = run_json('discharge', '--fixture', 'F1')
    assert result.returncode == 0, result.stderr
    assert report['schema_version'] == 1
    assert report['command'] == 'discharge'
    assert report['graph'] == 'F1'
    assert report['sum_final'] == '0/1'
    assert report['conserved'] is True
    assert report['rule_tally'] == {'R5': 9, 'R6(1)': 9}


def test_discharge_text_from_file():
    result = run('discharge', '--input', FIXTURE_DIR / 'F1.rot')
    assert result.returncode == 0, result.stderr
    assert 'Sum: 0/1 (conserved: True)' in result.stdout


def test_class_exit_codes():
    result = run('class', '--input', FIXTURE_DIR / 'F2.rot')
    assert result.returncode == 1
    assert 'special-9-cycle' in result.stdout
    result, report = run_json('class', '--fixture', 'F3')
    assert result.returncode == 0
    assert [c['member'] for c in report['classes']] == [True, True]


def test_color():
    result = run('color', '--fixture', 'F4')
    assert result.returncode == 1
    assert result.stdout.strip() == 'none'
    result, report = run_json('color', '--fixture', 'F6')
    assert result.returncode == 0
    assert report['colorable'] is True
    assert len(report['coloring']['colors']) == 5


def test_extend():
    result, report = run_json('extend', '--fixture', 'F8')
    assert result.returncode == 1
    assert report['non_extendable'] > 0
    assert report['contradicts_theorem'] is False
    assert run('extend', '--fixture', 'F10').returncode == 0


def test_audit():
    assert run('audit', '--fixture', 'F1').returncode == 0
    result, report = run_json('audit', '--fixture', 'F7', '--no-strict')
    assert result.returncode == 1
    assert report['catalog_checked'] is True
    assert 'BadCycleCatalog' in {f['lemma'] for f in report['findings']}
    _, report = run_json('audit', '--fixture', 'F7')
    assert report['catalog_checked'] is False


def test_analyze():
    result, report = run_json('analyze', '--fixture', 'F3')
    assert result.returncode == 0, result.stderr
    assert report['n'] == 12
    assert sorted(f['size'] for f in report['faces']) == [3, 7, 7, 11]
    assert [c['length'] for c in report['cycles']] == [3, 7, 7, 8, 8, 11, 12]


def test_planar_code_input():
    with tempfile.TemporaryDirectory() as tmp:
        stream = Path(tmp) / 'two.pcode'
        stream.write_bytes(emit_planar_code([build_fixture('F4'), build_fixture('F1')]))
        assert run('color', '--input', stream).returncode == 1
        assert run('color', '--input', stream, '--index', 1).returncode == 0
        assert run('color', '--input', stream, '--index', 5).returncode == 2


def test_batch_on_fixture_directory():
    result, report = run_json('batch', '--input', FIXTURE_DIR)
    assert result.returncode == 0, result.stderr
    summary = report['summary']
    assert summary['graphs'] == 10
    assert summary['errors'] == 0
    assert summary['member_G'] == 7
    assert summary['member_theorem3'] == 4
    assert summary['uncolorable'] == 1
    assert summary['contradictions'] == []
    assert 'Processed 10/10 graphs' in result.stderr


def test_batch_limit_and_workers():
    result, report = run_json('batch', '--input', FIXTURE_DIR, '--limit', 3,
                              env={'DISCHARGE_LAB_THREADS': '1'})
    assert result.returncode == 0
    assert report['summary']['graphs'] == 3
    assert 'Starting 1 worker processes' in result.stderr
    result = run('batch', '--input', FIXTURE_DIR, '--limit', 2, env={'DISCHARGE_LAB_THREADS': 'lots'})
    assert result.returncode == 0
    assert 'WARNING' in result.stderr
    assert run('batch', '--input', FIXTURE_DIR, '--limit', 0).returncode == 2


def test_batch_edge_cases():
    with tempfile.TemporaryDirectory() as tmp:
        empty = Path(tmp) / 'empty'
        empty.mkdir()
        result, report = run_json('batch', '--input', empty)
        assert result.returncode == 0
        assert report['summary']['graphs'] == 0

        mixed = Path(tmp) / 'mixed'
        mixed.mkdir()
        shutil.copy(FIXTURE_DIR / 'F1.rot', mixed / 'F1.rot')
        (mixed / 'junk.rot').write_text("3\n1: 2 3\n2: 1 x\n3: 1 2\n")
        result, report = run_json('batch', '--input', mixed)
        assert result.returncode == 0
        assert report['summary']['errors'] == 1
        assert report['graphs'][1]['error']


def test_truncated_stream():
    with tempfile.TemporaryDirectory() as tmp:
        stream = Path(tmp) / 'cut.pcode'
        data = emit_planar_code([build_fixture('F1'), build_fixture('F3')])
        stream.write_bytes(data[:-3])
        result = run('batch', '--input', stream)
        assert result.returncode == 2
        assert 'last good graph: 0' in result.stderr


def test_invalid_record_in_stream():
    k5 = [[2, 3, 4, 5], [1, 3, 4, 5], [1, 2, 4, 5], [1, 2, 3, 5], [1, 2, 3, 4]]
    with tempfile.TemporaryDirectory() as tmp:
        stream = Path(tmp) / 'k5.pcode'
        data = emit_planar_code([build_fixture('F1')])
        stream.write_bytes(data + bytes([5]) + b''.join(bytes(r) + b'\x00' for r in k5))
        result = run('discharge', '--input', stream, '--index', 0)
        assert result.returncode == 2
        assert 'graph 1: Euler' in result.stderr
        assert 'last good graph' not in result.stderr


def test_input_errors():
    result = run('discharge', '--input', FIXTURE_DIR / 'missing.rot')
    assert result.returncode == 2
    assert 'ERROR' in result.stderr
    assert run('discharge', '--fixture', 'path3').returncode == 2
    assert run('discharge', '--fixture', 'F99').returncode == 2
    assert run('discharge').returncode == 2
    assert run('discharge', '--fixture', 'F1', '--input', FIXTURE_DIR / 'F1.rot').returncode == 2


def main():
    global PASSED, FAILED

    print("=" * 60)
    print("discharge_lab tests")
    print("=" * 60)

    tests = [(name, fn) for name, fn in globals().items() if name.startswith('test_') and callable(fn)]
    for name, fn in tests:
        try:
            fn()
            print(f"{GREEN}✓{NC} {name}")
            PASSED += 1
        except Exception as e:
            print(f"{RED}✗{NC} {name}")
            print(f"  {type(e).__name__}: {e}")
            FAILED += 1

    print()
    print("=" * 60)
    print(f"Total tests: {PASSED + FAILED}")
    print(f"Passed: {PASSED}")
    print(f"Failed: {FAILED}")
    print("=" * 60)

    if FAILED == 0:
        print(f"{GREEN}All tests passed! ✓{NC}")
        sys.exit(0)
    else:
        print(f"{RED}Some tests failed!{NC}")
        sys.exit(1)


if __name__ == '__main__':
    main()
