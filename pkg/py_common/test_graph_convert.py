#!/usr/bin/env python3
"""
Test script for graph_convert.py
"""

import subprocess
import sys
import tempfile
from pathlib import Path

from plane_graph import parse_planar_code, parse_rotation_text  # type: ignore

# Colors for output
GREEN = '\033[0;32m'
RED = '\033[0;31m'
NC = '\033[0m'  # No Color

PASSED = 0
FAILED = 0

SCRIPT = Path(__file__).parent / 'graph_convert.py'
FIXTURE_DIR = Path(__file__).parent.parent / 'fixtures'


def run(*args):
    return subprocess.run([sys.executable, str(SCRIPT), *map(str, args)],
                          capture_output=True, text=True)


def test_directory_to_stream():
    with tempfile.TemporaryDirectory() as tmp:
        out = Path(tmp) / 'atlas.pcode'
        result = run('ROT2PCODE', FIXTURE_DIR, out)
        assert result.returncode == 0, result.stderr
        assert 'Converted 10 graph(s)' in result.stderr
        graphs = parse_planar_code(out.read_bytes())
        assert len(graphs) == 10
        # files are read in name order: F1, F10, F2, ...
        assert graphs[1].face_sizes() == [9, 9, 12]


def test_single_round_trip():
    with tempfile.TemporaryDirectory() as tmp:
        pcode = Path(tmp) / 'F3.pcode'
        back = Path(tmp) / 'F3_copy.rot'
        assert run('ROT2PCODE', FIXTURE_DIR / 'F3.rot', pcode).returncode == 0
        result = run('PCODE2ROT', pcode, back)
        assert result.returncode == 0, result.stderr
        original = parse_rotation_text((FIXTURE_DIR / 'F3.rot').read_text())
        copy = parse_rotation_text(back.read_text())
        assert copy.edges == original.edges
        assert copy.face_sizes() == original.face_sizes()


def test_stream_to_directory():
    with tempfile.TemporaryDirectory() as tmp:
        pcode = Path(tmp) / 'atlas.pcode'
        outdir = Path(tmp) / 'atlas_rot'
        run('ROT2PCODE', FIXTURE_DIR, pcode)
        result = run('PCODE2ROT', pcode, outdir)
        assert result.returncode == 0, result.stderr
        files = sorted(outdir.glob('*.rot'))
        assert [f.name for f in files[:2]] == ['g0000.rot', 'g0001.rot']
        assert len(files) == 10


def test_errors():
    with tempfile.TemporaryDirectory() as tmp:
        bad = Path(tmp) / 'bad.rot'
        bad.write_text("3\n1: 2 3\n2: 1 x\n3: 1 2\n")
        result = run('ROT2PCODE', bad, Path(tmp) / 'out.pcode')
        assert result.returncode == 2
        assert 'ERROR' in result.stderr
        result = run('PCODE2ROT', Path(tmp) / 'missing.pcode', Path(tmp) / 'x.rot')
        assert result.returncode == 2
    assert run('BADCMD', 'a', 'b').returncode != 0
    assert run().returncode != 0


def main():
    global PASSED, FAILED

    print("=" * 60)
    print("graph_convert tests")
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
