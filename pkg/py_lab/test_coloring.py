#!/usr/bin/env python3
"""
Tests for coloring.py
"""

import sys
from pathlib import Path

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from hypothesis import given, settings, strategies as st

from fixtures import atlas, build_fixture  # type: ignore
from plane_builder import PlaneBuilder  # type: ignore
from class_membership import check_class_G, check_theorem3_class
from coloring import (Coloring, ColoringError, check_extension_property, count_3colorings,
                      extend_precoloring, solve_3coloring, verify_coloring)
from plane_corpus import corpus
from structures import StructureError

# Colors for output
GREEN = '\033[0;32m'
RED = '\033[0;31m'
NC = '\033[0m'  # No Color

PASSED = 0
FAILED = 0

# proper on the 12-cycle of F8, hub neighbors v1, v4, v7 get 0, 1, 2
F8_BLOCKED = (0, 1, 2, 1, 0, 1, 2, 0, 1, 0, 1, 2)
F8_OPEN = (0, 1, 2, 0, 1, 2, 0, 1, 0, 1, 0, 1)


def expect_coloring_error(fn, *args):
    try:
        fn(*args)
    except ColoringError:
        return
    raise AssertionError("expected ColoringError")


def test_k4_has_no_coloring():
    g = build_fixture('F4')
    assert solve_3coloring(g) is None
    assert count_3colorings(g) == 0


def test_solutions_verify():
    for g in atlas():
        if g.name == 'F4':
            continue
        coloring = solve_3coloring(g)
        assert coloring is not None, g.name
        assert verify_coloring(g, coloring), g.name
        assert len(coloring.assignment) == g.n


def test_cycle_counts():
    for n in range(3, 13):
        g = PlaneBuilder.cycle(n).build()
        assert count_3colorings(g) == 2 ** n + 2 * (-1) ** n, n
    assert count_3colorings(build_fixture('F5')) == 6


def test_naive_count_agrees():
    graphs = [g for g in atlas() if g.n <= 11] + list(corpus(8, n_min=5, n_max=8, seed=2))
    for g in graphs:
        assert count_3colorings(g, naive=True) == count_3colorings(g), g.name


def test_naive_guard():
    expect_coloring_error(count_3colorings, build_fixture('light7_pair'), True)
    expect_coloring_error(count_3colorings, build_fixture('F8'), True)
    expect_coloring_error(count_3colorings, PlaneBuilder.cycle(13).build(), True)
    assert count_3colorings(PlaneBuilder.cycle(12).build(), True) == 2 ** 12 + 2


def test_verify_rejects():
    g = build_fixture('F6')
    assert not verify_coloring(g, Coloring({0: 0, 1: 1}))
    assert verify_coloring(g, Coloring({0: 0, 1: 1}, partial=True))
    assert not verify_coloring(g, Coloring({0: 0, 1: 0}, partial=True))
    assert not verify_coloring(g, Coloring({v: 3 for v in range(5)}))


def test_precolored_solve():
    g = build_fixture('F9')
    coloring = solve_3coloring(g, {0: 2, 3: 2})
    assert coloring.assignment[0] == coloring.assignment[3] == 2
    assert verify_coloring(g, coloring)
    expect_coloring_error(solve_3coloring, g, {0: 1, 1: 1})
    expect_coloring_error(solve_3coloring, g, {0: 5})
    expect_coloring_error(solve_3coloring, g, {40: 0})


def test_extend_precoloring():
    g = build_fixture('F8')
    boundary = range(12)
    assert extend_precoloring(g, boundary, dict(enumerate(F8_BLOCKED))) is None
    extended = extend_precoloring(g, boundary, dict(enumerate(F8_OPEN)))
    assert extended is not None
    assert extended.assignment[12] != 0
    expect_coloring_error(extend_precoloring, g, boundary, {12: 0})


def test_extension_property_on_cycles():
    report = check_extension_property(build_fixture('F1'))
    assert (report.total, report.extendable, report.non_extendable) == (510, 510, 0)
    assert report.hypothesis_holds and not report.contradicts_theorem

    report = check_extension_property(build_fixture('F10'))
    assert (report.total, report.extendable) == (4098, 4098)
    assert report.hypothesis_holds
    assert report.to_dict()['contradicts_theorem'] is False

    report = check_extension_property(build_fixture('F9'))
    assert report.total == 1026
    assert report.non_extendable == 0


def test_extension_fails_on_bad_outer_cycle():
    report = check_extension_property(build_fixture('F8'))
    assert not report.d_good
    assert not report.hypothesis_holds
    assert report.non_extendable > 0
    assert report.extendable + report.non_extendable == report.total == 4098
    assert len(report.witnesses) == 10
    assert not report.contradicts_theorem
    blocked = dict(enumerate(F8_BLOCKED))
    assert extend_precoloring(build_fixture('F8'), range(12), blocked) is None


def test_extension_needs_simple_outer():
    try:
        check_extension_property(build_fixture('path3'))
    except StructureError:
        return
    raise AssertionError("non-simple outer boundary accepted")


@settings(max_examples=15, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_random_colorings_verify(seed):
    for g in corpus(2, n_min=5, n_max=14, seed=seed):
        coloring = solve_3coloring(g)
        if coloring is None:
            assert count_3colorings(g) == 0
        else:
            assert verify_coloring(g, coloring)


def test_theorem3_members_are_colorable():
    members = list(corpus(20, n_min=5, n_max=12, seed=123,
                          predicate=lambda g: check_theorem3_class(g).member))
    assert members
    for g in members:
        coloring = solve_3coloring(g)
        assert coloring is not None, g.name
        assert verify_coloring(g, coloring), g.name


def test_good_outer_cycle_always_extends():
    members = list(corpus(20, n_min=5, n_max=12, seed=123,
                          predicate=lambda g: check_class_G(g).member))
    reports = [check_extension_property(g) for g in members]
    held = [r for r in reports if r.hypothesis_holds]
    assert held
    for r in held:
        assert r.non_extendable == 0
        assert r.extendable == r.total
        assert not r.contradicts_theorem


def test_coloring_dict():
    d = solve_3coloring(build_fixture('F5')).to_dict()
    assert d['partial'] is False
    assert sorted(d['colors'].values()) == [0, 1, 2]
    assert list(d['colors']) == ['v1', 'v2', 'v3']


def main():
    global PASSED, FAILED

    print("=" * 60)
    print("coloring tests")
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
