#!/usr/bin/env python3
"""
Tests for configurations.py: lemma checks on planted graphs and the
reduction conditions.
"""

import sys
from pathlib import Path

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

import networkx as nx

from fixtures import build_fixture  # type: ignore
from class_membership import check_class_G
from configurations import (LEMMAS, AuditFinding, ClassPreconditionError, ReductionSpec,
                            ReductionSpecError, audit_lemma_configurations,
                            check_bad_cycle_catalog, check_two_connected, reduction_check)
from plane_corpus import corpus

# Colors for output
GREEN = '\033[0;32m'
RED = '\033[0;31m'
NC = '\033[0m'  # No Color

PASSED = 0
FAILED = 0


def findings_for(name, lemma):
    return [f for f in audit_lemma_configurations(build_fixture(name)) if f.lemma == lemma]


def lemma_counts(findings):
    counts = {}
    for f in findings:
        counts[f.lemma] = counts.get(f.lemma, 0) + 1
    return counts


def expect_spec_error(g, spec):
    try:
        reduction_check(g, spec)
    except ReductionSpecError:
        return
    raise AssertionError(f"{spec} accepted")


def cycle_edges(cycle, rename=None):
    c = [rename.get(x, x) for x in cycle] if rename else list(cycle)
    return frozenset(frozenset(e) for e in zip(c, c[1:] + c[:1]))


def surgery_cycle_lengths(g, delete, op, u, v):
    """Lengths of the 8- cycles that exist only after performing the operation on G - S."""
    h = g.to_networkx()
    h.remove_nodes_from(delete)
    if op == 'identify':
        before = {cycle_edges(c, {v: u}) for c in nx.simple_cycles(h, length_bound=8)}
        after = nx.contracted_nodes(h, u, v, self_loops=False)
    else:
        before = {cycle_edges(c) for c in nx.simple_cycles(h, length_bound=8)}
        after = h.copy()
        after.add_edge(u, v)
    return sorted({len(c) for c in nx.simple_cycles(after, length_bound=8)
                   if cycle_edges(c) not in before})


def test_cycle_host_is_clean():
    assert audit_lemma_configurations(build_fixture('F1')) == []


def test_atlas_audits():
    f3 = audit_lemma_configurations(build_fixture('F3'))
    assert [(f.lemma, f.vertices) for f in f3] == [('SplittingPathFace', (0, 11, 6)),
                                                  ('SplittingPathFace', (1, 11, 6))]
    assert lemma_counts(audit_lemma_configurations(build_fixture('F9'))) == {
        'MinDegree': 1, 'SplittingPathFace': 1}
    f10 = audit_lemma_configurations(build_fixture('F10'))
    assert lemma_counts(f10) == {'MinDegree': 2, 'SplittingPathFace': 1}
    assert [f.vertices for f in f10 if f.lemma == 'MinDegree'] == [(12,), (13,)]


def test_findings_are_ordered():
    findings = audit_lemma_configurations(build_fixture('F10'))
    order = [LEMMAS.index(f.lemma) for f in findings]
    assert order == sorted(order)
    d = findings[0].to_dict()
    assert d['lemma'] == 'MinDegree'
    assert d['vertices'] == [13]


def test_two_connected():
    [f] = check_two_connected(build_fixture('path3'))
    assert f.vertices == (1,)
    assert check_two_connected(build_fixture('F10')) == []


def test_separating_good_plant():
    [f] = findings_for('separating_good', 'SeparatingGoodCycle')
    assert set(f.vertices) == {0, 1, 2, 3, 10}
    assert len(findings_for('separating_good', 'NonFacialSmallCycle')) == 1


def test_bad_cycle_catalog():
    assert check_bad_cycle_catalog(build_fixture('F3')) == []
    try:
        check_bad_cycle_catalog(build_fixture('F2'))
    except ClassPreconditionError:
        pass
    else:
        raise AssertionError("F2 accepted under strict checking")
    [f] = check_bad_cycle_catalog(build_fixture('F7'), strict=False)
    assert f.lemma == 'BadCycleCatalog'
    assert len(f.vertices) == 9


def test_triangular_bad_plant():
    assert len(findings_for('triangular_bad', 'TriangularBadCycle')) == 1


def test_good_path_plant():
    [f] = findings_for('good_path', 'GoodPathOnFace')
    assert set(f.vertices) == {13, 14, 15, 16}
    assert len(f.faces) == 1


def test_all_three_face_plant():
    [f] = findings_for('all_three_face', 'AllThreeFace')
    assert set(f.vertices) == {10, 11, 12, 13, 14}


def test_light_seven_pair_plant():
    [f] = findings_for('light7_pair', 'LightSevenPair')
    assert f.vertices == (23, 29, 30)
    assert len(set(f.faces)) == 2


def test_chorded_eight_plant():
    [f] = findings_for('chorded_eight', 'ChordedEight')
    assert set(f.vertices) == {16, 17, 18, 19, 20, 21, 22, 23}
    assert 'chord v19v18' in f.detail


def test_nine_face_plant():
    [f] = findings_for('nine_face', 'NineFaceConfig')
    assert f.vertices[3] == 17
    assert len(f.vertices) == 9


def test_relabeling_keeps_findings():
    for name in ('F3', 'F10', 'nine_face'):
        g = build_fixture(name)
        perm = list(range(g.n))[::-1]
        assert (lemma_counts(audit_lemma_configurations(g))
                == lemma_counts(audit_lemma_configurations(g.relabeled(perm)))), name


def test_add_edge_between_outer_vertices():
    report = reduction_check(build_fixture('F8'), ReductionSpec.add_edge({12}, 0, 6))
    assert not report.condition_a
    assert report.condition_b
    assert report.created_cycles == [7]
    assert not report.passed
    assert report.to_dict()['violations'][0]['condition'] == 'a'


def test_identify_creates_short_cycle():
    report = reduction_check(build_fixture('F3'), ReductionSpec.identify({11}, 1, 6))
    assert not report.condition_a
    assert not report.condition_b
    assert report.created_cycles == [5, 6]
    assert {v.condition for v in report.violations} == {'a', 'b'}


def test_add_edge_passes():
    report = reduction_check(build_fixture('F10'), ReductionSpec.add_edge({13}, 12, 6))
    assert report.passed
    assert report.created_cycles == [8]
    assert report.violations == []


def test_identify_edges():
    g = build_fixture('F10')
    report = reduction_check(g, ReductionSpec.identify_edges({12, 13}, (0, 1), (6, 7)))
    assert len(report.parts) == 2
    assert report.side_condition is True
    assert not report.condition_a
    assert 'parts' in report.to_dict()


def test_created_cycles_match_surgery():
    cases = [('F3', ReductionSpec.identify({11}, 1, 6)),
             ('F8', ReductionSpec.add_edge({12}, 0, 6)),
             ('F10', ReductionSpec.add_edge({13}, 12, 6))]
    for name, spec in cases:
        g = build_fixture(name)
        report = reduction_check(g, spec)
        assert report.created_cycles == surgery_cycle_lengths(g, spec.delete, spec.op, *spec.pair), name

    g = build_fixture('F10')
    spec = ReductionSpec.identify_edges({12, 13}, (0, 1), (6, 7))
    report = reduction_check(g, spec)
    for part, (a, b) in zip(report.parts, ((0, 6), (1, 7))):
        assert part.created_cycles == surgery_cycle_lengths(g, spec.delete, 'identify', a, b)
        assert part.created_cycles == [6]


def test_catalog_holds_on_small_members():
    assert check_bad_cycle_catalog(build_fixture('F8')) == []
    members = list(corpus(25, n_min=5, n_max=12, seed=123,
                          predicate=lambda g: check_class_G(g).member))
    assert members
    for g in members:
        assert check_bad_cycle_catalog(g) == [], g.name


def test_malformed_reductions():
    g = build_fixture('F10')
    expect_spec_error(g, ReductionSpec.identify(set(), 0, 6))
    expect_spec_error(g, ReductionSpec.identify({0}, 1, 6))
    expect_spec_error(g, ReductionSpec.identify({13}, 13, 6))
    expect_spec_error(g, ReductionSpec.identify({13}, 6, 6))
    expect_spec_error(g, ReductionSpec.add_edge({13}, 0, 12))
    expect_spec_error(g, ReductionSpec.identify_edges({13}, (0, 2), (6, 7)))
    expect_spec_error(g, ReductionSpec({13}, 'contract', (0, 6)))


def test_finding_sort_key():
    a = AuditFinding('NineFaceConfig', (1,))
    b = AuditFinding('MinDegree', (5,))
    assert sorted([a, b], key=AuditFinding.sort_key) == [b, a]


def main():
    global PASSED, FAILED

    print("=" * 60)
    print("configurations tests")
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
