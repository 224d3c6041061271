"""
Minimal-Counterexample Configuration Audit

Each check tests one necessary condition that a smallest counterexample
must satisfy; a finding is a violated condition, i.e. a certificate that
the graph is not shaped like such a counterexample. Also checks the
operation conditions (a) and (b) for a proposed reduction
(delete internal vertices, then identify two vertices, add an edge, or
identify two edges).
"""

import sys
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

import networkx as nx

from plane_graph import PlaneGraph, validate  # type: ignore
from class_membership import check_class_G
from structures import (CycleRecord, adjacent_triangles, canonical_cycle, compute_sides,
                        enumerate_cycles, facial_cycles, face_label, find_good_paths,
                        find_splitting_paths, is_bad_vertex, one_based, split_outer_cycle,
                        three_faces_at_edge, triangle_list, vertex_label)

LEMMAS = [
    'MinDegree',
    'TwoConnected',
    'SeparatingGoodCycle',
    'NonFacialSmallCycle',
    'BadCycleCatalog',
    'TriangularBadCycle',
    'SplittingPathFace',
    'GoodPathOnFace',
    'AllThreeFace',
    'LightSevenPair',
    'ChordedEight',
    'NineFaceConfig',
]

BAD_CYCLE_CATALOG = {
    11: {('claw', (3, 7, 7)), ('claw', (5, 5, 7))},
    12: {('claw', (5, 5, 8)), ('biclaw', (3, 7, 5, 7)), ('biclaw', (5, 5, 5, 7)),
         ('triclaw', (3, 7, 7, 7))},
}

EXT_TRIANGULAR_ALLOWED = {('claw', (5, 5, 7)), ('biclaw', (5, 5, 5, 7))}

ALLOWED_EIGHT_CHORDS = {(3, 7), (5, 5)}

# Face sizes that must sit between D' and D'' for a splitting path of each length
SPLIT_FACE_SIZES = {2: (3,), 3: (5,), 4: (5, 7)}


class ClassPreconditionError(ValueError):
    """The bad-cycle catalog is only stated for members of G."""


class ReductionSpecError(ValueError):
    """Malformed reduction: empty or non-internal deletion set, bad endpoints."""


@dataclass
class AuditFinding:
    lemma: str
    vertices: Tuple[int, ...] = ()
    faces: Tuple[int, ...] = ()
    detail: str = ''

    def sort_key(self):
        return (LEMMAS.index(self.lemma), self.vertices, self.faces, self.detail)

    def to_dict(self) -> Dict:
        return {'lemma': self.lemma, 'vertices': one_based(self.vertices),
                'faces': [face_label(f) for f in self.faces], 'detail': self.detail}


def _path_text(path: Sequence[int]) -> str:
    return '-'.join(vertex_label(v) for v in path)


# Individual checks


def check_min_degree(g: PlaneGraph) -> List[AuditFinding]:
    return [AuditFinding('MinDegree', (v,), detail=f"internal vertex {vertex_label(v)} has degree {g.degree(v)}")
            for v in range(g.n) if g.is_internal(v) and g.degree(v) < 3]


def check_two_connected(g: PlaneGraph) -> List[AuditFinding]:
    report = validate(g)
    return [AuditFinding('TwoConnected', (v,), detail=f"{vertex_label(v)} is an articulation point")
            for v in report.articulation_points]


def check_separating_good(records: Iterable[CycleRecord]) -> List[AuditFinding]:
    return [AuditFinding('SeparatingGoodCycle', r.vertices,
                         detail=f"good {r.length}-cycle with {len(r.interior)} interior vertices")
            for r in records if r.good and r.separating]


def _allowed_eight(r: CycleRecord) -> bool:
    if r.length != 8 or r.interior or len(r.partitions) != 1:
        return False
    p = r.partitions[0]
    return p.kind == 'chord' and p.signature in ALLOWED_EIGHT_CHORDS


def check_nonfacial_small(records: Iterable[CycleRecord]) -> List[AuditFinding]:
    return [AuditFinding('NonFacialSmallCycle', r.vertices, detail=f"non-facial {r.length}-cycle")
            for r in records if r.length <= 9 and not r.facial and not _allowed_eight(r)]


def _catalog_ok(r: CycleRecord) -> bool:
    allowed = BAD_CYCLE_CATALOG.get(r.length, set())
    return any((p.kind, p.signature) in allowed for p in r.partitions)


def check_bad_cycle_catalog(g: PlaneGraph, strict: bool = True,
                            records: Optional[List[CycleRecord]] = None) -> List[AuditFinding]:
    """
    Every bad cycle of a graph in G has length 11 or 12 and a cataloged
    partition.

    Args:
        g: plane graph
        strict: refuse graphs outside G; False runs the check anyway
        records: cycles up to length 12, if already enumerated

    Raises:
        ClassPreconditionError: strict and g is not in G
    """
    if strict and not check_class_G(g).member:
        raise ClassPreconditionError(f"{g.name or 'graph'} is not in class G")
    if records is None:
        records = enumerate_cycles(g, 12)
    findings = []
    for r in records:
        if r.bad and not _catalog_ok(r):
            kinds = ', '.join(p.label for p in r.partitions if p.kind != 'chord')
            findings.append(AuditFinding('BadCycleCatalog', r.vertices,
                                         detail=f"bad {r.length}-cycle with {kinds}"))
    return findings


def check_triangular_bad(g: PlaneGraph, records: Iterable[CycleRecord]) -> List[AuditFinding]:
    findings = []
    for r in records:
        if not r.bad:
            continue
        count = len(adjacent_triangles(g, r.vertices))
        if count > 1:
            findings.append(AuditFinding('TriangularBadCycle', r.vertices,
                                         detail=f"bad {r.length}-cycle adjacent to {count} triangles"))
        if r.ext_triangular and not any((p.kind, p.signature) in EXT_TRIANGULAR_ALLOWED
                                        for p in r.partitions):
            findings.append(AuditFinding(
                'TriangularBadCycle', r.vertices,
                detail=f"ext-triangular bad {r.length}-cycle without a (5,5,7)-claw or (5,5,5,7)-biclaw"))
    return findings


def check_splitting_paths(g: PlaneGraph) -> List[AuditFinding]:
    if not g.outer.is_simple:
        return []
    facial = facial_cycles(g)
    walk = g.outer.boundary_walk
    findings = []
    for length in range(2, 6):
        for path in find_splitting_paths(g, walk, length):
            parts = split_outer_cycle(g, path)
            if length in SPLIT_FACE_SIZES:
                ok = any(c in facial and len(c) in SPLIT_FACE_SIZES[length] for c in parts)
            else:
                ok = any(len(c) <= 9 for c in parts)
            if not ok:
                findings.append(AuditFinding(
                    'SplittingPathFace', tuple(path),
                    detail=f"splitting {length}-path {_path_text(path)} gives cycles of length "
                           f"{len(parts[0])} and {len(parts[1])}"))
    return findings


def check_good_paths(g: PlaneGraph) -> List[AuditFinding]:
    return [AuditFinding('GoodPathOnFace', path, (f.id,), detail=f"good path {_path_text(path)}")
            for f in g.faces for path in find_good_paths(g, f)]


def _internal_three(g: PlaneGraph, v: int) -> bool:
    return g.is_internal(v) and g.degree(v) == 3


def check_all_three_faces(g: PlaneGraph) -> List[AuditFinding]:
    return [AuditFinding('AllThreeFace', canonical_cycle(f.boundary_walk), (f.id,),
                         detail=f"{f.size}-face of internal 3-vertices")
            for f in g.faces
            if f.size in (5, 7) and f.is_simple and all(_internal_three(g, v) for v in f.boundary_walk)]


def _walk_neighbors(walk: Sequence[int], v: int) -> Tuple[int, int]:
    i = walk.index(v)
    return walk[i - 1], walk[(i + 1) % len(walk)]


def check_light_seven_pairs(g: PlaneGraph) -> List[AuditFinding]:
    findings = []
    seen = set()
    for x in range(g.n):
        if not (g.is_internal(x) and g.degree(x) == 4):
            continue
        sevens = sorted({f for f in g.faces_at(x) if g.faces[f].size == 7 and g.faces[f].is_simple})
        for fa, fb in combinations(sevens, 2):
            wa, wb = g.faces[fa].boundary_walk, g.faces[fb].boundary_walk
            if set(wa) & set(wb) != {x}:
                continue
            for fv, fu, wv, wu in ((fa, fb, wa, wb), (fb, fa, wb, wa)):
                for v1 in _walk_neighbors(wv, x):
                    for u1 in _walk_neighbors(wu, x):
                        if not g.has_edge(v1, u1):
                            continue
                        if not (g.is_internal(u1) and g.degree(u1) == 4):
                            continue
                        rest = (set(wv) | set(wu)) - {x, u1}
                        if not all(_internal_three(g, v) for v in rest):
                            continue
                        key = (x, frozenset((fa, fb)))
                        if key in seen:
                            continue
                        seen.add(key)
                        findings.append(AuditFinding(
                            'LightSevenPair', (x, v1, u1), (fv, fu),
                            detail=f"7-faces {face_label(fv)}, {face_label(fu)} share only "
                                   f"{vertex_label(x)}; {vertex_label(v1)}{vertex_label(u1)} is an edge"))
    return findings


def check_chorded_eight(g: PlaneGraph, records: Iterable[CycleRecord]) -> List[AuditFinding]:
    findings = []
    seen = set()
    for r in records:
        if r.length != 8:
            continue
        seq = r.vertices
        for i in range(8):
            a, y, b = seq[i], seq[(i + 1) % 8], seq[(i + 2) % 8]
            if not g.has_edge(a, b):
                continue
            for x, z in ((a, b), (b, a)):
                if not (g.is_internal(z) and g.degree(z) == 4):
                    continue
                if not all(_internal_three(g, v) for v in seq if v != z):
                    continue
                key = (seq, x, z)
                if key in seen:
                    continue
                seen.add(key)
                findings.append(AuditFinding(
                    'ChordedEight', seq,
                    detail=f"8-cycle with chord {vertex_label(x)}{vertex_label(z)}, "
                           f"{vertex_label(z)} an internal 4-vertex"))
    return findings


def _three_face_on(g: PlaneGraph, u: int, v: int) -> Optional[int]:
    found = three_faces_at_edge(g, u, v)
    return found[0] if found else None


def check_nine_faces(g: PlaneGraph) -> List[AuditFinding]:
    findings = []
    seen = set()
    for f in g.faces:
        if f.size != 9 or not f.is_simple:
            continue
        w = list(f.boundary_walk)
        for walk in (w, w[::-1]):
            for r in range(9):
                u = [walk[(r + j) % 9] for j in range(9)]
                u4 = u[3]
                if (f.id, u4) in seen:
                    continue
                if g.degree(u4) != 4:
                    continue
                if not all(is_bad_vertex(g, u[j]) for j in (0, 1, 2, 4, 5, 6)):
                    continue
                tris = [_three_face_on(g, u[a], u[b]) for a, b in ((0, 1), (2, 3), (3, 4), (5, 6))]
                if any(t is None for t in tris) or tris[1] == tris[2]:
                    continue
                seen.add((f.id, u4))
                findings.append(AuditFinding(
                    'NineFaceConfig', tuple(u), (f.id,),
                    detail=f"9-face {face_label(f.id)} with six bad vertices around "
                           f"{vertex_label(u4)}"))
    return findings


def audit_lemma_configurations(g: PlaneGraph) -> List[AuditFinding]:
    """
    Run all twelve checks.

    The bad-cycle catalog runs only when g is in G. Findings are ordered by
    check, then by witness.
    """
    records = enumerate_cycles(g, 12)
    findings: List[AuditFinding] = []
    findings += check_min_degree(g)
    findings += check_two_connected(g)
    findings += check_separating_good(records)
    findings += check_nonfacial_small(records)
    if check_class_G(g).member:
        findings += check_bad_cycle_catalog(g, strict=False, records=records)
    findings += check_triangular_bad(g, records)
    findings += check_splitting_paths(g)
    findings += check_good_paths(g)
    findings += check_all_three_faces(g)
    findings += check_light_seven_pairs(g)
    findings += check_chorded_eight(g, records)
    findings += check_nine_faces(g)
    return sorted(findings, key=AuditFinding.sort_key)


# Reduction conditions


@dataclass
class ReductionSpec:
    delete: FrozenSet[int]
    op: str
    pair: Tuple[int, int] = (-1, -1)
    edges: Tuple[Tuple[int, int], Tuple[int, int]] = ((-1, -1), (-1, -1))

    @classmethod
    def identify(cls, delete: Iterable[int], u: int, v: int) -> 'ReductionSpec':
        return cls(frozenset(delete), 'identify', (u, v))

    @classmethod
    def add_edge(cls, delete: Iterable[int], u: int, v: int) -> 'ReductionSpec':
        return cls(frozenset(delete), 'add_edge', (u, v))

    @classmethod
    def identify_edges(cls, delete: Iterable[int], first: Tuple[int, int],
                       second: Tuple[int, int]) -> 'ReductionSpec':
        """Identify edge first=(u1, u2) with second=(v1, v2), u1 onto v1."""
        return cls(frozenset(delete), 'identify_edges', edges=(tuple(first), tuple(second)))  # type: ignore


@dataclass
class ConditionViolation:
    condition: str
    detail: str
    vertices: Tuple[int, ...] = ()

    def to_dict(self) -> Dict:
        return {'condition': self.condition, 'detail': self.detail,
                'vertices': one_based(self.vertices)}


@dataclass
class ConditionReport:
    op: str
    condition_a: bool = True
    condition_b: bool = True
    side_condition: Optional[bool] = None
    created_cycles: List[int] = field(default_factory=list)
    violations: List[ConditionViolation] = field(default_factory=list)
    parts: List['ConditionReport'] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.condition_a and self.condition_b and self.side_condition is not False

    def to_dict(self) -> Dict:
        out = {'op': self.op, 'passed': self.passed, 'condition_a': self.condition_a,
               'condition_b': self.condition_b, 'side_condition': self.side_condition,
               'created_cycles': self.created_cycles,
               'violations': [v.to_dict() for v in self.violations]}
        if self.parts:
            out['parts'] = [p.to_dict() for p in self.parts]
        return out


def _validate_spec(g: PlaneGraph, spec: ReductionSpec) -> nx.Graph:
    if not spec.delete:
        raise ReductionSpecError("deletion set S is empty")
    for s in spec.delete:
        if not 0 <= s < g.n:
            raise ReductionSpecError(f"vertex {s + 1} out of range")
        if not g.is_internal(s):
            raise ReductionSpecError(f"{vertex_label(s)} in S is not internal")
    if spec.op not in ('identify', 'add_edge', 'identify_edges'):
        raise ReductionSpecError(f"unknown operation '{spec.op}'")
    ends = list(spec.pair) if spec.op != 'identify_edges' else [v for e in spec.edges for v in e]
    for v in ends:
        if not 0 <= v < g.n:
            raise ReductionSpecError(f"endpoint {v + 1} out of range")
        if v in spec.delete:
            raise ReductionSpecError(f"endpoint {vertex_label(v)} is deleted")
    h = g.to_networkx()
    h.remove_nodes_from(spec.delete)
    if spec.op != 'identify_edges':
        u, v = spec.pair
        if u == v:
            raise ReductionSpecError("operation endpoints must differ")
        if spec.op == 'add_edge' and g.has_edge(u, v):
            raise ReductionSpecError(f"{vertex_label(u)}{vertex_label(v)} is already an edge")
    else:
        for a, b in spec.edges:
            if not h.has_edge(a, b):
                raise ReductionSpecError(f"{vertex_label(a)}{vertex_label(b)} is not an edge of G - S")
    return h


def _bridge(g: PlaneGraph, delete: FrozenSet[int], u: int, v: int) -> Optional[List[int]]:
    """Shortest v -> u path whose inner vertices all lie in S."""
    sub = g.to_networkx().subgraph(set(delete) | {u, v}).copy()
    if sub.has_edge(u, v):
        sub.remove_edge(u, v)
    try:
        return nx.shortest_path(sub, v, u)
    except nx.NetworkXNoPath:
        return None


def _created_is_ext_triangular(g: PlaneGraph, delete: FrozenSet[int], path: List[int]) -> bool:
    """
    Whether the cycle created from `path` is ext-triangular: a surviving
    triangle shares an edge of the path and lies outside the cycle that the
    path closes through S.
    """
    path_edges = {tuple(sorted(e)) for e in zip(path, path[1:])}
    touching = [t for t in triangle_list(g)
                if not set(t) & delete
                and {tuple(sorted(e)) for e in combinations(t, 2)} & path_edges]
    if not touching:
        return False
    bridge = _bridge(g, delete, path[0], path[-1])
    if bridge is None:
        return True
    cycle = list(path) + bridge[1:-1]
    sides = compute_sides(g, cycle)
    on_cycle = {tuple(sorted(e)) for e in zip(cycle, cycle[1:] + cycle[:1])}
    for t in touching:
        off = [e for e in combinations(t, 2) if tuple(sorted(e)) not in on_cycle]
        if all(sides.edge_is_exterior(g, *e) for e in off):
            return True
    return False


def _check_pair(g: PlaneGraph, h: nx.Graph, delete: FrozenSet[int], op: str,
                u: int, v: int) -> ConditionReport:
    report = ConditionReport(op)
    on_d = g.external_vertices

    if u in on_d and v in on_d:
        report.condition_a = False
        verb = 'identifies' if op == 'identify' else 'joins'
        report.violations.append(ConditionViolation(
            'a', f"{verb} {vertex_label(u)} and {vertex_label(v)}, both on D", (u, v)))
    elif op == 'identify':
        for a, b in ((u, v), (v, u)):
            if a not in on_d:
                continue
            for w in sorted(h.neighbors(b)):
                if w in on_d and w != a and not g.has_edge(a, w):
                    report.condition_a = False
                    report.violations.append(ConditionViolation(
                        'a', f"creates edge {vertex_label(a)}{vertex_label(w)} between vertices of D",
                        (a, w)))

    # identify closes a k-path into a k-cycle, add_edge into a (k+1)-cycle
    extra = 0 if op == 'identify' else 1
    cutoff = 8 - extra
    lengths = set()
    for path in nx.all_simple_paths(h, u, v, cutoff=cutoff):
        k = len(path) - 1 + extra
        lengths.add(k)
        if k <= 6:
            report.condition_b = False
            report.violations.append(ConditionViolation(
                'b', f"creates a {k}-cycle through {_path_text(path)}", tuple(path)))
        elif _created_is_ext_triangular(g, delete, path):
            report.condition_b = False
            report.violations.append(ConditionViolation(
                'b', f"creates an ext-triangular {k}-cycle through {_path_text(path)}", tuple(path)))
    report.created_cycles = sorted(lengths)
    return report


def _in_short_cycle(h: nx.Graph, a: int, b: int) -> bool:
    """Whether edge ab lies on a cycle of length <= 8 in h."""
    rest = h.copy()
    rest.remove_edge(a, b)
    return any(True for _ in nx.all_simple_paths(rest, a, b, cutoff=7))


def reduction_check(g: PlaneGraph, spec: ReductionSpec) -> ConditionReport:
    """
    Check conditions (a) and (b) for a reduction, without performing it.

    Raises:
        ReductionSpecError: malformed spec
    """
    h = _validate_spec(g, spec)
    if spec.op != 'identify_edges':
        u, v = spec.pair
        return _check_pair(g, h, spec.delete, spec.op, u, v)

    (u1, u2), (v1, v2) = spec.edges
    report = ConditionReport('identify_edges')
    report.parts = [_check_pair(g, h, spec.delete, 'identify', u1, v1),
                    _check_pair(g, h, spec.delete, 'identify', u2, v2)]
    report.condition_a = all(p.condition_a for p in report.parts)
    report.condition_b = all(p.condition_b for p in report.parts)
    report.side_condition = not _in_short_cycle(h, u1, u2) or not _in_short_cycle(h, v1, v2)
    if not report.side_condition:
        report.violations.append(ConditionViolation(
            'side', f"both {vertex_label(u1)}{vertex_label(u2)} and {vertex_label(v1)}{vertex_label(v2)} "
                    f"lie on 8-cycles or shorter in G - S", (u1, u2, v1, v2)))
    for p in report.parts:
        report.violations.extend(p.violations)
    return report
