"""
Cycle, Path and Face Structures

Detects and classifies the structures defined on cycles, paths, faces and
vertices of a plane graph: sides of a cycle, chords, claws, biclaws and
triclaws with their cell signatures, good/bad/special cycles, splitting
and good paths, light 7-faces and the A/B/C/D classes of a face.

Sides are computed combinatorially: the dual face-adjacency graph is cut
along the cycle's edges and the shore holding the exterior face is the
outside.
"""

import sys
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations, product
from pathlib import Path
from typing import Dict, FrozenSet, List, Optional, Sequence, Set, Tuple

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

import networkx as nx
from gmpy2 import mpq  # type: ignore

from plane_graph import Face, PlaneGraph  # type: ignore
from rational_text import format_rational  # type: ignore

MAX_CYCLE_LEN = 13
GOOD_CYCLE_MAX = 12

# Edges of the partitioning structure T, by kind
PARTITION_EDGES = {'chord': 1, 'claw': 3, 'biclaw': 5, 'triclaw': 6}


class StructureError(ValueError):
    """Sequence is not a cycle of the graph, or a face boundary is not simple."""


def vertex_label(v: int) -> str:
    return f"v{v + 1}"


def face_label(f: int) -> str:
    return f"f{f}"


def one_based(seq: Sequence[int]) -> List[int]:
    return [v + 1 for v in seq]


def canonical_cycle(seq: Sequence[int]) -> Tuple[int, ...]:
    """Lexicographically minimal rotation or reflection of a cyclic sequence."""
    seq = list(seq)
    k = len(seq)
    best = None
    for candidate in (seq, seq[::-1]):
        for shift in range(k):
            t = tuple(candidate[shift:] + candidate[:shift])
            if best is None or t < best:
                best = t
    return best if best is not None else ()


def _edge(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


def cycle_edge_set(seq: Sequence[int]) -> FrozenSet[Tuple[int, int]]:
    k = len(seq)
    return frozenset(_edge(seq[i], seq[(i + 1) % k]) for i in range(k))


def check_cycle(g: PlaneGraph, seq: Sequence[int]):
    if len(seq) < 3:
        raise StructureError(f"a cycle needs at least 3 vertices, got {len(seq)}")
    if len(set(seq)) != len(seq):
        raise StructureError("cycle repeats a vertex")
    for v in seq:
        if not 0 <= v < g.n:
            raise StructureError(f"vertex {v + 1} out of range")
    k = len(seq)
    for i in range(k):
        a, b = seq[i], seq[(i + 1) % k]
        if not g.has_edge(a, b):
            raise StructureError(f"{vertex_label(a)}{vertex_label(b)} is not an edge")


# Cached per-graph helpers (PlaneGraph is immutable and hashed by identity)


@lru_cache(maxsize=256)
def triangle_list(g: PlaneGraph) -> Tuple[Tuple[int, int, int], ...]:
    return tuple(g.triangles())


@lru_cache(maxsize=256)
def triangular_vertices(g: PlaneGraph) -> FrozenSet[int]:
    return frozenset(v for t in triangle_list(g) for v in t)


@lru_cache(maxsize=256)
def facial_cycles(g: PlaneGraph) -> Dict[Tuple[int, ...], int]:
    return {canonical_cycle(f.boundary_walk): f.id for f in g.faces if f.is_simple}


def is_triangular(g: PlaneGraph, v: int) -> bool:
    return v in triangular_vertices(g)


def is_bad_vertex(g: PlaneGraph, v: int) -> bool:
    """Internal triangular 3-vertex."""
    return g.is_internal(v) and g.degree(v) == 3 and is_triangular(g, v)


def edge_on_triangle(g: PlaneGraph, u: int, v: int) -> bool:
    return bool(g.neighbors(u) & g.neighbors(v))


def three_faces_at_edge(g: PlaneGraph, u: int, v: int) -> List[int]:
    return sorted({f for f in g.edge_faces(u, v) if g.faces[f].size == 3})


# Sides


@dataclass
class CycleSides:
    """Shores of a cycle: exterior face ids plus the vertex sides."""
    exterior_faces: FrozenSet[int]
    interior: FrozenSet[int]
    exterior: FrozenSet[int]

    def edge_is_exterior(self, g: PlaneGraph, u: int, v: int) -> bool:
        return g.face_of_dart(u, v) in self.exterior_faces


def compute_sides(g: PlaneGraph, seq: Sequence[int]) -> CycleSides:
    check_cycle(g, seq)
    on_cycle = cycle_edge_set(seq)
    dual = nx.Graph()
    dual.add_nodes_from(range(len(g.faces)))
    for u, v in g.edges:
        if (u, v) in on_cycle:
            continue
        f1, f2 = g.edge_faces(u, v)
        if f1 != f2:
            dual.add_edge(f1, f2)
    outside = frozenset(nx.node_connected_component(dual, g.outer_face))

    members = set(seq)
    interior, exterior = set(), set()
    for v in range(g.n):
        if v in members:
            continue
        if g.face_of_dart(v, g.rotation[v][0]) in outside:
            exterior.add(v)
        else:
            interior.add(v)
    return CycleSides(outside, frozenset(interior), frozenset(exterior))


def cycle_sides(g: PlaneGraph, cycle: Sequence[int]) -> Tuple[FrozenSet[int], FrozenSet[int]]:
    """
    Interior and exterior vertex sets of a cycle.

    Raises:
        StructureError: if `cycle` is not a cycle of g
    """
    sides = compute_sides(g, cycle)
    return sides.interior, sides.exterior


# Bad partitions


@dataclass
class BadPartition:
    kind: str
    anchor_vertices: Tuple[int, ...]
    legs: Tuple[Tuple[int, int], ...]
    cells: List[Tuple[int, ...]]
    signature: Tuple[int, ...]

    def to_dict(self) -> Dict:
        return {
            'kind': self.kind,
            'anchors': one_based(self.anchor_vertices),
            'legs': [one_based(leg) for leg in self.legs],
            'cells': [one_based(c) for c in self.cells],
            'signature': list(self.signature),
        }

    @property
    def label(self) -> str:
        return f"({','.join(str(k) for k in self.signature)})-{self.kind}"


def _arc(seq: Sequence[int], i: int, j: int) -> List[int]:
    """Cycle vertices from position i forward to position j, inclusive."""
    k = len(seq)
    out = [seq[i]]
    while i != j:
        i = (i + 1) % k
        out.append(seq[i])
    return out


def _cells_from_legs(seq: Sequence[int], legs: Sequence[Tuple[int, int]]) -> List[Tuple[int, ...]]:
    """
    Cells cut off between cyclically consecutive legs.

    Each leg is (position on C, hub vertex); consecutive legs with the same
    hub close through that hub, otherwise through the hub-to-hub edge.
    """
    cells = []
    t = len(legs)
    for i in range(t):
        pa, ha = legs[i]
        pb, hb = legs[(i + 1) % t]
        cell = _arc(seq, pa, pb)
        cell += [hb] if ha == hb else [hb, ha]
        cells.append(tuple(cell))
    return cells


def _consecutive_hubs(hubs: Sequence[int]) -> bool:
    changes = sum(1 for i in range(len(hubs)) if hubs[i] != hubs[(i + 1) % len(hubs)])
    return changes <= 2


def find_bad_partitions(g: PlaneGraph, cycle: Sequence[int],
                        sides: Optional[CycleSides] = None) -> List[BadPartition]:
    """
    All chords, claws, biclaws and triclaws of a cycle.

    Args:
        g: plane graph
        cycle: vertex sequence of a cycle of g
        sides: precomputed sides, if the caller has them

    Returns:
        List of BadPartition in deterministic order (chords, claws,
        biclaws, triclaws)
    """
    seq = list(cycle)
    if sides is None:
        sides = compute_sides(g, seq)
    k = len(seq)
    pos = {v: i for i, v in enumerate(seq)}
    inside = sides.interior
    found: List[BadPartition] = []

    def on_c(v: int) -> List[int]:
        return sorted(pos[w] for w in g.neighbors(v) if w in pos)

    # chords
    on_cycle = cycle_edge_set(seq)
    for u, v in sorted(g.edges):
        if u in pos and v in pos and (u, v) not in on_cycle \
                and not sides.edge_is_exterior(g, u, v):
            i, j = sorted((pos[u], pos[v]))
            cells = [tuple(_arc(seq, i, j)), tuple(_arc(seq, j, i))]
            found.append(BadPartition('chord', (), ((u, v),), cells,
                                      canonical_cycle([len(c) for c in cells])))

    # claws
    for v in sorted(inside):
        for legs in combinations(on_c(v), 3):
            cells = _cells_from_legs(seq, [(p, v) for p in legs])
            found.append(BadPartition('claw', (v,), tuple((v, seq[p]) for p in legs), cells,
                                      canonical_cycle([len(c) for c in cells])))

    # biclaws
    for u, v in sorted(g.edges):
        if u not in inside or v not in inside:
            continue
        for lu, lv in product(combinations(on_c(u), 2), combinations(on_c(v), 2)):
            legs = [(p, u) for p in lu] + [(p, v) for p in lv]
            ordered = None
            for tie in (1, -1):
                attempt = sorted(legs, key=lambda leg: (leg[0], tie * leg[1]))
                if _consecutive_hubs([h for _, h in attempt]):
                    ordered = attempt
                    break
            if ordered is None:
                continue
            cells = _cells_from_legs(seq, ordered)
            found.append(BadPartition('biclaw', (u, v),
                                      tuple((h, seq[p]) for p, h in ordered), cells,
                                      canonical_cycle([len(c) for c in cells])))

    # triclaws
    for tri in triangle_list(g):
        if not all(x in inside for x in tri):
            continue
        choices = [on_c(x) for x in tri]
        for picks in product(*choices):
            legs = sorted(zip(picks, tri))
            cells = [tuple(tri)] + _cells_from_legs(seq, legs)
            rest = canonical_cycle([len(c) for c in cells[1:]])
            found.append(BadPartition('triclaw', tuple(tri),
                                      tuple((h, seq[p]) for p, h in legs), cells,
                                      (3,) + rest))
    return found


# Cycle records


@dataclass
class CycleRecord:
    vertices: Tuple[int, ...]
    length: int
    interior: FrozenSet[int]
    exterior: FrozenSet[int]
    facial: bool = False
    separating: bool = False
    good: bool = False
    bad: bool = False
    special9: bool = False
    triangular: bool = False
    ext_triangular: bool = False
    partitions: List[BadPartition] = field(default_factory=list)

    @property
    def flags(self) -> List[str]:
        names = ['facial', 'separating', 'good', 'bad', 'special9', 'triangular', 'ext_triangular']
        return [n for n in names if getattr(self, n)]

    def to_dict(self) -> Dict:
        return {
            'vertices': one_based(self.vertices),
            'length': self.length,
            'interior': one_based(sorted(self.interior)),
            'exterior': one_based(sorted(self.exterior)),
            'flags': self.flags,
            'partitions': [p.to_dict() for p in self.partitions],
        }


def adjacent_triangles(g: PlaneGraph, seq: Sequence[int]) -> List[Tuple[int, int, int]]:
    """Triangles other than C sharing at least one edge with C."""
    edges = cycle_edge_set(seq)
    canon = canonical_cycle(seq)
    hits = []
    for tri in triangle_list(g):
        if len(seq) == 3 and canonical_cycle(tri) == canon:
            continue
        a, b, c = tri
        if {_edge(a, b), _edge(a, c), _edge(b, c)} & edges:
            hits.append(tri)
    return hits


def classify_cycle(g: PlaneGraph, cycle: Sequence[int]) -> CycleRecord:
    """
    Build a CycleRecord with every classification flag set.

    Raises:
        StructureError: if `cycle` is not a cycle of g
    """
    sides = compute_sides(g, cycle)
    seq = canonical_cycle(cycle)
    k = len(seq)
    record = CycleRecord(vertices=seq, length=k, interior=sides.interior, exterior=sides.exterior)
    record.facial = seq in facial_cycles(g)
    record.separating = bool(sides.interior) and bool(sides.exterior)
    record.partitions = find_bad_partitions(g, seq, sides)
    if k <= GOOD_CYCLE_MAX:
        record.good = not any(p.kind != 'chord' for p in record.partitions)
        record.bad = not record.good
    if k == 9:
        record.special9 = any((p.kind, p.signature) in (('chord', (3, 8)), ('claw', (5, 5, 5)))
                              for p in record.partitions)

    edges = cycle_edge_set(seq)
    for tri in adjacent_triangles(g, seq):
        record.triangular = True
        a, b, c = tri
        off = [e for e in (_edge(a, b), _edge(a, c), _edge(b, c)) if e not in edges]
        if all(sides.edge_is_exterior(g, *e) for e in off):
            record.ext_triangular = True
    return record


def iter_cycles(g: PlaneGraph, max_len: int = MAX_CYCLE_LEN):
    """
    Yield every simple cycle of length <= max_len once, in canonical form.

    DFS from each anchor s through vertices larger than s; a closed path is
    kept in the direction whose second vertex is smaller, which makes the
    emitted tuple its own canonical form.
    """
    if not 3 <= max_len <= MAX_CYCLE_LEN:
        raise ValueError(f"max_len must be in 3..{MAX_CYCLE_LEN}, got {max_len}")
    adjacency = [sorted(g.neighbors(v)) for v in range(g.n)]
    for s in range(g.n):
        path = [s]
        on_path = {s}
        stack = [iter(w for w in adjacency[s] if w > s)]
        while stack:
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                on_path.discard(path.pop())
                continue
            if len(path) >= 2 and s in g.neighbors(nxt) and path[1] < nxt:
                yield tuple(path + [nxt])
            if len(path) < max_len - 1:
                path.append(nxt)
                on_path.add(nxt)
                stack.append(iter(w for w in adjacency[nxt] if w > s and w not in on_path))

def enumerate_cycles(g: PlaneGraph, max_len: int = MAX_CYCLE_LEN) -> List[CycleRecord]:
    """All simple cycles up to max_len, classified, ordered by (length, vertices)."""
    seqs = sorted(iter_cycles(g, max_len), key=lambda c: (len(c), c))
    return [classify_cycle(g, c) for c in seqs]


# Paths


def _check_outer(g: PlaneGraph, outer: Sequence[int]):
    walk = g.outer.boundary_walk
    if not g.outer.is_simple:
        raise StructureError("exterior boundary is not a simple cycle")
    if canonical_cycle(outer) != canonical_cycle(walk):
        raise StructureError("cycle is not the boundary of the exterior face")


def find_splitting_paths(g: PlaneGraph, outer: Sequence[int], length: int) -> List[Tuple[int, ...]]:
    """
    Splitting paths of D with `length` edges: both ends on D, every inner
    vertex internal. Each path is reported once, from its smaller end.
    """
    if not 2 <= length <= 5:
        raise ValueError(f"splitting path length must be in 2..5, got {length}")
    _check_outer(g, outer)
    on_d = set(outer)
    found = []

    def extend(path: List[int]):
        last = path[-1]
        if len(path) == length:
            for y in g.neighbors(last):
                if y in on_d and y != path[0] and y > path[0]:
                    found.append(tuple(path + [y]))
            return
        for w in g.neighbors(last):
            if w not in on_d and w not in path:
                extend(path + [w])

    for x in sorted(on_d):
        extend([x])
    return sorted(found)


def split_outer_cycle(g: PlaneGraph, path: Sequence[int]) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """
    The two cycles D', D'' into which a splitting path divides D.

    Returns:
        (D', D'') in canonical form, D' through the arc from the path's last
        vertex forward to its first
    """
    walk = list(g.outer.boundary_walk)
    x, y = path[0], path[-1]
    if x not in walk or y not in walk:
        raise StructureError("splitting path must start and end on D")
    i, j = walk.index(x), walk.index(y)
    inner = list(path[1:-1])
    first = _arc(walk, j, i)[1:-1]
    second = _arc(walk, i, j)[1:-1]
    d1 = [x] + inner + [y] + first
    d2 = [y] + inner[::-1] + [x] + second
    return canonical_cycle(d1), canonical_cycle(d2)


def find_good_paths(g: PlaneGraph, face: Face) -> List[Tuple[int, int, int, int]]:
    """
    3-paths along the face walk made of internal 3-vertices whose first or
    last edge lies on a triangle. Paths follow the walk direction only.
    """
    w = face.boundary_walk
    k = len(w)
    if k < 4:
        return []
    found = []
    for i in range(k):
        q = tuple(w[(i + j) % k] for j in range(4))
        if len(set(q)) != 4:
            continue
        if not all(g.is_internal(v) and g.degree(v) == 3 for v in q):
            continue
        if edge_on_triangle(g, q[0], q[1]) or edge_on_triangle(g, q[2], q[3]):
            found.append(q)
    return found


# Faces


def is_light_7face(g: PlaneGraph, face: Face) -> bool:
    if face.size != 7 or not face.is_simple:
        return False
    if not any(three_faces_at_edge(g, u, v) for u, v in face.edges()):
        return False
    if any(not g.is_internal(v) for v in face.boundary_walk):
        return False
    return all(g.degree(v) == 3 for v in face.boundary_walk if not is_triangular(g, v))


@dataclass
class FaceVertexClasses:
    face: int
    A: FrozenSet[int]
    B: FrozenSet[int]
    C: FrozenSet[int]
    D: FrozenSet[int]
    star_bound: mpq

    def to_dict(self) -> Dict:
        return {
            'face': face_label(self.face),
            'A': one_based(sorted(self.A)),
            'B': one_based(sorted(self.B)),
            'C': one_based(sorted(self.C)),
            'D': one_based(sorted(self.D)),
            'star_bound': format_rational(self.star_bound),
        }


def classify_face_vertices(g: PlaneGraph, face: Face) -> FaceVertexClasses:
    """
    Split V(f) by badness along the walk: D = bad vertices; a good vertex
    goes to A, B or C when two, one or none of its walk neighbors are bad.
    """
    if not face.is_simple:
        raise StructureError(f"face {face_label(face.id)} boundary is not a simple cycle")
    w = face.boundary_walk
    k = len(w)
    bad: Set[int] = {v for v in w if is_bad_vertex(g, v)}
    classes: Dict[str, Set[int]] = {'A': set(), 'B': set(), 'C': set(), 'D': set()}
    for i, v in enumerate(w):
        if v in bad:
            classes['D'].add(v)
            continue
        around = (w[i - 1] in bad) + (w[(i + 1) % k] in bad)
        classes['CBA'[around]].add(v)
    star = (mpq(1, 3) * len(classes['A']) + mpq(7, 24) * len(classes['B'])
            + mpq(1, 6) * len(classes['C']) + mpq(1, 3) * k - 4)
    return FaceVertexClasses(face.id, frozenset(classes['A']), frozenset(classes['B']),
                             frozenset(classes['C']), frozenset(classes['D']), star)
