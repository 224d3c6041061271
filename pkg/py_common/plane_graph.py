"""
Plane Graph Model

Immutable plane graphs given by a rotation system: per-vertex clockwise
neighbor order, derived faces, and a designated exterior face f0.
Includes the rotation-text and planar_code readers/writers.

Vertex ids are 0-based in memory and 1-based in both file formats.
"""

import re
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

PLANAR_CODE_HEADER = b">>planar_code<<"
PLANAR_CODE_MAX_N = 255


class PlaneGraphError(ValueError):
    """Base class for plane-graph parse and validation failures."""


class RotationSyntaxError(PlaneGraphError):
    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class EmbeddingError(PlaneGraphError):
    """Rotation system is not a simple connected plane embedding."""

    def __init__(self, message: str, kind: str):
        super().__init__(message)
        self.kind = kind


class PlanarCodeError(PlaneGraphError):
    def __init__(self, message: str, graph_index: int):
        super().__init__(f"graph {graph_index}: {message}")
        self.graph_index = graph_index
        self.last_good = graph_index - 1


@dataclass(frozen=True)
class Face:
    id: int
    boundary_walk: Tuple[int, ...]

    @property
    def size(self) -> int:
        return len(self.boundary_walk)

    @property
    def vertices(self) -> FrozenSet[int]:
        return frozenset(self.boundary_walk)

    @property
    def is_simple(self) -> bool:
        """A boundary walk is a simple cycle iff no vertex repeats."""
        return len(self.vertices) == self.size and self.size >= 3

    def edges(self) -> List[Tuple[int, int]]:
        w = self.boundary_walk
        return [_edge(w[i], w[(i + 1) % len(w)]) for i in range(len(w))]


@dataclass
class ValidationReport:
    simple: bool = True
    connected: bool = True
    euler_ok: bool = True
    two_connected: bool = True
    faces_simple: bool = True
    articulation_points: List[int] = field(default_factory=list)
    non_simple_faces: List[int] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.simple and self.connected and self.euler_ok


def _edge(u: int, v: int) -> Tuple[int, int]:
    return (u, v) if u < v else (v, u)


def derive_faces(rotation: Sequence[Sequence[int]]) -> List[Face]:
    """
    Trace the faces of a rotation system.

    The successor of dart (u -> v) is (v -> w) where w follows u in the
    clockwise rotation at v. Darts are started from v = 0..n-1 in rotation
    order, so face ids are deterministic.

    Args:
        rotation: per-vertex neighbor lists (0-based)

    Returns:
        List of Face, each directed edge used exactly once
    """
    position = [{w: i for i, w in enumerate(nbrs)} for nbrs in rotation]
    seen = set()
    faces: List[Face] = []
    for v in range(len(rotation)):
        for w in rotation[v]:
            if (v, w) in seen:
                continue
            walk = []
            a, b = v, w
            while (a, b) not in seen:
                seen.add((a, b))
                walk.append(a)
                nbrs = rotation[b]
                nxt = nbrs[(position[b][a] + 1) % len(nbrs)]
                a, b = b, nxt
            faces.append(Face(len(faces), tuple(walk)))
    return faces


def _match_walk(faces: Sequence[Face], walk: Sequence[int]) -> Optional[int]:
    """Find the face whose walk equals `walk` up to rotation; exact orientation first."""
    target = list(walk)
    k = len(target)
    for candidate in (target, target[::-1]):
        for face in faces:
            w = list(face.boundary_walk)
            if len(w) != k:
                continue
            for shift in range(k):
                if w[shift:] + w[:shift] == candidate:
                    return face.id
    return None


class PlaneGraph:
    """
    Simple connected plane graph with a clockwise rotation system.

    Construction validates the embedding and raises EmbeddingError on
    loops, parallel edges, asymmetric rotations, disconnected input or an
    Euler-formula violation (non-planar rotation).
    """

    def __init__(self, rotation: Sequence[Sequence[int]],
                 outer_walk: Optional[Sequence[int]] = None, name: str = ''):
        self.name = name
        self.n = len(rotation)
        self.rotation: Tuple[Tuple[int, ...], ...] = tuple(tuple(r) for r in rotation)
        self._check_rotation()

        self.edges: FrozenSet[Tuple[int, int]] = frozenset(
            _edge(v, w) for v in range(self.n) for w in self.rotation[v])
        self._adjacency: Tuple[FrozenSet[int], ...] = tuple(frozenset(r) for r in self.rotation)

        if not nx.is_connected(self.to_networkx()):
            raise EmbeddingError("graph is disconnected", 'disconnected')

        self.faces: Tuple[Face, ...] = tuple(derive_faces(self.rotation))
        if self.n - len(self.edges) + len(self.faces) != 2:
            raise EmbeddingError(
                f"Euler violation: n={self.n}, edges={len(self.edges)}, "
                f"faces={len(self.faces)} (expected {2 - self.n + len(self.edges)} faces)",
                'euler')

        self._dart_face: Dict[Tuple[int, int], int] = {}
        for face in self.faces:
            w = face.boundary_walk
            for i in range(len(w)):
                self._dart_face[(w[i], w[(i + 1) % len(w)])] = face.id

        if outer_walk is None:
            self.outer_face = max(self.faces, key=lambda f: (f.size, -f.id)).id
        else:
            found = _match_walk(self.faces, outer_walk)
            if found is None:
                raise EmbeddingError(
                    "outer walk does not match any face: "
                    + " ".join(str(v + 1) for v in outer_walk), 'outer')
            self.outer_face = found
        self.external_vertices: FrozenSet[int] = self.faces[self.outer_face].vertices

    def _check_rotation(self):
        if self.n < 2:
            raise EmbeddingError("graph needs at least one edge", 'empty')
        for v, nbrs in enumerate(self.rotation):
            if not nbrs:
                raise EmbeddingError(f"vertex {v + 1} has no neighbors", 'disconnected')
            for w in nbrs:
                if not 0 <= w < self.n:
                    raise EmbeddingError(f"vertex {v + 1}: neighbor {w + 1} out of range", 'range')
                if w == v:
                    raise EmbeddingError(f"loop at vertex {v + 1}", 'loop')
            if len(set(nbrs)) != len(nbrs):
                raise EmbeddingError(f"parallel edge at vertex {v + 1}", 'parallel')
        for v, nbrs in enumerate(self.rotation):
            for w in nbrs:
                if v not in self.rotation[w]:
                    raise EmbeddingError(
                        f"asymmetric rotation: {w + 1} in rotation of {v + 1} but not vice versa",
                        'asymmetric')

    # Basic queries

    def degree(self, v: int) -> int:
        return len(self.rotation[v])

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self._adjacency[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adjacency[u]

    def is_internal(self, v: int) -> bool:
        return v not in self.external_vertices

    @property
    def outer(self) -> Face:
        return self.faces[self.outer_face]

    def face_of_dart(self, u: int, v: int) -> int:
        return self._dart_face[(u, v)]

    def edge_faces(self, u: int, v: int) -> Tuple[int, int]:
        """Faces on the two sides of edge uv (equal for a bridge)."""
        return self._dart_face[(u, v)], self._dart_face[(v, u)]

    def faces_at(self, v: int) -> List[int]:
        """Face ids around v, one per corner, in rotation order."""
        return [self._dart_face[(v, w)] for w in self.rotation[v]]

    def triangles(self) -> List[Tuple[int, int, int]]:
        """All 3-cycles as sorted vertex triples."""
        found = []
        for u, v in sorted(self.edges):
            for w in self._adjacency[u] & self._adjacency[v]:
                if w > v:
                    found.append((u, v, w))
        return sorted(found)

    def to_networkx(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.edges)
        return g

    # Derived embeddings

    def with_outer(self, walk: Sequence[int]) -> 'PlaneGraph':
        return PlaneGraph(self.rotation, outer_walk=walk, name=self.name)

    def relabeled(self, perm: Sequence[int]) -> 'PlaneGraph':
        """Isomorphic embedding where old vertex v becomes perm[v]."""
        rotation: List[List[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            rotation[perm[v]] = [perm[w] for w in self.rotation[v]]
        outer = [perm[v] for v in self.outer.boundary_walk]
        return PlaneGraph(rotation, outer_walk=outer, name=self.name)

    def face_sizes(self) -> List[int]:
        return sorted(f.size for f in self.faces)

    def __repr__(self):
        label = f" {self.name}" if self.name else ''
        return (f"<PlaneGraph{label} n={self.n} edges={len(self.edges)} "
                f"faces={len(self.faces)} outer=f{self.outer_face}>")


def validate(g: PlaneGraph) -> ValidationReport:
    """
    Report-only structural checks.

    Simplicity, connectivity and Euler hold for every constructed
    PlaneGraph; 2-connectivity and simple face boundaries are reported.
    """
    report = ValidationReport()
    nxg = g.to_networkx()
    report.connected = nx.is_connected(nxg)
    report.euler_ok = g.n - len(g.edges) + len(g.faces) == 2
    report.simple = all(len(set(r)) == len(r) and v not in r for v, r in enumerate(g.rotation))
    report.articulation_points = sorted(nx.articulation_points(nxg))
    report.two_connected = g.n >= 3 and not report.articulation_points
    report.non_simple_faces = [f.id for f in g.faces if not f.is_simple]
    report.faces_simple = not report.non_simple_faces
    return report


def parse_rotation_text(text: Union[str, bytes], name: str = '',
                        outer_override: Optional[Sequence[int]] = None) -> PlaneGraph:
    """
    Parse the rotation-text format.

    Format: optional '#' comment lines, a line with n, then n lines
    'v: a b c ...' (1-based, clockwise), then an optional 'outer: ...' line.

    Args:
        text: file contents (str or UTF-8 bytes), LF or CRLF
        name: label stored on the graph
        outer_override: 0-based outer walk replacing any 'outer:' line

    Returns:
        PlaneGraph
    """
    if isinstance(text, bytes):
        try:
            text = text.decode('utf-8')
        except UnicodeDecodeError as e:
            raise RotationSyntaxError(f"not UTF-8: {e}", 1)

    lines = [(i + 1, raw.rstrip('\r')) for i, raw in enumerate(text.split('\n'))]
    data = [(no, s) for no, s in lines if s.strip() and not s.lstrip().startswith('#')]
    if not data:
        raise RotationSyntaxError("missing vertex count", 1)

    count_line, count_text = data[0]
    try:
        n = int(count_text.strip())
    except ValueError:
        raise RotationSyntaxError(f"expected vertex count, got '{count_text.strip()}'",
                                  count_line, _column(count_text))
    if n < 1:
        raise RotationSyntaxError("vertex count must be positive", count_line, _column(count_text))

    rotation: List[Optional[List[int]]] = [None] * n
    outer_walk: Optional[List[int]] = None
    for line_no, s in data[1:]:
        if outer_walk is not None:
            raise RotationSyntaxError("data after 'outer:' line", line_no, _column(s))
        head, sep, rest = s.partition(':')
        if not sep:
            raise RotationSyntaxError("expected 'v: neighbors'", line_no, _column(s))
        label = head.strip()
        numbers = _parse_ids(rest, n, line_no, s.index(':') + 2)
        if label == 'outer':
            outer_walk = numbers
            continue
        try:
            v = int(label)
        except ValueError:
            raise RotationSyntaxError(f"bad vertex label '{label}'", line_no, _column(s))
        if not 1 <= v <= n:
            raise RotationSyntaxError(f"vertex {v} out of range 1..{n}", line_no, _column(s))
        if rotation[v - 1] is not None:
            raise RotationSyntaxError(f"vertex {v} listed twice", line_no, _column(s))
        rotation[v - 1] = numbers

    missing = [v + 1 for v, r in enumerate(rotation) if r is None]
    if missing:
        raise RotationSyntaxError(f"missing rotation for vertex {missing[0]}", data[-1][0] + 1)

    if outer_override is not None:
        outer_walk = list(outer_override)
    return PlaneGraph(rotation, outer_walk=outer_walk, name=name)  # type: ignore


def _column(s: str) -> int:
    return len(s) - len(s.lstrip()) + 1


def _parse_ids(rest: str, n: int, line_no: int, base_col: int) -> List[int]:
    ids = []
    for match in re.finditer(r"\S+", rest):
        token = match.group()
        col = base_col + match.start()
        try:
            k = int(token)
        except ValueError:
            raise RotationSyntaxError(f"bad vertex id '{token}'", line_no, col)
        if not 1 <= k <= n:
            raise RotationSyntaxError(f"vertex id {k} out of range 1..{n}", line_no, col)
        ids.append(k - 1)
    return ids


def emit_rotation_text(g: PlaneGraph) -> str:
    """Serialize to rotation text, including the outer walk."""
    out = []
    if g.name:
        out.append(f"# {g.name}")
    out.append(str(g.n))
    for v in range(g.n):
        out.append(f"{v + 1}: " + " ".join(str(w + 1) for w in g.rotation[v]))
    out.append("outer: " + " ".join(str(v + 1) for v in g.outer.boundary_walk))
    return "\n".join(out) + "\n"


def iter_planar_code_records(data: bytes) -> Iterator[Tuple[int, List[List[int]]]]:
    """
    Decode planar_code records without building graphs.

    Yields (index, rotation) with 0-based rotations. Raises PlanarCodeError
    on truncation or an out-of-range neighbor id; records before the
    corrupt one have already been yielded.
    """
    pos = 0
    if data.startswith(b">>planar_code"):
        end = data.find(b"<<", 2)
        if end < 0:
            raise PlanarCodeError("unterminated header", 0)
        pos = end + 2
    index = 0
    while pos < len(data):
        n = data[pos]
        pos += 1
        if n == 0:
            raise PlanarCodeError("vertex count 0 is not supported", index)
        rotation: List[List[int]] = []
        for v in range(n):
            nbrs = []
            while True:
                if pos >= len(data):
                    raise PlanarCodeError(f"truncated in neighbor list of vertex {v + 1}", index)
                b = data[pos]
                pos += 1
                if b == 0:
                    break
                if b > n:
                    raise PlanarCodeError(f"neighbor id {b} out of range 1..{n}", index)
                nbrs.append(b - 1)
            rotation.append(nbrs)
        yield index, rotation
        index += 1


def parse_planar_code(data: bytes) -> List[PlaneGraph]:
    """
    Decode every graph of a planar_code stream.

    Raises:
        PlanarCodeError: the byte stream itself is corrupt
        EmbeddingError: a record decodes but is not a plane embedding; the
            message names the graph index
    """
    graphs = []
    for index, rotation in iter_planar_code_records(data):
        try:
            graphs.append(PlaneGraph(rotation, name=f"#{index}"))
        except EmbeddingError as e:
            raise EmbeddingError(f"graph {index}: {e}", e.kind) from e
    return graphs


def emit_planar_code(graphs: Sequence[PlaneGraph], header: bool = True) -> bytes:
    out = bytearray(PLANAR_CODE_HEADER if header else b"")
    for g in graphs:
        if g.n > PLANAR_CODE_MAX_N:
            raise PlaneGraphError(
                f"planar_code holds at most {PLANAR_CODE_MAX_N} vertices, graph has {g.n}")
        out.append(g.n)
        for v in range(g.n):
            out.extend(w + 1 for w in g.rotation[v])
            out.append(0)
    return bytes(out)
