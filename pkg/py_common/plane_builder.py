"""
Plane Graph Builder

Grows plane embeddings by ear insertion: start from a cycle and add paths
inside existing inner faces. The exterior face is never split, so the
starting cycle stays the outer boundary.
"""

from typing import Iterable, List, Sequence, Tuple

from plane_graph import Face, PlaneGraph, derive_faces  # type: ignore


class PlaneBuilder:
    """Mutable rotation system that only ever inserts paths into inner faces."""

    def __init__(self, rotation: Sequence[Sequence[int]], outer_dart: Tuple[int, int]):
        self.rotation: List[List[int]] = [list(r) for r in rotation]
        self.outer_dart = outer_dart

    @classmethod
    def cycle(cls, n: int) -> 'PlaneBuilder':
        """C_n with vertices 0..n-1; the outer face is the walk through dart (1 -> 0)."""
        if n < 3:
            raise ValueError(f"cycle needs at least 3 vertices, got {n}")
        return cls([[(i - 1) % n, (i + 1) % n] for i in range(n)], (1, 0))

    @property
    def n(self) -> int:
        return len(self.rotation)

    def faces(self) -> List[Face]:
        return derive_faces(self.rotation)

    def outer_face(self) -> Face:
        a, b = self.outer_dart
        for face in self.faces():
            w = face.boundary_walk
            for i in range(len(w)):
                if w[i] == a and w[(i + 1) % len(w)] == b:
                    return face
        raise ValueError("outer dart lost")

    def inner_face_with(self, required: Iterable[int], avoid: Iterable[int] = ()) -> Face:
        required = set(required)
        avoid = set(avoid)
        outer = self.outer_face().id
        candidates = [f for f in self.faces()
                      if f.id != outer and required <= f.vertices and not (avoid & f.vertices)]
        if len(candidates) != 1:
            raise ValueError(
                f"expected one inner face containing {sorted(required)}, found {len(candidates)}")
        return candidates[0]

    def add_path(self, x: int, y: int, inner: int = 0,
                 within: Iterable[int] = (), avoid: Iterable[int] = ()) -> List[int]:
        """
        Add a path x - w1 - ... - wk - y through the unique inner face that
        contains x, y and every `within` vertex and no `avoid` vertex.

        Returns:
            New inner vertex ids, ordered from x to y
        """
        if x == y:
            raise ValueError("path endpoints must differ")
        if inner == 0 and y in self.rotation[x]:
            raise ValueError(f"edge {x}-{y} already exists")
        face = self.inner_face_with([x, y, *within], avoid)
        walk = list(face.boundary_walk)
        if walk.count(x) != 1 or walk.count(y) != 1:
            raise ValueError("path endpoint repeats on the face boundary")

        new = list(range(self.n, self.n + inner))
        path = [x] + new + [y]
        for i in range(inner):
            self.rotation.append([path[i], path[i + 2]])
        self._insert(walk, x, path[1])
        self._insert(walk, y, path[-2])
        return new

    def add_hub(self, targets: Sequence[int], within: Iterable[int] = ()) -> int:
        """New vertex adjacent to every target; all targets must share one inner face."""
        if len(targets) < 2:
            raise ValueError("a hub needs at least two targets")
        [hub] = self.add_path(targets[0], targets[1], inner=1, within=[*targets, *within])
        for t in targets[2:]:
            self.add_path(hub, t)
        return hub

    def _insert(self, walk: List[int], x: int, w: int):
        # the face walk passes p -> x -> q; w goes between p and q
        p = walk[walk.index(x) - 1]
        rot = self.rotation[x]
        rot.insert(rot.index(p) + 1, w)

    def build(self, name: str = '') -> PlaneGraph:
        return PlaneGraph(self.rotation, outer_walk=self.outer_face().boundary_walk, name=name)
