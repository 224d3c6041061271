"""
Exact 3-Coloring

Backtracking solver with bitmask domains and forced-move propagation
(a vertex left with one color is colored at once). Vertices are branched
in decreasing degree, then id; colors are tried 0, 1, 2. The same search
solves, counts, extends precolorings and checks the boundary-extension
property of a graph whose outer face is a good cycle.
"""

import sys
from dataclasses import dataclass, field
from itertools import product
from pathlib import Path
from typing import Dict, FrozenSet, Iterable, Iterator, List, Optional, Sequence

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from plane_graph import PlaneGraph  # type: ignore
from class_membership import check_class_G
from structures import StructureError, classify_cycle, vertex_label

COLORS = (0, 1, 2)
ALL_COLORS = 0b111
NAIVE_COUNT_LIMIT = 12
WITNESS_CAP = 10


class ColoringError(ValueError):
    """Improper or out-of-range (pre)coloring, or the naive count guard tripped."""


@dataclass
class Coloring:
    assignment: Dict[int, int]
    partial: bool = False

    def to_dict(self) -> Dict:
        return {'partial': self.partial,
                'colors': {vertex_label(v): c for v, c in sorted(self.assignment.items())}}


class _Search:
    """Enumerates proper 3-colorings of the subgraph induced on `vertices`."""

    def __init__(self, adjacency: Sequence[FrozenSet[int]], vertices: Iterable[int]):
        self.vertices = frozenset(vertices)
        self.adj = {v: adjacency[v] & self.vertices for v in self.vertices}
        self.order = sorted(self.vertices, key=lambda v: (-len(self.adj[v]), v))

    def _assign(self, colors: Dict[int, int], domains: Dict[int, int], v: int, c: int) -> bool:
        stack = [(v, c)]
        while stack:
            v, c = stack.pop()
            if v in colors:
                if colors[v] != c:
                    return False
                continue
            if not domains[v] >> c & 1:
                return False
            colors[v] = c
            domains[v] = 1 << c
            for w in self.adj[v]:
                if w in colors:
                    continue
                d = domains[w] & ~(1 << c)
                if d == 0:
                    return False
                domains[w] = d
                if d & (d - 1) == 0:
                    stack.append((w, d.bit_length() - 1))
        return True

    def _search(self, colors: Dict[int, int], domains: Dict[int, int]) -> Iterator[Dict[int, int]]:
        v = next((u for u in self.order if u not in colors), None)
        if v is None:
            yield dict(colors)
            return
        for c in COLORS:
            if not domains[v] >> c & 1:
                continue
            trial_colors, trial_domains = dict(colors), dict(domains)
            if self._assign(trial_colors, trial_domains, v, c):
                yield from self._search(trial_colors, trial_domains)

    def colorings(self, pre: Optional[Dict[int, int]] = None) -> Iterator[Dict[int, int]]:
        colors: Dict[int, int] = {}
        domains = {v: ALL_COLORS for v in self.vertices}
        for v, c in sorted((pre or {}).items()):
            if not self._assign(colors, domains, v, c):
                return
        yield from self._search(colors, domains)


def _adjacency(g: PlaneGraph) -> List[FrozenSet[int]]:
    return [g.neighbors(v) for v in range(g.n)]


def _check_partial(g: PlaneGraph, phi: Dict[int, int], allowed: Optional[FrozenSet[int]] = None):
    for v, c in phi.items():
        if not 0 <= v < g.n:
            raise ColoringError(f"vertex {v + 1} out of range")
        if allowed is not None and v not in allowed:
            raise ColoringError(f"{vertex_label(v)} is not a boundary vertex")
        if c not in COLORS:
            raise ColoringError(f"color {c} at {vertex_label(v)} is not in {{0,1,2}}")
    for v, c in phi.items():
        for w in g.neighbors(v):
            if phi.get(w) == c:
                raise ColoringError(f"precoloring is improper on edge {vertex_label(v)}{vertex_label(w)}")


def verify_coloring(g: PlaneGraph, coloring: Coloring) -> bool:
    """Proper on its domain, and total unless marked partial."""
    colors = coloring.assignment
    if not coloring.partial and set(colors) != set(range(g.n)):
        return False
    if any(c not in COLORS for c in colors.values()):
        return False
    return all(colors[u] != colors[v] for u, v in g.edges if u in colors and v in colors)


def solve_3coloring(g: PlaneGraph, pre: Optional[Dict[int, int]] = None) -> Optional[Coloring]:
    """
    Find a proper 3-coloring extending `pre`, or None if there is none.

    Raises:
        ColoringError: pre is improper or uses colors outside {0,1,2}
    """
    pre = pre or {}
    _check_partial(g, pre)
    found = next(_Search(_adjacency(g), range(g.n)).colorings(pre), None)
    return Coloring(found) if found is not None else None


def count_3colorings(g: PlaneGraph, naive: bool = False) -> int:
    """
    Number of proper 3-colorings of g.

    Args:
        g: plane graph
        naive: enumerate all 3^n assignments instead of backtracking

    Raises:
        ColoringError: naive with n > NAIVE_COUNT_LIMIT
    """
    if naive:
        if g.n > NAIVE_COUNT_LIMIT:
            raise ColoringError(f"naive count refuses n={g.n} > {NAIVE_COUNT_LIMIT}")
        edges = sorted(g.edges)
        return sum(1 for colors in product(COLORS, repeat=g.n)
                   if all(colors[u] != colors[v] for u, v in edges))
    return sum(1 for _ in _Search(_adjacency(g), range(g.n)).colorings())


def extend_precoloring(g: PlaneGraph, boundary: Iterable[int], phi: Dict[int, int]) -> Optional[Coloring]:
    """
    Extend a proper coloring of g[boundary] to all of g.

    Raises:
        ColoringError: phi colors off-boundary vertices, leaves the range
                       {0,1,2}, or is improper on g[boundary]
    """
    _check_partial(g, phi, frozenset(boundary))
    return solve_3coloring(g, phi)


@dataclass
class ExtensionReport:
    d_good: bool
    member_G: bool
    total: int = 0
    extendable: int = 0
    non_extendable: int = 0
    witnesses: List[Dict[int, int]] = field(default_factory=list)

    @property
    def hypothesis_holds(self) -> bool:
        return self.d_good and self.member_G

    @property
    def contradicts_theorem(self) -> bool:
        return self.hypothesis_holds and self.non_extendable > 0

    def to_dict(self) -> Dict:
        return {
            'd_good': self.d_good,
            'member_G': self.member_G,
            'hypothesis_holds': self.hypothesis_holds,
            'total': self.total,
            'extendable': self.extendable,
            'non_extendable': self.non_extendable,
            'witnesses': [{vertex_label(v): c for v, c in sorted(w.items())} for w in self.witnesses],
            'contradicts_theorem': self.contradicts_theorem,
        }


def check_extension_property(g: PlaneGraph) -> ExtensionReport:
    """
    Try every proper 3-coloring of g[V(D)] for an extension to g.

    Raises:
        StructureError: the outer boundary is not a simple cycle
    """
    if not g.outer.is_simple:
        raise StructureError("exterior boundary is not a simple cycle")
    walk = g.outer.boundary_walk
    report = ExtensionReport(d_good=classify_cycle(g, walk).good, member_G=check_class_G(g).member)
    adjacency = _adjacency(g)
    whole = _Search(adjacency, range(g.n))
    for phi in _Search(adjacency, walk).colorings():
        report.total += 1
        if next(whole.colorings(phi), None) is not None:
            report.extendable += 1
        else:
            report.non_extendable += 1
            if len(report.witnesses) < WITNESS_CAP:
                report.witnesses.append(phi)
    return report
