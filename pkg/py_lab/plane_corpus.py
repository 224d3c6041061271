"""
Seeded Plane-Graph Corpora

Random 2-connected plane graphs grown by ear insertion: start from a cycle
(the exterior face) and repeatedly add a path across a random inner face.
Every face stays a simple cycle. Same seed, same graphs.

Used by the tests as the desk-scale corpus; graph generation is not a CLI
feature.
"""

import random
import sys
from pathlib import Path
from typing import Callable, Iterator, List, Optional, Tuple

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from plane_builder import PlaneBuilder  # type: ignore
from plane_graph import PlaneGraph  # type: ignore

MAX_EAR_ATTEMPTS = 200


def _pick_ends(rng: random.Random, walk: List[int], inner: int) -> Optional[Tuple[int, int]]:
    k = len(walk)
    if inner == 0:
        # a chord needs two walk vertices that are not consecutive
        if k < 4:
            return None
        i = rng.randrange(k)
        j = (i + rng.randint(2, k - 2)) % k
    else:
        i, j = rng.sample(range(k), 2)
    return walk[i], walk[j]


def random_plane_graph(n: int, seed: int, start: Optional[int] = None,
                       max_ear: int = 3, chords: int = 0) -> PlaneGraph:
    """
    Grow a 2-connected plane graph on exactly n vertices.

    Args:
        n: number of vertices, at least 3
        seed: random seed
        start: length of the starting (outer) cycle; random in 3..n if None
        max_ear: most new vertices per inserted path
        chords: extra zero-vertex paths added after n is reached

    Returns:
        PlaneGraph named 'r<n>s<seed>'
    """
    if n < 3:
        raise ValueError(f"n must be at least 3, got {n}")
    rng = random.Random(seed)
    if start is None:
        start = rng.randint(3, n)
    if not 3 <= start <= n:
        raise ValueError(f"start must be in 3..{n}, got {start}")
    b = PlaneBuilder.cycle(start)

    def insert(inner: int) -> bool:
        outer = b.outer_face().id
        faces = [f for f in b.faces() if f.id != outer]
        face = rng.choice(faces)
        ends = _pick_ends(rng, list(face.boundary_walk), inner)
        if ends is None:
            return False
        try:
            b.add_path(ends[0], ends[1], inner=inner, within=face.vertices)
        except ValueError:
            return False
        return True

    attempts = 0
    while b.n < n:
        attempts += 1
        if attempts > MAX_EAR_ATTEMPTS * n:
            raise RuntimeError(f"ear insertion stalled at {b.n}/{n} vertices (seed {seed})")
        insert(rng.randint(1, min(max_ear, n - b.n)))
    added = 0
    for _ in range(MAX_EAR_ATTEMPTS):
        if added >= chords:
            break
        added += insert(0)
    return b.build(f"r{n}s{seed}")


def corpus(count: int, n_min: int = 5, n_max: int = 12, seed: int = 0,
           predicate: Optional[Callable[[PlaneGraph], bool]] = None,
           max_tries: int = 5000) -> Iterator[PlaneGraph]:
    """
    Yield up to `count` seeded random graphs accepted by `predicate`.

    Gives up quietly after max_tries candidates, so a strict predicate may
    yield fewer than `count` graphs.
    """
    rng = random.Random(seed)
    found = 0
    for _ in range(max_tries):
        if found >= count:
            return
        n = rng.randint(n_min, n_max)
        g = random_plane_graph(n, rng.randrange(1 << 30), chords=rng.randint(0, 2))
        if predicate is None or predicate(g):
            found += 1
            yield g
