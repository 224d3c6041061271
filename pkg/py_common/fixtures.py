"""
Fixture Atlas

Named plane graphs used by the tests and the CLI `--fixture` flag: the
ten atlas graphs F1..F10 plus planted configurations, one per audit check
and per R4 sub-rule.

Rim vertices of a cycle-based fixture are v1..vk = ids 0..k-1; added
vertices get the next ids in insertion order. The exterior face is always
the starting cycle.
"""

from typing import Dict, List

from plane_builder import PlaneBuilder  # type: ignore
from plane_graph import PlaneGraph  # type: ignore


def _hub(n: int, targets: List[int], name: str) -> PlaneGraph:
    b = PlaneBuilder.cycle(n)
    b.add_hub(targets)
    return b.build(name)


def f1() -> PlaneGraph:
    return PlaneBuilder.cycle(9).build('F1')


def f2() -> PlaneGraph:
    b = PlaneBuilder.cycle(9)
    b.add_path(0, 2)
    return b.build('F2')


def f3() -> PlaneGraph:
    return _hub(11, [0, 1, 6], 'F3')


def f4() -> PlaneGraph:
    return _hub(3, [0, 1, 2], 'F4')


def f5() -> PlaneGraph:
    return PlaneBuilder.cycle(3).build('F5')


def f6() -> PlaneGraph:
    return PlaneBuilder.cycle(5).build('F6')


def f7() -> PlaneGraph:
    return _hub(9, [0, 3, 6], 'F7')


def f8() -> PlaneGraph:
    return _hub(12, [0, 3, 6], 'F8')


def f9() -> PlaneGraph:
    return _hub(10, [0, 3], 'F9')


def f10() -> PlaneGraph:
    b = PlaneBuilder.cycle(12)
    b.add_path(0, 6, inner=2)
    return b.build('F10')


# Planted configurations


def plant_path3() -> PlaneGraph:
    """P3 with its only face as exterior; articulation point 1."""
    return PlaneGraph([[1], [0, 2], [1]], name='path3')


def plant_good_path() -> PlaneGraph:
    """
    Good path 13-14-15-16 on the 7-face [12 13 14 15 16 6 7];
    edge 13-14 lies on the triangle [13 17 14].
    """
    b = PlaneBuilder.cycle(12)
    b.add_path(0, 6, inner=5)
    b.add_path(13, 14, inner=1, within=(1,))
    b.add_path(16, 3)
    b.add_path(15, 1)
    b.add_path(12, 7)
    return b.build('good_path')


def _light_seven_frame(n: int, end: int, arms: int):
    """Cycle plus the arm path from rim 0 to rim `end` and the heptagon a1..a7."""
    b = PlaneBuilder.cycle(n)
    path = b.add_path(0, end, inner=arms)
    a1, a7 = path[-2], path[-1]
    middle = b.add_path(a1, a7, inner=5, within=(1,))
    return b, path, middle


def plant_light7_r4_1() -> PlaneGraph:
    """
    Light 7-face [17 19 20 21 22 23 18] on triangle [16 19 17];
    a2 = 19 has degree 5, so it sends 1/24 to the face.
    """
    b, (z, a1, a7), (a2, a3, a4, a5, a6) = _light_seven_frame(16, 15, 3)
    b.add_path(z, a2)
    for x, y in ((a2, 2), (a2, 5), (a3, 7), (a4, 9), (a5, 11), (a6, 13)):
        b.add_path(x, y)
    return b.build('light7_r4_1')


def plant_light7_r4_3() -> PlaneGraph:
    """
    Same frame with z = 16 and a2 = 19 both of degree 4; the 5-face
    [5 19 16 3 4] sends 5/24 to the light face through 19.
    """
    b, (z, a1, a7), (a2, a3, a4, a5, a6) = _light_seven_frame(16, 15, 3)
    b.add_path(z, a2)
    for x, y in ((z, 3), (a2, 5), (a3, 7), (a4, 9), (a5, 11), (a6, 13)):
        b.add_path(x, y)
    return b.build('light7_r4_3')


def plant_light7_r4_2() -> PlaneGraph:
    """Light 7-face [15 17 18 19 20 21 16]; its triangle [0 17 15] has apex on D."""
    b, (a1, a7), (a2, a3, a4, a5, a6) = _light_seven_frame(15, 13, 2)
    b.add_path(0, a2)
    for x, y in ((a2, 3), (a3, 5), (a4, 7), (a5, 9), (a6, 11)):
        b.add_path(x, y)
    return b.build('light7_r4_2')


def plant_separating_good() -> PlaneGraph:
    """F9 plus w = 11 adjacent to v2 and u: the 5-cycle [10 0 1 2 3] is separating."""
    b = PlaneBuilder.cycle(10)
    hub = b.add_hub([0, 3])
    b.add_path(1, hub, inner=1)
    return b.build('separating_good')


def plant_triangular_bad() -> PlaneGraph:
    """
    12-cycle [0 1 2 3 4 5 6 16 15 14 13 12] with the (5,5,8)-claw at 17 and
    the exterior triangle [13 18 14] on its edge 13-14.
    """
    b = PlaneBuilder.cycle(12)
    q = b.add_path(0, 6, inner=5)
    [h] = b.add_path(0, 3, inner=1)
    b.add_path(h, 6)
    b.add_path(q[1], q[2], inner=1, within=(7,))
    return b.build('triangular_bad')


def plant_all_three_face() -> PlaneGraph:
    """5-face [10 12 13 14 11] whose five vertices are internal 3-vertices."""
    b = PlaneBuilder.cycle(10)
    a1, a5 = b.add_path(0, 8, inner=2)
    a2, a3, a4 = b.add_path(a1, a5, inner=3, within=(1,))
    for x, y in ((a2, 2), (a3, 4), (a4, 6)):
        b.add_path(x, y)
    return b.build('all_three_face')


def plant_light7_pair() -> PlaneGraph:
    """
    7-faces [23 22 25 26 27 28 29] and [23 30 31 32 33 34 24] meeting only at
    x = 23, with v1 = 29 adjacent to u1 = 30 and x, u1 internal 4-vertices.
    """
    b = PlaneBuilder.cycle(22)
    v6, x, u6 = b.add_path(0, 20, inner=3)
    v5, v4, v3, v2, v1, u1, u2, u3, u4, u5 = b.add_path(v6, u6, inner=10, within=(1,))
    b.add_path(x, v1)
    b.add_path(x, u1)
    for s, t in ((v5, 2), (v4, 4), (v3, 6), (v2, 8), (u1, 10),
                 (u2, 12), (u3, 14), (u4, 16), (u5, 18)):
        b.add_path(s, t)
    return b.build('light7_pair')


def plant_chorded_eight() -> PlaneGraph:
    """8-cycle [18 16 17 23 22 21 20 19] with chord 18-17; z = 17 is the 4-vertex."""
    b = PlaneBuilder.cycle(16)
    y, z = b.add_path(0, 13, inner=2)
    x, u5, u4, u3, u2, u1 = b.add_path(y, z, inner=6, within=(1,))
    b.add_path(x, z, avoid=(0,))
    for s, t in ((u5, 3), (u4, 5), (u3, 7), (u2, 9), (u1, 11)):
        b.add_path(s, t)
    return b.build('chorded_eight')


def plant_nine_face() -> PlaneGraph:
    """
    9-face [12 14 15 16 17 18 19 20 13] with triangles on u1u2, u3u4, u4u5
    and u6u7; u4 = 17 is a 4-vertex.
    """
    b = PlaneBuilder.cycle(12)
    u9, u8 = b.add_path(0, 5, inner=2)
    u = b.add_path(u9, u8, inner=7, within=(1,))
    for i, j in ((0, 1), (2, 3), (3, 4), (5, 6)):
        b.add_path(u[i], u[j], inner=1, within=(1,))
    return b.build('nine_face')


FIXTURES: Dict[str, Dict] = {
    'F1': {'description': 'C9', 'build': f1},
    'F2': {'description': 'C9 + chord v1v3', 'build': f2},
    'F3': {'description': 'C11 + hub u adjacent to v1, v2, v7', 'build': f3},
    'F4': {'description': 'K4', 'build': f4},
    'F5': {'description': 'K3', 'build': f5},
    'F6': {'description': 'C5', 'build': f6},
    'F7': {'description': 'C9 + hub u adjacent to v1, v4, v7', 'build': f7},
    'F8': {'description': 'C12 + hub u adjacent to v1, v4, v7', 'build': f8},
    'F9': {'description': 'C10 + hub u adjacent to v1, v4', 'build': f9},
    'F10': {'description': 'C12 + internal path v1-a-b-v7', 'build': f10},
}

PLANTS: Dict[str, Dict] = {
    'path3': {'description': 'path on three vertices', 'build': plant_path3},
    'good_path': {'description': 'one good path on a 7-face', 'build': plant_good_path},
    'light7_r4_1': {'description': 'light 7-face, R4(1) donor of degree 5',
                    'build': plant_light7_r4_1},
    'light7_r4_2': {'description': 'light 7-face, triangle apex on D',
                    'build': plant_light7_r4_2},
    'light7_r4_3': {'description': 'light 7-face, R4(3) through a 4-vertex',
                    'build': plant_light7_r4_3},
    'separating_good': {'description': 'separating good 5-cycle',
                        'build': plant_separating_good},
    'triangular_bad': {'description': 'ext-triangular bad 12-cycle with a (5,5,8)-claw',
                       'build': plant_triangular_bad},
    'all_three_face': {'description': '5-face of internal 3-vertices',
                       'build': plant_all_three_face},
    'light7_pair': {'description': 'two 7-faces sharing one 4-vertex',
                    'build': plant_light7_pair},
    'chorded_eight': {'description': '8-cycle with chord xz', 'build': plant_chorded_eight},
    'nine_face': {'description': '9-face with six bad vertices around a 4-vertex',
                  'build': plant_nine_face},
}


def build_fixture(name: str) -> PlaneGraph:
    """Look up an atlas graph or plant by name."""
    for registry in (FIXTURES, PLANTS):
        if name in registry:
            return registry[name]['build']()
    known = ', '.join(list(FIXTURES) + list(PLANTS))
    raise ValueError(f"unknown fixture '{name}' (available: {known})")


def atlas() -> List[PlaneGraph]:
    return [entry['build']() for entry in FIXTURES.values()]

