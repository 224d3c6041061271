"""
Exact Discharging Ledger

Assigns the initial charges ch(f0) = |f0| + 4, ch(v) = d(v) - 4 and
ch(f) = |f| - 4, applies rules R1-R6 in a single simultaneous pass over
the initial structure, and keeps every transfer in an append-only ledger.
All arithmetic uses gmpy2 mpq; no float is ever produced.

Elements are keyed ('v', vertex) or ('f', face). Patterns the rule tables
do not cover (4- and 6-faces, repeated faces) transfer nothing and are
recorded as Diagnostic entries.
"""

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from gmpy2 import mpq  # type: ignore

from plane_graph import PlaneGraph  # type: ignore
from rational_text import format_charge_map, format_rational, rational_sum  # type: ignore
from structures import (classify_face_vertices, face_label, is_light_7face, is_triangular,
                        three_faces_at_edge, vertex_label)

Element = Tuple[str, int]

RULE_IDS = ['R1', 'R2', 'R3', 'R4', 'R5', 'R6']

RULE_CONSTANTS = frozenset([
    mpq(1, 3), mpq(1, 4), mpq(2, 3), mpq(1, 2), mpq(3, 8), mpq(1, 6),
    mpq(1, 24), mpq(5, 24), mpq(4, 3), mpq(1, 12),
])

STAR_BOUND_MIN_FACE = 9


class DischargeError(ValueError):
    """Discharging needs every face boundary to be a simple cycle."""


def element_label(element: Element) -> str:
    kind, idx = element
    return vertex_label(idx) if kind == 'v' else face_label(idx)


@dataclass
class Transfer:
    rule: str
    source: Element
    sink: Element
    amount: mpq
    via: Optional[Element] = None

    def to_dict(self) -> Dict:
        return {
            'rule': self.rule,
            'source': element_label(self.source),
            'sink': element_label(self.sink),
            'amount': format_rational(self.amount),
            'via': element_label(self.via) if self.via else None,
        }


@dataclass
class Diagnostic:
    rule: str
    elements: Tuple[Element, ...]
    detail: str

    def to_dict(self) -> Dict:
        return {'rule': self.rule, 'elements': [element_label(e) for e in self.elements],
                'detail': self.detail}


@dataclass
class ChargeLedger:
    name: str
    initial: Dict[Element, mpq]
    boundary: FrozenSet[int] = frozenset()
    transfers: List[Transfer] = field(default_factory=list)
    diagnostics: List[Diagnostic] = field(default_factory=list)

    def send(self, rule: str, source: Element, sink: Element, amount: mpq,
             via: Optional[Element] = None):
        self.transfers.append(Transfer(rule, source, sink, amount, via))

    def note(self, rule: str, elements: Sequence[Element], detail: str):
        self.diagnostics.append(Diagnostic(rule, tuple(elements), detail))

    @property
    def final(self) -> Dict[Element, mpq]:
        charges = dict(self.initial)
        for t in self.transfers:
            charges[t.source] -= t.amount
            charges[t.sink] += t.amount
        return charges

    def to_dict(self) -> Dict:
        final = self.final
        return {
            'graph': self.name,
            'initial': format_charge_map({element_label(k): v for k, v in sorted(self.initial.items())}),
            'final': format_charge_map({element_label(k): v for k, v in sorted(final.items())}),
            'transfers': [t.to_dict() for t in self.transfers],
            'diagnostics': [d.to_dict() for d in self.diagnostics],
            'sum_initial': format_rational(rational_sum(self.initial.values())),
            'sum_final': format_rational(rational_sum(final.values())),
            'conserved': verify_conservation(self),
        }


def initial_charges(g: PlaneGraph) -> ChargeLedger:
    ledger = ChargeLedger(g.name, {}, g.external_vertices)
    for v in range(g.n):
        ledger.initial[('v', v)] = mpq(g.degree(v) - 4)
    for f in g.faces:
        extra = 4 if f.id == g.outer_face else -4
        ledger.initial[('f', f.id)] = mpq(f.size + extra)
    return ledger


# Rules


def _rule_r1(g: PlaneGraph, ledger: ChargeLedger):
    for f in g.faces:
        if f.size != 3 or f.id == g.outer_face:
            continue
        for v in f.boundary_walk:
            ledger.send('R1', ('v', v), ('f', f.id), mpq(1, 3))


def _r2_amount(a: int, b: int) -> Optional[mpq]:
    if a == 3:
        return mpq(2, 3)
    if a == 5 and b == 5:
        return mpq(1, 2)
    if a == 5 and b >= 7:
        return mpq(3, 8)
    if a >= 7:
        return mpq(1, 3)
    return None


def _rule_r2(g: PlaneGraph, ledger: ChargeLedger):
    for v in range(g.n):
        if not (g.is_internal(v) and g.degree(v) == 3):
            continue
        around = g.faces_at(v)
        if len(set(around)) != 3:
            ledger.note('R2', [('v', v)], "internal 3-vertex meets a face twice")
            continue
        for i, fid in enumerate(around):
            size = g.faces[fid].size
            if size == 5:
                ledger.send('R2(1)', ('f', fid), ('v', v), mpq(1, 4))
            elif size in (4, 6):
                ledger.note('R2', [('v', v), ('f', fid)], f"no case for a {size}-face")
            elif size >= 7:
                a, b = sorted(g.faces[o].size for o in around[:i] + around[i + 1:])
                amount = _r2_amount(a, b) if a not in (4, 6) else None
                if amount is None:
                    ledger.note('R2(2)', [('v', v), ('f', fid)],
                                f"no case for other faces of sizes {a} and {b}")
                else:
                    ledger.send('R2(2)', ('f', fid), ('v', v), amount)


def _rule_r3(g: PlaneGraph, ledger: ChargeLedger):
    for v in range(g.n):
        if not (g.is_internal(v) and g.degree(v) == 4):
            continue
        around = g.faces_at(v)
        triangles = [fid for fid in around if g.faces[fid].size == 3]
        for fid in sorted(set(around)):
            f = g.faces[fid]
            if f.size < 7:
                continue
            if len(triangles) == 2:
                ledger.send('R3(1)', ('f', fid), ('v', v), mpq(1, 3))
            elif len(triangles) == 1:
                # the 3-face must share an edge at v with f
                pair = {triangles[0], fid}
                if any(set(g.edge_faces(v, w)) == pair for w in g.neighbors(v)):
                    ledger.send('R3(2)', ('f', fid), ('v', v), mpq(1, 6))


def _rule_r4(g: PlaneGraph, ledger: ChargeLedger):
    on_d = g.external_vertices
    for f in g.faces:
        if not is_light_7face(g, f):
            continue
        for x0, y0 in f.edges():
            for t in three_faces_at_edge(g, x0, y0):
                if t == f.id:
                    continue
                z = next(w for w in g.faces[t].boundary_walk if w not in (x0, y0))
                if z in on_d:
                    ledger.send('R4(2)', ('v', z), ('f', f.id), mpq(5, 24), via=('f', t))
                for x, y in ((x0, y0), (y0, x0)):
                    if g.degree(x) != 3:
                        continue
                    if g.degree(y) >= 5:
                        ledger.send('R4(1)', ('v', y), ('f', f.id), mpq(1, 24))
                    elif g.degree(y) == 4 and z not in on_d and g.degree(z) >= 4:
                        h = next(o for o in g.edge_faces(y, z) if o != t)
                        if h == f.id:
                            ledger.note('R4(3)', [('f', f.id), ('v', y)],
                                        "face across yz is the light face itself")
                            continue
                        ledger.send('R4(3)', ('f', h), ('f', f.id), mpq(5, 24), via=('v', y))


def _rule_r5(g: PlaneGraph, ledger: ChargeLedger):
    for v in sorted(g.outer.vertices):
        ledger.send('R5', ('f', g.outer_face), ('v', v), mpq(4, 3))


def _rule_r6(g: PlaneGraph, ledger: ChargeLedger):
    for v in sorted(g.external_vertices):
        d = g.degree(v)
        for fid in sorted(set(g.faces_at(v))):
            if fid == g.outer_face:
                continue
            size = g.faces[fid].size
            if size == 4:
                ledger.note('R6', [('v', v), ('f', fid)], "no case for a 4-face")
                continue
            if size < 5:
                continue
            if d == 2:
                ledger.send('R6(1)', ('f', fid), ('v', v), mpq(2, 3))
            elif d == 3 and is_triangular(g, v):
                ledger.send('R6(2)', ('f', fid), ('v', v), mpq(1, 12))
            elif d == 3:
                ledger.send('R6(2)', ('v', v), ('f', fid), mpq(1, 12))
            else:
                ledger.send('R6(3)', ('v', v), ('f', fid), mpq(1, 3))


RULES: Dict[str, Callable[[PlaneGraph, ChargeLedger], None]] = {
    'R1': _rule_r1,
    'R2': _rule_r2,
    'R3': _rule_r3,
    'R4': _rule_r4,
    'R5': _rule_r5,
    'R6': _rule_r6,
}


def apply_discharging(g: PlaneGraph, rule_order: Optional[Sequence[str]] = None) -> ChargeLedger:
    """
    Run R1-R6 against the initial structure of g.

    Args:
        g: plane graph whose faces are all simple
        rule_order: permutation of RULE_IDS; the final charges do not depend on it

    Returns:
        ChargeLedger with initial charges, transfers and diagnostics

    Raises:
        DischargeError: a face boundary is not a simple cycle
    """
    bad = [f.id for f in g.faces if not f.is_simple]
    if bad:
        raise DischargeError("faces with non-simple boundaries: "
                             + ", ".join(face_label(f) for f in bad))
    order = list(rule_order) if rule_order is not None else RULE_IDS
    if sorted(order) != sorted(RULE_IDS):
        raise ValueError(f"rule_order must be a permutation of {RULE_IDS}, got {order}")
    ledger = initial_charges(g)
    for rule in order:
        RULES[rule](g, ledger)
    return ledger


def verify_conservation(ledger: ChargeLedger) -> bool:
    return rational_sum(ledger.initial.values()) == 0 and rational_sum(ledger.final.values()) == 0


def _rule_key(rule: str) -> Tuple[int, str]:
    return (RULE_IDS.index(rule[:2]), rule)


def rule_tally(ledger: ChargeLedger) -> Dict[str, int]:
    """Number of transfers per rule id such as 'R2(2)', in rule order."""
    counts: Dict[str, int] = {}
    for t in ledger.transfers:
        counts[t.rule] = counts.get(t.rule, 0) + 1
    return {rule: counts[rule] for rule in sorted(counts, key=_rule_key)}


@dataclass
class NegativeReport:
    negatives: List[Tuple[Element, mpq]]
    positives_on_D: List[Tuple[int, mpq]]

    @property
    def faces_nonnegative(self) -> bool:
        return not any(e[0] == 'f' for e, _ in self.negatives)

    @property
    def vertices_nonnegative(self) -> bool:
        return not any(e[0] == 'v' for e, _ in self.negatives)

    @property
    def has_positive_on_D(self) -> bool:
        return bool(self.positives_on_D)

    @property
    def contradiction(self) -> bool:
        """All final charges nonnegative and some vertex of D positive, against a zero total."""
        return self.faces_nonnegative and self.vertices_nonnegative and self.has_positive_on_D

    def to_dict(self) -> Dict:
        return {
            'negatives': [{'element': element_label(e), 'charge': format_rational(q)}
                          for e, q in self.negatives],
            'positives_on_D': [{'element': vertex_label(v), 'charge': format_rational(q)}
                               for v, q in self.positives_on_D],
            'faces_nonnegative': self.faces_nonnegative,
            'vertices_nonnegative': self.vertices_nonnegative,
            'has_positive_on_D': self.has_positive_on_D,
            'contradiction': self.contradiction,
        }


def negative_report(ledger: ChargeLedger) -> NegativeReport:
    """Elements left negative, and the vertices of D left strictly positive."""
    final = ledger.final
    negatives = [(e, q) for e, q in sorted(final.items()) if q < 0]
    positives = [(v, final[('v', v)]) for v in sorted(ledger.boundary) if final[('v', v)] > 0]
    return NegativeReport(negatives, positives)


@dataclass
class StarBoundRow:
    face: int
    size: int
    final: mpq
    star_bound: mpq

    def to_dict(self) -> Dict:
        return {'face': face_label(self.face), 'size': self.size,
                'final': format_rational(self.final), 'star_bound': format_rational(self.star_bound)}


def star_bound_report(g: PlaneGraph, ledger: ChargeLedger) -> List[StarBoundRow]:
    """Final charge next to the class-count bound for every inner 9+-face."""
    final = ledger.final
    rows = []
    for f in g.faces:
        if f.id == g.outer_face or f.size < STAR_BOUND_MIN_FACE or not f.is_simple:
            continue
        classes = classify_face_vertices(g, f)
        rows.append(StarBoundRow(f.id, f.size, final[('f', f.id)], classes.star_bound))
    return rows
