"""
Graph Class Membership

Decides membership in the class G (connected plane graphs with no 4-cycle,
no 6-cycle and no special 9-cycle) and in the smaller class of graphs
without 4-, 6- and 9-cycles, reporting offending cycles as witnesses.
"""

import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from plane_graph import PlaneGraph  # type: ignore
from structures import CycleRecord, classify_cycle, iter_cycles, one_based

G_CLASS = 'G_class'
THEOREM3_CLASS = 'theorem3_class'


@dataclass
class Witness:
    reason: str
    cycle: CycleRecord
    detail: str = ''

    def to_dict(self) -> Dict:
        return {'reason': self.reason, 'cycle': one_based(self.cycle.vertices),
                'detail': self.detail}


@dataclass
class ClassReport:
    checked_class: str
    witnesses: List[Witness] = field(default_factory=list)

    @property
    def member(self) -> bool:
        return not self.witnesses

    def to_dict(self) -> Dict:
        return {'class': self.checked_class, 'member': self.member,
                'witnesses': [w.to_dict() for w in self.witnesses]}


def _short_cycles(g: PlaneGraph):
    return sorted(iter_cycles(g, 9), key=lambda c: (len(c), c))


def check_class_G(g: PlaneGraph, exhaustive: bool = False) -> ClassReport:
    """
    Membership in G. Connectivity holds for every PlaneGraph, so only
    short cycles can disqualify.

    Args:
        g: plane graph
        exhaustive: list every offending cycle instead of the first per reason

    Returns:
        ClassReport whose witnesses are in canonical cycle order
    """
    report = ClassReport(G_CLASS)
    seen = set()
    for seq in _short_cycles(g):
        k = len(seq)
        if k in (4, 6):
            reason = f"{k}-cycle"
            if exhaustive or reason not in seen:
                report.witnesses.append(Witness(reason, classify_cycle(g, seq)))
                seen.add(reason)
        elif k == 9:
            if not exhaustive and 'special-9-cycle' in seen:
                continue
            record = classify_cycle(g, seq)
            if record.special9:
                special = [p.label for p in record.partitions
                           if (p.kind, p.signature) in (('chord', (3, 8)), ('claw', (5, 5, 5)))]
                report.witnesses.append(Witness('special-9-cycle', record, ', '.join(special)))
                seen.add('special-9-cycle')
    return report


def check_theorem3_class(g: PlaneGraph, exhaustive: bool = False) -> ClassReport:
    """Membership in the class of graphs without 4-, 6- and 9-cycles."""
    report = ClassReport(THEOREM3_CLASS)
    seen = set()
    for seq in _short_cycles(g):
        k = len(seq)
        if k in (4, 6, 9):
            reason = f"{k}-cycle"
            if exhaustive or reason not in seen:
                report.witnesses.append(Witness(reason, classify_cycle(g, seq)))
                seen.add(reason)
    return report
