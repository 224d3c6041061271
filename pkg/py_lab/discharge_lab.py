#!/usr/bin/env python3
"""
Discharge Lab

Command-line front end for the plane-graph analysis modules: structure
listing, class membership, the discharging ledger, 3-coloring, boundary
extension, the minimal-counterexample audit, and corpus batch runs.

Exit codes: 0 = success / member / holds, 1 = non-member / violation /
non-extendable coloring found, 2 = input error.
"""

import sys
import os
import json
import argparse
from multiprocessing import Pool, cpu_count
from pathlib import Path
from typing import Dict, Iterator, List, Optional, Tuple

# Add py_common to path for imports
sys.path.insert(0, str(Path(__file__).parent.parent / 'py_common'))

from fixtures import build_fixture  # type: ignore
from plane_graph import (PlaneGraph, PlaneGraphError, PlanarCodeError,  # type: ignore
                         iter_planar_code_records, parse_planar_code, parse_rotation_text,
                         validate)
from rational_text import pretty_rational  # type: ignore
from structures import (classify_cycle, classify_face_vertices, enumerate_cycles, face_label,
                        is_light_7face, one_based, vertex_label, MAX_CYCLE_LEN)
from class_membership import check_class_G, check_theorem3_class
from configurations import audit_lemma_configurations, check_bad_cycle_catalog
from discharging import (DischargeError, apply_discharging, element_label, negative_report,
                         rule_tally, star_bound_report, verify_conservation)
from coloring import check_extension_property, solve_3coloring, verify_coloring

SCHEMA_VERSION = 1
THREADS_ENV = 'DISCHARGE_LAB_THREADS'
PCODE_SUFFIXES = {'.pcode', '.pc', '.plc'}
PROGRESS_EVERY = 100

COMMANDS = ['analyze', 'class', 'discharge', 'color', 'extend', 'audit', 'batch']

Result = Tuple[Dict, List[str], int]
BatchItem = Tuple[str, str, object]
BatchTask = Tuple[int, str, str, object]


# Input


def infer_format(path: Path, explicit: Optional[str] = None) -> str:
    if explicit:
        return explicit
    if path.is_dir():
        return 'rot'
    return 'pcode' if path.suffix.lower() in PCODE_SUFFIXES else 'rot'


def parse_outer(text: str) -> List[int]:
    """'1 5 4 3 2' -> 0-based walk."""
    try:
        walk = [int(t) - 1 for t in text.replace(',', ' ').split()]
    except ValueError:
        raise ValueError(f"--outer expects 1-based vertex ids, got '{text}'")
    if len(walk) < 3:
        raise ValueError("--outer needs at least three vertices")
    return walk


def load_graph(args) -> PlaneGraph:
    """The single graph named by --fixture or --input (and --index for planar_code)."""
    if args.fixture:
        g = build_fixture(args.fixture)
    else:
        path = Path(args.input)
        if infer_format(path, args.format) == 'pcode':
            graphs = parse_planar_code(path.read_bytes())
            if not 0 <= args.index < len(graphs):
                raise ValueError(f"--index {args.index} out of range: stream holds {len(graphs)} graph(s)")
            g = graphs[args.index]
        else:
            g = parse_rotation_text(path.read_bytes(), name=path.stem)
    if args.outer:
        g = g.with_outer(parse_outer(args.outer))
    return g


def batch_inputs(path: Path, fmt: str) -> List[BatchItem]:
    """
    (name, kind, data) per graph: a decoded rotation for planar_code, a file
    path for rotation text. Stream corruption raises PlanarCodeError here; a
    graph that fails validation only fails its own item.
    """
    if fmt == 'pcode':
        records = list(iter_planar_code_records(path.read_bytes()))
        return [(f"#{idx}", 'rotation', rot) for idx, rot in records]
    files = sorted(p for p in path.iterdir() if p.suffix == '.rot') if path.is_dir() else [path]
    return [(f.stem, 'file', str(f)) for f in files]


def load_batch_item(name: str, kind: str, data) -> PlaneGraph:
    if kind == 'rotation':
        return PlaneGraph(data, name=name)
    return parse_rotation_text(Path(data).read_bytes(), name=name)


# Single-graph commands


def cmd_analyze(g: PlaneGraph, args) -> Result:
    report = validate(g)
    records = enumerate_cycles(g, args.max_cycle_len)
    faces = []
    light = []
    for f in g.faces:
        is_light = is_light_7face(g, f)
        faces.append({'id': face_label(f.id), 'size': f.size, 'walk': one_based(f.boundary_walk),
                      'outer': f.id == g.outer_face, 'light7': is_light})
        if is_light:
            light.append(classify_face_vertices(g, f).to_dict())
    payload = {
        'n': g.n,
        'edges': len(g.edges),
        'validation': {
            'two_connected': report.two_connected,
            'faces_simple': report.faces_simple,
            'articulation_points': one_based(report.articulation_points),
        },
        'faces': faces,
        'cycles': [r.to_dict() for r in records],
        'light_faces': light,
    }
    lines = [f"{g!r}",
             f"2-connected: {report.two_connected}, simple faces: {report.faces_simple}",
             "Faces:"]
    for f in faces:
        mark = ' (outer)' if f['outer'] else (' (light 7-face)' if f['light7'] else '')
        lines.append(f"  {f['id']}: size {f['size']}{mark}: {' '.join(map(str, f['walk']))}")
    lines.append(f"Cycles up to length {args.max_cycle_len}: {len(records)}")
    for r in records:
        flags = ','.join(r.flags) or '-'
        parts = '; '.join(p.label for p in r.partitions)
        lines.append(f"  {r.length:>2} [{' '.join(map(str, one_based(r.vertices)))}] {flags}"
                     + (f" | {parts}" if parts else ''))
    return payload, lines, 0


def cmd_class(g: PlaneGraph, args) -> Result:
    reports = [check_class_G(g, args.exhaustive), check_theorem3_class(g, args.exhaustive)]
    lines = []
    for rep in reports:
        lines.append(f"{rep.checked_class}: {'member' if rep.member else 'non-member'}")
        for w in rep.witnesses:
            extra = f" ({w.detail})" if w.detail else ''
            lines.append(f"  {w.reason}: {' '.join(map(str, one_based(w.cycle.vertices)))}{extra}")
    payload = {'classes': [rep.to_dict() for rep in reports]}
    return payload, lines, 0 if reports[0].member else 1


def cmd_discharge(g: PlaneGraph, args) -> Result:
    ledger = apply_discharging(g)
    conserved = verify_conservation(ledger)
    negatives = negative_report(ledger)
    tally = rule_tally(ledger)
    stars = star_bound_report(g, ledger)
    payload = ledger.to_dict()
    payload.update({'rule_tally': tally, 'negative_report': negatives.to_dict(),
                    'star_bound': [row.to_dict() for row in stars]})

    lines = ["Final charges:"]
    initial = ledger.initial
    for element, q in sorted(ledger.final.items()):
        lines.append(f"  {element_label(element):>5}: {pretty_rational(initial[element]):>6} -> "
                     f"{pretty_rational(q)}")
    lines.append("Rule tally: " + (', '.join(f"{r} x{c}" for r, c in tally.items()) or 'none'))
    for d in ledger.diagnostics:
        lines.append(f"  gap {d.rule}: {', '.join(element_label(e) for e in d.elements)}: {d.detail}")
    for row in stars:
        lines.append(f"  {face_label(row.face)} ({row.size}-face): final {pretty_rational(row.final)}, "
                     f"bound {pretty_rational(row.star_bound)}")
    lines.append(f"Negative elements: {len(negatives.negatives)}, positive on D: "
                 f"{len(negatives.positives_on_D)}, contradiction: {negatives.contradiction}")
    lines.append(f"Sum: {payload['sum_final']} (conserved: {conserved})")
    return payload, lines, 0 if conserved else 1


def cmd_color(g: PlaneGraph, args) -> Result:
    coloring = solve_3coloring(g)
    if coloring is None:
        return {'colorable': False, 'coloring': None}, ["none"], 1
    if not verify_coloring(g, coloring):
        raise RuntimeError("solver returned an improper coloring")
    line = ' '.join(f"{vertex_label(v)}={c}" for v, c in sorted(coloring.assignment.items()))
    return {'colorable': True, 'coloring': coloring.to_dict()}, [line], 0


def cmd_extend(g: PlaneGraph, args) -> Result:
    rep = check_extension_property(g)
    lines = [f"D good: {rep.d_good}, member of G: {rep.member_G}",
             f"Boundary colorings: {rep.total}, extendable: {rep.extendable}, "
             f"non-extendable: {rep.non_extendable}"]
    for w in rep.witnesses:
        lines.append("  " + ' '.join(f"{vertex_label(v)}={c}" for v, c in sorted(w.items())))
    if rep.contradicts_theorem:
        lines.append("CONTRADICTION: good boundary with a non-extendable coloring")
    return rep.to_dict(), lines, 1 if rep.non_extendable else 0


def cmd_audit(g: PlaneGraph, args) -> Result:
    member = check_class_G(g).member
    findings = audit_lemma_configurations(g)
    catalog = member
    if not args.strict and not member:
        findings = findings + check_bad_cycle_catalog(g, strict=False)
        findings.sort(key=lambda f: f.sort_key())
        catalog = True
    payload = {'member_G': member, 'catalog_checked': catalog,
               'findings': [f.to_dict() for f in findings]}
    lines = [f"{len(findings)} finding(s)" + ('' if catalog else ' (bad-cycle catalog skipped: not in G)')]
    for f in findings:
        lines.append(f"  {f.lemma}: {f.detail}")
    return payload, lines, 1 if findings else 0


# Batch


def analyze_for_batch(idx: int, name: str, kind: str, data) -> Dict:
    """One per-graph batch record; a failure is recorded, never raised."""
    record: Dict = {'index': idx, 'graph': name, 'error': None, 'contradictions': []}
    try:
        g = load_batch_item(name, kind, data)
        record['n'] = g.n
        member_g = check_class_G(g).member
        member_t3 = check_theorem3_class(g).member
        colorable = solve_3coloring(g) is not None
        record.update({'member_G': member_g, 'member_theorem3': member_t3, 'colorable': colorable,
                       'findings': len(audit_lemma_configurations(g))})
        try:
            record['conserved'] = verify_conservation(apply_discharging(g))
        except DischargeError:
            record['conserved'] = None

        record['extension'] = 'n/a'
        if member_g and g.outer.is_simple and classify_cycle(g, g.outer.boundary_walk).good:
            rep = check_extension_property(g)
            record['extension'] = 'fails' if rep.non_extendable else 'holds'
            if rep.contradicts_theorem:
                record['contradictions'].append('good boundary coloring does not extend')
        if member_t3 and not colorable:
            record['contradictions'].append('theorem3 member is not 3-colorable')
        elif member_g and not colorable:
            record['contradictions'].append('G member is not 3-colorable')
    except (ValueError, OSError) as e:
        record['error'] = str(e)
    return record


def _batch_task(task: BatchTask) -> Dict:
    """Worker process entry point."""
    idx, name, kind, data = task
    try:
        return analyze_for_batch(idx, name, kind, data)
    except Exception as e:
        print(f"Worker error: {e}", file=sys.stderr)
        return {'index': idx, 'graph': name, 'error': f"worker error: {e}", 'contradictions': []}


class AnalysisPool:
    """
    Pool of worker processes running analyze_for_batch.
    """

    def __init__(self, num_workers: Optional[int] = None):
        if num_workers is None:
            num_workers = cpu_count()

        self.num_workers = num_workers
        self.tasks: List[BatchTask] = []

    def submit(self, idx: int, name: str, kind: str, data):
        """Queue one graph; nothing runs until results() is iterated."""
        self.tasks.append((idx, name, kind, data))

    def results(self) -> Iterator[Dict]:
        """Records in completion order; the worker processes exit when iteration ends."""
        with Pool(self.num_workers) as pool:
            yield from pool.imap_unordered(_batch_task, self.tasks)


def resolve_worker_count() -> int:
    """DISCHARGE_LAB_THREADS clamped to [1, cpu_count()]; invalid values fall back to cpu_count()."""
    cpus = cpu_count()
    raw = os.environ.get(THREADS_ENV)
    if raw is None:
        return cpus
    try:
        value = int(raw)
    except ValueError:
        print(f"WARNING: {THREADS_ENV}='{raw}' is not an integer, using {cpus}", file=sys.stderr)
        return cpus
    if value < 1:
        print(f"WARNING: {THREADS_ENV}={value} is below 1, using {cpus}", file=sys.stderr)
        return cpus
    return min(value, cpus)


def summarize(records: List[Dict]) -> Dict:
    ok = [r for r in records if r['error'] is None]
    return {
        'graphs': len(records),
        'errors': len(records) - len(ok),
        'member_G': sum(r['member_G'] for r in ok),
        'member_theorem3': sum(r['member_theorem3'] for r in ok),
        'colorable': sum(r['colorable'] for r in ok),
        'uncolorable': sum(not r['colorable'] for r in ok),
        'audit_clean': sum(r['findings'] == 0 for r in ok),
        'extension_holds': sum(r['extension'] == 'holds' for r in ok),
        'extension_fails': sum(r['extension'] == 'fails' for r in ok),
        'contradictions': [r['graph'] for r in ok if r['contradictions']],
    }


def run_batch(args) -> Result:
    path = Path(args.input)
    inputs = batch_inputs(path, infer_format(path, args.format))
    if args.limit is not None:
        inputs = inputs[:args.limit]
    total = len(inputs)

    records: Dict[int, Dict] = {}
    if total:
        num_workers = min(resolve_worker_count(), total)
        print(f"Starting {num_workers} worker processes", file=sys.stderr)
        pool = AnalysisPool(num_workers)
        for idx, (name, kind, data) in enumerate(inputs):
            pool.submit(idx, name, kind, data)
        for done, record in enumerate(pool.results(), start=1):
            records[record['index']] = record
            if done % PROGRESS_EVERY == 0 or done == total:
                print(f"Processed {done}/{total} graphs", file=sys.stderr)

    ordered = [records[i] for i in range(total)]
    summary = summarize(ordered)
    lines = [f"{'graph':<16} {'n':>3} {'G':>3} {'T3':>3} {'col':>4} {'find':>5} {'ext':>6}"]
    lines.append("-" * 46)
    for r in ordered:
        if r['error'] is not None:
            lines.append(f"{r['graph']:<16} ERROR: {r['error']}")
            continue
        yn = {True: 'y', False: 'n'}
        lines.append(f"{r['graph']:<16} {r['n']:>3} {yn[r['member_G']]:>3} {yn[r['member_theorem3']]:>3} "
                     f"{yn[r['colorable']]:>4} {r['findings']:>5} {r['extension']:>6}")
        for reason in r['contradictions']:
            lines.append(f"  CONTRADICTION: {reason}")
    lines.append("-" * 46)
    lines.append(', '.join(f"{k}: {v}" for k, v in summary.items() if k != 'contradictions'))
    lines.append(f"contradictions: {len(summary['contradictions'])}")
    payload = {'graphs': ordered, 'summary': summary}
    return payload, lines, 1 if summary['contradictions'] else 0


SINGLE_COMMANDS = {
    'analyze': cmd_analyze,
    'class': cmd_class,
    'discharge': cmd_discharge,
    'color': cmd_color,
    'extend': cmd_extend,
    'audit': cmd_audit,
}


def positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        description='Discharge Lab - analyze plane graphs without 4-, 6- and 9-cycles',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s analyze --input ../fixtures/F3.rot
  %(prog)s class --input ../fixtures/F2.rot
  %(prog)s discharge --input ../fixtures/F1.rot --json
  %(prog)s color --fixture F4
  %(prog)s extend --fixture F8
  %(prog)s audit --fixture F7 --no-strict
  %(prog)s batch --input ../fixtures --limit 5
  DISCHARGE_LAB_THREADS=2 %(prog)s batch --input corpus.pcode --json
        """
    )
    parser.add_argument('command', choices=COMMANDS, help='Analysis to run')
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument('--input', type=str, help='Rotation-text file, planar_code file, or directory of .rot files')
    source.add_argument('--fixture', type=str, help='Named atlas graph (F1..F10) or planted configuration')
    parser.add_argument('--format', choices=['rot', 'pcode'], default=None,
                        help='Input format (default: from the file extension)')
    parser.add_argument('--json', action='store_true', help='Emit a JSON report on stdout')
    parser.add_argument('--max-cycle-len', type=int, default=MAX_CYCLE_LEN,
                        help=f'Longest cycle listed by analyze (default: {MAX_CYCLE_LEN})')
    parser.add_argument('--limit', type=positive_int, default=None, help='Process at most this many graphs in batch')
    parser.add_argument('--outer', type=str, default=None, help="Outer walk override, e.g. '1 5 4 3 2'")
    parser.add_argument('--index', type=int, default=0, help='Graph index within a planar_code file (default: 0)')
    parser.add_argument('--exhaustive', action='store_true', help='class: list every offending cycle')
    parser.add_argument('--strict', action=argparse.BooleanOptionalAction, default=True,
                        help='audit: run the bad-cycle catalog only for members of G (default: strict)')
    return parser


def run_command(args) -> Result:
    if args.command == 'batch':
        if not args.input:
            raise ValueError("batch needs --input")
        return run_batch(args)
    g = load_graph(args)
    payload, lines, code = SINGLE_COMMANDS[args.command](g, args)
    payload = {'graph': g.name, **payload}
    return payload, lines, code


def main():
    args = build_parser().parse_args()

    try:
        payload, lines, code = run_command(args)
    except PlanarCodeError as e:
        print(f"ERROR: {e} (last good graph: {e.last_good})", file=sys.stderr)
        sys.exit(2)
    except (ValueError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        sys.exit(2)

    if args.json:
        report = {'schema_version': SCHEMA_VERSION, 'command': args.command, **payload}
        print(json.dumps(report, indent=2))
    else:
        print('\n'.join(lines))
    sys.exit(code)


if __name__ == '__main__':
    main()
