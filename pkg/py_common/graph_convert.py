#!/usr/bin/env python3
"""
Rotation-text and planar_code Converter

Command-line tool for converting plane graphs between the rotation-text
format (one graph per .rot file, or a directory of them) and planar_code
(a multi-graph binary stream).
"""

import sys
import argparse
from pathlib import Path
from typing import List

from plane_graph import (PlaneGraph, PlaneGraphError, emit_planar_code,  # type: ignore
                         emit_rotation_text, parse_planar_code, parse_rotation_text)


def read_rotation_inputs(path: Path) -> List[PlaneGraph]:
    """
    Read one .rot file, or every .rot file of a directory sorted by name.

    Args:
        path: file or directory

    Returns:
        List of PlaneGraph named after their files
    """
    if path.is_dir():
        files = sorted(p for p in path.iterdir() if p.suffix == '.rot')
    else:
        files = [path]
    return [parse_rotation_text(f.read_bytes(), name=f.stem) for f in files]


def convert_rot_to_pcode(src: Path, dst: Path) -> int:
    graphs = read_rotation_inputs(src)
    dst.write_bytes(emit_planar_code(graphs))
    return len(graphs)


def convert_pcode_to_rot(src: Path, dst: Path) -> int:
    """
    Decode a planar_code stream into rotation text.

    A single graph goes to `dst` as a file. Several graphs go to `dst` as a
    directory of g0000.rot, g0001.rot, ...
    """
    graphs = parse_planar_code(src.read_bytes())
    if len(graphs) == 1 and dst.suffix == '.rot':
        dst.write_text(emit_rotation_text(graphs[0]))
        return 1
    dst.mkdir(parents=True, exist_ok=True)
    for i, g in enumerate(graphs):
        (dst / f"g{i:04d}.rot").write_text(emit_rotation_text(g))
    return len(graphs)


def main():
    parser = argparse.ArgumentParser(
        description='Convert plane graphs between rotation text and planar_code',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  %(prog)s ROT2PCODE ../fixtures atlas.pcode
  %(prog)s ROT2PCODE ../fixtures/F3.rot F3.pcode
  %(prog)s PCODE2ROT atlas.pcode atlas_rot/
  %(prog)s PCODE2ROT F3.pcode F3_copy.rot
        """
    )
    parser.add_argument('command', choices=['ROT2PCODE', 'PCODE2ROT'],
                        help='Conversion direction')
    parser.add_argument('input', type=str, help='Input file or directory')
    parser.add_argument('output', type=str, help='Output file or directory')

    args = parser.parse_args()

    try:
        if args.command == 'ROT2PCODE':
            count = convert_rot_to_pcode(Path(args.input), Path(args.output))
        else:
            count = convert_pcode_to_rot(Path(args.input), Path(args.output))
    except (PlaneGraphError, OSError) as e:
        print(f"ERROR: {e}", file=sys.stderr)
        sys.exit(2)

    print(f"Converted {count} graph(s)", file=sys.stderr)


if __name__ == '__main__':
    main()
