#!/usr/bin/env python3
"""Export collapse graphs for a gallery of small graphs as DOT files.

Usage:
    python scripts/collapse_gallery.py [--out DIR]

For every cycle-edge of each gallery graph this writes one .dot file and
prints the structure report line; exits nonzero on any structural
violation.
"""

import argparse
import pathlib
import sys

from kappatools.collapse import build_collapse_graph, verify_collapse_structure
from kappatools.corpus import complete_graph, cycle_graph
from kappatools.graphs import EdgeKind, Multigraph
from kappatools.orientations import kappa_partition_bruteforce


def prism_graph():
    """Two triangles joined by a perfect matching."""
    return Multigraph(
        6,
        ((0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)),
    )


GALLERY = {
    "c4": cycle_graph(4),
    "c5": cycle_graph(5),
    "k4": complete_graph(4),
    "prism": prism_graph(),
}


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default="collapse_out")
    args = parser.parse_args()
    out_dir = pathlib.Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)

    violations = 0
    for name, g in GALLERY.items():
        partition = kappa_partition_bruteforce(g)
        for e, kind in enumerate(g.classify_edges()):
            if kind is not EdgeKind.CYCLE_EDGE:
                continue
            cg = build_collapse_graph(g, e, partition=partition)
            report = verify_collapse_structure(cg)
            path = out_dir / f"{name}_edge{e}.dot"
            path.write_text(cg.to_dot())
            status = "ok" if report.ok else f"VIOLATED {report.violations}"
            print(
                f"{name} edge {e}: nodes={report.counts['nodes']} "
                f"edges={report.counts['edges']} "
                f"components={report.counts['components']} {status} -> {path}"
            )
            if not report.ok:
                violations += 1
    return 1 if violations else 0


if __name__ == "__main__":
    sys.exit(main())
