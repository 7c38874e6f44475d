"""Collapse graphs: how click-classes merge when a cycle-edge is deleted.

Every acyclic orientation of the contracted graph lifts back in two ways,
one per direction of the contracted edge.  Lifting class representatives
both ways draws an edge between two click-classes of the original graph;
the resulting "collapse graph" on the classes is a disjoint union of
paths whose component count equals the class count after deletion and
whose edge count equals the class count after contraction, which verifies
the deletion/contraction recursion node by node.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import GraphInputError, InternalInvariantError
from .graphs import EdgeKind, UnionFind
from .kappa import kappa
from .orientations import (
    Orientation,
    _is_acyclic_bits,
    kappa_partition_bruteforce,
)


class _Lifter:
    """Shared tables for lifting orientations of simplify(contract(g, e))."""

    def __init__(self, g, e):
        g._check_edge_id(e)
        if g.classify_edges()[e] is not EdgeKind.CYCLE_EDGE:
            raise GraphInputError(f"edge {e} is not a cycle-edge")
        self.g = g
        self.e = e
        contraction = g.contract_edge(e)
        simplification = contraction.graph.simplify()
        self.contracted = simplification.graph
        vmap = contraction.vertex_map
        table = []
        for f, (a, b) in enumerate(g.edges):
            if f == e:
                table.append(None)
                continue
            sid = simplification.edge_map[contraction.edge_map[f]]
            if sid is None:
                raise GraphInputError(
                    f"edge {f} is parallel to edge {e}; lift a simple graph"
                )
            p, _q = self.contracted.edges[sid]
            table.append((sid, vmap[a] != p))
        self.table = table

    def lift(self, o_contracted, direction):
        if direction not in (1, 2):
            raise GraphInputError(f"direction must be 1 or 2, got {direction}")
        if o_contracted.graph != self.contracted:
            raise GraphInputError(
                "orientation does not belong to the simplified contraction"
            )
        bits = 0
        for f in range(self.g.m):
            if f == self.e:
                if direction == 2:
                    bits |= 1 << f
                continue
            sid, flip = self.table[f]
            bit = (o_contracted.bits >> sid) & 1
            if flip:
                bit ^= 1
            bits |= bit << f
        if not _is_acyclic_bits(self.g, bits):
            raise InternalInvariantError("lift produced a cyclic orientation")
        return Orientation(self.g, bits)


def lift_orientation(o_contracted, direction, g, e):
    """Lift an acyclic orientation of simplify(contract(g, e)) back to g.

    Inherited edges keep their direction through the contraction remaps;
    the cycle-edge e itself points small-to-large for direction 1 and
    large-to-small for direction 2.
    """
    return _Lifter(g, e).lift(o_contracted, direction)


@dataclass(frozen=True)
class CollapseEdge:
    forward_class: int  # class of the direction-1 lift
    backward_class: int  # class of the direction-2 lift
    label: Orientation  # representative of the contracted class inducing it


@dataclass(frozen=True)
class CollapseGraph:
    graph: object
    cycle_edge: int
    partition: object  # KappaPartition of graph
    edges: tuple  # CollapseEdge per click-class of the contraction

    @property
    def nodes(self):
        return self.partition.representatives

    def degrees(self):
        deg = [0] * len(self.nodes)
        for ce in self.edges:
            deg[ce.forward_class] += 1
            deg[ce.backward_class] += 1
        return deg

    def component_blocks(self):
        uf = UnionFind(len(self.nodes))
        for ce in self.edges:
            uf.union(ce.forward_class, ce.backward_class)
        return uf.groups()

    def to_dot(self):
        u, v = self.graph.edges[self.cycle_edge]
        lines = [
            "graph collapse {",
            f'  label="cycle-edge {self.cycle_edge} = {{{u},{v}}}";',
        ]
        for i, rep in enumerate(self.nodes):
            lines.append(f'  c{i} [label="{rep.hex}"];')
        for ce in self.edges:
            lines.append(
                f'  c{ce.forward_class} -- c{ce.backward_class} '
                f'[label="{ce.label.hex}"];'
            )
        lines.append("}")
        return "\n".join(lines) + "\n"


def build_collapse_graph(g, e, cap=None, partition=None):
    """Collapse graph of connected simple g at cycle-edge e, by brute force.

    Nodes are the click-classes of g; each click-class of the simplified
    contraction contributes one edge joining the classes of its two lifts.
    Well-definedness is asserted by lifting every member, not just the
    representative.
    """
    if g.has_loops:
        raise GraphInputError("graph has loops")
    if g.simplify().graph.m != g.m:
        raise GraphInputError("graph must be simple")
    if not g.is_connected:
        raise GraphInputError("graph must be connected")
    if partition is None:
        partition = kappa_partition_bruteforce(g, cap)
    elif partition.graph != g:
        raise GraphInputError("supplied partition belongs to a different graph")
    lifter = _Lifter(g, e)
    contracted_partition = kappa_partition_bruteforce(lifter.contracted, cap)
    edges = []
    for cls in contracted_partition.classes:
        ends = {
            (
                partition.class_of(lifter.lift(o, 1)),
                partition.class_of(lifter.lift(o, 2)),
            )
            for o in cls
        }
        if len(ends) != 1:
            raise InternalInvariantError(
                "lifting is not constant on a click-class of the contraction"
            )
        i, j = ends.pop()
        edges.append(CollapseEdge(i, j, cls[0]))
    return CollapseGraph(g, e, partition, tuple(edges))


@dataclass
class CollapseReport:
    ok: bool
    checks: dict
    counts: dict
    violations: tuple

    def to_json(self):
        return {
            "ok": self.ok,
            "checks": dict(self.checks),
            "counts": dict(self.counts),
            "violations": list(self.violations),
        }


def verify_collapse_structure(cg, cap=None):
    """Check every structural claim about a built collapse graph.

    Returns a report; a failed check lands in `violations` rather than
    raising, so callers can surface exactly which claim broke.
    """
    checks = {}
    n_nodes = len(cg.nodes)
    deg = cg.degrees()
    checks["degree_at_most_two"] = all(d <= 2 for d in deg)

    uf = UnionFind(n_nodes)
    acyclic = True
    seen_pairs = set()
    simple = True
    for ce in cg.edges:
        i, j = ce.forward_class, ce.backward_class
        if i == j:
            simple = False
            acyclic = False
            continue
        pair = (min(i, j), max(i, j))
        if pair in seen_pairs:
            simple = False
        seen_pairs.add(pair)
        if uf.find(i) == uf.find(j):
            acyclic = False
        uf.union(i, j)
    checks["acyclic"] = acyclic
    checks["simple_no_self_loops"] = simple

    blocks = cg.component_blocks()
    edges_per_block = {}
    for bi, block in enumerate(blocks):
        edges_per_block[bi] = 0
    block_of = {}
    for bi, block in enumerate(blocks):
        for node in block:
            block_of[node] = bi
    for ce in cg.edges:
        edges_per_block[block_of[ce.forward_class]] += 1
    checks["components_are_paths"] = all(
        edges_per_block[bi] == len(block) - 1 for bi, block in enumerate(blocks)
    )

    deletion = cg.graph.delete_edge(cg.cycle_edge)
    kappa_deleted = kappa(deletion.graph).value
    checks["component_count_matches_deletion"] = len(blocks) == kappa_deleted

    contracted = cg.graph.contract_edge(cg.cycle_edge).graph.simplify().graph
    kappa_contracted = kappa(contracted).value
    checks["edge_count_matches_contraction"] = len(cg.edges) == kappa_contracted

    checks["nodes_are_components_plus_edges"] = n_nodes == len(blocks) + len(cg.edges)

    # Deleting e must merge exactly the classes lying on one component.
    deleted_partition = kappa_partition_bruteforce(deletion.graph, cap)
    node_class_after_deletion = []
    for rep in cg.nodes:
        bits = 0
        for f, new_id in enumerate(deletion.edge_map):
            if new_id is not None:
                bits |= ((rep.bits >> f) & 1) << new_id
        node_class_after_deletion.append(deleted_partition.class_of_bits(bits))
    merge_ok = True
    class_to_block = {}
    for node, cls in enumerate(node_class_after_deletion):
        bi = block_of[node]
        if cls in class_to_block and class_to_block[cls] != bi:
            merge_ok = False
        class_to_block[cls] = bi
    for bi, block in enumerate(blocks):
        if len({node_class_after_deletion[node] for node in block}) != 1:
            merge_ok = False
    checks["deletion_merges_whole_components"] = merge_ok

    violations = tuple(name for name, ok in checks.items() if not ok)
    counts = {
        "nodes": n_nodes,
        "edges": len(cg.edges),
        "components": len(blocks),
        "kappa_after_deletion": kappa_deleted,
        "kappa_after_contraction": kappa_contracted,
    }
    return CollapseReport(not violations, checks, counts, violations)
