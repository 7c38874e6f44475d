"""Undirected multigraphs with stable edge identities.

Vertices are dense integer labels 0..n-1.  Edges are addressed by their
position in the edge list (edge-ids 0..m-1); parallel edges and loops are
permitted and each edge is stored canonically as (min, max).  All
operations are persistent: they return new graph values together with
remap tables, and never renumber the edges of their input.
"""

from __future__ import annotations

import hashlib
from collections import deque
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .errors import EdgeListParseError, GraphInputError


class EdgeKind(Enum):
    BRIDGE = "bridge"
    CYCLE_EDGE = "cycle-edge"
    LOOP = "loop"


class UnionFind:
    """Disjoint sets over 0..size-1 with path compression; smaller root wins."""

    def __init__(self, size):
        self.parent = list(range(size))
        self.n_components = size

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.n_components -= 1
        return ra

    def groups(self):
        """Blocks as sorted lists, ordered by smallest member."""
        by_root = {}
        for x in range(len(self.parent)):
            by_root.setdefault(self.find(x), []).append(x)
        return [sorted(block) for _, block in sorted(by_root.items())]


@dataclass(frozen=True)
class Multigraph:
    """Immutable labeled multigraph: vertex count plus an ordered edge list."""

    n_vertices: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n_vertices < 0:
            raise GraphInputError(f"negative vertex count {self.n_vertices}")
        canonical = []
        for a, b in self.edges:
            if not (0 <= a < self.n_vertices and 0 <= b < self.n_vertices):
                raise GraphInputError(
                    f"edge ({a}, {b}) out of range for {self.n_vertices} vertices"
                )
            canonical.append((a, b) if a <= b else (b, a))
        object.__setattr__(self, "edges", tuple(canonical))

    @classmethod
    def from_edges(cls, n_vertices, edges):
        return cls(n_vertices, tuple(tuple(e) for e in edges))

    @property
    def m(self):
        return len(self.edges)

    @property
    def loop_count(self):
        return sum(1 for a, b in self.edges if a == b)

    @property
    def has_loops(self):
        return any(a == b for a, b in self.edges)

    @cached_property
    def degrees(self):
        """Vertex degrees; a loop contributes 2 to its endpoint."""
        deg = [0] * self.n_vertices
        for a, b in self.edges:
            deg[a] += 1
            deg[b] += 1
        return tuple(deg)

    @cached_property
    def _incidence(self):
        """Per vertex: list of (edge_id, other endpoint), loops excluded."""
        inc = [[] for _ in range(self.n_vertices)]
        for eid, (a, b) in enumerate(self.edges):
            if a != b:
                inc[a].append((eid, b))
                inc[b].append((eid, a))
        return inc

    def _check_edge_id(self, e):
        if not (0 <= e < self.m):
            raise GraphInputError(f"edge id {e} out of range for {self.m} edges")

    # ----- structural operations (all persistent) -----

    def delete_edge(self, e):
        """Remove edge e; survivors keep their relative order."""
        self._check_edge_id(e)
        new_edges = self.edges[:e] + self.edges[e + 1 :]
        edge_map = tuple(
            None if i == e else (i if i < e else i - 1) for i in range(self.m)
        )
        return EdgeDeletion(Multigraph(self.n_vertices, new_edges), edge_map)

    def contract_edge(self, e):
        """Merge the endpoints of non-loop edge e into the smaller label.

        The larger endpoint disappears and labels above it shift down by
        one.  Parallel edges and loops created by the merge are retained.
        """
        self._check_edge_id(e)
        u, v = self.edges[e]
        if u == v:
            raise GraphInputError(f"edge {e} is a loop and cannot be contracted")
        vertex_map = tuple(
            x if x < v else (u if x == v else x - 1) for x in range(self.n_vertices)
        )
        new_edges = []
        edge_map = []
        for i, (a, b) in enumerate(self.edges):
            if i == e:
                edge_map.append(None)
                continue
            edge_map.append(len(new_edges))
            new_edges.append((vertex_map[a], vertex_map[b]))
        return EdgeContraction(
            Multigraph(self.n_vertices - 1, tuple(new_edges)),
            vertex_map,
            tuple(edge_map),
        )

    def simplify(self):
        """Drop loops and collapse each parallel class to its lowest edge-id.

        The remap sends every non-loop edge to the surviving representative
        of its parallel class, and loops to None.
        """
        new_edges = []
        keeper = {}
        edge_map = []
        for a, b in self.edges:
            if a == b:
                edge_map.append(None)
            elif (a, b) in keeper:
                edge_map.append(keeper[(a, b)])
            else:
                keeper[(a, b)] = len(new_edges)
                edge_map.append(len(new_edges))
                new_edges.append((a, b))
        return Simplification(
            Multigraph(self.n_vertices, tuple(new_edges)), tuple(edge_map)
        )

    # ----- classification and components -----

    @cached_property
    def _bridge_ids(self):
        """Edge ids of bridges, found by one DFS pass (low-point method)."""
        n = self.n_vertices
        inc = self._incidence
        disc = [-1] * n
        low = [0] * n
        bridges = set()
        timer = 0
        for root in range(n):
            if disc[root] != -1:
                continue
            disc[root] = low[root] = timer
            timer += 1
            # stack holds [vertex, entering edge id, next incidence index]
            stack = [[root, -1, 0]]
            while stack:
                frame = stack[-1]
                v, in_edge, i = frame
                if i < len(inc[v]):
                    frame[2] += 1
                    eid, w = inc[v][i]
                    if eid == in_edge:
                        continue
                    if disc[w] == -1:
                        disc[w] = low[w] = timer
                        timer += 1
                        stack.append([w, eid, 0])
                    elif disc[w] < low[v]:
                        low[v] = disc[w]
                else:
                    stack.pop()
                    if stack:
                        parent = stack[-1][0]
                        if low[v] < low[parent]:
                            low[parent] = low[v]
                        if low[v] > disc[parent]:
                            bridges.add(in_edge)
        return frozenset(bridges)

    def classify_edges(self):
        """One EdgeKind per edge-id: Loop, Bridge, or CycleEdge."""
        bridges = self._bridge_ids
        kinds = []
        for eid, (a, b) in enumerate(self.edges):
            if a == b:
                kinds.append(EdgeKind.LOOP)
            elif eid in bridges:
                kinds.append(EdgeKind.BRIDGE)
            else:
                kinds.append(EdgeKind.CYCLE_EDGE)
        return kinds

    def cycle_subgraph(self):
        """Delete every bridge; the vertex set is unchanged."""
        bridges = self._bridge_ids
        kept = tuple(e for i, e in enumerate(self.edges) if i not in bridges)
        return Multigraph(self.n_vertices, kept)

    def connected_components(self):
        """Vertex partition as sorted blocks, ordered by smallest member."""
        uf = UnionFind(self.n_vertices)
        for a, b in self.edges:
            uf.union(a, b)
        return uf.groups()

    @property
    def is_connected(self):
        return len(self.connected_components()) <= 1

    def split_components(self):
        """One ComponentPiece per connected component, relabeled densely."""
        pieces = []
        for block in self.connected_components():
            relabel = {old: new for new, old in enumerate(block)}
            members = set(block)
            edge_ids = tuple(
                i for i, (a, b) in enumerate(self.edges) if a in members
            )
            edges = tuple(
                (relabel[self.edges[i][0]], relabel[self.edges[i][1]])
                for i in edge_ids
            )
            pieces.append(
                ComponentPiece(Multigraph(len(block), edges), tuple(block), edge_ids)
            )
        return pieces

    def drop_isolated(self):
        """Remove degree-0 vertices, relabeling the rest densely."""
        deg = self.degrees
        keep = [v for v in range(self.n_vertices) if deg[v] > 0]
        relabel = {old: new for new, old in enumerate(keep)}
        vertex_map = tuple(relabel.get(v) for v in range(self.n_vertices))
        edges = tuple((relabel[a], relabel[b]) for a, b in self.edges)
        return VertexCompaction(Multigraph(len(keep), edges), vertex_map)

    # ----- serialization -----

    def to_edge_list_text(self):
        lines = [f"{self.n_vertices} {self.m}"]
        lines.extend(f"{a} {b}" for a, b in self.edges)
        return "\n".join(lines) + "\n"

    def sha256(self):
        return hashlib.sha256(self.to_edge_list_text().encode()).hexdigest()


@dataclass(frozen=True)
class EdgeDeletion:
    graph: Multigraph
    edge_map: tuple  # old edge-id -> new edge-id, None for the deleted edge


@dataclass(frozen=True)
class EdgeContraction:
    graph: Multigraph
    vertex_map: tuple  # old vertex -> new vertex (total)
    edge_map: tuple  # old edge-id -> new edge-id, None for the contracted edge


@dataclass(frozen=True)
class Simplification:
    graph: Multigraph
    edge_map: tuple  # old edge-id -> surviving class representative, None for loops


@dataclass(frozen=True)
class VertexCompaction:
    graph: Multigraph
    vertex_map: tuple  # old vertex -> new vertex, None for dropped isolated ones


@dataclass(frozen=True)
class ComponentPiece:
    graph: Multigraph
    vertices: tuple  # piece label i corresponds to original vertex vertices[i]
    edge_ids: tuple  # piece edge j corresponds to original edge edge_ids[j]


def memo_key(g):
    """Deterministic serialization used as a recursion memo key.

    Vertices are relabeled by a degree-then-BFS order and the edge multiset
    is serialized sorted.  The key is stable for equal-shaped inputs met
    along a recursion but is NOT an isomorphism-canonical form; correctness
    of the engines never depends on it, only cache hit rate does.
    """
    n = g.n_vertices
    deg = g.degrees
    inc = g._incidence
    seen = [False] * n
    order = []
    for root in sorted(range(n), key=lambda v: (deg[v], v)):
        if seen[root]:
            continue
        seen[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            order.append(v)
            nbrs = sorted({w for _, w in inc[v]}, key=lambda w: (deg[w], w))
            for w in nbrs:
                if not seen[w]:
                    seen[w] = True
                    queue.append(w)
    relabel = {old: new for new, old in enumerate(order)}
    pairs = sorted(
        (min(relabel[a], relabel[b]), max(relabel[a], relabel[b]))
        for a, b in g.edges
    )
    return f"{n}:" + ",".join(f"{a}-{b}" for a, b in pairs)


def parse_edge_list(text):
    """Parse the shared edge-list format: `n m`, then m lines `u v`.

    A line `u v` with u == v encodes a loop; duplicate lines encode
    parallel edges; line order defines edge-ids.
    """
    lines = text.splitlines()
    if not lines:
        raise EdgeListParseError(1, "empty input, expected header 'n m'")
    header = lines[0].split()
    if len(header) != 2:
        raise EdgeListParseError(1, f"expected header 'n m', got {lines[0]!r}")
    try:
        n, m = int(header[0]), int(header[1])
    except ValueError:
        raise EdgeListParseError(1, f"non-integer header {lines[0]!r}") from None
    if n < 0 or m < 0:
        raise EdgeListParseError(1, f"negative counts in header {lines[0]!r}")
    edges = []
    lineno = 1
    for lineno, line in enumerate(lines[1:], start=2):
        if not line.strip():
            continue
        if len(edges) == m:
            raise EdgeListParseError(lineno, f"more than {m} edge lines")
        parts = line.split()
        if len(parts) != 2:
            raise EdgeListParseError(lineno, f"expected 'u v', got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListParseError(lineno, f"non-integer endpoints {line!r}") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListParseError(
                lineno, f"endpoint out of range 0..{n - 1}: {line!r}"
            )
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListParseError(
            lineno + 1, f"expected {m} edge lines, found {len(edges)}"
        )
    return Multigraph(n, tuple(edges))
