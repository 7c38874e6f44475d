"""Brute-force layer over acyclic orientations.

An orientation is one bit per edge-id: bit 0 directs the edge from its
smaller endpoint label to the larger, bit 1 the reverse.  Everything here
works by exhaustive enumeration over bitmasks and is the ground truth the
fast engines are tested against.  All entry points reject loops, which
admit no acyclic orientation; graphs with parallel edges are partitioned
after simplification (anti-parallel pairs are 2-cycles, so co-direction is
forced and nothing is lost).
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import CapExceededError, GraphInputError, InternalInvariantError
from .graphs import Multigraph, UnionFind

DEFAULT_BRUTE_FORCE_CAP = 20


@lru_cache(maxsize=None)
def _bit_tables(g):
    """Per vertex: masks of edges where it is the smaller / larger endpoint."""
    smaller = [0] * g.n_vertices
    larger = [0] * g.n_vertices
    for eid, (a, b) in enumerate(g.edges):
        smaller[a] |= 1 << eid
        larger[b] |= 1 << eid
    incident = [smaller[v] | larger[v] for v in range(g.n_vertices)]
    return tuple(smaller), tuple(larger), tuple(incident)


def _require_loop_free(g):
    if g.has_loops:
        raise GraphInputError("graph has loops; loops admit no acyclic orientation")


def _is_acyclic_bits(g, bits):
    """Peel source vertices until no edge remains; a stall means a cycle."""
    smaller, larger, incident = _bit_tables(g)
    active = (1 << g.m) - 1
    n = g.n_vertices
    while active:
        removed = 0
        for v in range(n):
            if incident[v] & active and not (
                ((bits & smaller[v]) | (~bits & larger[v])) & active
            ):
                removed |= incident[v]
        if not removed:
            return False
        active &= ~removed
    return True


def _resolve_cap(cap):
    return DEFAULT_BRUTE_FORCE_CAP if cap is None else cap


def _check_cap(g, cap):
    cap = _resolve_cap(cap)
    if g.m > cap:
        raise CapExceededError("graph", g.m, cap)


@lru_cache(maxsize=None)
def _acyclic_masks(g):
    return tuple(bits for bits in range(1 << g.m) if _is_acyclic_bits(g, bits))


@dataclass(frozen=True)
class Orientation:
    """A direction for every edge of one specific graph, packed into bits."""

    graph: Multigraph
    bits: int

    def __post_init__(self):
        _require_loop_free(self.graph)
        if not (0 <= self.bits < (1 << self.graph.m)):
            raise GraphInputError(
                f"bitmask {self.bits:#x} out of range for {self.graph.m} edges"
            )

    def arc(self, e):
        """The (tail, head) pair edge e is directed as."""
        a, b = self.graph.edges[e]
        return (a, b) if not (self.bits >> e) & 1 else (b, a)

    def arcs(self):
        return tuple(self.arc(e) for e in range(self.graph.m))

    @property
    def hex(self):
        return format(self.bits, "x")

    def to_payload(self):
        """Wire form: lowercase hex bitmask plus the owning graph's hash."""
        return {"bits": self.hex, "graph_sha256": self.graph.sha256()}


def is_acyclic(o):
    """True iff the directed graph induced by o has no directed cycle."""
    return _is_acyclic_bits(o.graph, o.bits)


def enumerate_acyclic(g, cap=None):
    """All acyclic orientations of g, in ascending bitmask order."""
    _require_loop_free(g)
    _check_cap(g, cap)
    return [Orientation(g, bits) for bits in _acyclic_masks(g)]


def click(o, v):
    """Source-to-sink step: reverse every edge at source v (degree >= 1)."""
    g = o.graph
    if not (0 <= v < g.n_vertices):
        raise GraphInputError(f"vertex {v} out of range")
    smaller, larger, incident = _bit_tables(g)
    if not incident[v]:
        raise GraphInputError(f"vertex {v} is isolated and cannot be clicked")
    if (o.bits & smaller[v]) | (~o.bits & larger[v]):
        raise GraphInputError(f"vertex {v} is not a source")
    return Orientation(g, o.bits ^ incident[v])


def apply_click_sequence(o, seq):
    """Left-to-right fold of click; reports the first violating position."""
    for i, v in enumerate(seq):
        try:
            o = click(o, v)
        except GraphInputError as exc:
            raise GraphInputError(f"click {i} (vertex {v}): {exc}") from None
    return o


def topological_order(o):
    """Smallest-label-first topological order of an acyclic orientation."""
    g = o.graph
    n = g.n_vertices
    indeg = [0] * n
    out = [[] for _ in range(n)]
    for e in range(g.m):
        tail, head = o.arc(e)
        out[tail].append(head)
        indeg[head] += 1
    heap = [v for v in range(n) if indeg[v] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        v = heapq.heappop(heap)
        order.append(v)
        for w in out[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                heapq.heappush(heap, w)
    if len(order) != n:
        raise GraphInputError("orientation is cyclic, no topological order")
    return tuple(order)


@dataclass(frozen=True)
class KappaPartition:
    """Acyclic orientations grouped into click-equivalence classes.

    Classes and their members are sorted by bitmask; the representative of
    a class is its lexicographically least member.
    """

    graph: Multigraph
    classes: tuple

    @property
    def representatives(self):
        return tuple(cls[0] for cls in self.classes)

    @property
    def class_count(self):
        return len(self.classes)

    @cached_property
    def _index(self):
        index = {}
        for i, cls in enumerate(self.classes):
            for o in cls:
                index[o.bits] = i
        return index

    def class_of_bits(self, bits):
        try:
            return self._index[bits]
        except KeyError:
            raise GraphInputError(f"bitmask {bits:#x} is not acyclic here") from None

    def class_of(self, o):
        if o.graph != self.graph:
            raise GraphInputError("orientation belongs to a different graph")
        return self.class_of_bits(o.bits)

    def as_bit_classes(self):
        return tuple(tuple(o.bits for o in cls) for cls in self.classes)


def _click_class_masks(g, cap):
    """Connected components of the click graph over the acyclic masks of g.

    g may have parallel edges (they are forced co-directed); the caller
    decides whether to simplify first.
    """
    _require_loop_free(g)
    _check_cap(g, cap)
    masks = _acyclic_masks(g)
    index = {bits: i for i, bits in enumerate(masks)}
    smaller, larger, incident = _bit_tables(g)
    uf = UnionFind(len(masks))
    for i, bits in enumerate(masks):
        for v in range(g.n_vertices):
            if incident[v] and not ((bits & smaller[v]) | (~bits & larger[v])):
                j = index.get(bits ^ incident[v])
                if j is None:
                    raise InternalInvariantError(
                        "click left the set of acyclic orientations"
                    )
                uf.union(i, j)
    return [[masks[i] for i in block] for block in uf.groups()]


def kappa_partition_bruteforce(g, cap=None):
    """Click-equivalence classes of simplify(g), by exhaustive enumeration."""
    _require_loop_free(g)
    s = g.simplify().graph
    blocks = _click_class_masks(s, cap)
    classes = tuple(tuple(Orientation(s, bits) for bits in block) for block in blocks)
    return KappaPartition(s, classes)


def cut_equivalence_classes(g, cap=None):
    """Transitive closure of cut-equivalence over simplify(g), as bit classes.

    Computed independently of clicks: for every acyclic orientation, every
    vertex bipartition is tried, and orientations differing exactly by an
    oriented cut are merged.  Returns the same (sorted) shape that
    KappaPartition.as_bit_classes() produces.
    """
    _require_loop_free(g)
    s = g.simplify().graph
    _check_cap(s, cap)
    masks = _acyclic_masks(s)
    index = {bits: i for i, bits in enumerate(masks)}
    n = s.n_vertices
    cuts = []
    for side in range(1, 1 << n, 2):  # subsets containing vertex 0
        if side == (1 << n) - 1:
            continue
        cut_mask = 0
        rev_mask = 0  # cut edges whose larger endpoint is inside `side`
        for eid, (a, b) in enumerate(s.edges):
            a_in = (side >> a) & 1
            b_in = (side >> b) & 1
            if a_in != b_in:
                cut_mask |= 1 << eid
                if b_in:
                    rev_mask |= 1 << eid
        if cut_mask:
            cuts.append((cut_mask, rev_mask, cut_mask ^ rev_mask))
    uf = UnionFind(len(masks))
    for i, bits in enumerate(masks):
        for cut_mask, req_a, req_b in cuts:
            d = bits & cut_mask
            if d == req_a or d == req_b:
                j = index.get(bits ^ cut_mask)
                if j is None:
                    raise InternalInvariantError(
                        "reversing an oriented cut left the acyclic set"
                    )
                uf.union(i, j)
    return tuple(tuple(masks[i] for i in block) for block in uf.groups())


@dataclass(frozen=True)
class PathSpec:
    """A simple (possibly closed) path given by its vertex sequence.

    A closed path may be written either with the first vertex repeated at
    the end or with `closed=True` implying the wrap-around step.  When
    parallel edges make a step ambiguous, edge_choice must name the edge-id
    used for each step.
    """

    vertices: tuple
    closed: bool = False
    edge_choice: tuple | None = None

    @classmethod
    def from_json(cls, obj):
        try:
            vertices = tuple(int(v) for v in obj["vertices"])
            closed = bool(obj.get("closed", False))
            choice = obj.get("edges")
            edge_choice = None if choice is None else tuple(int(e) for e in choice)
        except (TypeError, KeyError, ValueError) as exc:
            raise GraphInputError(f"malformed path spec: {exc}") from None
        return cls(vertices, closed, edge_choice)

    def to_json(self):
        obj = {"vertices": list(self.vertices), "closed": self.closed}
        if self.edge_choice is not None:
            obj["edges"] = list(self.edge_choice)
        return obj

    def resolve(self, g):
        """Validate against g and return the steps as (from, to, edge_id)."""
        core = list(self.vertices)
        if self.closed and len(core) >= 2 and core[0] == core[-1]:
            core = core[:-1]
        if len(core) < 2:
            raise GraphInputError("path needs at least two distinct vertices")
        if len(set(core)) != len(core):
            raise GraphInputError("path repeats a vertex")
        for v in core:
            if not (0 <= v < g.n_vertices):
                raise GraphInputError(f"path vertex {v} out of range")
        pairs = list(zip(core, core[1:]))
        if self.closed:
            pairs.append((core[-1], core[0]))
        if self.edge_choice is not None and len(self.edge_choice) != len(pairs):
            raise GraphInputError(
                f"edge_choice has {len(self.edge_choice)} entries for {len(pairs)} steps"
            )
        steps = []
        used = set()
        for i, (x, y) in enumerate(pairs):
            key = (min(x, y), max(x, y))
            candidates = [eid for eid, e in enumerate(g.edges) if e == key]
            if self.edge_choice is not None:
                eid = self.edge_choice[i]
                if eid not in candidates:
                    raise GraphInputError(
                        f"edge {eid} does not join {x} and {y}"
                    )
            elif not candidates:
                raise GraphInputError(f"no edge joins {x} and {y}")
            elif len(candidates) > 1:
                raise GraphInputError(
                    f"parallel edges join {x} and {y}; provide edge_choice"
                )
            else:
                eid = candidates[0]
            if eid in used:
                raise GraphInputError(f"path uses edge {eid} twice")
            used.add(eid)
            steps.append((x, y, eid))
        return tuple(steps)


def nu_path(o, p):
    """Forward-minus-backward edge count of o along the path p."""
    total = 0
    for x, y, eid in p.resolve(o.graph):
        total += 1 if o.arc(eid) == (x, y) else -1
    return total


def cut_equivalent(o1, o2):
    """True iff o1 and o2 differ on nothing, or exactly on an oriented cut.

    The disagreement edges must all cross one vertex bipartition, with
    every crossing edge directed the same way in o1 (hence the opposite
    way in o2).
    """
    if o1.graph != o2.graph:
        raise GraphInputError("orientations belong to different graphs")
    g = o1.graph
    disagree = o1.bits ^ o2.bits
    if not disagree:
        return True
    uf = UnionFind(g.n_vertices)
    for eid, (a, b) in enumerate(g.edges):
        if not (disagree >> eid) & 1:
            uf.union(a, b)
    polarity = {}
    for eid in range(g.m):
        if not (disagree >> eid) & 1:
            continue
        tail, head = (
            g.edges[eid] if not (o1.bits >> eid) & 1 else g.edges[eid][::-1]
        )
        rt, rh = uf.find(tail), uf.find(head)
        if rt == rh:
            return False
        if polarity.get(rt) == -1 or polarity.get(rh) == +1:
            return False
        polarity[rt] = +1
        polarity[rh] = -1
    return True


def _no_incoming(g, bits):
    smaller, larger, _ = _bit_tables(g)
    return [
        v
        for v in range(g.n_vertices)
        if not ((bits & smaller[v]) | (~bits & larger[v]))
    ]


def unique_source_orientations(g, v, cap=None):
    """Acyclic orientations of connected g whose only source is v."""
    _require_loop_free(g)
    if not (0 <= v < g.n_vertices):
        raise GraphInputError(f"vertex {v} out of range")
    if not g.is_connected:
        raise GraphInputError("graph must be connected")
    _check_cap(g, cap)
    out = []
    for bits in _acyclic_masks(g):
        if _no_incoming(g, bits) == [v]:
            out.append(Orientation(g, bits))
    return out


def normalize_to_unique_source(o, v):
    """Click non-v sources (smallest label first) until v is the only source.

    Returns the final orientation and the click sequence used.  Termination
    is guaranteed for connected graphs; a guard of 2^m * n iterations turns
    a failure to terminate into an internal-invariant error.
    """
    g = o.graph
    if not (0 <= v < g.n_vertices):
        raise GraphInputError(f"vertex {v} out of range")
    if not g.is_connected:
        raise GraphInputError("graph must be connected")
    if not _is_acyclic_bits(g, o.bits):
        raise GraphInputError("orientation is not acyclic")
    smaller, larger, incident = _bit_tables(g)
    bits = o.bits
    seq = []
    guard = (1 << g.m) * max(g.n_vertices, 1)
    while True:
        src = None
        for w in range(g.n_vertices):
            if w == v or not incident[w]:
                continue
            if not ((bits & smaller[w]) | (~bits & larger[w])):
                src = w
                break
        if src is None:
            break
        bits ^= incident[src]
        seq.append(src)
        if len(seq) > guard:
            raise InternalInvariantError(
                "source normalization failed to terminate within 2^m * n clicks"
            )
    return Orientation(g, bits), tuple(seq)


def orientation_from_permutation(g, perm):
    """Direct every edge from the earlier to the later vertex of perm."""
    _require_loop_free(g)
    if sorted(perm) != list(range(g.n_vertices)):
        raise GraphInputError("not a permutation of the vertex set")
    pos = {v: i for i, v in enumerate(perm)}
    bits = 0
    for eid, (a, b) in enumerate(g.edges):
        if pos[a] > pos[b]:
            bits |= 1 << eid
    return Orientation(g, bits)
