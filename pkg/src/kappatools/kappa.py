"""Fast click-class counting, no orientation enumeration.

The count for a graph is the count after deleting a cycle-edge plus the
count after contracting it.  Three prunings keep the recursion small:
parallel edges collapse, bridges never matter, and disjoint pieces
multiply.  Recursion results are memoized on a normalized graph key.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import GraphInputError
from .graphs import memo_key


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0


@dataclass(frozen=True)
class TraceNode:
    """One step of the unfolded recursion, for explainability."""

    key: str
    rule: str  # "base" | "product" | "bridge-prune" | "recursion"
    edge: tuple | None
    value: int
    children: tuple

    def to_json(self):
        return {
            "key": self.key,
            "rule": self.rule,
            "edge": None if self.edge is None else list(self.edge),
            "value": self.value,
            "children": [c.to_json() for c in self.children],
        }

    def leaf_count(self):
        if not self.children:
            return 1
        return sum(c.leaf_count() for c in self.children)


@dataclass
class KappaResult:
    value: int
    trace: TraceNode | None = None
    cache_stats: CacheStats = field(default_factory=CacheStats)


class _Engine:
    def __init__(self, memo, rng, build_trace):
        self.memo = memo  # None disables caching entirely
        self.rng = rng
        self.build_trace = build_trace
        self.stats = CacheStats()

    def solve(self, g):
        """Value of an arbitrary loop-free multigraph, plus its trace node."""
        s = g.simplify().graph
        core = s.cycle_subgraph().drop_isolated().graph
        if core.m == 0:
            node = (
                TraceNode(memo_key(core), "base", None, 1, ())
                if self.build_trace
                else None
            )
            return 1, node
        value, node = self._solve_core(core)
        if self.build_trace and s.m != core.m:
            node = TraceNode(memo_key(s), "bridge-prune", None, value, (node,))
        return value, node

    def _solve_core(self, core):
        pieces = core.split_components()
        if len(pieces) > 1:
            value = 1
            children = []
            for piece in pieces:
                v, child = self._solve_component(piece.graph)
                value *= v
                if self.build_trace:
                    children.append(child)
            node = (
                TraceNode(memo_key(core), "product", None, value, tuple(children))
                if self.build_trace
                else None
            )
            return value, node
        return self._solve_component(core)

    def _solve_component(self, c):
        """c is connected, simple, bridge-free, with at least one edge."""
        key = memo_key(c)
        if self.memo is not None and key in self.memo:
            self.stats.hits += 1
            return self.memo[key], None
        self.stats.misses += 1
        if self.rng is None:
            eid = min(range(c.m), key=lambda i: c.edges[i])
        else:
            eid = self.rng.randrange(c.m)
        v1, n1 = self.solve(c.delete_edge(eid).graph)
        v2, n2 = self.solve(c.contract_edge(eid).graph)
        value = v1 + v2
        if self.memo is not None:
            self.memo[key] = value
        node = (
            TraceNode(key, "recursion", c.edges[eid], value, (n1, n2))
            if self.build_trace
            else None
        )
        return value, node


def kappa(g, *, rng=None, use_cache=True, cache=None):
    """Number of click-equivalence classes of acyclic orientations of g.

    Parallel edges are fine (they collapse); loops are rejected.  Pass an
    rng to recurse on randomly chosen cycle-edges instead of the
    lexicographically least one (the value must not change; differential
    tests rely on this).  Pass use_cache=False for a cache-free run, or a
    dict as `cache` to share memoized results across calls.
    """
    if g.has_loops:
        raise GraphInputError("graph has loops; loops admit no acyclic orientation")
    memo = (cache if cache is not None else {}) if use_cache else None
    engine = _Engine(memo, rng, build_trace=False)
    value, _ = engine.solve(g)
    return KappaResult(value, None, engine.stats)


def kappa_with_trace(g, *, rng=None):
    """Like kappa, but cache-free and with the full recursion tree attached.

    Caching is off so the trace is the complete unfolded recursion; every
    leaf contributes exactly 1.
    """
    if g.has_loops:
        raise GraphInputError("graph has loops; loops admit no acyclic orientation")
    engine = _Engine(None, rng, build_trace=True)
    value, node = engine.solve(g)
    return KappaResult(value, node, engine.stats)
