"""Hypergraph model: covers, tau_max, cycle structure, induced substructures.

Vertices are arbitrary positive integers (not necessarily contiguous) so that
substructures keep their original labels.  Edges form an antichain under
inclusion.  Isolated vertices are permitted; they simply belong to no edge.
All types are immutable and all operations are pure functions.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import InputError

__all__ = [
    "Hypergraph",
    "CycleStructure",
    "MinimalCovers",
    "minimal_covers",
    "tau_max",
    "cycle_structure",
    "is_bipartite",
    "induced_subhypergraph",
    "disjoint_union",
    "connected_components",
]


@dataclass(frozen=True)
class Hypergraph:
    vertices: frozenset[int]
    edges: frozenset[frozenset[int]]

    def __post_init__(self):
        for e in self.edges:
            if not e:
                raise InputError("edges must be nonempty")
            if not e <= self.vertices:
                raise InputError(f"edge {sorted(e)} not contained in the vertex set")
        for e in self.edges:
            for f in self.edges:
                if e != f and e < f:
                    raise InputError(
                        f"edges must form an antichain: {sorted(e)} is contained in {sorted(f)}"
                    )

    @classmethod
    def of(cls, vertices: Iterable[int], edges: Iterable[Iterable[int]]) -> "Hypergraph":
        vs = frozenset(int(v) for v in vertices)
        es = frozenset(frozenset(int(v) for v in e) for e in edges)
        return cls(vs, es)

    @property
    def is_graph(self) -> bool:
        return all(len(e) == 2 for e in self.edges)

    @property
    def is_edgeless(self) -> bool:
        return not self.edges

    def degree(self, v: int) -> int:
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v: int) -> frozenset[int]:
        out: set[int] = set()
        for e in self.edges:
            if v in e:
                out.update(e - {v})
        return frozenset(out)

    def isolated_vertices(self) -> frozenset[int]:
        covered: set[int] = set()
        for e in self.edges:
            covered.update(e)
        return self.vertices - covered

    def __repr__(self) -> str:  # keep reprs short in test output
        es = sorted(tuple(sorted(e)) for e in self.edges)
        return f"Hypergraph({sorted(self.vertices)}, {es})"


@dataclass(frozen=True)
class CycleStructure:
    kind: str  # "forest" | "unicyclic" | "other"
    cycle_length: int | None = None
    cycle_vertices: tuple[int, ...] | None = None


class MinimalCovers(NamedTuple):
    covers: frozenset[frozenset[int]]
    edgeless: bool


def _maximal_independent_sets(g: Hypergraph) -> list[frozenset[int]]:
    """All maximal sets containing no edge of ``g``, by vertex-ordered backtracking."""
    vs = sorted(g.vertices)
    edges = [set(e) for e in g.edges]
    incident: dict[int, list[set[int]]] = {v: [] for v in vs}
    for e in edges:
        for v in e:
            incident[v].append(e)
    results: list[frozenset[int]] = []
    current: set[int] = set()

    def is_maximal() -> bool:
        for u in vs:
            if u in current:
                continue
            if all(not (e - {u} <= current) for e in incident[u]):
                return False
        return True

    def extend(i: int) -> None:
        if i == len(vs):
            if is_maximal():
                results.append(frozenset(current))
            return
        v = vs[i]
        current.add(v)
        if all(not (e <= current) for e in incident[v]):
            extend(i + 1)
        current.discard(v)
        extend(i + 1)

    extend(0)
    return results


def minimal_covers(g: Hypergraph) -> MinimalCovers:
    """Inclusion-minimal vertex covers of ``g``.

    A cover meets every edge; complements of minimal covers are exactly the
    maximal independent sets, which is how they are enumerated.  An edgeless
    hypergraph yields the single empty cover, flagged via ``edgeless`` (the
    empty-intersection convention).
    """
    if g.is_edgeless:
        return MinimalCovers(frozenset({frozenset()}), True)
    covers = frozenset(g.vertices - u for u in _maximal_independent_sets(g))
    return MinimalCovers(covers, False)


def tau_max(g: Hypergraph) -> int:
    """Maximum cardinality of a minimal cover; 0 for an edgeless hypergraph."""
    covers, edgeless = minimal_covers(g)
    if edgeless:
        return 0
    return max(len(w) for w in covers)


def _require_graph(g: Hypergraph, op: str) -> None:
    if not g.is_graph:
        raise InputError(f"{op} requires a graph (all edges of size 2)")


def _adjacency(g: Hypergraph) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = {v: set() for v in g.vertices}
    for e in g.edges:
        a, b = tuple(e)
        adj[a].add(b)
        adj[b].add(a)
    return adj


def connected_components(g: Hypergraph) -> tuple[Hypergraph, ...]:
    """Components as induced subhypergraphs; isolated vertices are singleton components."""
    remaining = set(g.vertices)
    comps: list[Hypergraph] = []
    while remaining:
        start = min(remaining)
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for e in g.edges:
                if v in e:
                    for u in e:
                        if u not in seen:
                            seen.add(u)
                            stack.append(u)
        remaining -= seen
        comps.append(induced_subhypergraph(g, frozenset(seen)))
    return tuple(sorted(comps, key=lambda c: min(c.vertices)))


def cycle_structure(g: Hypergraph) -> CycleStructure:
    """Classify a graph as forest / unicyclic (exactly one cycle) / other."""
    _require_graph(g, "cycle_structure")
    n, m = len(g.vertices), len(g.edges)
    num_components = len(connected_components(g))
    cyclomatic = m - n + num_components
    if cyclomatic == 0:
        return CycleStructure("forest")
    if cyclomatic > 1:
        return CycleStructure("other")
    # The unique cycle is the 2-core: strip degree<=1 vertices until stable.
    adj = _adjacency(g)
    alive = set(g.vertices)
    changed = True
    while changed:
        changed = False
        for v in list(alive):
            deg = sum(1 for u in adj[v] if u in alive)
            if deg <= 1:
                alive.discard(v)
                changed = True
    start = min(alive)
    walk = [start]
    prev = None
    cur = start
    while True:
        nxts = sorted(u for u in adj[cur] if u in alive and u != prev)
        nxt = nxts[0]
        if nxt == start:
            break
        walk.append(nxt)
        prev, cur = cur, nxt
    return CycleStructure("unicyclic", len(walk), tuple(walk))


def is_bipartite(g: Hypergraph) -> bool:
    _require_graph(g, "is_bipartite")
    adj = _adjacency(g)
    color: dict[int, int] = {}
    for root in sorted(g.vertices):
        if root in color:
            continue
        color[root] = 0
        queue = [root]
        while queue:
            v = queue.pop()
            for u in adj[v]:
                if u not in color:
                    color[u] = 1 - color[v]
                    queue.append(u)
                elif color[u] == color[v]:
                    return False
    return True


def induced_subhypergraph(g: Hypergraph, w: Iterable[int]) -> Hypergraph:
    """Restriction to ``w``: keeps exactly the edges contained in ``w``."""
    ws = frozenset(w)
    if not ws <= g.vertices:
        raise InputError(f"vertex set {sorted(ws - g.vertices)} not contained in the hypergraph")
    return Hypergraph(ws, frozenset(e for e in g.edges if e <= ws))


def disjoint_union(g1: Hypergraph, g2: Hypergraph) -> tuple[Hypergraph, dict[int, int]]:
    """Union of two hypergraphs on disjoint labels.

    If the label sets overlap, ``g2`` is relabeled above ``max`` of ``g1``; the
    returned map sends each original ``g2`` label to the one used in the union
    (the identity when no relabeling was needed).
    """
    overlap = g1.vertices & g2.vertices
    if overlap:
        base = max(g1.vertices | g2.vertices, default=0)
        relabel = {v: base + i + 1 for i, v in enumerate(sorted(g2.vertices))}
    else:
        relabel = {v: v for v in g2.vertices}
    edges2 = frozenset(frozenset(relabel[v] for v in e) for e in g2.edges)
    merged = Hypergraph(
        g1.vertices | frozenset(relabel.values()),
        g1.edges | edges2,
    )
    return merged, relabel
