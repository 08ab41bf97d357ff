"""Weighted simple connected graphs with exact rational weights.

Vertices are dense integers ``0..n-1``.  Edges carry dense integer ids
assigned by position, so a weight map is simply a sequence of fractions
indexed by edge id.  Everything here is immutable after construction and
all arithmetic is exact; floating point never enters the picture.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exceptions import (
    BadParameter,
    DisconnectedGraph,
    DuplicateEdge,
    EdgeInTree,
    InstanceError,
    MissingWeight,
    NonpositiveWeight,
    NotSpanning,
    SelfLoop,
    TooLarge,
)
from .rationals import ensure_fraction

Weights = Sequence[Fraction]

# Subset enumeration cap for the brute-force oracle: C(24, 12) ~ 2.7M.
BRUTE_FORCE_EDGE_LIMIT = 24


@dataclass(frozen=True)
class Edge:
    """An undirected edge with a dense id and two distinct endpoints."""

    id: int
    u: int
    v: int

    def other(self, vertex: int) -> int:
        return self.v if vertex == self.u else self.u


class _UnionFind:
    __slots__ = ("parent",)

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, a: int, b: int) -> bool:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return False
        self.parent[rb] = ra
        return True


@dataclass(frozen=True)
class Graph:
    """A simple connected undirected graph; edge ids equal list positions."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 2:
            raise InstanceError(f"need at least 2 vertices, got {self.n}")
        seen_pairs = set()
        uf = _UnionFind(self.n)
        components = self.n
        for position, edge in enumerate(self.edges):
            if edge.id != position:
                raise InstanceError(
                    f"edge ids must be dense and in order: position {position} has id {edge.id}"
                )
            if not (0 <= edge.u < self.n and 0 <= edge.v < self.n):
                raise InstanceError(f"edge {edge.id} endpoint out of range")
            if edge.u == edge.v:
                raise SelfLoop(f"edge {edge.id} joins vertex {edge.u} to itself")
            pair = (edge.u, edge.v) if edge.u < edge.v else (edge.v, edge.u)
            if pair in seen_pairs:
                raise DuplicateEdge(f"edge {edge.id} duplicates endpoint pair {pair}")
            seen_pairs.add(pair)
            if uf.union(edge.u, edge.v):
                components -= 1
        if components != 1:
            raise DisconnectedGraph(f"graph has {components} connected components")

    @classmethod
    def from_pairs(cls, n: int, pairs: Iterable[tuple[int, int]]) -> "Graph":
        return cls(n, tuple(Edge(i, u, v) for i, (u, v) in enumerate(pairs)))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        """Per-vertex tuples of ``(neighbor, edge_id)``."""
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for edge in self.edges:
            adj[edge.u].append((edge.v, edge.id))
            adj[edge.v].append((edge.u, edge.id))
        return tuple(tuple(entries) for entries in adj)

    def check_weights(self, weights: Weights) -> None:
        if len(weights) != self.m:
            raise MissingWeight(f"expected {self.m} weights, got {len(weights)}")


@dataclass(frozen=True)
class SpanningTree:
    """An edge subset forming a spanning tree, with path queries."""

    graph: Graph
    edge_ids: frozenset[int]

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", frozenset(self.edge_ids))
        n = self.graph.n
        if len(self.edge_ids) != n - 1:
            raise NotSpanning(f"{len(self.edge_ids)} edges cannot span {n} vertices")
        uf = _UnionFind(n)
        for eid in self.edge_ids:
            if not 0 <= eid < self.graph.m:
                raise NotSpanning(f"unknown edge id {eid}")
            edge = self.graph.edges[eid]
            if not uf.union(edge.u, edge.v):
                raise NotSpanning("edge set contains a cycle")

    def __contains__(self, edge_id: int) -> bool:
        return edge_id in self.edge_ids

    def __iter__(self):
        return iter(sorted(self.edge_ids))

    @cached_property
    def adjacency(self) -> dict[int, list[tuple[int, int]]]:
        adj: dict[int, list[tuple[int, int]]] = {v: [] for v in range(self.graph.n)}
        for eid in self.edge_ids:
            edge = self.graph.edges[eid]
            adj[edge.u].append((edge.v, eid))
            adj[edge.v].append((edge.u, eid))
        return adj

    def tree_path(self, a: int, b: int) -> list[Edge]:
        """The edges of the unique a-b path, ordered from a to b."""
        if a == b:
            return []
        parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
        stack = [a]
        adj = self.adjacency
        while stack:
            x = stack.pop()
            if x == b:
                break
            for y, eid in adj[x]:
                if y not in parent:
                    parent[y] = (x, eid)
                    stack.append(y)
        path: list[Edge] = []
        x = b
        while x != a:
            x, eid = parent[x]
            path.append(self.graph.edges[eid])
        path.reverse()
        return path


@dataclass(frozen=True)
class WmstInstance:
    """A graph together with total predicted and actual weight maps."""

    graph: Graph
    predicted: tuple[Fraction, ...]
    actual: tuple[Fraction, ...]

    def __post_init__(self):
        for name in ("predicted", "actual"):
            values = tuple(ensure_fraction(w, name) for w in getattr(self, name))
            if len(values) != self.graph.m:
                raise MissingWeight(
                    f"{name} map covers {len(values)} of {self.graph.m} edges"
                )
            for eid, value in enumerate(values):
                if value <= 0:
                    raise NonpositiveWeight(f"{name} weight of edge {eid} is {value}")
            object.__setattr__(self, name, values)

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def with_predictions(self, predicted: Iterable[Fraction]) -> "WmstInstance":
        """Copy of this instance with a replacement prediction map."""
        return WmstInstance(self.graph, tuple(predicted), self.actual)


def validate_instance(raw) -> WmstInstance:
    """Build a validated instance from a parsed file payload.

    The payload shape is ``{"n": int, "edges": [{"u", "v", "predicted",
    "actual"}, ...]}`` with weights as exact fraction strings.  Edge order
    in the list defines the edge ids.
    """
    if not isinstance(raw, dict):
        raise InstanceError("instance payload must be a JSON object")
    try:
        n = raw["n"]
        entries = raw["edges"]
    except KeyError as exc:
        raise InstanceError(f"instance payload missing key {exc}") from None
    if not isinstance(n, int) or isinstance(n, bool):
        raise InstanceError("vertex count must be an integer")
    if not isinstance(entries, list):
        raise InstanceError("edges must be a list")
    pairs: list[tuple[int, int]] = []
    predicted: list[Fraction] = []
    actual: list[Fraction] = []
    for index, entry in enumerate(entries):
        if not isinstance(entry, dict):
            raise InstanceError(f"edge {index} must be an object")
        try:
            pairs.append((entry["u"], entry["v"]))
        except KeyError as exc:
            raise InstanceError(f"edge {index} missing endpoint {exc}") from None
        for key, store in (("predicted", predicted), ("actual", actual)):
            if key not in entry:
                raise MissingWeight(f"edge {index} has no {key} weight")
            store.append(ensure_fraction(entry[key], f"edge {index} {key}"))
    graph = Graph.from_pairs(n, pairs)
    return WmstInstance(graph, tuple(predicted), tuple(actual))


def mst(graph: Graph, weights: Weights) -> SpanningTree:
    """Minimum spanning tree by Kruskal.

    Edges are scanned by ``(weight, edge id)`` ascending, so ties always
    resolve toward the smaller id and the result is deterministic.
    """
    graph.check_weights(weights)
    order = sorted(range(graph.m), key=lambda eid: (weights[eid], eid))
    uf = _UnionFind(graph.n)
    picked: list[int] = []
    need = graph.n - 1
    for eid in order:
        edge = graph.edges[eid]
        if uf.union(edge.u, edge.v):
            picked.append(eid)
            if len(picked) == need:
                break
    return SpanningTree(graph, frozenset(picked))


def tree_cost(tree: SpanningTree, weights: Weights) -> Fraction:
    """Exact sum of the tree's edge weights."""
    tree.graph.check_weights(weights)
    return sum((weights[eid] for eid in tree.edge_ids), Fraction(0))


def tree_cycle(tree: SpanningTree, edge: Edge) -> list[Edge]:
    """The tree edges on the cycle a non-tree edge would close.

    Returns the unique tree path between the edge's endpoints; the queried
    edge itself is not included.
    """
    if edge.id in tree:
        raise EdgeInTree(f"edge {edge.id} is already in the tree")
    return tree.tree_path(edge.u, edge.v)


def exchange_witness(t1: SpanningTree, t2: SpanningTree, e1: Edge) -> Edge:
    """A partner edge for swapping ``e1`` out of ``t1`` and into ``t2``.

    Given ``e1 in t1`` but not in ``t2``, returns some ``e2`` of ``t2``
    such that each edge lies on the cycle the other closes in the
    opposite tree.  Found by cutting ``t1`` at ``e1`` and scanning the
    ``t2``-path between its endpoints for an edge crossing the cut.
    """
    if e1.id not in t1 or e1.id in t2:
        raise BadParameter("witness requires an edge of t1 that is absent from t2")
    side = {e1.u}
    stack = [e1.u]
    adj = t1.adjacency
    while stack:
        x = stack.pop()
        for y, eid in adj[x]:
            if eid != e1.id and y not in side:
                side.add(y)
                stack.append(y)
    for candidate in t2.tree_path(e1.u, e1.v):
        if (candidate.u in side) != (candidate.v in side):
            return candidate
    raise AssertionError("spanning tree must cross every cut")


def brute_force_mst(graph: Graph, weights: Weights) -> tuple[Fraction, SpanningTree]:
    """Exhaustive minimum spanning tree oracle for small graphs.

    Enumerates every ``n-1``-subset of the edges in lexicographic id
    order, so among minimum-cost trees the lexicographically smallest id
    tuple wins.
    """
    graph.check_weights(weights)
    if graph.m > BRUTE_FORCE_EDGE_LIMIT:
        raise TooLarge(
            f"{graph.m} edges exceed the enumeration guard of {BRUTE_FORCE_EDGE_LIMIT}"
        )
    edges = graph.edges
    n = graph.n
    best_cost: Fraction | None = None
    best: tuple[int, ...] | None = None
    for subset in combinations(range(graph.m), n - 1):
        uf = _UnionFind(n)
        for eid in subset:
            edge = edges[eid]
            if not uf.union(edge.u, edge.v):
                break
        else:
            cost = sum((weights[eid] for eid in subset), Fraction(0))
            if best_cost is None or cost < best_cost:
                best_cost = cost
                best = subset
    if best is None:
        raise DisconnectedGraph("no spanning subset found")
    return best_cost, SpanningTree(graph, frozenset(best))
