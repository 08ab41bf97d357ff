"""Online weight-arrival execution.

The engine replays an instance against an online algorithm: true weights
arrive one edge at a time in a given order, the algorithm answers with an
irrevocable accept or reject, and the engine records the trace and verifies
that the accepted set is a spanning tree.  Two players are provided: one
that commits to the predicted-weight tree, and a greedy variant that swaps
revealed bargains in for unseen tree edges.
"""

from __future__ import annotations

import random
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .exceptions import BadParameter, InvariantViolation, NotSpanning
from .graphs import Edge, Graph, Weights, WmstInstance, _UnionFind, mst
from .rationals import format_fraction


@dataclass(frozen=True)
class Decision:
    """An irrevocable accept/reject, optionally naming a swapped-out edge."""

    accepted: bool
    swapped_out: int | None = None

    @classmethod
    def accept(cls, swapped_out: int | None = None) -> "Decision":
        return _ACCEPT if swapped_out is None else cls(True, swapped_out)

    @classmethod
    def reject(cls) -> "Decision":
        return _REJECT


_ACCEPT = Decision(True)
_REJECT = Decision(False)


@dataclass(frozen=True)
class ArrivalOrder:
    """A permutation of all edge ids, defining the reveal sequence."""

    edge_ids: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "edge_ids", tuple(self.edge_ids))
        if sorted(self.edge_ids) != list(range(len(self.edge_ids))):
            raise BadParameter("arrival order must be a permutation of all edge ids")

    @classmethod
    def identity(cls, m: int) -> "ArrivalOrder":
        return cls(tuple(range(m)))

    @classmethod
    def shuffled(cls, m: int, seed: int) -> "ArrivalOrder":
        ids = list(range(m))
        random.Random(seed).shuffle(ids)
        return cls(tuple(ids))

    def __iter__(self):
        return iter(self.edge_ids)

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class TraceStep:
    edge_id: int
    weight: Fraction
    decision: Decision


@dataclass(frozen=True)
class RunTrace:
    """Every decision of one online execution, plus the final tree."""

    steps: tuple[TraceStep, ...]
    accepted: frozenset[int]
    cost: Fraction

    def to_text(self) -> str:
        """One decision per line: id, weight, verdict, optional swap."""
        lines = []
        for step in self.steps:
            verdict = "ACCEPT" if step.decision.accepted else "REJECT"
            line = f"{step.edge_id} {format_fraction(step.weight)} {verdict}"
            if step.decision.swapped_out is not None:
                line += f" SWAP={step.decision.swapped_out}"
            lines.append(line)
        return "\n".join(lines) + "\n"


class OnlineAlgorithm(ABC):
    """Contract for weight-arrival players.

    ``initialize`` is called once with the graph and all predicted weights;
    ``reveal`` is then called exactly once per edge, in arrival order, with
    the true weight.  Decisions are irrevocable and must be deterministic.
    Implementations may consult anything revealed so far, but never a weight
    that has not arrived yet.
    """

    name = "online"
    #: Whether the post-rejection dominance check applies (swap-based players).
    tracks_swaps = False

    @abstractmethod
    def initialize(self, graph: Graph, predicted: Weights) -> None: ...

    @abstractmethod
    def reveal(self, edge: Edge, weight: Fraction) -> Decision: ...

    def working_tree_ids(self) -> frozenset[int] | None:
        """Current intended tree, if the player maintains one (checked mode)."""
        return None

    def initial_tree_ids(self) -> frozenset[int] | None:
        return None


class FollowPredictions(OnlineAlgorithm):
    """Commit to the predicted-weight MST and accept exactly its edges."""

    name = "ftp"

    def __init__(self):
        self._tree: frozenset[int] | None = None

    def initialize(self, graph: Graph, predicted: Weights) -> None:
        self._tree = mst(graph, predicted).edge_ids

    def reveal(self, edge: Edge, weight: Fraction) -> Decision:
        return _ACCEPT if edge.id in self._tree else _REJECT

    def working_tree_ids(self) -> frozenset[int]:
        return self._tree

    def initial_tree_ids(self) -> frozenset[int]:
        return self._tree


class GreedyFollowPredictions(OnlineAlgorithm):
    """Follow the predicted-weight MST, but swap in revealed bargains.

    The working tree starts as the predicted-weight MST.  A revealed tree
    edge is always accepted.  A revealed non-tree edge closes one cycle in
    the working tree; among the still-unseen edges on that cycle, let
    ``e_max`` carry the largest predicted weight (ties evict the smallest
    id).  If the revealed true weight is at most that prediction, the edge
    is accepted and ``e_max`` leaves the tree; otherwise it is rejected.
    """

    name = "gftp"
    tracks_swaps = True

    def __init__(self):
        self._graph: Graph | None = None

    def initialize(self, graph: Graph, predicted: Weights) -> None:
        self._graph = graph
        self._pred = predicted
        tree = mst(graph, predicted).edge_ids
        self._initial = tree
        self._tree = set(tree)
        adj: list[list[tuple[int, int]]] = [[] for _ in range(graph.n)]
        for eid in tree:
            edge = graph.edges[eid]
            adj[edge.u].append((edge.v, eid))
            adj[edge.v].append((edge.u, eid))
        self._adj = adj
        self._unseen = bytearray([1] * graph.m)
        self._unseen_in_tree = graph.n - 1

    def reveal(self, edge: Edge, weight: Fraction) -> Decision:
        self._unseen[edge.id] = 0
        if edge.id in self._tree:
            self._unseen_in_tree -= 1
            return _ACCEPT
        if self._unseen_in_tree == 0:
            return _REJECT  # every cycle edge already seen
        evict = self._heaviest_unseen_on_cycle(edge.u, edge.v)
        if evict < 0 or weight > self._pred[evict]:
            return _REJECT
        self._swap(evict, edge)
        return Decision.accept(swapped_out=evict)

    def _heaviest_unseen_on_cycle(self, a: int, b: int) -> int:
        """Unseen tree edge with maximal prediction on the a-b tree path.

        Returns -1 when every edge on the path has been seen.  Ties go to
        the smallest edge id.
        """
        adj = self._adj
        parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
        stack = [a]
        while stack:
            x = stack.pop()
            if x == b:
                break
            for y, eid in adj[x]:
                if y not in parent:
                    parent[y] = (x, eid)
                    stack.append(y)
        unseen = self._unseen
        pred = self._pred
        best = -1
        best_pred = None
        x = b
        while x != a:
            x, eid = parent[x]
            if unseen[eid]:
                p = pred[eid]
                if best < 0 or p > best_pred or (p == best_pred and eid < best):
                    best, best_pred = eid, p
        return best

    def _swap(self, evict: int, incoming: Edge) -> None:
        self._tree.discard(evict)
        self._tree.add(incoming.id)
        gone = self._graph.edges[evict]
        self._adj[gone.u] = [t for t in self._adj[gone.u] if t[1] != evict]
        self._adj[gone.v] = [t for t in self._adj[gone.v] if t[1] != evict]
        self._adj[incoming.u].append((incoming.v, incoming.id))
        self._adj[incoming.v].append((incoming.u, incoming.id))
        self._unseen_in_tree -= 1  # the evicted edge was unseen by construction

    def working_tree_ids(self) -> frozenset[int]:
        return frozenset(self._tree)

    def initial_tree_ids(self) -> frozenset[int]:
        return self._initial


def ftp() -> OnlineAlgorithm:
    """Fresh predictions-following player."""
    return FollowPredictions()


def gftp() -> OnlineAlgorithm:
    """Fresh greedy swapping player."""
    return GreedyFollowPredictions()


ALGORITHMS: dict[str, Callable[[], OnlineAlgorithm]] = {"ftp": ftp, "gftp": gftp}


def build_trace(instance: WmstInstance, steps: Sequence[TraceStep]) -> RunTrace:
    """Assemble and validate the trace of a completed execution."""
    accepted = frozenset(s.edge_id for s in steps if s.decision.accepted)
    _require_spanning(instance.graph, accepted)
    cost = sum((instance.actual[eid] for eid in accepted), Fraction(0))
    return RunTrace(tuple(steps), accepted, cost)


def _require_spanning(graph: Graph, accepted: frozenset[int]) -> None:
    if len(accepted) != graph.n - 1:
        raise NotSpanning(
            f"accepted {len(accepted)} edges, a spanning tree needs {graph.n - 1}"
        )
    uf = _UnionFind(graph.n)
    for eid in accepted:
        edge = graph.edges[eid]
        if not uf.union(edge.u, edge.v):
            raise NotSpanning("accepted edges contain a cycle")


def run(
    alg: OnlineAlgorithm,
    instance: WmstInstance,
    order: ArrivalOrder,
    *,
    checked: bool = False,
) -> RunTrace:
    """Reveal true weights in order and record every decision.

    Raises ``NotSpanning`` if the algorithm's accepted set fails to form a
    spanning tree.  With ``checked=True`` the structural invariants of the
    swap rule are asserted after every step (see ``check_cycle_dominance``
    and ``check_post_rejection_dominance``).
    """
    graph = instance.graph
    if len(order) != graph.m:
        raise BadParameter(f"order covers {len(order)} of {graph.m} edges")
    alg.initialize(graph, instance.predicted)
    checker = _InvariantChecker(alg, instance) if checked else None
    steps: list[TraceStep] = []
    for eid in order.edge_ids:
        edge = graph.edges[eid]
        weight = instance.actual[eid]
        if checker is not None:
            checker.before_reveal(edge)
        decision = alg.reveal(edge, weight)
        steps.append(TraceStep(eid, weight, decision))
        if checker is not None:
            checker.after_reveal(edge, weight, decision)
    return build_trace(instance, steps)


def run_cost(alg: OnlineAlgorithm, instance: WmstInstance, order_ids: Sequence[int]) -> Fraction:
    """Cost-only fast path of :func:`run` for bulk experiments.

    Trusts ``order_ids`` to be a permutation of the edge ids; the final
    spanning check still applies.
    """
    graph = instance.graph
    edges = graph.edges
    actual = instance.actual
    alg.initialize(graph, instance.predicted)
    reveal = alg.reveal
    cost = Fraction(0)
    count = 0
    uf = _UnionFind(graph.n)
    for eid in order_ids:
        if reveal(edges[eid], actual[eid]).accepted:
            edge = edges[eid]
            if not uf.union(edge.u, edge.v):
                raise NotSpanning("accepted edges contain a cycle")
            cost += actual[eid]
            count += 1
    if count != graph.n - 1:
        raise NotSpanning(f"accepted {count} edges, need {graph.n - 1}")
    return cost


def _path_edge_ids(graph: Graph, tree_ids: frozenset[int], a: int, b: int) -> list[int]:
    """Edge ids on the a-b path inside an ad-hoc tree edge set."""
    adj: dict[int, list[tuple[int, int]]] = {}
    for eid in tree_ids:
        edge = graph.edges[eid]
        adj.setdefault(edge.u, []).append((edge.v, eid))
        adj.setdefault(edge.v, []).append((edge.u, eid))
    parent: dict[int, tuple[int, int]] = {a: (-1, -1)}
    stack = [a]
    while stack:
        x = stack.pop()
        if x == b:
            break
        for y, eid in adj.get(x, ()):
            if y not in parent:
                parent[y] = (x, eid)
                stack.append(y)
    out: list[int] = []
    x = b
    while x != a:
        x, eid = parent[x]
        out.append(eid)
    return out


def check_cycle_dominance(
    graph: Graph,
    predicted: Weights,
    working_tree: frozenset[int],
    initial_tree: frozenset[int],
    unseen: frozenset[int],
    revealed: Edge,
) -> None:
    """Assert no unseen initial-tree edge on the revealed edge's cycle
    predicts heavier than the revealed edge itself.

    Applies when a non-tree edge is revealed; a violation means the swap
    bookkeeping is broken, not that the input is bad.
    """
    for eid in _path_edge_ids(graph, working_tree, revealed.u, revealed.v):
        if eid in unseen and eid in initial_tree:
            if predicted[eid] > predicted[revealed.id]:
                raise InvariantViolation(
                    f"unseen tree edge {eid} predicts {predicted[eid]} above "
                    f"revealed edge {revealed.id} at {predicted[revealed.id]}"
                )


def check_post_rejection_dominance(
    graph: Graph,
    predicted: Weights,
    working_tree: frozenset[int],
    unseen: frozenset[int],
    rejected: Edge,
    rejected_weight: Fraction,
) -> None:
    """Assert every unseen edge on a rejected edge's current cycle predicts
    strictly below the rejected true weight.

    Must hold at every step after the rejection for swap-based players.
    """
    for eid in _path_edge_ids(graph, working_tree, rejected.u, rejected.v):
        if eid in unseen and not predicted[eid] < rejected_weight:
            raise InvariantViolation(
                f"unseen tree edge {eid} predicts {predicted[eid]}, not below "
                f"rejected weight {rejected_weight} of edge {rejected.id}"
            )


class _InvariantChecker:
    """Runs the structural checks around each reveal in checked mode."""

    def __init__(self, alg: OnlineAlgorithm, instance: WmstInstance):
        self._alg = alg
        self._instance = instance
        self._unseen = set(range(instance.m))
        self._rejections: list[tuple[Edge, Fraction]] = []
        self._initial: frozenset[int] | None = None

    def before_reveal(self, edge: Edge) -> None:
        if self._initial is None:
            self._initial = self._alg.initial_tree_ids() or frozenset()
        tree = self._alg.working_tree_ids()
        if tree is None or edge.id in tree:
            return
        check_cycle_dominance(
            self._instance.graph,
            self._instance.predicted,
            tree,
            self._initial,
            frozenset(self._unseen),
            edge,
        )

    def after_reveal(self, edge: Edge, weight: Fraction, decision: Decision) -> None:
        self._unseen.discard(edge.id)
        if not self._alg.tracks_swaps:
            return
        if not decision.accepted:
            self._rejections.append((edge, weight))
        tree = self._alg.working_tree_ids()
        if tree is None:
            return
        unseen = frozenset(self._unseen)
        for rejected, rejected_weight in self._rejections:
            check_post_rejection_dominance(
                self._instance.graph,
                self._instance.predicted,
                tree,
                unseen,
                rejected,
                rejected_weight,
            )
