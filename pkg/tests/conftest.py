"""Shared builders and reference opponents for the test suite."""

from __future__ import annotations

from fractions import Fraction

from wmst import Decision, Graph, OnlineAlgorithm, WmstInstance, random_instance


def triangle() -> WmstInstance:
    """Three vertices, predictions (2, 3, 2), true weights (1, 1, 2)."""
    graph = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2)])
    return WmstInstance(
        graph,
        (Fraction(2), Fraction(3), Fraction(2)),
        (Fraction(1), Fraction(1), Fraction(2)),
    )


def fuzz_instance(index: int, max_n: int = 7) -> WmstInstance:
    """Deterministic rotation through sizes, densities and noise levels."""
    n = 4 + index % (max_n - 3)
    prob = (Fraction(3, 5), Fraction(4, 5))[index % 2]
    noise = (Fraction(0), Fraction(1, 4), Fraction(1), Fraction(3))[index % 4]
    return random_instance(n, prob, noise, seed=index)


class RejectFirstThenGreedy(OnlineAlgorithm):
    """Rejects the very first reveal, then accepts whatever keeps a forest.

    A deliberately prediction-blind opponent for the adaptive games.
    """

    name = "reject-first"

    def initialize(self, graph, predicted):
        self._first = True
        self._parent = list(range(graph.n))

    def _find(self, x: int) -> int:
        parent = self._parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def reveal(self, edge, weight) -> Decision:
        if self._first:
            self._first = False
            return Decision.reject()
        ru, rv = self._find(edge.u), self._find(edge.v)
        if ru == rv:
            return Decision.reject()
        self._parent[rv] = ru
        return Decision.accept()
