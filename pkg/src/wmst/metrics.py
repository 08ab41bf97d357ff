"""Prediction-error measures.

Three candidate measures are exposed: the plain sum of per-edge
discrepancies, a min/max optimum gap, and the measure actually used to
analyze the algorithms: the sum of the ``n-1`` largest discrepancies,
normalized by the true optimum cost.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .graphs import WmstInstance, mst, tree_cost


def eta1(instance: WmstInstance) -> Fraction:
    """Total absolute discrepancy over all edges."""
    return sum(
        (abs(p - a) for p, a in zip(instance.predicted, instance.actual)),
        Fraction(0),
    )


def eta2(instance: WmstInstance) -> Fraction:
    """Gap between the optima of the pointwise-upper and lower weight maps.

    The upper map keeps whichever of the predicted/actual weight is larger
    on each edge, the lower map whichever is smaller, and the result is the
    difference of the two minimum spanning tree costs (never negative).
    Only the costs matter, so tie-breaking inside ``mst`` cannot affect it.
    """
    upper = tuple(max(p, a) for p, a in zip(instance.predicted, instance.actual))
    lower = tuple(min(p, a) for p, a in zip(instance.predicted, instance.actual))
    graph = instance.graph
    return tree_cost(mst(graph, upper), upper) - tree_cost(mst(graph, lower), lower)


def eta(instance: WmstInstance) -> Fraction:
    """Sum of the ``n-1`` largest per-edge discrepancies.

    ``n-1`` is the size of any spanning tree, which caps the damage dense
    graphs can accumulate.  Ties in the descending sort are irrelevant to
    the sum.
    """
    gaps = sorted(
        (abs(p - a) for p, a in zip(instance.predicted, instance.actual)),
        reverse=True,
    )
    return sum(gaps[: instance.n - 1], Fraction(0))


@dataclass(frozen=True)
class ErrorReport:
    """All error measures of one instance, plus both optimum costs."""

    eta1: Fraction
    eta2: Fraction
    eta: Fraction
    opt_actual: Fraction
    opt_predicted: Fraction
    epsilon: Fraction


def error_report(instance: WmstInstance) -> ErrorReport:
    """Bundle every measure with OPT under both weight maps.

    ``epsilon`` is the headline error normalized by the true optimum,
    reported as an exact rational.
    """
    graph = instance.graph
    opt_actual = tree_cost(mst(graph, instance.actual), instance.actual)
    opt_predicted = tree_cost(mst(graph, instance.predicted), instance.predicted)
    headline = eta(instance)
    return ErrorReport(
        eta1=eta1(instance),
        eta2=eta2(instance),
        eta=headline,
        opt_actual=opt_actual,
        opt_predicted=opt_predicted,
        epsilon=headline / opt_actual,
    )
