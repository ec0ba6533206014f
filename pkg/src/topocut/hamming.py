"""Partial Hamming graphs: detection, canonical embedding, and the closed
lower bound for product-weighted Wiener indices.

A connected graph embeds isometrically into a Cartesian product of complete
graphs exactly when every quotient by a theta*-class is complete.  For any
weighting, half the sum of w(C) w^c(C) over all classes and their deletion
components bounds the weighted Wiener index from below, with equality
precisely in the partial Hamming case; that turns the bound into an exact
formula there (e.g. for the Gutman index with degree weights).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .graph import Graph, GraphError, degree_vector
from .indices import Weight, check_weights, pairwise_product_sum
from .theta import QuotientGraph, ThetaClasses, quotient, theta_star_classes


class NotPartialHammingError(ValueError):
    """Raised by exact-formula routines that require a partial Hamming graph."""


@dataclass(frozen=True)
class CanonicalEmbedding:
    """Coordinates of each vertex across all theta*-class quotients.

    Coordinate i of vertex u is the component of u after deleting class i;
    summing the quotient distances coordinate-wise recovers graph distance.
    """

    classes: ThetaClasses
    quotients: tuple[QuotientGraph, ...]
    coordinates: tuple[tuple[int, ...], ...]


def canonical_embedding(g: Graph, classes: ThetaClasses | None = None) -> CanonicalEmbedding:
    """Embed g into the product of its theta*-class quotients."""
    if classes is None:
        classes = theta_star_classes(g)
    quotients = tuple(quotient(g, cls) for cls in classes.classes)
    coordinates = tuple(
        tuple(q.component_of[u] for q in quotients) for u in range(g.n)
    )
    return CanonicalEmbedding(classes, quotients, coordinates)


def is_partial_hamming(g: Graph, classes: ThetaClasses | None = None) -> bool:
    """True iff every theta*-class quotient is a complete graph."""
    if classes is None:
        classes = theta_star_classes(g)
    for cls in classes.classes:
        q = quotient(g, cls).graph
        if 2 * q.m != q.n * (q.n - 1):
            return False
    return True


def weighted_wiener_lower_bound(
    g: Graph, w: Sequence[Weight], classes: ThetaClasses | None = None
) -> Weight:
    """Half the sum of w(C) w^c(C) over classes and deletion components.

    Always at most the product-weighted Wiener index; equal exactly when the
    graph is partial Hamming.
    """
    check_weights(g, w)
    if not g.connected:
        raise GraphError("bound is defined for connected graphs only")
    if classes is None:
        classes = theta_star_classes(g)
    total: Weight = 0
    for cls in classes.classes:
        q = quotient(g, cls)
        comp_weights = [sum(w[x] for x in members) for members in q.members]
        total += pairwise_product_sum(comp_weights)
    return total


def gutman_lower_bound(g: Graph, classes: ThetaClasses | None = None) -> int:
    """The lower bound with degree weights; equals Gut(g) on partial Hamming graphs."""
    if g.n == 1:
        return 0
    return weighted_wiener_lower_bound(g, degree_vector(g), classes)


def gutman_exact_hamming(g: Graph) -> int:
    """Gutman index of a partial Hamming graph via the closed sum.

    No all-pairs distances are computed; raises if the graph is not partial
    Hamming (the closed sum would undercount).
    """
    classes = theta_star_classes(g)
    if not is_partial_hamming(g, classes):
        raise NotPartialHammingError("graph is not a partial Hamming graph")
    return gutman_lower_bound(g, classes)
