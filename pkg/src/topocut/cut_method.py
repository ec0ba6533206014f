"""Index computation from quotient graphs over a coarser edge partition.

For a partition {F_1, ..., F_r} of the edge set into unions of whole
theta*-classes, distances decompose as
d(u,v) = sum_i d_{G/F_i}(l_i(u), l_i(v)), and consequently every weighted
Wiener variant decomposes into a sum of the same variant over the (small)
quotient graphs with component-aggregated weights.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, GraphError, all_pairs_distances, degree_vector
from .indices import (
    DoubleWeightedGraph,
    Weight,
    _wiener_double,
    check_weights,
    wiener_weighted,
)
from .theta import (
    EdgePartition,
    NotPartialCubeError,
    PartitionError,
    QuotientGraph,
    class_deletion_components,
    is_partial_cube,
    quotient,
    theta_star_classes,
)


def _check_partition(g: Graph, partition: EdgePartition) -> None:
    total = sum(len(b) for b in partition.blocks)
    if total != g.m:
        raise PartitionError(
            f"partition covers {total} edges but the graph has {g.m}"
        )


def _aggregate(q: QuotientGraph, w: Sequence[Weight]) -> tuple[Weight, ...]:
    """Per-component totals of a vertex weight vector."""
    sums: list[Weight] = [0] * q.graph.n
    for v, c in enumerate(q.component_of):
        sums[c] += w[v]
    return tuple(sums)


def distance_via_quotients(
    g: Graph, partition: EdgePartition, u: int, v: int
) -> int:
    """d(u,v) recovered as the sum of quotient distances over the blocks."""
    _check_partition(g, partition)
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise GraphError(f"vertex pair ({u}, {v}) out of range")
    total = 0
    for block in partition.blocks:
        q = quotient(g, block)
        dq = all_pairs_distances(q.graph)
        total += dq[q.component_of[u]][q.component_of[v]]
    return total


def wiener_weighted_block_values(
    g: Graph, w: Sequence[Weight], partition: EdgePartition
) -> list[Weight]:
    """Per-block W(G/F_i, w_i) with w_i the component sums of w."""
    check_weights(g, w)
    _check_partition(g, partition)
    values = []
    for block in partition.blocks:
        q = quotient(g, block)
        values.append(wiener_weighted(q.graph, _aggregate(q, w)))
    return values


def wiener_weighted_via_cuts(
    g: Graph, w: Sequence[Weight], partition: EdgePartition
) -> Weight:
    """Product-weighted Wiener index as a sum over quotient graphs."""
    return sum(wiener_weighted_block_values(g, w, partition))


def wiener_double_block_values(
    dwg: DoubleWeightedGraph, partition: EdgePartition
) -> list[Weight]:
    """Per-block W(G/F_i, a_i, b_i) with component-aggregated weights."""
    g = dwg.g
    _check_partition(g, partition)
    values = []
    for block in partition.blocks:
        q = quotient(g, block)
        values.append(
            _wiener_double(q.graph, _aggregate(q, dwg.a), _aggregate(q, dwg.b))
        )
    return values


def wiener_double_via_cuts(dwg: DoubleWeightedGraph, partition: EdgePartition) -> Weight:
    """Double-weighted Wiener index as a sum over quotient graphs."""
    return sum(wiener_double_block_values(dwg, partition))


def degree_distance_via_cuts(g: Graph, partition: EdgePartition) -> int:
    """Degree distance via quotients: weights a = degrees, b = 1."""
    if g.n == 1:
        return 0
    dwg = DoubleWeightedGraph(g, degree_vector(g), (1,) * g.n)
    return wiener_double_via_cuts(dwg, partition)


def partial_cube_double_wiener(dwg: DoubleWeightedGraph) -> Weight:
    """Double-weighted Wiener index of a partial cube from its theta-classes.

    Each class deletion leaves exactly two sides; the index is the sum of
    A_1 B_2 + A_2 B_1 over classes, where A_j, B_j are the side totals of the
    two weight vectors.
    """
    g = dwg.g
    classes = theta_star_classes(g)
    if not is_partial_cube(g, classes):
        raise NotPartialCubeError("graph is not a partial cube")
    total: Weight = 0
    for comp in class_deletion_components(g, classes):
        if comp.count != 2:
            raise NotPartialCubeError(
                f"class deletion left {comp.count} components, expected 2"
            )
        a1 = sum(dwg.a[x] for x in comp.members[0])
        b1 = sum(dwg.b[x] for x in comp.members[0])
        a2 = sum(dwg.a[x] for x in comp.members[1])
        b2 = sum(dwg.b[x] for x in comp.members[1])
        total += a1 * b2 + a2 * b1
    return total
