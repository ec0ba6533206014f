"""Collapse vertices with identical neighbourhoods, tracking the exact
effect on the weighted Wiener indices.

Vertices with the same open neighbourhood (R-classes) sit at mutual distance
two; vertices with the same closed neighbourhood (S-classes) at distance one.
Collapsing a class onto one representative with summed weights changes the
double-weighted Wiener index by an explicitly computable correction, so
large instances shrink without losing exactness.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph, GraphError
from .indices import (
    DoubleWeightedGraph,
    Weight,
    WeightedGraph,
    pairwise_mixed_sum,
    pairwise_product_sum,
)


@dataclass(frozen=True)
class ReductionStep:
    """One collapse performed by :func:`reduce_fully`.

    ``members`` and ``representative`` are vertex indices in the graph as it
    was just before this step; ``correction`` is the exact amount added to
    the running total for the index variant being reduced.
    """

    kind: str  # "R" (open neighbourhoods) or "S" (closed neighbourhoods)
    members: tuple[int, ...]
    representative: int
    correction: Weight


def r_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Equivalence classes of N(x) = N(y), ordered by smallest member."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        groups.setdefault(g.adj[v], []).append(v)
    return tuple(sorted((tuple(vs) for vs in groups.values()), key=lambda c: c[0]))


def s_classes(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Equivalence classes of N[x] = N[y], ordered by smallest member."""
    groups: dict[tuple[int, ...], list[int]] = {}
    for v in range(g.n):
        key = tuple(sorted(g.adj[v] + (v,)))
        groups.setdefault(key, []).append(v)
    return tuple(sorted((tuple(vs) for vs in groups.values()), key=lambda c: c[0]))


def _class_of(classes: tuple[tuple[int, ...], ...], c: int) -> tuple[int, ...]:
    for cls in classes:
        if c in cls:
            return cls
    raise GraphError(f"vertex {c} out of range")


def _collapse(g: Graph, members: tuple[int, ...], c: int) -> tuple[Graph, list[int]]:
    """Remove members other than c; return the reindexed graph and old->new map."""
    drop = set(members) - {c}
    new_of = [-1] * g.n
    keep = []
    for v in range(g.n):
        if v not in drop:
            new_of[v] = len(keep)
            keep.append(v)
    edges = [
        (new_of[u], new_of[v])
        for u, v in g.edges
        if new_of[u] >= 0 and new_of[v] >= 0
    ]
    g2 = Graph(len(keep), edges)  # collapsing a class keeps the graph connected
    return g2, new_of


def reduce_once_r(
    dwg: DoubleWeightedGraph, c: int
) -> tuple[DoubleWeightedGraph, Weight]:
    """Collapse the R-class of c; correction 2 sum (a_i b_j + a_j b_i) over pairs."""
    members = _class_of(r_classes(dwg.g), c)
    if len(members) == 1:
        return dwg, 0
    corr = 2 * pairwise_mixed_sum(
        [dwg.a[x] for x in members], [dwg.b[x] for x in members]
    )
    return _collapsed_double(dwg, members, c), corr


def reduce_once_s(
    dwg: DoubleWeightedGraph, c: int
) -> tuple[DoubleWeightedGraph, Weight]:
    """Collapse the S-class of c; correction sum (a_i b_j + a_j b_i) over pairs."""
    members = _class_of(s_classes(dwg.g), c)
    if len(members) == 1:
        return dwg, 0
    corr = pairwise_mixed_sum(
        [dwg.a[x] for x in members], [dwg.b[x] for x in members]
    )
    return _collapsed_double(dwg, members, c), corr


def reduce_once_r_single(wg: WeightedGraph, c: int) -> tuple[WeightedGraph, Weight]:
    """Collapse the R-class of c; correction 2 sum w_i w_j over pairs."""
    members = _class_of(r_classes(wg.g), c)
    if len(members) == 1:
        return wg, 0
    corr = 2 * pairwise_product_sum([wg.w[x] for x in members])
    return _collapsed_single(wg, members, c), corr


def reduce_once_s_single(wg: WeightedGraph, c: int) -> tuple[WeightedGraph, Weight]:
    """Collapse the S-class of c; correction sum w_i w_j over pairs."""
    members = _class_of(s_classes(wg.g), c)
    if len(members) == 1:
        return wg, 0
    corr = pairwise_product_sum([wg.w[x] for x in members])
    return _collapsed_single(wg, members, c), corr


def _collapsed_double(
    dwg: DoubleWeightedGraph, members: tuple[int, ...], c: int
) -> DoubleWeightedGraph:
    g2, new_of = _collapse(dwg.g, members, c)
    a = [0] * g2.n
    b = [0] * g2.n
    for v in range(dwg.g.n):
        if new_of[v] >= 0:
            a[new_of[v]] = dwg.a[v]
            b[new_of[v]] = dwg.b[v]
    a[new_of[c]] = sum(dwg.a[x] for x in members)
    b[new_of[c]] = sum(dwg.b[x] for x in members)
    return DoubleWeightedGraph(g2, tuple(a), tuple(b))


def _collapsed_single(
    wg: WeightedGraph, members: tuple[int, ...], c: int
) -> WeightedGraph:
    g2, new_of = _collapse(wg.g, members, c)
    w = [0] * g2.n
    for v in range(wg.g.n):
        if new_of[v] >= 0:
            w[new_of[v]] = wg.w[v]
    w[new_of[c]] = sum(wg.w[x] for x in members)
    return WeightedGraph(g2, tuple(w))


def _first_nontrivial(classes: tuple[tuple[int, ...], ...]) -> tuple[int, ...] | None:
    for cls in classes:
        if len(cls) > 1:
            return cls
    return None


def reduce_fully(
    dwg: DoubleWeightedGraph,
) -> tuple[DoubleWeightedGraph, Weight, tuple[ReductionStep, ...]]:
    """Collapse R- then S-classes to a fixed point.

    Classes are recomputed after every collapse since neighbourhoods change.
    Returns the reduced graph, the total correction, and the step log;
    the double-weighted Wiener index of the input equals that of the output
    plus the total correction.
    """
    steps: list[ReductionStep] = []
    total: Weight = 0
    changed = True
    while changed:
        changed = False
        for kind, classes_fn, reducer in (
            ("R", r_classes, reduce_once_r),
            ("S", s_classes, reduce_once_s),
        ):
            while True:
                cls = _first_nontrivial(classes_fn(dwg.g))
                if cls is None:
                    break
                rep = cls[0]
                dwg, corr = reducer(dwg, rep)
                steps.append(ReductionStep(kind, cls, rep, corr))
                total += corr
                changed = True
    return dwg, total, tuple(steps)


def reduce_fully_single(
    wg: WeightedGraph,
) -> tuple[WeightedGraph, Weight, tuple[ReductionStep, ...]]:
    """Single-weight analogue of :func:`reduce_fully`."""
    steps: list[ReductionStep] = []
    total: Weight = 0
    changed = True
    while changed:
        changed = False
        for kind, classes_fn, reducer in (
            ("R", r_classes, reduce_once_r_single),
            ("S", s_classes, reduce_once_s_single),
        ):
            while True:
                cls = _first_nontrivial(classes_fn(wg.g))
                if cls is None:
                    break
                rep = cls[0]
                wg, corr = reducer(wg, rep)
                steps.append(ReductionStep(kind, cls, rep, corr))
                total += corr
                changed = True
    return wg, total, tuple(steps)
