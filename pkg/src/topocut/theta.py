"""The Djokovic-Winkler edge relation, its transitive closure, coarser edge
partitions, and quotient graphs.

Two edges u1v1 and u2v2 are theta-related iff
d(u1,u2) + d(v1,v2) != d(u1,v2) + d(v1,u2).  The transitive closure of this
relation partitions the edge set into theta*-classes, the basic unit of the
cut method.  Edges are identified by their index in ``Graph.edges``
throughout; the CLI layer converts "u-v" spellings.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import (
    Components,
    Graph,
    GraphError,
    all_pairs_distances,
    components_after_deletion,
)


class PartitionError(ValueError):
    """An edge partition that is not coarser than the theta*-partition."""


class NotPartialCubeError(ValueError):
    """Raised by routines that require a partial cube."""


@dataclass(frozen=True)
class ThetaClasses:
    """The theta*-partition of the edge set.

    Classes are ordered by their smallest edge index; edge indices within a
    class ascend.
    """

    classes: tuple[tuple[int, ...], ...]
    class_of: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.classes)


@dataclass(frozen=True)
class EdgePartition:
    """A partition of the edge set into blocks of whole theta*-classes.

    Build through :func:`validate_coarser` (full check) or
    :func:`trusted_partition` (structural partitions known coarser by
    construction).
    """

    blocks: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QuotientGraph:
    """Quotient of a graph by an edge subset.

    Vertices of ``graph`` are the connected components after deleting the
    subset; ``component_of`` maps each original vertex to its component.
    """

    graph: Graph
    component_of: tuple[int, ...]
    members: tuple[tuple[int, ...], ...]


def theta_related(
    g: Graph,
    d: Sequence[Sequence[int]],
    e1: tuple[int, int],
    e2: tuple[int, int],
) -> bool:
    """Djokovic-Winkler test on two edges given the distance matrix."""
    g.index_of_edge(*e1)
    g.index_of_edge(*e2)
    u1, v1 = min(e1), max(e1)
    u2, v2 = min(e2), max(e2)
    return d[u1][u2] + d[v1][v2] != d[u1][v2] + d[v1][u2]


class _DisjointSet:
    """Union-find over 0..n-1 with path halving and union by size."""

    def __init__(self, n: int):
        self.parent = list(range(n))
        self.size = [1] * n

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return
        if self.size[ra] < self.size[rb]:
            ra, rb = rb, ra
        self.parent[rb] = ra
        self.size[ra] += self.size[rb]


def theta_star_classes(
    g: Graph, d: Sequence[Sequence[int]] | None = None
) -> ThetaClasses:
    """Theta*-classes via the pairwise theta test merged in a disjoint set.

    O(m^2) edge pairs; exact and adequate at the scales this library targets.
    """
    if not g.connected:
        raise GraphError("theta* is defined for connected graphs only")
    if d is None:
        d = all_pairs_distances(g)
    m = g.m
    edges = g.edges
    dsu = _DisjointSet(m)
    for i in range(m):
        u1, v1 = edges[i]
        du1, dv1 = d[u1], d[v1]
        for j in range(i + 1, m):
            u2, v2 = edges[j]
            if du1[u2] + dv1[v2] != du1[v2] + dv1[u2]:
                dsu.union(i, j)
    groups: dict[int, list[int]] = {}
    for i in range(m):
        groups.setdefault(dsu.find(i), []).append(i)
    classes = tuple(sorted((tuple(v) for v in groups.values()), key=lambda c: c[0]))
    class_of = [0] * m
    for ci, cls in enumerate(classes):
        for e in cls:
            class_of[e] = ci
    return ThetaClasses(classes, tuple(class_of))


def validate_coarser(
    g: Graph,
    blocks: Iterable[Iterable[int]],
    classes: ThetaClasses | None = None,
) -> EdgePartition:
    """Check that ``blocks`` partition E(g) into unions of theta*-classes."""
    blocks = tuple(tuple(sorted(set(b))) for b in blocks)
    _check_is_partition(g, blocks)
    if classes is None:
        classes = theta_star_classes(g)
    block_of = [0] * g.m
    for bi, block in enumerate(blocks):
        for e in block:
            block_of[e] = bi
    for ci, cls in enumerate(classes.classes):
        owners = {block_of[e] for e in cls}
        if len(owners) > 1:
            edges = ", ".join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in cls)
            raise PartitionError(
                f"theta*-class {ci} ({edges}) is split across blocks {sorted(owners)}"
            )
    return EdgePartition(blocks)


def trusted_partition(g: Graph, blocks: Iterable[Iterable[int]]) -> EdgePartition:
    """Accept a structurally-derived partition without the theta* check.

    The partition property itself is still verified.  Setting the environment
    variable TOPOCUT_VALIDATE_TRUSTED forces the full check (debug mode).
    """
    if os.environ.get("TOPOCUT_VALIDATE_TRUSTED"):
        return validate_coarser(g, blocks)
    blocks = tuple(tuple(sorted(set(b))) for b in blocks)
    _check_is_partition(g, blocks)
    return EdgePartition(blocks)


def _check_is_partition(g: Graph, blocks: tuple[tuple[int, ...], ...]) -> None:
    seen: set[int] = set()
    total = 0
    for block in blocks:
        for e in block:
            if not (0 <= e < g.m):
                raise PartitionError(f"unknown edge index {e}")
        total += len(block)
        seen.update(block)
    if total != g.m or len(seen) != g.m:
        raise PartitionError(
            f"blocks do not partition the edge set ({total} entries, "
            f"{len(seen)} distinct, {g.m} edges)"
        )


def quotient(g: Graph, f: Iterable[int]) -> QuotientGraph:
    """Quotient graph g/F: components of g minus F, adjacent via cross edges."""
    f = sorted(set(f))
    comp = components_after_deletion(g, f)
    qedges = set()
    for i in f:
        u, v = g.edges[i]
        cu, cv = comp.component_of[u], comp.component_of[v]
        if cu != cv:
            qedges.add((cu, cv) if cu < cv else (cv, cu))
    qg = Graph(comp.count, sorted(qedges), require_connected=g.connected)
    return QuotientGraph(qg, comp.component_of, comp.members)


def class_deletion_components(g: Graph, classes: ThetaClasses) -> list[Components]:
    """Components of g minus each theta*-class, in class order."""
    return [components_after_deletion(g, cls) for cls in classes.classes]


def is_partial_cube(g: Graph, classes: ThetaClasses | None = None) -> bool:
    """Bipartite and every theta*-class is pairwise theta-related."""
    if not _is_bipartite(g):
        return False
    d = all_pairs_distances(g)
    if classes is None:
        classes = theta_star_classes(g, d)
    for cls in classes.classes:
        for x in range(len(cls)):
            u1, v1 = g.edges[cls[x]]
            du1, dv1 = d[u1], d[v1]
            for y in range(x + 1, len(cls)):
                u2, v2 = g.edges[cls[y]]
                if du1[u2] + dv1[v2] == du1[v2] + dv1[u2]:
                    return False
    return True


def _is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.n
    colour[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        cu = colour[u]
        for v in g.adj[u]:
            if colour[v] < 0:
                colour[v] = 1 - cu
                stack.append(v)
            elif colour[v] == cu:
                return False
    return True


def format_classes(g: Graph, classes: ThetaClasses) -> str:
    """One line per class, edges spelled "u-v" in ascending edge order."""
    lines = []
    for cls in classes.classes:
        lines.append(" ".join(f"{g.edges[e][0]}-{g.edges[e][1]}" for e in cls))
    return "\n".join(lines) + "\n"
