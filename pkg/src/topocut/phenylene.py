"""Catacondensed benzenoid systems on the hexagonal lattice, phenylenes,
and linear-time computation of their degree distance and Gutman index.

Cells live in axial coordinates (q, r).  A cell's centre is mapped to the
integer point (3q, 2r + q); its six corners are fixed offsets from the
centre, so shared corners and edges of adjacent cells coincide exactly with
no geometric tolerance.  Hexagon edges fall into three parallel direction
classes (1, 2, 3); the squares that separate adjacent hexagons of a
phenylene contribute the connector class 4.  Each of the four classes is a
union of theta*-classes, and the quotient by each class is a tree, which is
what makes the O(n) route work.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .graph import Graph, ParseError, degree_vector
from .indices import Weight, check_weights

# Corner k of a cell centred at (X, Y) is (X, Y) + CORNER_OFFSETS[k].
# Hexagon edge k joins corners k and k+1 (mod 6) and has direction k % 3 + 1.
CORNER_OFFSETS = ((2, 0), (1, 1), (-1, 1), (-2, 0), (-1, -1), (1, -1))

# Neighbour k (axial offset) shares hexagon edge k; the shared corners are
# corner k and corner k+1 of this cell, seen by the neighbour as corners
# (k+4) % 6 and (k+3) % 6 respectively.
NEIGHBOR_OFFSETS = ((1, 0), (0, 1), (-1, 1), (-1, 0), (0, -1), (1, -1))


class PlacementError(ValueError):
    """A set of lattice cells that is not a catacondensed benzenoid system."""


class NotATreeError(ValueError):
    """A graph handed to a tree-only routine is not a tree."""


@dataclass(frozen=True)
class BenzenoidPlacement:
    """A set of hexagon cells in axial coordinates, stored sorted."""

    cells: tuple[tuple[int, int], ...]

    @classmethod
    def of(cls, cells: Iterable[tuple[int, int]]) -> "BenzenoidPlacement":
        if isinstance(cells, BenzenoidPlacement):
            return cells
        out = sorted((int(q), int(r)) for q, r in cells)
        if not out:
            raise PlacementError("placement has no cells")
        for i in range(1, len(out)):
            if out[i] == out[i - 1]:
                raise PlacementError(f"duplicate cell {out[i]}")
        return cls(tuple(out))

    def __len__(self) -> int:
        return len(self.cells)


@dataclass(frozen=True, eq=False)
class Benzenoid:
    """A catacondensed benzenoid: lattice graph, edge directions, inner dual."""

    graph: Graph
    edge_direction: tuple[int, ...]  # 1..3 per edge, parallel to graph.edges
    inner_dual: Graph  # one vertex per cell, in placement order
    placement: BenzenoidPlacement
    vertex_coords: tuple[tuple[int, int], ...]


@dataclass(frozen=True, eq=False)
class Phenylene:
    """A phenylene: 6h vertices (six per hexagon), 8h-2 edges.

    Vertex 6i+k is corner k of hexagon i.  ``edge_class`` holds 1..3 for
    hexagon edges (the direction of the corresponding benzenoid edge) and 4
    for the connector edges of the separating squares.
    """

    graph: Graph
    placement: BenzenoidPlacement
    edge_class: np.ndarray
    _eu: np.ndarray
    _ev: np.ndarray
    _degrees: np.ndarray

    @property
    def hexagon_count(self) -> int:
        return len(self.placement)

    def hexagon_of_vertex(self, v: int) -> int:
        return v // 6

    def is_connector(self, edge_index: int) -> bool:
        return int(self.edge_class[edge_index]) == 4


def _cell_corners(q: int, r: int) -> list[tuple[int, int]]:
    cx, cy = 3 * q, 2 * r + q
    return [(cx + dx, cy + dy) for dx, dy in CORNER_OFFSETS]


def _inner_dual_edges(cells: Sequence[tuple[int, int]]) -> list[tuple[int, int]]:
    index = {c: i for i, c in enumerate(cells)}
    out = []
    for i, (q, r) in enumerate(cells):
        for dq, dr in NEIGHBOR_OFFSETS:
            j = index.get((q + dq, r + dr))
            if j is not None and j > i:
                out.append((i, j))
    return out


def _validated_dual(placement: BenzenoidPlacement) -> Graph:
    cells = placement.cells
    h = len(cells)
    # internal lattice vertex: a corner in three cells
    counts: dict[tuple[int, int], int] = {}
    for q, r in cells:
        for p in _cell_corners(q, r):
            c = counts.get(p, 0) + 1
            if c >= 3:
                raise PlacementError(f"internal lattice vertex at {p}")
            counts[p] = c
    dual_edges = _inner_dual_edges(cells)
    dual = Graph(h, dual_edges, require_connected=False)
    if not dual.connected:
        raise PlacementError("cells do not form a connected system")
    if len(dual_edges) != h - 1:
        raise PlacementError("inner dual is not a tree")
    return dual


def build_benzenoid(cells: Iterable[tuple[int, int]]) -> Benzenoid:
    """Build the benzenoid graph of a catacondensed placement plus its inner dual."""
    placement = BenzenoidPlacement.of(cells)
    dual = _validated_dual(placement)
    coords: list[tuple[int, int]] = []
    index_of: dict[tuple[int, int], int] = {}
    edge_dir: dict[tuple[int, int], int] = {}
    for q, r in placement.cells:
        ids = []
        for p in _cell_corners(q, r):
            j = index_of.get(p)
            if j is None:
                j = len(coords)
                index_of[p] = j
                coords.append(p)
            ids.append(j)
        for k in range(6):
            u, v = ids[k], ids[(k + 1) % 6]
            e = (u, v) if u < v else (v, u)
            edge_dir.setdefault(e, k % 3 + 1)
    graph = Graph(len(coords), edge_dir.keys())
    return Benzenoid(graph, tuple(edge_dir.values()), dual, placement, tuple(coords))


def build_phenylene(cells: Iterable[tuple[int, int]]) -> Phenylene:
    """Build the phenylene of a catacondensed placement.

    Each hexagon gets its own six vertex copies; every shared benzenoid edge
    becomes a square via two connector edges between the copies of its
    endpoints.
    """
    placement = BenzenoidPlacement.of(cells)
    dual = _validated_dual(placement)
    h = len(placement)
    edges: list[tuple[int, int]] = []
    ecls: list[int] = []
    for i in range(h):
        base = 6 * i
        for k in range(5):
            edges.append((base + k, base + k + 1))
            ecls.append(k % 3 + 1)
        edges.append((base, base + 5))
        ecls.append(3)  # edge 5-0, direction 5 % 3 + 1
    for i, j in dual.edges:
        qi, ri = placement.cells[i]
        qj, rj = placement.cells[j]
        k = NEIGHBOR_OFFSETS.index((qj - qi, rj - ri))
        edges.append((6 * i + k, 6 * j + (k + 4) % 6))
        edges.append((6 * i + (k + 1) % 6, 6 * j + (k + 3) % 6))
        ecls.extend((4, 4))
    graph = Graph(6 * h, edges, validate=False)
    arr = np.asarray(edges, dtype=np.int64)
    eu, ev = arr[:, 0], arr[:, 1]
    degs = np.bincount(np.concatenate((eu, ev)), minlength=6 * h).astype(np.int64)
    return Phenylene(graph, placement, np.asarray(ecls, dtype=np.int64), eu, ev, degs)


def squeeze_weights(
    b: Graph, t: Graph
) -> tuple[tuple[int, ...], tuple[int, ...], tuple[int, ...], tuple[int, ...]]:
    """The four weight vectors of the squeeze decomposition.

    On the benzenoid: w1 = 4 deg - 6 and w2 = deg - 1 (per-vertex totals of
    the phenylene components that collapse onto each lattice vertex).  On the
    inner dual: w3 = 2 deg + 12 and w4 = 6 (per-hexagon totals).
    """
    db = degree_vector(b)
    dt = degree_vector(t)
    w1 = tuple(4 * x - 6 for x in db)
    w2 = tuple(x - 1 for x in db)
    w3 = tuple(2 * x + 12 for x in dt)
    w4 = (6,) * t.n
    return w1, w2, w3, w4


@dataclass(frozen=True, eq=False)
class QuotientTree:
    """One double vertex-weighted quotient tree of a structural edge class."""

    tree: Graph
    a: tuple[int, ...]
    b: tuple[int, ...]
    component_of: np.ndarray  # original vertex -> tree vertex


def _component_labels(
    n: int, eu: np.ndarray, ev: np.ndarray
) -> tuple[int, np.ndarray]:
    """Connected-component labels, numbered by smallest contained vertex."""
    if eu.size == 0:
        return n, np.arange(n, dtype=np.int64)
    data = np.ones(eu.size, dtype=np.int8)
    mat = coo_matrix((data, (eu, ev)), shape=(n, n))
    ncomp, labels = connected_components(mat, directed=False)
    _, first = np.unique(labels, return_index=True)
    remap = np.empty(ncomp, dtype=np.int64)
    remap[np.argsort(first)] = np.arange(ncomp, dtype=np.int64)
    return int(ncomp), remap[labels]


def _aggregate_int(labels: np.ndarray, ncomp: int, values: np.ndarray) -> np.ndarray:
    # float64 accumulation is exact here: totals stay far below 2**53
    return np.bincount(labels, weights=values, minlength=ncomp).astype(np.int64)


def _class_quotient_tree(
    n: int,
    eu: np.ndarray,
    ev: np.ndarray,
    in_class: np.ndarray,
    a_vec: np.ndarray,
    b_vec: np.ndarray,
) -> QuotientTree:
    ncomp, labels = _component_labels(n, eu[~in_class], ev[~in_class])
    a = _aggregate_int(labels, ncomp, a_vec)
    b = _aggregate_int(labels, ncomp, b_vec)
    cu, cv = labels[eu[in_class]], labels[ev[in_class]]
    if np.any(cu == cv):
        raise NotATreeError("edge class does not separate its components")
    lo, hi = np.minimum(cu, cv), np.maximum(cu, cv)
    codes = np.unique(lo * np.int64(ncomp) + hi)
    qedges = list(zip((codes // ncomp).tolist(), (codes % ncomp).tolist()))
    if len(qedges) != ncomp - 1:
        raise NotATreeError(
            f"quotient has {len(qedges)} edges on {ncomp} components, not a tree"
        )
    tree = Graph(ncomp, qedges, validate=False)
    return QuotientTree(tree, tuple(a.tolist()), tuple(b.tolist()), labels)


def quotient_trees(
    ph: Phenylene,
) -> tuple[QuotientTree, QuotientTree, QuotientTree, QuotientTree]:
    """The four double vertex-weighted quotient trees of a phenylene.

    Trees 1..3 quotient by the hexagon-edge direction classes, tree 4 by the
    connector class; tree 4 is isomorphic to the inner dual of the squeeze.
    Weights: a = component degree sums, b = component vertex counts.
    """
    n = ph.graph.n
    ones = np.ones(n, dtype=np.int64)
    return tuple(
        _class_quotient_tree(n, ph._eu, ph._ev, ph.edge_class == c, ph._degrees, ones)
        for c in (1, 2, 3, 4)
    )


def tree_wiener_double_linear(
    tree: Graph, a: Sequence[Weight], b: Sequence[Weight]
) -> Weight:
    """Double-weighted Wiener index of a tree in one rooted traversal.

    Every tree edge is its own theta-class, so the index is the sum over
    edges of a(S1) b(S2) + a(S2) b(S1) for the two sides S1, S2 of the edge;
    subtree prefix sums give all splits in O(n).
    """
    order, parent = _bfs_order(tree)
    check_weights(tree, a)
    check_weights(tree, b)
    sa, sb = list(a), list(b)
    ta, tb = sum(a), sum(b)
    total: Weight = 0
    for u in reversed(order[1:]):
        au, bu = sa[u], sb[u]
        p = parent[u]
        sa[p] += au
        sb[p] += bu
        total += au * (tb - bu) + (ta - au) * bu
    return total


def tree_wiener_linear(tree: Graph, w: Sequence[Weight]) -> Weight:
    """Product-weighted Wiener index of a tree: sum of w(S1) w(S2) over edges."""
    order, parent = _bfs_order(tree)
    check_weights(tree, w)
    sw = list(w)
    tw = sum(w)
    total: Weight = 0
    for u in reversed(order[1:]):
        wu = sw[u]
        sw[parent[u]] += wu
        total += wu * (tw - wu)
    return total


def _bfs_order(tree: Graph) -> tuple[list[int], list[int]]:
    n = tree.n
    if tree.m != n - 1:
        raise NotATreeError(f"graph has {tree.m} edges on {n} vertices, not a tree")
    adj = tree.adj
    parent = [0] * n
    seen = bytearray(n)
    seen[0] = 1
    order = [0]
    for u in order:  # grows while iterating
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                order.append(v)
    if len(order) != n:
        raise NotATreeError("graph is disconnected, not a tree")
    return order, parent


def _tree_adjacency(ncomp: int, qu: np.ndarray, qv: np.ndarray):
    """CSR adjacency of the quotient tree, as plain lists for the traversal."""
    src = np.concatenate((qu, qv))
    dst = np.concatenate((qv, qu))
    order = np.argsort(src, kind="stable")
    counts = np.bincount(src, minlength=ncomp)
    indptr = np.zeros(ncomp + 1, dtype=np.int64)
    np.cumsum(counts, out=indptr[1:])
    return indptr.tolist(), dst[order].tolist()


def _tree_order(ncomp: int, indptr, indices) -> tuple[list[int], list[int]]:
    parent = [0] * ncomp
    seen = bytearray(ncomp)
    seen[0] = 1
    order = [0]
    for u in order:  # grows while iterating
        for i in range(indptr[u], indptr[u + 1]):
            v = indices[i]
            if not seen[v]:
                seen[v] = 1
                parent[v] = u
                order.append(v)
    if len(order) != ncomp:
        raise NotATreeError("quotient is disconnected, not a tree")
    return order, parent


def _tree_split_sums(order, parent, a_list, b_list) -> tuple[int, int]:
    """Both weighted Wiener sums of a tree from one traversal.

    Returns (sum of a(S1)b(S2)+a(S2)b(S1), sum of a(S1)a(S2)) over the edge
    splits; accumulation in Python ints keeps the results exact at any size.
    """
    sa, sb = list(a_list), list(b_list)
    ta, tb = sum(sa), sum(sb)
    double_sum = 0
    single_sum = 0
    for u in reversed(order[1:]):
        au, bu = sa[u], sb[u]
        p = parent[u]
        sa[p] += au
        sb[p] += bu
        double_sum += au * (tb - bu) + (ta - au) * bu
        single_sum += au * (ta - au)
    return double_sum, single_sum


def _class_split_sums(
    n: int,
    eu: np.ndarray,
    ev: np.ndarray,
    in_class: np.ndarray,
    a_vec: np.ndarray,
    b_vec: np.ndarray,
) -> tuple[int, int]:
    """Tree split sums of one structural class without building Graph objects."""
    ncomp, labels = _component_labels(n, eu[~in_class], ev[~in_class])
    a = _aggregate_int(labels, ncomp, a_vec)
    b = _aggregate_int(labels, ncomp, b_vec)
    cu, cv = labels[eu[in_class]], labels[ev[in_class]]
    if np.any(cu == cv):
        raise NotATreeError("edge class does not separate its components")
    lo, hi = np.minimum(cu, cv), np.maximum(cu, cv)
    codes = np.unique(lo * np.int64(ncomp) + hi)
    if codes.size != ncomp - 1:
        raise NotATreeError(
            f"quotient has {codes.size} edges on {ncomp} components, not a tree"
        )
    indptr, indices = _tree_adjacency(ncomp, codes // ncomp, codes % ncomp)
    order, parent = _tree_order(ncomp, indptr, indices)
    return _tree_split_sums(order, parent, a.tolist(), b.tolist())


def dd_gut_via_trees(ph: Phenylene) -> tuple[int, int]:
    """Degree distance and Gutman index from the four quotient trees (O(n))."""
    n = ph.graph.n
    ones = np.ones(n, dtype=np.int64)
    dd = 0
    gut = 0
    for c in (1, 2, 3, 4):
        dd_c, gut_c = _class_split_sums(
            n, ph._eu, ph._ev, ph.edge_class == c, ph._degrees, ones
        )
        dd += dd_c
        gut += gut_c
    return dd, gut


def dd_gut_via_squeeze(cells: Iterable[tuple[int, int]]) -> tuple[int, int]:
    """Degree distance and Gutman index from the squeeze and inner dual.

    DD = W(B, w1, w2) + W(T, w3, w4) and Gut = W(B, w1) + W(T, w3), with the
    benzenoid terms evaluated over its three direction-class quotient trees.
    """
    benz = build_benzenoid(cells)
    b, t = benz.graph, benz.inner_dual
    w1, w2, w3, w4 = squeeze_weights(b, t)
    arr = np.asarray(b.edges, dtype=np.int64).reshape(-1, 2)
    eu, ev = arr[:, 0], arr[:, 1]
    ecls = np.asarray(benz.edge_direction, dtype=np.int64)
    a_vec = np.asarray(w1, dtype=np.int64)
    b_vec = np.asarray(w2, dtype=np.int64)
    dd = tree_wiener_double_linear(t, w3, w4)
    gut = tree_wiener_linear(t, w3)
    for c in (1, 2, 3):
        dd_c, gut_c = _class_split_sums(b.n, eu, ev, ecls == c, a_vec, b_vec)
        dd += dd_c
        gut += gut_c
    return dd, gut


def parse_placement(text: str) -> BenzenoidPlacement:
    """Parse the placement file format: one "q r" cell per line, '#' comments."""
    cells = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'q r', got {line!r}")
        try:
            cells.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers") from None
    try:
        return BenzenoidPlacement.of(cells)
    except PlacementError as exc:
        raise ParseError(str(exc)) from None


def format_placement(placement: BenzenoidPlacement) -> str:
    return "\n".join(f"{q} {r}" for q, r in placement.cells) + "\n"
