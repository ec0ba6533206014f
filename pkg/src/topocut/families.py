"""Deterministic generators for the graph families used in tests and benchmarks."""

from __future__ import annotations

import random
from itertools import combinations

from .graph import Graph, GraphError
from .phenylene import NEIGHBOR_OFFSETS, BenzenoidPlacement, PlacementError


def path_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("path needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise GraphError("complete graph needs n >= 1")
    return Graph(n, list(combinations(range(n), 2)))


def complete_bipartite_graph(p: int, q: int) -> Graph:
    if p < 1 or q < 1:
        raise GraphError("complete bipartite graph needs both sides nonempty")
    return Graph(p + q, [(i, p + j) for i in range(p) for j in range(q)])


def hypercube_graph(d: int) -> Graph:
    """The d-cube on 2^d vertices; adjacency flips one bit."""
    if d < 1:
        raise GraphError("hypercube needs dimension >= 1")
    n = 1 << d
    edges = [(u, u | (1 << k)) for u in range(n) for k in range(d) if not u & (1 << k)]
    return Graph(n, edges)


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: vertex 0 adjacent to all others."""
    if n < 2:
        raise GraphError("star needs n >= 2")
    return Graph(n, [(0, v) for v in range(1, n)])


def windmill_graph(k: int) -> Graph:
    """k triangles sharing the centre vertex 0 (the friendship graph)."""
    if k < 1:
        raise GraphError("windmill needs k >= 1")
    edges = []
    for t in range(k):
        x, y = 2 * t + 1, 2 * t + 2
        edges += [(0, x), (0, y), (x, y)]
    return Graph(2 * k + 1, edges)


def random_connected_graph(n: int, m: int | None = None, seed: int = 0) -> Graph:
    """Seed-deterministic connected graph: random attachment tree plus extra edges."""
    if n < 1:
        raise GraphError("random graph needs n >= 1")
    rng = random.Random(seed)
    tree = [(rng.randrange(v), v) for v in range(1, n)]
    if m is None:
        m = n - 1
    if not (n - 1 <= m <= n * (n - 1) // 2):
        raise GraphError(f"m={m} out of range for n={n}")
    present = set(tree)
    non_edges = [e for e in combinations(range(n), 2) if e not in present]
    extra = rng.sample(non_edges, m - (n - 1))
    return Graph(n, tree + extra)


def gen_house(n: int) -> Graph:
    """Ladder of n rungs with an apex over the first rung.

    Rails u_1..u_n and v_1..v_n at even/odd indices, rungs u_i v_i, and an
    apex (index 2n) adjacent to u_1 and v_1; 2n+1 vertices, 3n edges, and
    exactly n theta*-classes, all of whose quotients are complete.
    """
    if n < 2:
        raise GraphError("house family needs n >= 2")
    edges = [(0, 2 * n), (1, 2 * n)]
    for j in range(n):
        edges.append((2 * j, 2 * j + 1))
    for j in range(n - 1):
        edges.append((2 * j, 2 * j + 2))
        edges.append((2 * j + 1, 2 * j + 3))
    return Graph(2 * n + 1, edges)


def parse_kinks(pattern: str) -> list[str]:
    """Parse a kink pattern over {L, A+, A-}, with or without commas."""
    tokens = []
    i = 0
    compact = pattern.replace(",", "").replace(" ", "").upper()
    while i < len(compact):
        ch = compact[i]
        if ch == "L":
            tokens.append("L")
            i += 1
        elif ch == "A" and i + 1 < len(compact) and compact[i + 1] in "+-":
            tokens.append("A" + compact[i + 1])
            i += 2
        else:
            raise PlacementError(f"bad kink pattern {pattern!r} at position {i}")
    return tokens


def gen_phenylene_chain(h: int, kinks: str | None = None) -> BenzenoidPlacement:
    """Catacondensed chain of h hexagons.

    The first two cells run east; from the third cell on, the kink pattern
    (length h-2) chooses the attachment: L keeps the direction, A+ and A-
    turn by one lattice direction.  Patterns that make the chain collide
    with or touch itself are rejected.
    """
    if h < 1:
        raise GraphError("chain needs h >= 1")
    pattern = parse_kinks(kinks) if kinks else ["L"] * max(h - 2, 0)
    if len(pattern) != max(h - 2, 0):
        raise PlacementError(
            f"kink pattern has length {len(pattern)}, expected {max(h - 2, 0)}"
        )
    cells = [(0, 0)]
    direction = 0
    if h >= 2:
        cells.append(NEIGHBOR_OFFSETS[0])
    occupied = set(cells)
    for step, kink in enumerate(pattern):
        if kink == "A+":
            direction = (direction + 1) % 6
        elif kink == "A-":
            direction = (direction - 1) % 6
        q, r = cells[-1]
        dq, dr = NEIGHBOR_OFFSETS[direction]
        nxt = (q + dq, r + dr)
        if nxt in occupied:
            raise PlacementError(f"kink pattern collides at cell {step + 3}")
        touching = sum(
            (nxt[0] + oq, nxt[1] + orr) in occupied for oq, orr in NEIGHBOR_OFFSETS
        )
        if touching != 1:
            raise PlacementError(f"kink pattern makes cell {step + 3} touch the chain")
        occupied.add(nxt)
        cells.append(nxt)
    return BenzenoidPlacement.of(cells)


# Frozen six-hexagon reference system: inner dual is a five-vertex path with a
# pendant hexagon on its second vertex.  Unique up to lattice symmetry given
# the frozen quotient-tree index values (scripts/find_phe6.py re-derives it).
PHE6_CELLS: tuple[tuple[int, int], ...] = (
    (0, 0),
    (0, 1),
    (1, 1),
    (2, 1),
    (2, 2),
    (3, 0),
)


def phe6_placement() -> BenzenoidPlacement:
    """The frozen six-hexagon reference placement used across the test suite."""
    return BenzenoidPlacement.of(PHE6_CELLS)


_BASIC = {
    "path": path_graph,
    "cycle": cycle_graph,
    "complete": complete_graph,
    "hypercube": hypercube_graph,
    "star": star_graph,
    "windmill": windmill_graph,
}


def gen_basic(kind: str, n: int, seed: int = 0) -> Graph:
    """Dispatch the basic generators by name.

    ``complete_bipartite`` builds the balanced K_{n,n}; call
    :func:`complete_bipartite_graph` directly for unbalanced sides.
    """
    if kind in _BASIC:
        return _BASIC[kind](n)
    if kind == "complete_bipartite":
        return complete_bipartite_graph(n, n)
    if kind == "random":
        return random_connected_graph(n, seed=seed)
    raise GraphError(f"unknown family {kind!r}")
