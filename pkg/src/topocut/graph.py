"""Core graph machinery: construction, BFS distances, edge-deleted components.

Vertices are dense integer indices 0..n-1.  Edges are unordered pairs stored
as (min, max) tuples in input order.  Graphs are immutable after construction
and safe to share between threads.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Invalid graph construction or an operation on an unsuitable graph."""


class ParseError(ValueError):
    """Malformed input text; the message names the offending line."""


class Graph:
    """Simple undirected graph on vertices 0..n-1, connected by default.

    Attributes:
        n:     vertex count
        edges: tuple of (u, v) pairs with u < v, in input order
        adj:   per-vertex tuple of neighbours, sorted ascending
    """

    __slots__ = ("n", "edges", "adj", "connected", "_edge_index")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        *,
        require_connected: bool = True,
        validate: bool = True,
    ):
        if n < 1:
            raise GraphError("graph needs at least one vertex")
        if validate:
            norm = []
            seen = set()
            for u, v in edges:
                if u == v:
                    raise GraphError(f"self-loop at vertex {u}")
                if not (0 <= u < n and 0 <= v < n):
                    raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
                e = (u, v) if u < v else (v, u)
                if e in seen:
                    raise GraphError(f"duplicate edge {e}")
                seen.add(e)
                norm.append(e)
            self.edges = tuple(norm)
        else:
            # caller guarantees simple, in-range, (min, max)-ordered, connected
            self.edges = tuple(edges)
        self.n = n
        rows: list[list[int]] = [[] for _ in range(n)]
        for u, v in self.edges:
            rows[u].append(v)
            rows[v].append(u)
        self.adj = tuple(tuple(sorted(r)) for r in rows)
        self._edge_index = None
        if validate:
            self.connected = _is_connected(n, self.adj)
            if require_connected and not self.connected:
                raise GraphError("graph is disconnected")
        else:
            self.connected = True

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def edge_index(self) -> dict[tuple[int, int], int]:
        """Map from (min, max) endpoint pair to position in ``edges``."""
        if self._edge_index is None:
            self._edge_index = {e: i for i, e in enumerate(self.edges)}
        return self._edge_index

    def index_of_edge(self, u: int, v: int) -> int:
        e = (u, v) if u < v else (v, u)
        try:
            return self.edge_index[e]
        except KeyError:
            raise GraphError(f"unknown edge ({u}, {v})") from None

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _is_connected(n: int, adj: Sequence[Sequence[int]]) -> bool:
    seen = bytearray(n)
    seen[0] = 1
    stack = [0]
    count = 1
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = 1
                count += 1
                stack.append(v)
    return count == n


def build_graph(
    n: int, edge_list: Iterable[tuple[int, int]], *, require_connected: bool = True
) -> Graph:
    """Validate and build a Graph from an edge list."""
    return Graph(n, edge_list, require_connected=require_connected)


def degree_vector(g: Graph) -> tuple[int, ...]:
    """Per-vertex degrees; their sum is 2|E|."""
    return tuple(len(r) for r in g.adj)


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from one source (-1 for unreachable vertices)."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    adj = g.adj
    while queue:
        u = queue.popleft()
        du = dist[u]
        for v in adj[u]:
            if dist[v] < 0:
                dist[v] = du + 1
                queue.append(v)
    return dist


def all_pairs_distances(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Exact BFS hop distances between all vertex pairs.

    Requires a connected graph; distances are plain machine integers.
    """
    if not g.connected:
        raise GraphError("distances are defined for connected graphs only")
    return tuple(tuple(bfs_distances(g, s)) for s in range(g.n))


@dataclass(frozen=True)
class Components:
    """Connected components of an edge-deleted graph.

    Components are numbered by their smallest contained vertex, ascending,
    so the labelling is deterministic.
    """

    component_of: tuple[int, ...]
    count: int
    members: tuple[tuple[int, ...], ...]


def components_after_deletion(g: Graph, removed: Iterable[int]) -> Components:
    """Components of ``g`` with the edges at indices ``removed`` deleted."""
    removed = set(removed)
    for i in removed:
        if not (0 <= i < g.m):
            raise GraphError(f"unknown edge index {i}")
    rows: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        if i not in removed:
            rows[u].append(v)
            rows[v].append(u)
    comp = [-1] * g.n
    members = []
    for start in range(g.n):
        if comp[start] >= 0:
            continue
        cid = len(members)
        comp[start] = cid
        group = [start]
        stack = [start]
        while stack:
            u = stack.pop()
            for v in rows[u]:
                if comp[v] < 0:
                    comp[v] = cid
                    group.append(v)
                    stack.append(v)
        members.append(tuple(sorted(group)))
    return Components(tuple(comp), len(members), tuple(members))


def parse_edge_list(text: str) -> Graph:
    """Parse the edge-list text format.

    Lines hold two whitespace-separated decimal vertex indices; lines starting
    with '#' are ignored.  An optional first line "n m" fixes the vertex count
    (it is treated as a header only when exactly m edge lines follow).
    """
    rows: list[tuple[int, int, int]] = []  # (lineno, a, b)
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: expected two integers, got {line!r}") from None
        rows.append((lineno, a, b))
    if not rows:
        raise ParseError("no edges found")
    first_line, first_a, first_b = rows[0]
    if first_b == len(rows) - 1 and first_a >= 1:
        n, pairs = first_a, rows[1:]
    else:
        n, pairs = max(max(a, b) for _, a, b in rows) + 1, rows
    edges = []
    seen = set()
    for lineno, a, b in pairs:
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"line {lineno}: vertex out of range for n={n}")
        if a == b:
            raise ParseError(f"line {lineno}: self-loop at vertex {a}")
        e = (a, b) if a < b else (b, a)
        if e in seen:
            raise ParseError(f"line {lineno}: duplicate edge {e}")
        seen.add(e)
        edges.append(e)
    try:
        return Graph(n, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from None


def format_edge_list(g: Graph) -> str:
    """Emit the edge-list format with an "n m" header (round-trips exactly)."""
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
