"""Simple undirected graphs, BFS distances, and exact closeness.

Closeness of a vertex i is sum over j != i of 2**-d(i,j); unreachable
pairs contribute exactly 0, so the measure is defined on disconnected
graphs too. Graph closeness is the sum over all vertices. All values
are exact :class:`~closegraph.dyadic.Dyadic` numbers, never floats.
"""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .dyadic import Dyadic

__all__ = [
    "UNREACHABLE",
    "Graph",
    "ClosenessReport",
    "bfs_distances",
    "vertex_closeness",
    "graph_closeness",
    "parse_edgelist",
    "format_edgelist",
    "to_dot",
]

UNREACHABLE = -1


class Graph:
    """Immutable simple undirected graph with dense 0-based vertex indices.

    Adjacency lists are kept sorted so iteration order, reports, and file
    output are reproducible. Construct with :meth:`from_edges`; mutation
    is not supported (the transforms build fresh graphs).
    """

    __slots__ = ("order", "adj", "labels")

    def __init__(self, order: int, adj: list[list[int]], labels: list[str]):
        self.order = order
        self.adj = adj
        self.labels = labels

    @classmethod
    def from_edges(
        cls,
        order: int,
        edges,
        labels: list[str] | None = None,
    ) -> "Graph":
        """Build a graph, validating no loops, duplicates, or bad indices."""
        if order < 0:
            raise ValueError(f"order must be non-negative, got {order}")
        adj: list[set[int]] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise ValueError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if v in adj[u]:
                raise ValueError(f"duplicate edge ({u}, {v})")
            adj[u].add(v)
            adj[v].add(u)
        if labels is None:
            labels = [str(i) for i in range(order)]
        elif len(labels) != order:
            raise ValueError("labels length must equal order")
        return cls(order, [sorted(s) for s in adj], list(labels))

    @property
    def edge_count(self) -> int:
        return sum(len(a) for a in self.adj) // 2

    def edges(self):
        """Yield edges (u, v) with u < v, in lexicographic order."""
        for u, nbrs in enumerate(self.adj):
            for v in nbrs:
                if v > u:
                    yield (u, v)

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.order and 0 <= v < self.order):
            return False
        a = self.adj[u]
        if len(a) > 8:
            k = bisect_left(a, v)
            return k < len(a) and a[k] == v
        return v in a

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.order == other.order and self.adj == other.adj

    def __repr__(self):
        return f"Graph(order={self.order}, edges={self.edge_count})"


@dataclass
class ClosenessReport:
    """Per-vertex closenesses and their sum for one graph."""

    per_vertex: list[Dyadic]
    total: Dyadic


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from source; UNREACHABLE (-1) where no path exists."""
    if not (0 <= source < g.order):
        raise IndexError(f"source {source} out of range for order {g.order}")
    adj = g.adj
    dist = [UNREACHABLE] * g.order
    dist[source] = 0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for v in frontier:
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = d
                    nxt.append(w)
        frontier = nxt
    return dist


def _closeness_from_distances(dist: list[int]) -> Dyadic:
    # sum of 2**-d as one big numerator over 2**maxd
    maxd = 0
    counts: dict[int, int] = {}
    for d in dist:
        if d > 0:
            counts[d] = counts.get(d, 0) + 1
            if d > maxd:
                maxd = d
    if not counts:
        return Dyadic(0)
    num = 0
    for d, c in counts.items():
        num += c << (maxd - d)
    return Dyadic(num, maxd)


def vertex_closeness(g: Graph, i: int) -> Dyadic:
    """Closeness of vertex i: sum over j != i of 2**-d(i,j)."""
    if not (0 <= i < g.order):
        raise IndexError(f"vertex {i} out of range for order {g.order}")
    return _closeness_from_distances(bfs_distances(g, i))


def graph_closeness(g: Graph) -> ClosenessReport:
    """Per-vertex closenesses (one BFS per vertex) and the graph total."""
    per = [_closeness_from_distances(bfs_distances(g, i)) for i in range(g.order)]
    total = Dyadic(0)
    for c in per:
        total = total + c
    return ClosenessReport(per_vertex=per, total=total)


def parse_edgelist(text: str) -> Graph:
    """Parse the edge-list format: header "n m", then m lines "u v".

    Lines whose first non-blank character is '#' are comments. Errors
    (self-loops, duplicates, bad indices, wrong edge count) carry the
    1-based line number.
    """
    header: tuple[int, int] | None = None
    header_line = 0
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: expected two integers, got {raw!r}") from None
        if header is None:
            if a < 0 or b < 0:
                raise ValueError(f"line {lineno}: negative count in header")
            header = (a, b)
            header_line = lineno
            continue
        n, _ = header
        if not (0 <= a < n and 0 <= b < n):
            raise ValueError(f"line {lineno}: edge ({a}, {b}) out of range for order {n}")
        if a == b:
            raise ValueError(f"line {lineno}: self-loop at vertex {a}")
        key = (min(a, b), max(a, b))
        if key in seen:
            raise ValueError(f"line {lineno}: duplicate edge ({a}, {b})")
        seen.add(key)
        edges.append((a, b))
    if header is None:
        raise ValueError("line 1: missing 'n m' header")
    n, m = header
    if len(edges) != m:
        raise ValueError(
            f"line {header_line}: header declares {m} edges, file has {len(edges)}"
        )
    return Graph.from_edges(n, edges)


def format_edgelist(g: Graph) -> str:
    """Write the edge-list format; deterministic for a given graph."""
    lines = [f"{g.order} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def to_dot(g: Graph, name: str = "G") -> str:
    """Graphviz DOT rendering with provenance labels on the vertices."""
    lines = [f"graph {name} {{"]
    for i in range(g.order):
        lines.append(f'  {i} [label="{g.labels[i]}"];')
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
