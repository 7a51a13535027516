"""Graph operations: shadow graph, line graph, bridge join, coalescence,
and single edge/vertex edits.

The structural transforms also return an origin table: one record per
result vertex saying where it came from, so formula cross-checks can
locate, say, the vertex of a line graph that corresponds to a pendant
bridge edge.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph

__all__ = [
    "Origin",
    "shadow",
    "line_graph",
    "bridge_join",
    "coalesce_join",
    "delete_edge",
    "delete_vertex",
    "add_edge",
]


@dataclass(frozen=True)
class Origin:
    """Provenance of one vertex of a transformed graph.

    kind is one of "copy0"/"copy1" (shadow), "edge" (line graph, source
    is the endpoint pair of the original edge), "left"/"right" (joins),
    or "merged" (coalescence, source is the merged (p, q) pair).
    """

    kind: str
    source: int | tuple[int, int]

    def to_json(self):
        src = list(self.source) if isinstance(self.source, tuple) else self.source
        return [self.kind, src]


def shadow(g: Graph) -> tuple[Graph, list[Origin]]:
    """Two copies of g; each original edge (u, v) induces the four edges
    (u', v'), (u', v"), (u", v'), (u", v"). Corresponding copies of a
    vertex are never adjacent. Order doubles.
    """
    n = g.order
    edges = []
    for u, v in g.edges():
        edges.append((u, v))
        edges.append((u, n + v))
        edges.append((n + u, v))
        edges.append((n + u, n + v))
    labels = [lab + "'" for lab in g.labels] + [lab + '"' for lab in g.labels]
    origins = [Origin("copy0", i) for i in range(n)] + [
        Origin("copy1", i) for i in range(n)
    ]
    return Graph.from_edges(2 * n, edges, labels), origins


def line_graph(g: Graph) -> tuple[Graph, list[Origin]]:
    """Edge-to-vertex dual: one vertex per edge of g, adjacent iff the
    edges share an endpoint. Vertices are ordered by their (u, v)
    endpoint pair, u < v, lexicographically.
    """
    edge_list = list(g.edges())
    index = {e: k for k, e in enumerate(edge_list)}
    ledges = []
    for v in range(g.order):
        incident = [
            index[(min(v, w), max(v, w))] for w in g.adj[v]
        ]
        # every pair of edges meeting at v becomes a line-graph edge;
        # in a simple graph two edges share at most one vertex, so no
        # pair is generated twice
        for a in range(len(incident)):
            for b in range(a + 1, len(incident)):
                ledges.append((incident[a], incident[b]))
    labels = [f"({g.labels[u]},{g.labels[v]})" for u, v in edge_list]
    origins = [Origin("edge", e) for e in edge_list]
    return Graph.from_edges(len(edge_list), ledges, labels), origins


def bridge_join(g1: Graph, p: int, g2: Graph, q: int) -> tuple[Graph, list[Origin]]:
    """Disjoint union of g1 and g2 plus the single edge (p, q').

    g1 keeps its indices; g2's vertex j becomes |g1| + j.
    """
    if not (0 <= p < g1.order):
        raise IndexError(f"vertex {p} out of range for left graph of order {g1.order}")
    if not (0 <= q < g2.order):
        raise IndexError(f"vertex {q} out of range for right graph of order {g2.order}")
    n1 = g1.order
    edges = list(g1.edges())
    edges.extend((n1 + u, n1 + v) for u, v in g2.edges())
    edges.append((p, n1 + q))
    labels = list(g1.labels) + list(g2.labels)
    origins = [Origin("left", i) for i in range(n1)] + [
        Origin("right", j) for j in range(g2.order)
    ]
    return Graph.from_edges(n1 + g2.order, edges, labels), origins


def coalesce_join(g1: Graph, p: int, g2: Graph, q: int) -> tuple[Graph, list[Origin]]:
    """Disjoint union with p and q merged into one vertex adjacent to
    N(p) union N(q). The merged vertex keeps p's index; g2's remaining
    vertices follow g1's in their original order.
    """
    if not (0 <= p < g1.order):
        raise IndexError(f"vertex {p} out of range for left graph of order {g1.order}")
    if not (0 <= q < g2.order):
        raise IndexError(f"vertex {q} out of range for right graph of order {g2.order}")
    n1 = g1.order
    remap = {}
    nxt = n1
    for j in range(g2.order):
        if j == q:
            remap[j] = p
        else:
            remap[j] = nxt
            nxt += 1
    edges = list(g1.edges())
    edges.extend((min(remap[u], remap[v]), max(remap[u], remap[v])) for u, v in g2.edges())
    labels = list(g1.labels) + [g2.labels[j] for j in range(g2.order) if j != q]
    labels[p] = f"{g1.labels[p]}+{g2.labels[q]}"
    origins = [
        Origin("merged", (p, q)) if i == p else Origin("left", i) for i in range(n1)
    ]
    origins.extend(Origin("right", j) for j in range(g2.order) if j != q)
    return Graph.from_edges(n1 + g2.order - 1, edges, labels), origins


def delete_edge(g: Graph, u: int, v: int) -> Graph:
    """Remove the edge (u, v); it must be present."""
    if not g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) not present")
    key = (min(u, v), max(u, v))
    edges = [e for e in g.edges() if e != key]
    return Graph.from_edges(g.order, edges, g.labels)


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Add the edge (u, v); endpoints must be distinct and non-adjacent."""
    if not (0 <= u < g.order and 0 <= v < g.order):
        raise ValueError(f"edge ({u}, {v}) out of range for order {g.order}")
    if u == v:
        raise ValueError(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise ValueError(f"edge ({u}, {v}) already present")
    edges = list(g.edges())
    edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(g.order, edges, g.labels)


def delete_vertex(g: Graph, v: int) -> tuple[Graph, list[int]]:
    """Remove v and its incident edges, re-densifying indices.

    Returns the new graph and a mapping new index -> old index.
    """
    if not (0 <= v < g.order):
        raise ValueError(f"vertex {v} out of range for order {g.order}")
    keep = [i for i in range(g.order) if i != v]
    new_index = {old: new for new, old in enumerate(keep)}
    edges = [
        (new_index[a], new_index[b]) for a, b in g.edges() if a != v and b != v
    ]
    labels = [g.labels[i] for i in keep]
    return Graph.from_edges(g.order - 1, edges, labels), keep
