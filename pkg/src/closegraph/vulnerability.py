"""Residual and additional closeness by exhaustive single-edit search.

These are definitions, not algorithms: link residual closeness is the
minimum graph closeness over single-edge deletions, vertex residual over
single-vertex deletions, additional closeness the maximum over
single-edge additions. Ties are reported in full, sorted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dyadic import Dyadic
from .graph import Graph, graph_closeness
from .transforms import add_edge, delete_edge, delete_vertex

__all__ = [
    "VulnerabilityReport",
    "link_residual",
    "vertex_residual",
    "additional_closeness",
]


@dataclass
class VulnerabilityReport:
    """Optimal value of one single-edit measure, with every witness."""

    measure: str
    baseline: Dyadic
    value: Dyadic
    witnesses: list  # edges (u, v) or vertex indices, sorted

    def to_json(self):
        return {
            "measure": self.measure,
            "baseline": self.baseline.canonical(),
            "value": self.value.canonical(),
            "witnesses": [
                list(w) if isinstance(w, tuple) else w for w in self.witnesses
            ],
        }


def link_residual(g: Graph) -> VulnerabilityReport:
    """Minimum closeness after deleting one edge; witnesses are all
    edges attaining it."""
    edges = list(g.edges())
    if not edges:
        raise ValueError("link residual closeness needs at least one edge")
    baseline = graph_closeness(g).total
    best: Dyadic | None = None
    witnesses: list[tuple[int, int]] = []
    for u, v in edges:
        total = graph_closeness(delete_edge(g, u, v)).total
        if best is None or total < best:
            best, witnesses = total, [(u, v)]
        elif total == best:
            witnesses.append((u, v))
    return VulnerabilityReport("link_residual", baseline, best, sorted(witnesses))


def vertex_residual(g: Graph) -> VulnerabilityReport:
    """Minimum closeness after deleting one vertex (and its edges);
    witnesses are all vertices attaining it."""
    if g.order < 1:
        raise ValueError("vertex residual closeness needs at least one vertex")
    baseline = graph_closeness(g).total
    best: Dyadic | None = None
    witnesses: list[int] = []
    for v in range(g.order):
        reduced, _ = delete_vertex(g, v)
        total = graph_closeness(reduced).total
        if best is None or total < best:
            best, witnesses = total, [v]
        elif total == best:
            witnesses.append(v)
    return VulnerabilityReport("vertex_residual", baseline, best, witnesses)


def additional_closeness(g: Graph) -> VulnerabilityReport:
    """Maximum closeness after adding one edge; witnesses are all
    non-adjacent pairs attaining it."""
    candidates = [
        (u, v)
        for u in range(g.order)
        for v in range(u + 1, g.order)
        if not g.has_edge(u, v)
    ]
    if not candidates:
        raise ValueError("no non-edge exists: graph is complete")
    baseline = graph_closeness(g).total
    best: Dyadic | None = None
    witnesses: list[tuple[int, int]] = []
    for u, v in candidates:
        total = graph_closeness(add_edge(g, u, v)).total
        if best is None or total > best:
            best, witnesses = total, [(u, v)]
        elif total == best:
            witnesses.append((u, v))
    return VulnerabilityReport("additional", baseline, best, witnesses)
