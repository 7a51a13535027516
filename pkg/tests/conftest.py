"""Shared test helpers: an independent closeness oracle.

The oracle deliberately shares no code with the package: networkx BFS
plus Fraction arithmetic. Package results are compared against it via
exact rational equality.
"""

from fractions import Fraction

import networkx as nx

from closegraph.graph import Graph


def build(order, edges, labels=None):
    return Graph.from_edges(order, edges, labels)


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return G


def oracle_vertex_closeness(g: Graph, i: int) -> Fraction:
    G = to_networkx(g)
    dist = nx.single_source_shortest_path_length(G, i)
    return sum(
        (Fraction(1, 2 ** d) for j, d in dist.items() if j != i), Fraction(0)
    )


def oracle_total_closeness(g: Graph) -> Fraction:
    return sum((oracle_vertex_closeness(g, i) for i in range(g.order)), Fraction(0))
