"""Exact dyadic closeness centrality for graphs and graph operations.

The closeness of vertex i is the sum over all other vertices j of
2**-d(i,j); graph closeness is the sum over all vertices. Everything is
computed in exact dyadic arithmetic, so closed-form formulas can be
verified against a brute-force BFS oracle with bit-exact equality.
"""

from .dyadic import Dyadic
from .graph import (
    UNREACHABLE,
    ClosenessReport,
    Graph,
    bfs_distances,
    format_edgelist,
    graph_closeness,
    parse_edgelist,
    to_dot,
    vertex_closeness,
)
from .generators import (
    FamilySpec,
    gen_basic,
    gen_composite,
    gen_random_connected,
    generate,
    parse_family_spec,
)
from .transforms import (
    Origin,
    add_edge,
    bridge_join,
    coalesce_join,
    delete_edge,
    delete_vertex,
    line_graph,
    shadow,
)
from .formulas import (
    BridgedLineValues,
    bridged_line,
    closed_form,
    closed_form_line,
    compose_bridge,
    compose_coalesce,
    compose_line_bridge,
    shadow_closeness,
)
from .vulnerability import (
    VulnerabilityReport,
    additional_closeness,
    link_residual,
    vertex_residual,
)
from .verify import SweepWindow, VerificationRecord, run_all

__version__ = "0.1.0"

__all__ = [
    "Dyadic",
    "UNREACHABLE",
    "Graph",
    "ClosenessReport",
    "bfs_distances",
    "vertex_closeness",
    "graph_closeness",
    "parse_edgelist",
    "format_edgelist",
    "to_dot",
    "FamilySpec",
    "parse_family_spec",
    "gen_basic",
    "gen_composite",
    "generate",
    "gen_random_connected",
    "Origin",
    "shadow",
    "line_graph",
    "bridge_join",
    "coalesce_join",
    "delete_edge",
    "delete_vertex",
    "add_edge",
    "BridgedLineValues",
    "closed_form",
    "closed_form_line",
    "bridged_line",
    "compose_bridge",
    "compose_coalesce",
    "compose_line_bridge",
    "shadow_closeness",
    "VulnerabilityReport",
    "link_residual",
    "vertex_residual",
    "additional_closeness",
    "SweepWindow",
    "VerificationRecord",
    "run_all",
]
