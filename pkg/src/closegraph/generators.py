"""Generators for the graph families with fixed labeling conventions.

Conventions (they matter: the closed-form verifications assume them):

* path P_n: vertices 0..n-1 chained; vertex 0 is "the" leaf end.
* cycle C_n: the chain plus edge (n-1, 0).
* star S_n: n total vertices, center 0 adjacent to 1..n-1.
* complete K_n: all pairs.
* lollipop L_{m,n}: K_m vertex 0 bridged to the leaf of P_n.
* tadpole T_{m,n}: C_m vertex 0 bridged to the leaf of P_n.
* broom B_{m,n}: the CENTER of S_m bridged to the leaf of P_n.
* bistar BS_{m,n}: centers of S_m and S_n bridged together.

Composite graphs index the left part first, so the bridge is always
(0, m) and labels carry the part of origin (e.g. "K:2", "P:0").
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph
from .transforms import bridge_join

__all__ = [
    "BASIC_FAMILIES",
    "COMPOSITE_FAMILIES",
    "FAMILIES",
    "FamilySpec",
    "parse_family_spec",
    "gen_basic",
    "gen_composite",
    "generate",
    "gen_random_connected",
]

BASIC_FAMILIES = ("path", "cycle", "star", "complete")
COMPOSITE_FAMILIES = ("lollipop", "tadpole", "broom", "bistar")
FAMILIES = BASIC_FAMILIES + COMPOSITE_FAMILIES

# minimum p1 (and p2 where composite) for each family
_MINIMA = {
    "path": (1, None),
    "cycle": (3, None),
    "star": (2, None),
    "complete": (1, None),
    "lollipop": (1, 1),
    "tadpole": (3, 1),
    "broom": (3, 1),
    "bistar": (3, 3),
}


@dataclass(frozen=True)
class FamilySpec:
    """A named graph family with integer parameters (p2 iff composite)."""

    family: str
    p1: int
    p2: int | None = None

    def validate(self) -> None:
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        lo1, lo2 = _MINIMA[self.family]
        if lo2 is None:
            if self.p2 is not None:
                raise ValueError(f"{self.family} takes one parameter, got two")
            if self.p1 < lo1:
                raise ValueError(f"{self.family} requires p1 >= {lo1}, got {self.p1}")
        else:
            if self.p2 is None:
                raise ValueError(f"{self.family} takes two parameters, got one")
            if self.p1 < lo1:
                raise ValueError(f"{self.family} requires p1 >= {lo1}, got {self.p1}")
            if self.p2 < lo2:
                raise ValueError(f"{self.family} requires p2 >= {lo2}, got {self.p2}")

    def __str__(self):
        if self.p2 is None:
            return f"{self.family}:{self.p1}"
        return f"{self.family}:{self.p1},{self.p2}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse the CLI syntax "path:5" / "lollipop:3,2"."""
    name, sep, params = text.partition(":")
    if not sep or not params:
        raise ValueError(f"bad family spec {text!r}: expected 'family:p1[,p2]'")
    parts = params.split(",")
    if len(parts) not in (1, 2):
        raise ValueError(f"bad family spec {text!r}: expected one or two parameters")
    try:
        numbers = [int(p) for p in parts]
    except ValueError:
        raise ValueError(f"bad family spec {text!r}: parameters must be integers") from None
    spec = FamilySpec(name.strip(), numbers[0], numbers[1] if len(numbers) == 2 else None)
    spec.validate()
    return spec


def gen_basic(spec: FamilySpec) -> Graph:
    """Build one of path, cycle, star, complete."""
    spec.validate()
    n = spec.p1
    if spec.family == "path":
        edges = [(i, i + 1) for i in range(n - 1)]
        return Graph.from_edges(n, edges, [f"P:{i}" for i in range(n)])
    if spec.family == "cycle":
        edges = [(i, i + 1) for i in range(n - 1)] + [(n - 1, 0)]
        return Graph.from_edges(n, edges, [f"C:{i}" for i in range(n)])
    if spec.family == "star":
        edges = [(0, i) for i in range(1, n)]
        return Graph.from_edges(n, edges, [f"S:{i}" for i in range(n)])
    if spec.family == "complete":
        edges = list(combinations(range(n), 2))
        return Graph.from_edges(n, edges, [f"K:{i}" for i in range(n)])
    raise ValueError(f"{spec.family} is not a basic family")


def gen_composite(spec: FamilySpec) -> Graph:
    """Build one of lollipop, tadpole, broom, bistar via a bridge join."""
    spec.validate()
    m, n = spec.p1, spec.p2
    if spec.family == "lollipop":
        left = gen_basic(FamilySpec("complete", m))
        right = gen_basic(FamilySpec("path", n))
    elif spec.family == "tadpole":
        left = gen_basic(FamilySpec("cycle", m))
        right = gen_basic(FamilySpec("path", n))
    elif spec.family == "broom":
        left = gen_basic(FamilySpec("star", m))
        right = gen_basic(FamilySpec("path", n))
    elif spec.family == "bistar":
        left = gen_basic(FamilySpec("star", m))
        right = gen_basic(FamilySpec("star", n))
    else:
        raise ValueError(f"{spec.family} is not a composite family")
    # attachment: complete/cycle vertex 0, star center 0, path leaf 0
    joined, _ = bridge_join(left, 0, right, 0)
    return joined


def generate(spec: FamilySpec) -> Graph:
    """Build any family."""
    if spec.family in BASIC_FAMILIES:
        return gen_basic(spec)
    return gen_composite(spec)


def gen_random_connected(order: int, edge_budget: int, seed: int) -> Graph:
    """Seeded connected graph: a random spanning tree plus uniformly
    chosen extra edges. Same (order, edge_budget, seed) gives the same
    adjacency.
    """
    if order < 1:
        raise ValueError(f"order must be >= 1, got {order}")
    max_edges = order * (order - 1) // 2
    if not (order - 1 <= edge_budget <= max_edges):
        raise ValueError(
            f"edge_budget {edge_budget} infeasible for order {order}: "
            f"need {order - 1}..{max_edges}"
        )
    rng = random.Random(seed)
    edges = set()
    for v in range(1, order):
        u = rng.randrange(v)
        edges.add((u, v))
    spare = [
        (u, v) for u, v in combinations(range(order), 2) if (u, v) not in edges
    ]
    extra = edge_budget - (order - 1)
    if extra:
        edges.update(rng.sample(spare, extra))
    return Graph.from_edges(order, sorted(edges))
