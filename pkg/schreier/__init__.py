"""Schreier graphs: coset labels, balls, orbits and DOT export."""

from .dot import DOMAIN_COLORS, domain_colors, to_dot
from .exploration import FiniteCycle, LineSegment, Orbit, ball, orbit_transversal, s_orbit, step
from .graphs import (
    CATALOG,
    INFINITE,
    CayleyGraph,
    EndsTag,
    ExplicitGraph,
    GraphSpec,
    KernelCosetGraph,
    LazyGraph,
    Node,
    as_letter,
    breadth_first,
    comb_graph,
    cross_graph,
    cycle_graph,
    iter_breadth_first,
    tripod_graph,
)

__all__ = [
    "CATALOG",
    "CayleyGraph",
    "DOMAIN_COLORS",
    "EndsTag",
    "ExplicitGraph",
    "FiniteCycle",
    "GraphSpec",
    "INFINITE",
    "KernelCosetGraph",
    "LazyGraph",
    "LineSegment",
    "Node",
    "Orbit",
    "as_letter",
    "ball",
    "breadth_first",
    "comb_graph",
    "cross_graph",
    "cycle_graph",
    "domain_colors",
    "iter_breadth_first",
    "orbit_transversal",
    "s_orbit",
    "step",
    "to_dot",
    "tripod_graph",
]
