"""Balls and letter orbits in Schreier graphs."""

import logging
from dataclasses import dataclass
from typing import List, Optional, Tuple, Union

import networkx as nx

from schreier.graphs import GraphSpec, LetterLike, Node, breadth_first

logger = logging.getLogger(__name__)


def step(g: GraphSpec, v: Node, s: LetterLike) -> Node:
    """The s-neighbour of v (right multiplication on coset labels)."""
    return g.step(v, s)


def ball(g: GraphSpec, v: Optional[Node] = None, r: int = 1) -> nx.MultiDiGraph:
    """Nodes at edge-distance <= r with their induced labeled edges.

    Node attribute `distance`; one edge u -> step(u, s) per letter s, keyed
    and labeled by the letter name.
    """
    if r < 0:
        raise ValueError(f"radius must be >= 0, got {r}")
    v = v if v is not None else g.basepoint
    distances = breadth_first(g, v, r)
    view = nx.MultiDiGraph(center=v, radius=r)
    for node, d in distances.items():
        view.add_node(node, distance=d)
    for node in distances:
        for name in g.letters:
            target = g.step(node, (name, 1))
            if target in distances:
                view.add_edge(node, target, key=name, letter=name)
    return view


@dataclass(frozen=True)
class FiniteCycle:
    length: int
    nodes: Tuple[Node, ...]

    @property
    def is_infinite(self) -> bool:
        return False


@dataclass(frozen=True)
class LineSegment:
    """An orbit that did not close within the window; nodes run backward to forward."""

    nodes: Tuple[Node, ...]
    window: int

    @property
    def is_infinite(self) -> bool:
        return True


Orbit = Union[FiniteCycle, LineSegment]


def s_orbit(g: GraphSpec, v: Node, s: str, window: int) -> Orbit:
    """The <s>-orbit of v, truncated to `window` steps each way when it does not close."""
    forward = [v]
    cur = v
    for k in range(1, window + 1):
        cur = g.step(cur, (s, 1))
        if cur == v:
            return FiniteCycle(k, tuple(forward))
        forward.append(cur)
    backward = []
    cur = v
    for _ in range(window):
        cur = g.step(cur, (s, -1))
        backward.append(cur)
    logger.debug(f"orbit of {v} under {s} open within window {window}")
    return LineSegment(tuple(reversed(backward)) + tuple(forward), window)


def orbit_transversal(g: GraphSpec, s: str, window: int) -> List[Tuple[Node, Orbit]]:
    """One representative per <s>-orbit meeting the window ball, in BFS order."""
    covered = set()
    result = []
    for node in breadth_first(g, g.basepoint, window):
        if node in covered:
            continue
        orbit = s_orbit(g, node, s, window)
        seen_before = covered.intersection(orbit.nodes)
        covered.update(orbit.nodes)
        if seen_before:
            # a far part of an orbit already listed
            continue
        result.append((node, orbit))
    return result
