"""DOT export of Schreier balls with letter highlighting and overlays."""

from typing import Dict, Iterable, Mapping, Optional, Tuple

import networkx as nx

from schreier.graphs import Node

OVERLAY_COLOR = "red"
DOMAIN_COLORS = ("blue", "green", "orange", "purple", "brown", "cyan")


def domain_colors(letters: Iterable[str]) -> Dict[str, str]:
    """One colour per multipush letter, cycling through the palette."""
    return {s: DOMAIN_COLORS[i % len(DOMAIN_COLORS)] for i, s in enumerate(letters)}


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def to_dot(
    view: nx.MultiDiGraph,
    highlight: Optional[Mapping[str, str]] = None,
    vertex_marks: Optional[Mapping[Node, str]] = None,
    edge_marks: Optional[Iterable[Tuple[Node, str]]] = None,
    name: str = "ball",
    skip_loops: bool = False,
) -> str:
    """Render a ball as an undirected DOT graph.

    `highlight` colours every edge of a letter (a multipush domain);
    `vertex_marks` and `edge_marks` overlay support cells in red.
    """
    highlight = highlight or {}
    vertex_marks = vertex_marks or {}
    marked_edges = set(edge_marks or ())
    lookup: Dict[Node, str] = {node: f"n{i}" for i, node in enumerate(view.nodes)}

    lines = [f"graph {name} {{"]
    for node in view.nodes:
        attrs = [f"label={_quote(str(node))}"]
        if node in vertex_marks:
            attrs.append(f"xlabel={_quote(vertex_marks[node])}")
            attrs.append("style=filled")
            attrs.append(f"fillcolor={OVERLAY_COLOR}")
        lines.append(f"    {lookup[node]} [{', '.join(attrs)}];")
    for u, v, letter in view.edges(keys=True):
        if skip_loops and u == v:
            continue
        attrs = [f"label={_quote(letter)}"]
        if (u, letter) in marked_edges:
            attrs.append(f"color={OVERLAY_COLOR}")
            attrs.append("penwidth=2")
        elif letter in highlight:
            attrs.append(f"color={highlight[letter]}")
        lines.append(f"    {lookup[u]} -- {lookup[v]} [{', '.join(attrs)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"
