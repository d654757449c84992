"""Support regions of push words and commutation by disjoint supports."""

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Tuple, Union

from config import get_settings
from groups.words import Word, free_reduce
from schreier.graphs import Node, cross_graph, iter_breadth_first

from actions.multipush import PushSystem, coset_action, trajectory
from actions.verdicts import Undecided

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class VertexFront:
    node: Node

    def __str__(self) -> str:
        return f"front V{self.node}"


@dataclass(frozen=True)
class EdgeFront:
    node: Node
    letter: str

    def __str__(self) -> str:
        return f"front E({self.node},{self.letter})"


@dataclass(frozen=True)
class PiCopy:
    node: Node

    def __str__(self) -> str:
        return f"pi{self.node}"


@dataclass(frozen=True)
class OmegaCell:
    node: Node

    def __str__(self) -> str:
        return f"omega{self.node}"


SupportCell = Union[VertexFront, EdgeFront, PiCopy, OmegaCell]


def _cell_key(cell: SupportCell) -> Tuple[str, str, str]:
    letter = cell.letter if isinstance(cell, EdgeFront) else ""
    return (type(cell).__name__, str(cell.node), letter)


@dataclass(frozen=True)
class SupportRegion:
    """Cells touched by a push word inside a window.

    Edge fronts are determined by the moved vertices: E(v, s) belongs to the
    region when both v and v·s are moved and distinct.
    """

    cells: FrozenSet[SupportCell] = frozenset()
    window: Optional[int] = None
    truncated: bool = False
    excursion: bool = False

    @property
    def is_empty(self) -> bool:
        return not self.cells

    @property
    def vertex_nodes(self) -> FrozenSet[Node]:
        return frozenset(c.node for c in self.cells if isinstance(c, VertexFront))

    @property
    def pi_nodes(self) -> FrozenSet[Node]:
        return frozenset(c.node for c in self.cells if isinstance(c, PiCopy))

    @property
    def edge_cells(self) -> FrozenSet[EdgeFront]:
        return frozenset(c for c in self.cells if isinstance(c, EdgeFront))

    def sorted_cells(self) -> Tuple[SupportCell, ...]:
        return tuple(sorted(self.cells, key=_cell_key))

    def disjoint(self, other: "SupportRegion") -> bool:
        return not (self.cells & other.cells)

    def image(self, sys: PushSystem, u: Word) -> "SupportRegion":
        """The region carried by the homeomorphism of u."""
        moved = frozenset(coset_action(sys, u, v) for v in self.vertex_nodes)
        return _region_from(sys, moved, self.window, self.truncated, self.excursion)

    def __str__(self) -> str:
        tags = [t for t, on in (("truncated", self.truncated), ("excursion", self.excursion)) if on]
        body = ", ".join(str(c) for c in self.sorted_cells()) or "empty"
        return body + (f" [{' '.join(tags)}]" if tags else "")


def _region_from(sys: PushSystem, moved: FrozenSet[Node], window: Optional[int],
                 truncated: bool, excursion: bool) -> SupportRegion:
    cells = set()
    for v in moved:
        cells.add(VertexFront(v))
        cells.add(PiCopy(v))
        if v in sys.non_sphere:
            cells.add(OmegaCell(v))
        for s in sys.letters:
            target = sys.graph.step(v, s)
            if target != v and target in moved:
                cells.add(EdgeFront(v, s))
    return SupportRegion(frozenset(cells), window, truncated, excursion)


def support_region(sys: PushSystem, w: Word, window: Optional[int] = None) -> SupportRegion:
    """Cells moved by w on the window ball.

    When w fixes every copy but is freely nontrivial, the copies it carries
    around and back are reported instead and the region is flagged as an
    excursion.  A moved copy on the window boundary marks the region truncated.
    """
    if window is None:
        window = get_settings().window_radius
    sys.check(w)
    reduced = free_reduce(w)
    if not reduced:
        return SupportRegion(frozenset(), window)

    moved = set()
    travelled = set()
    boundary_hit = False
    wandered_far = False
    for v, d in iter_breadth_first(sys.graph, sys.graph.basepoint, window):
        path = trajectory(sys, reduced, v)
        if path[-1] != v:
            moved.add(v)
            boundary_hit = boundary_hit or d >= window
        elif any(p != v for p in path):
            travelled.add(v)
            wandered_far = wandered_far or d >= window

    if moved:
        return _region_from(sys, frozenset(moved), window, boundary_hit, False)
    if travelled:
        logger.debug(f"{sys.name}: {reduced} fixes the window copies, {len(travelled)} make excursions")
        return _region_from(sys, frozenset(travelled), window, wandered_far, True)
    return SupportRegion(frozenset(), window)


def commute_by_disjoint_support(sys: PushSystem, u: Word, v: Word,
                                window: Optional[int] = None) -> Union[bool, Undecided]:
    """True when the supports are disjoint; overlap or truncation leaves it undecided."""
    first = support_region(sys, u, window)
    second = support_region(sys, v, window)
    if first.is_empty or second.is_empty:
        return True
    if not first.disjoint(second):
        shared = sorted((str(c) for c in first.cells & second.cells))
        return Undecided(f"supports overlap at {shared[0]}")
    if first.truncated or second.truncated:
        return Undecided("a support reaches the window boundary")
    return True


def cross_system() -> PushSystem:
    """Pushes h_a, h_b along the two axes of the four-ended cross."""
    return PushSystem(cross_graph(), ("a", "b"), name="cross")


def cross_commutator() -> Word:
    """[h_a, h_b] with h_a acting first: h_b^-1 h_a^-1 h_b h_a in rightmost-first words.

    Its support is the three vertex fronts at (-1,0), (0,0) and (0,-1).
    """
    return Word((("b", -1), ("a", -1), ("b", 1), ("a", 1)))


def axis_conjugator(n: int) -> Word:
    """w_n = h_a^(3n+1) h_b h_a^2, carrying the commutator support to (3n+1..3n+3, 0)."""
    return Word.gen("a", 3 * n + 1) * Word.gen("b") * Word.gen("a", 2)


def support_overlay(region: SupportRegion) -> Tuple[Dict[Node, str], FrozenSet[Tuple[Node, str]]]:
    """Vertex marks and edge marks for drawing a region over a ball."""
    omega = {c.node for c in region.cells if isinstance(c, OmegaCell)}
    marks = {v: "front+omega" if v in omega else "front" for v in region.vertex_nodes}
    edges = frozenset((e.node, e.letter) for e in region.edge_cells)
    return marks, edges
