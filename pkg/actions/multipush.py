"""Multipush systems on Schreier surfaces and their triviality verdicts.

The multipush x_s pushes every copy of Π along its <s>-orbit at once, so on
copies it acts as v -> v·s.  Words act with the rightmost letter first.
Omitted copies sit off the domains (capped copies on the back) and are fixed
by every x_s.
"""

import logging
from dataclasses import dataclass
from typing import FrozenSet, Iterable, Optional, Tuple, Union

from config import get_settings
from groups.errors import UnknownGeneratorError
from groups.oracles import FreeAbelianOracle, FreeOracle, default_names
from groups.words import Word, format_word, free_reduce
from schreier.exploration import FiniteCycle, s_orbit
from schreier.graphs import CayleyGraph, GraphSpec, Node, cycle_graph, iter_breadth_first
from surfaces.schreier_surface import SchreierSurfaceSpec

from actions.verdicts import Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OmittedCopy:
    """A copy of Π moved out of the x_s domain at a vertex."""

    letter: str
    node: Node

    def __str__(self) -> str:
        return f"omitted[{self.letter}@{self.node}]"


Cell = Union[Node, OmittedCopy]


@dataclass(frozen=True)
class PushSystem:
    """Push homeomorphisms along the letters of a graph; no freeness is assumed."""

    graph: GraphSpec
    letters: Tuple[str, ...]
    name: str = "push"
    non_sphere: FrozenSet[Node] = frozenset()

    def __post_init__(self) -> None:
        if not self.letters:
            raise UnknownGeneratorError("<none>", f"{self.name} (empty T)")
        for s in self.letters:
            if s not in self.graph.letters:
                raise UnknownGeneratorError(s, f"{self.graph.kind} graph")

    def check(self, w: Word) -> None:
        for name in w.letters_used:
            if name not in self.letters:
                raise UnknownGeneratorError(name, f"push system {self.name}")


@dataclass(frozen=True)
class MultipushSystem(PushSystem):
    """Multipushes x_s, s in T, on a Schreier surface."""

    omissions: Tuple[OmittedCopy, ...] = ()

    def __post_init__(self) -> None:
        super().__post_init__()
        for copy in self.omissions:
            if copy.letter not in self.letters:
                raise UnknownGeneratorError(copy.letter, "multipush omissions")

    @classmethod
    def on_surface(cls, spec: SchreierSurfaceSpec, letters: Optional[Iterable[str]] = None,
                   omissions: Iterable[Tuple[str, Node]] = (), name: Optional[str] = None) -> "MultipushSystem":
        return cls(
            graph=spec.graph,
            letters=tuple(letters) if letters is not None else spec.graph.letters,
            omissions=tuple(OmittedCopy(s, v) for s, v in omissions),
            non_sphere=frozenset(node for node, _ in spec.omega_items),
            name=name or spec.name,
        )

    @property
    def omitted_nodes(self) -> Tuple[Node, ...]:
        return tuple(copy.node for copy in self.omissions)


def coset_action(sys: PushSystem, w: Word, cell: Cell) -> Cell:
    """Image of a Π-copy under the homeomorphism of w (rightmost letter first)."""
    sys.check(w)
    if isinstance(cell, OmittedCopy):
        return cell
    for letter in reversed(w.letters):
        cell = sys.graph.step(cell, letter)
    return cell


def trajectory(sys: PushSystem, w: Word, v: Node) -> Tuple[Node, ...]:
    """Nodes visited by the copy at v while w is applied, starting with v."""
    path = [v]
    for letter in reversed(w.letters):
        path.append(sys.graph.step(path[-1], letter))
    return tuple(path)


def first_moved(sys: PushSystem, w: Word, window: int) -> Optional[Tuple[Node, Node]]:
    """The first window node, in BFS order, whose copy w moves."""
    for v, _ in iter_breadth_first(sys.graph, sys.graph.basepoint, window):
        image = coset_action(sys, w, v)
        if image != v:
            return v, image
    return None


def multipush_is_trivial(sys: MultipushSystem, w: Word, window: Optional[int] = None) -> Verdict:
    """Decide triviality of a multipush word.

    A moved copy in the window witnesses nontriviality directly.  Otherwise a
    freely nontrivial word is nontrivial when |T| >= 2 (the multipushes
    generate a free group), when the letter's orbits are infinite, or when a
    finite cycle carries a non-sphere Ω.  The remaining single-letter cycle
    with spheres only is left UNKNOWN.
    """
    if window is None:
        window = get_settings().window_radius
    sys.check(w)
    reduced = free_reduce(w)
    if not reduced:
        return Verdict.trivial(window)

    moved = first_moved(sys, reduced, window)
    if moved is not None:
        v, image = moved
        return Verdict.nontrivial(f"moves {v} -> {image}", window)

    if len(sys.letters) >= 2:
        return Verdict.nontrivial(f"free word {format_word(reduced)}", window)

    s = sys.letters[0]
    orbit = s_orbit(sys.graph, sys.graph.basepoint, s, window)
    if orbit.is_infinite:
        return Verdict.nontrivial(f"infinite {s}-orbit", window)
    assert isinstance(orbit, FiniteCycle)
    decorated = [v for v in orbit.nodes if v in sys.non_sphere]
    if decorated:
        return Verdict.nontrivial(f"non-sphere omega at {decorated[0]} on a {orbit.length}-cycle", window)
    logger.debug(f"{sys.name}: {format_word(reduced)} fixes every copy of a {orbit.length}-cycle")
    return Verdict.unknown(f"power of {s} on an all-sphere {orbit.length}-cycle", window)


def free_system(rank: int = 2, letters: Optional[Iterable[str]] = None) -> MultipushSystem:
    """Multipushes on the Cayley graph of a free group (the blooming Cantor tree for a handle)."""
    names = tuple(letters) if letters is not None else default_names(rank)
    return MultipushSystem(CayleyGraph(FreeOracle(names)), names, name=f"free{rank}")


def abelian_system(rank: int = 2, letters: Optional[Iterable[str]] = None) -> MultipushSystem:
    names = tuple(letters) if letters is not None else default_names(rank)
    return MultipushSystem(CayleyGraph(FreeAbelianOracle(names)), names, name=f"abelian{rank}")


def shift_system(letter: str = "t") -> MultipushSystem:
    """A single shift: the Cayley graph of Z."""
    return MultipushSystem(CayleyGraph(FreeOracle((letter,))), (letter,), name="shift")


def one_ended_shift_system() -> MultipushSystem:
    """x_a on the Cayley graph of Z^2: every a-line has both ends at the single end."""
    return MultipushSystem(CayleyGraph(FreeAbelianOracle(("a", "b"))), ("a",), name="one_ended_shift")


def finite_shift_system(period: int, non_sphere_at: Iterable[int] = (), letter: str = "t") -> MultipushSystem:
    """Translation mod `period` of an annulus carrying `period` copies of Π."""
    graph = cycle_graph(period, letter)
    return MultipushSystem(
        graph,
        (letter,),
        non_sphere=frozenset(graph.node(i) for i in non_sphere_at),
        name=f"finite_shift{period}",
    )
