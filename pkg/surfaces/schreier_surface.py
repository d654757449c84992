"""Schreier surfaces S_Γ(Π) connect-summed with surfaces Ω_v on the back."""

import logging
from dataclasses import dataclass
from typing import Dict, Mapping, Optional, Tuple, Union

from groups.errors import SurfaceSpecError
from schreier.graphs import INFINITE, EndsTag, GraphSpec, Node
from surfaces.ends import EMPTY_ENDS, accumulate, from_tag, is_empty, union
from surfaces.surface_type import PiSpec, SurfaceType, Symbolic, sphere

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SchreierSurfaceSpec:
    """A graph, the decorating surface Π, and finitely many non-sphere Ω_v."""

    graph: GraphSpec
    pi: PiSpec
    omega_items: Tuple[Tuple[Node, SurfaceType], ...] = ()
    name: str = "surface"

    def __post_init__(self) -> None:
        seen = set()
        for node, omega in self.omega_items:
            if node in seen:
                raise SurfaceSpecError(f"omega given twice at {node}")
            seen.add(node)
            if self.graph.is_finite and node not in set(self.graph.vertices()):
                raise SurfaceSpecError(f"omega placed at {node}, which is not a vertex")
            if omega.boundary < 0:
                raise SurfaceSpecError(f"omega at {node} has negative boundary")

    @classmethod
    def of(cls, graph: GraphSpec, pi: PiSpec, omegas: Optional[Mapping[Node, SurfaceType]] = None,
           name: str = "surface") -> "SchreierSurfaceSpec":
        items = tuple((node, omega) for node, omega in (omegas or {}).items() if omega != sphere())
        return cls(graph, pi, items, name)

    @property
    def omegas(self) -> Dict[Node, SurfaceType]:
        return dict(self.omega_items)

    def omega(self, v: Node) -> SurfaceType:
        return self.omegas.get(v, sphere())

    def is_non_sphere(self, v: Node) -> bool:
        return self.omega(v) != sphere()

    def without_omegas(self) -> "SchreierSurfaceSpec":
        return SchreierSurfaceSpec(self.graph, self.pi, (), self.name)


def classify(spec: SchreierSurfaceSpec) -> Union[SurfaceType, Symbolic]:
    """The classification quadruple of the built surface, or Symbolic.

    Genus is the cycle rank of the graph plus one genus(Π) per vertex plus the
    Ω genera.  For an infinite graph the ends are the graph ends with the ends
    of the Π copies accumulating onto them; when genus accumulates (a Π of
    positive genus, or infinitely many cycles, as in every catalogued graph
    family) every graph end is nonplanar.
    """
    g, pi = spec.graph, spec.pi
    cycles = g.cycle_rank()
    if cycles is None:
        return Symbolic(f"cycle rank of the {g.kind} graph is not known")

    omegas = [omega for _, omega in spec.omega_items]
    omega_genus = sum(o.genus for o in omegas)
    boundary = sum(o.boundary for o in omegas)
    omega_ends = union(*[o.ends for o in omegas]) if omegas else EMPTY_ENDS
    omega_marked = union(*[o.nonplanar_ends for o in omegas]) if omegas else EMPTY_ENDS

    if g.is_finite:
        count = len(g.vertices())
        pi_genus = pi.genus * count if pi.genus != INFINITE else INFINITE
        genus = cycles + pi_genus + omega_genus
        ends = union(*([pi.ends] * count), omega_ends)
        marked = union(*([pi.nonplanar_ends] * count), omega_marked)
        return SurfaceType(genus, boundary, marked, ends)

    if g.ends_tag is EndsTag.UNKNOWN:
        return Symbolic(f"end space of the {g.kind} graph is not catalogued")
    graph_ends = from_tag(g.ends_tag, g.kind)

    ends = accumulate(pi.ends, graph_ends)
    if ends is None:
        return Symbolic(f"copies of {pi.ends} accumulating onto {graph_ends}")

    genus_accumulates = pi.genus != 0 or cycles == INFINITE
    if genus_accumulates:
        marked = accumulate(pi.nonplanar_ends, graph_ends)
        if marked is None:
            return Symbolic(f"copies of {pi.nonplanar_ends} accumulating onto {graph_ends}")
        genus = INFINITE
    else:
        marked = EMPTY_ENDS
        genus = cycles + omega_genus
        if not is_empty(pi.nonplanar_ends):
            return Symbolic(f"nonplanar ends {pi.nonplanar_ends} without accumulating genus")

    logger.debug(f"classified {spec.name} over {g.kind}: genus {genus}, ends {ends}")
    return SurfaceType(genus, boundary, union(marked, omega_marked), union(ends, omega_ends))
