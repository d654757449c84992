"""Star products (G_1,H_1)⋆...⋆(G_n,H_n) embedded by diagonal systems.

The model solver decides the image group exactly: a word is trivial when
its collected push word reduces to nothing and every factor projection is
trivial.  The star product's own presentation is only a claim, kept next to
the handle so the faithfulness probe can test it.
"""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from config import get_settings
from groups.errors import ShiftforgeError, UnknownGeneratorError
from groups.oracles import FreeOracle, GroupOracle, RaagOracle, default_names
from groups.presentations import Presentation
from groups.raag import raag_graph
from groups.weights import WeightMap
from groups.words import Word, free_reduce
from schreier.graphs import CayleyGraph, GraphSpec
from surfaces.schreier_surface import SchreierSurfaceSpec
from surfaces.surface_type import PiSpec, handle

from actions.diagonal import DiagonalSystem, diagonal_system
from constructions.handles import DiagonalHandle

logger = logging.getLogger(__name__)

Factor = Tuple[GroupOracle, WeightMap]


@dataclass(frozen=True)
class ClaimedPresentation:
    """Factor relators plus commutators of sampled kernel elements of different factors."""

    presentation: Presentation
    kernel_samples: Tuple[Tuple[Word, ...], ...]
    commutators: Tuple[Word, ...]

    @property
    def relators(self) -> Tuple[Word, ...]:
        return self.presentation.relators


class StarHandle(DiagonalHandle):
    def __init__(self, system: DiagonalSystem, claim: ClaimedPresentation, name: str = "star",
                 window: Optional[int] = None):
        super().__init__(system, name, window)
        self.claim = claim

    @property
    def kind(self) -> str:
        return "star"

    def failing_relators(self) -> List[Word]:
        """Claimed relators the model does not send to the identity."""
        return [r for r in self.claim.relators if not self.solve(r).is_trivial]


def kernel_samples(system: DiagonalSystem, index: int, depth: int) -> Tuple[Word, ...]:
    """κ_g = g·u^-f(g) for each generator g, with u^k κ u^-k for 0 < |k| <= depth."""
    factor = system.factors[index]
    base = factor.zero_sum.base
    samples = []
    for g in factor.original:
        kappa = free_reduce(Word.gen(g) * (base ** -factor.weights[g]))
        if not kappa:
            continue
        samples.append(kappa)
        for k in range(1, depth + 1):
            for sign in (1, -1):
                u = base ** (sign * k)
                samples.append(free_reduce(u * kappa * u.inverse()))
    return tuple(dict.fromkeys(samples))


def claimed_presentation(system: DiagonalSystem, depth: Optional[int] = None) -> ClaimedPresentation:
    if depth is None:
        depth = get_settings().kernel_conjugation_depth
    samples = tuple(kernel_samples(system, i, depth) for i in range(len(system.factors)))
    commutators = []
    for i, j in combinations(range(len(samples)), 2):
        for x in samples[i]:
            for y in samples[j]:
                commutators.append(x.commutator(y))
    relators = []
    for factor in system.factors:
        relators.extend(factor.zero_sum.source.relators)
    relators.extend(commutators)
    presentation = Presentation(system.original_alphabet, tuple(relators))
    return ClaimedPresentation(presentation, samples, tuple(commutators))


def embed_star(
    factors: Sequence[Factor],
    graph: Optional[GraphSpec] = None,
    presentations: Optional[Sequence[Optional[Presentation]]] = None,
    name: str = "star",
    window: Optional[int] = None,
) -> StarHandle:
    """Factor i acts diagonally and pushes along the i-th letter of `graph`."""
    if graph is None:
        graph = CayleyGraph(FreeOracle(default_names(len(factors))))
    system = diagonal_system(factors, graph, presentations, name)
    claim = claimed_presentation(system)
    logger.debug(f"star {name}: {len(factors)} factors, {len(claim.relators)} claimed relators")
    return StarHandle(system, claim, name, window)


def star_weight_map(weights: Sequence[WeightMap]) -> WeightMap:
    """f_1 on the first factor and 0 on every other generator."""
    if not weights:
        raise ShiftforgeError("a star product needs at least one factor")
    table = weights[0].as_dict()
    for f in weights[1:]:
        for name in f.alphabet:
            if name in table:
                raise ShiftforgeError(f"generator {name!r} appears in two factors")
            table[name] = 0
    return WeightMap.of(table)


def star_surface(factors: int, pi: Optional[PiSpec] = None, name: str = "star") -> SchreierSurfaceSpec:
    """The Cayley graph of F_n decorated by Π: the factor surfaces glued along n-1 capped boundaries."""
    if factors < 1:
        raise ShiftforgeError(f"a star product needs at least one factor, got {factors}")
    return SchreierSurfaceSpec.of(CayleyGraph(FreeOracle(default_names(factors))), pi or handle(), name=name)


# Right-angled Artin groups


def cone(apex: str, delta: nx.Graph) -> nx.Graph:
    """Δ with one more vertex joined to all of it: the graph of Z × A_Δ."""
    g = nx.Graph(delta)
    g.add_node(apex)
    g.add_edges_from((apex, v) for v in delta.nodes)
    return g


def claimed_raag_graph(deltas: Sequence[Tuple[str, nx.Graph]]) -> nx.Graph:
    """Defining graph claimed for (Z×A_Δ1, A_Δ1)⋆...⋆(Z×A_Δn, A_Δn).

    Each cone vertex is joined to its own Δ_i, and every vertex of Δ_i is
    joined to every vertex of Δ_j for i != j.
    """
    g = nx.Graph()
    for apex, delta in deltas:
        g = nx.compose(g, cone(apex, delta))
    for (_, left), (_, right) in combinations(deltas, 2):
        g.add_edges_from((u, v) for u in left.nodes for v in right.nodes)
    return g


def _delta(index: int, size: int, complete: bool) -> nx.Graph:
    names = [f"b{index}"] if size == 1 else [f"b{index}_{k}" for k in range(1, size + 1)]
    g = nx.complete_graph(names) if complete else nx.empty_graph(names)
    return nx.Graph(g)


@dataclass(frozen=True)
class StarFamily:
    kind: str
    deltas: Tuple[Tuple[str, nx.Graph], ...]

    @property
    def factors(self) -> List[Factor]:
        result = []
        for apex, delta in self.deltas:
            weights = {apex: 1}
            weights.update({v: 0 for v in delta.nodes})
            result.append((RaagOracle(cone(apex, delta)), WeightMap.of(weights)))
        return result

    def claimed_graph(self) -> nx.Graph:
        return claimed_raag_graph(self.deltas)

    def claimed_oracle(self) -> RaagOracle:
        return RaagOracle(self.claimed_graph())


RAAG_FAMILIES = ("abelian", "free_abelian", "free")


def raag_family(kind: str, m: int = 1, n: int = 1) -> StarFamily:
    """The three RAAG star families.

    abelian: (Z^(m+1), Z^m) ⋆ (Z^(n+1), Z^n).  free_abelian: (Z×F_n, F_n) ⋆ (Z², Z).
    free: (Z×F_m, F_m) ⋆ (Z×F_n, F_n).
    """
    if m < 1 or n < 1:
        raise ShiftforgeError(f"family parameters must be >= 1, got m={m}, n={n}")
    if kind == "abelian":
        deltas = (("a1", _delta(1, m, True)), ("a2", _delta(2, n, True)))
    elif kind == "free_abelian":
        deltas = (("a1", _delta(1, n, False)), ("a2", _delta(2, 1, True)))
    elif kind == "free":
        deltas = (("a1", _delta(1, m, False)), ("a2", _delta(2, n, False)))
    else:
        raise ShiftforgeError(f"unknown RAAG family {kind!r}; expected one of {RAAG_FAMILIES}")
    return StarFamily(kind, deltas)


def induced_subgraph_subgroup(g: nx.Graph, vertices: Iterable[str]) -> nx.Graph:
    """The full subgraph on `vertices`, whose RAAG is a subgroup of A_g."""
    chosen = list(dict.fromkeys(vertices))
    for v in chosen:
        if v not in g:
            raise UnknownGeneratorError(v, "RAAG graph")
    return nx.Graph(g.subgraph(chosen))


def nonadjacent_vertices(g: nx.Graph, delta: Iterable[str]) -> List[str]:
    """Vertices outside Δ with no neighbour in Δ, sorted by name."""
    inside = set(delta)
    return sorted(v for v in g.nodes if v not in inside and not inside.intersection(g.neighbors(v)))


def p4_free_product_example() -> Tuple[nx.Graph, nx.Graph]:
    """(Z×A_P4, A_P4) ⋆ (Z²,Z) ⋆ (Z²,Z): its claimed graph and the subgraph on P4 and the far cone vertices.

    The subgraph is P4 plus two isolated vertices, so A_P4 * F_2 sits inside.
    """
    p4 = raag_graph([f"p{k}" for k in range(1, 5)], [(f"p{k}", f"p{k + 1}") for k in range(1, 4)])
    deltas = [("a1", p4), ("a2", _delta(2, 1, True)), ("a3", _delta(3, 1, True))]
    claimed = claimed_raag_graph(deltas)
    chosen = list(p4.nodes) + nonadjacent_vertices(claimed, p4.nodes)
    return claimed, induced_subgraph_subgroup(claimed, chosen)
