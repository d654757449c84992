"""Resolve the names of a spec document into oracles, graphs, surfaces and subgroup handles."""

import logging
from pathlib import Path
from typing import Callable, Dict, Hashable, Optional, Set, Tuple, Union

from groups.errors import SpecReferenceError
from groups.oracles import (
    BS1nOracle,
    CyclicOracle,
    DirectProductOracle,
    FreeAbelianOracle,
    FreeOracle,
    GroupOracle,
    OpaqueOracle,
    RaagOracle,
)
from groups.presentations import Presentation
from groups.raag import raag_graph
from groups.weights import WeightMap
from groups.words import parse_word
from schreier.graphs import CATALOG, CayleyGraph, ExplicitGraph, GraphSpec, KernelCosetGraph, Node, cycle_graph
from surfaces.ends import INFINITE, parse_ends
from surfaces.invariants import canonical_omission
from surfaces.schreier_surface import SchreierSurfaceSpec
from surfaces.surface_type import SURFACE_CATALOG, PiSpec, SurfaceType

from actions.multipush import PushSystem
from constructions.bs import BSHandle
from constructions.free import embed_free
from constructions.handles import MultipushHandle, PushHandle, SubgroupHandle
from constructions.indicable import embed_indicable
from constructions.star import embed_star, raag_family
from constructions.wreath import embed_wreath
from models.document import SpecDocument
from models.entries import (
    BSGroupEntry,
    CatalogGraphEntry,
    CayleyGraphEntry,
    ClaimedRaagEntry,
    CycleGraphEntry,
    CyclicGroupEntry,
    ExplicitGraphEntry,
    FreeAbelianGroupEntry,
    FreeGroupEntry,
    KernelCosetGraphEntry,
    NodeLabel,
    OpaqueGroupEntry,
    ProductGroupEntry,
    RaagGroupEntry,
    SurfaceEntry,
)
from models.systems import (
    BSSystemEntry,
    CertifyQuery,
    ClassifyQuery,
    EvalQuery,
    ExplicitPushSystemEntry,
    FreeSystemEntry,
    IndicableSystemEntry,
    ProbeQuery,
    StarSystemEntry,
    WreathSystemEntry,
)

logger = logging.getLogger(__name__)


def surface_type(entry: SurfaceEntry) -> SurfaceType:
    """The quadruple of a surface entry; catalogued surfaces may override their boundary."""
    if entry.catalog is not None:
        make = SURFACE_CATALOG.get(entry.catalog)
        if make is None:
            raise SpecReferenceError(f"unknown catalogued surface {entry.catalog!r}")
        surface = make()
        return surface if entry.boundary is None else surface.with_boundary(entry.boundary)
    genus = INFINITE if entry.genus == "inf" else (entry.genus or 0)
    return SurfaceType(
        genus,
        entry.boundary or 0,
        parse_ends(entry.nonplanar_ends or "empty"),
        parse_ends(entry.ends or "empty"),
    )


def node_label(label: NodeLabel) -> Hashable:
    return tuple(label) if isinstance(label, list) else label


class SpecBuilder:
    """Lazily builds and caches the runtime object behind every name of a document."""

    def __init__(self, document: SpecDocument, window: Optional[int] = None):
        self.document = document
        self.window = window
        self._cache: Dict[Tuple[str, str], object] = {}
        self._resolving: Set[Tuple[str, str]] = set()

    @classmethod
    def load(cls, path: Union[str, Path], window: Optional[int] = None) -> "SpecBuilder":
        return cls(SpecDocument.load(path), window)

    def _resolve(self, section: str, name: str, build: Callable[[str, object], object]) -> object:
        key = (section, name)
        if key in self._cache:
            return self._cache[key]
        table = getattr(self.document, section)
        if name not in table:
            raise SpecReferenceError(f"{section} has no entry named {name!r}")
        if key in self._resolving:
            raise SpecReferenceError(f"{section} entry {name!r} refers to itself")
        self._resolving.add(key)
        try:
            value = build(name, table[name])
        finally:
            self._resolving.discard(key)
        self._cache[key] = value
        return value

    # Groups

    def oracle(self, name: str) -> GroupOracle:
        return self._resolve("groups", name, self._build_oracle)

    def _build_oracle(self, name: str, entry) -> GroupOracle:
        if isinstance(entry, FreeGroupEntry):
            return FreeOracle(entry.generators)
        if isinstance(entry, FreeAbelianGroupEntry):
            return FreeAbelianOracle(entry.generators)
        if isinstance(entry, CyclicGroupEntry):
            return CyclicOracle(entry.generator, entry.order)
        if isinstance(entry, BSGroupEntry):
            return BS1nOracle(entry.n, entry.a, entry.t)
        if isinstance(entry, RaagGroupEntry):
            return RaagOracle(raag_graph(entry.vertices, entry.edges))
        if isinstance(entry, ClaimedRaagEntry):
            return raag_family(entry.family, entry.m, entry.n).claimed_oracle()
        if isinstance(entry, ProductGroupEntry):
            return DirectProductOracle([self.oracle(component) for component in entry.components])
        if isinstance(entry, OpaqueGroupEntry):
            table = {(x, y): z for x, y, z in entry.table}
            return OpaqueOracle(entry.elements, entry.identity, entry.generators, table)
        raise SpecReferenceError(f"group {name!r} has an unknown kind")

    def presentation(self, name: str) -> Optional[Presentation]:
        """The declared relators of a group, or None to use the oracle's own presentation."""
        entry = self.document.groups.get(name)
        if entry is None:
            raise SpecReferenceError(f"groups has no entry named {name!r}")
        if entry.relators is None:
            return None
        alphabet = self.oracle(name).generators
        return Presentation(alphabet, tuple(parse_word(r, alphabet) for r in entry.relators))

    # Graphs and surfaces

    def graph(self, name: str) -> GraphSpec:
        return self._resolve("graphs", name, self._build_graph)

    def _build_graph(self, name: str, entry) -> GraphSpec:
        if isinstance(entry, CayleyGraphEntry):
            return CayleyGraph(self.oracle(entry.group), entry.letters)
        if isinstance(entry, KernelCosetGraphEntry):
            return KernelCosetGraph(self.oracle(entry.group), WeightMap.of(entry.weights), entry.letters)
        if isinstance(entry, CycleGraphEntry):
            return cycle_graph(entry.length, entry.letter)
        if isinstance(entry, ExplicitGraphEntry):
            return ExplicitGraph(entry.vertices, entry.edges, entry.letters)
        if isinstance(entry, CatalogGraphEntry):
            return CATALOG[entry.name]()
        raise SpecReferenceError(f"graph {name!r} has an unknown kind")

    def node(self, graph: GraphSpec, label: NodeLabel) -> Node:
        return graph.node(node_label(label))

    def pi(self, name: str) -> PiSpec:
        return self._resolve("pis", name, lambda key, entry: PiSpec(surface_type(entry), key))

    def surface(self, name: str) -> SchreierSurfaceSpec:
        return self._resolve("surfaces", name, self._build_surface)

    def _build_surface(self, name: str, entry) -> SchreierSurfaceSpec:
        graph = self.graph(entry.graph)
        omegas = {self.node(graph, omega.node): surface_type(omega.surface) for omega in entry.omegas}
        if len(omegas) != len(entry.omegas):
            raise SpecReferenceError(f"surface {name!r} places two omegas on one vertex")
        return SchreierSurfaceSpec.of(graph, self.pi(entry.pi), omegas, name=name)

    # Systems

    def system(self, name: str) -> SubgroupHandle:
        return self._resolve("systems", name, self._build_system)

    def _build_system(self, name: str, entry) -> SubgroupHandle:
        if isinstance(entry, FreeSystemEntry):
            if entry.surface is None:
                return embed_free(self.graph(entry.graph), entry.letters, name=name, window=self.window)
            spec = self.surface(entry.surface)
            letters = tuple(entry.letters) if entry.letters else spec.graph.letters
            omissions = [(letters[0], v) for v in canonical_omission(spec, entry.omit)]
            return embed_free(spec, letters, omissions, name=name, window=self.window)
        if isinstance(entry, IndicableSystemEntry):
            return embed_indicable(
                self.oracle(entry.group),
                WeightMap.of(entry.weights),
                domain=entry.domain,
                omitted=entry.omit,
                period=entry.period,
                presentation=self.presentation(entry.group),
                non_sphere_at=entry.non_sphere_at,
                name=name,
                window=self.window,
            )
        if isinstance(entry, StarSystemEntry):
            graph = self.graph(entry.graph) if entry.graph else None
            if entry.family is not None:
                factors = raag_family(entry.family, entry.m, entry.n).factors
                presentations = None
            else:
                factors = [(self.oracle(f.group), WeightMap.of(f.weights)) for f in entry.factors]
                presentations = [self.presentation(f.group) for f in entry.factors]
            return embed_star(factors, graph, presentations, name=name, window=self.window)
        if isinstance(entry, WreathSystemEntry):
            push = entry.shift
            if entry.push is not None:
                pushed = self.system(entry.push)
                if not isinstance(pushed, (MultipushHandle, PushHandle)):
                    raise SpecReferenceError(f"wreath {name!r}: system {entry.push!r} is not a push system")
                push = pushed.system
            return embed_wreath(self.oracle(entry.lamp), push, name=name, window=self.window)
        if isinstance(entry, BSSystemEntry):
            return BSHandle(entry.n, entry.depth, entry.a, entry.t, name=name, window=self.window)
        if isinstance(entry, ExplicitPushSystemEntry):
            graph = self.graph(entry.graph)
            letters = tuple(entry.letters) if entry.letters else graph.letters
            marked = frozenset(self.node(graph, label) for label in entry.non_sphere)
            return PushHandle(PushSystem(graph, letters, name, marked), name=name, window=self.window)
        raise SpecReferenceError(f"system {name!r} has an unknown kind")

    # Whole document

    def check_queries(self) -> None:
        for query in self.document.queries:
            if isinstance(query, (EvalQuery, ProbeQuery)):
                self.system(query.system)
            if isinstance(query, ProbeQuery):
                self.oracle(query.claimed)
            if isinstance(query, (CertifyQuery, ClassifyQuery)):
                self.surface(query.surface)

    def build_all(self) -> "SpecBuilder":
        """Resolve every entry and every query reference; the first failure raises."""
        for name in self.document.groups:
            self.oracle(name)
        for name in self.document.graphs:
            self.graph(name)
        for name in self.document.pis:
            self.pi(name)
        for name in self.document.surfaces:
            self.surface(name)
        for name in self.document.systems:
            self.system(name)
        self.check_queries()
        logger.debug(f"spec document resolved: {len(self._cache)} entries")
        return self
