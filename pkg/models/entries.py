"""Spec document entries for groups, graphs and surfaces."""

from typing import Annotated, Dict, List, Literal, Optional, Tuple, Union

from pydantic import Field, model_validator

from models.base import Alphabet, Generator, SpecModel, SpecName

# Groups


class GroupEntry(SpecModel):
    """Common fields: an optional presentation override, relators in word syntax."""

    relators: Optional[List[str]] = None


class FreeGroupEntry(GroupEntry):
    kind: Literal["free"]
    generators: Alphabet


class FreeAbelianGroupEntry(GroupEntry):
    kind: Literal["free_abelian"]
    generators: Alphabet


class CyclicGroupEntry(GroupEntry):
    kind: Literal["cyclic"]
    generator: Generator
    order: int = Field(ge=1)


class BSGroupEntry(GroupEntry):
    kind: Literal["bs1n"]
    n: int = Field(ge=2)
    a: Generator = "a"
    t: Generator = "t"


class RaagGroupEntry(GroupEntry):
    kind: Literal["raag"]
    vertices: Alphabet
    edges: List[Tuple[Generator, Generator]] = []

    @model_validator(mode="after")
    def _edges_use_vertices(self) -> "RaagGroupEntry":
        known = set(self.vertices)
        for u, v in self.edges:
            if u not in known or v not in known:
                raise ValueError(f"edge {u}-{v} uses an undeclared vertex")
        return self


class ClaimedRaagEntry(GroupEntry):
    """The RAAG claimed for one of the catalogued star families."""

    kind: Literal["claimed_raag"]
    family: Literal["abelian", "free_abelian", "free"]
    m: int = Field(default=1, ge=1)
    n: int = Field(default=1, ge=1)


class ProductGroupEntry(GroupEntry):
    kind: Literal["product"]
    components: List[SpecName] = Field(min_length=1)


class OpaqueGroupEntry(GroupEntry):
    """A finite group by its multiplication table, rows as [x, y, x*y]."""

    kind: Literal["opaque"]
    elements: List[str] = Field(min_length=1)
    identity: str
    generators: Dict[Generator, str]
    table: List[Tuple[str, str, str]]


GroupSpec = Annotated[
    Union[
        FreeGroupEntry,
        FreeAbelianGroupEntry,
        CyclicGroupEntry,
        BSGroupEntry,
        RaagGroupEntry,
        ClaimedRaagEntry,
        ProductGroupEntry,
        OpaqueGroupEntry,
    ],
    Field(discriminator="kind"),
]

# Graphs


class CayleyGraphEntry(SpecModel):
    kind: Literal["cayley"]
    group: SpecName
    letters: Optional[Alphabet] = None


class KernelCosetGraphEntry(SpecModel):
    kind: Literal["kernel_coset"]
    group: SpecName
    weights: Dict[Generator, int]
    letters: Optional[Alphabet] = None


class CycleGraphEntry(SpecModel):
    kind: Literal["cycle"]
    length: int = Field(ge=1)
    letter: Generator = "t"


class ExplicitGraphEntry(SpecModel):
    """Finite graph, edges as [u, letter, v]."""

    kind: Literal["explicit"]
    vertices: List[str] = Field(min_length=1)
    edges: List[Tuple[str, Generator, str]]
    letters: Optional[Alphabet] = None


class CatalogGraphEntry(SpecModel):
    kind: Literal["catalog"]
    name: Literal["cross", "tripod", "comb"]


GraphEntry = Annotated[
    Union[CayleyGraphEntry, KernelCosetGraphEntry, CycleGraphEntry, ExplicitGraphEntry, CatalogGraphEntry],
    Field(discriminator="kind"),
]

# Surfaces

NodeLabel = Union[int, str, List[int]]


class SurfaceEntry(SpecModel):
    """A catalogued surface, or a quadruple with end spaces in descriptor syntax."""

    catalog: Optional[str] = None
    genus: Optional[Union[int, Literal["inf"]]] = None
    boundary: Optional[int] = Field(default=None, ge=0)
    nonplanar_ends: Optional[str] = None
    ends: Optional[str] = None

    @model_validator(mode="after")
    def _catalog_or_quadruple(self) -> "SurfaceEntry":
        if self.catalog is not None and any(
            value is not None for value in (self.genus, self.nonplanar_ends, self.ends)
        ):
            raise ValueError("a catalogued surface takes no genus or end spaces, only a boundary override")
        if isinstance(self.genus, int) and self.genus < 0:
            raise ValueError(f"genus must be >= 0, got {self.genus}")
        return self


class OmegaEntry(SpecModel):
    node: NodeLabel
    surface: SurfaceEntry


class SchreierSurfaceEntry(SpecModel):
    graph: SpecName
    pi: SpecName
    omegas: List[OmegaEntry] = []
