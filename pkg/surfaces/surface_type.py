"""Classification quadruples and the catalog of named surfaces."""

from dataclasses import dataclass
from enum import Enum
from typing import Union

from groups.errors import SurfaceSpecError
from surfaces.ends import (
    EMPTY_ENDS,
    INCOMPARABLE,
    INFINITE,
    Cantor,
    Comparison,
    EndDescriptor,
    Finite,
    Incomparable,
    OmegaPlusOne,
    accumulate,
    canonical,
    cardinality,
    copies,
    equal,
    is_empty,
    is_opaque,
)

Genus = Union[int, float]


def _genus_text(genus: Genus) -> str:
    return "inf" if genus == INFINITE else str(genus)


@dataclass(frozen=True)
class SurfaceType:
    """(genus, boundary, nonplanar ends, ends) of an orientable surface."""

    genus: Genus
    boundary: int
    nonplanar_ends: EndDescriptor
    ends: EndDescriptor

    def __post_init__(self) -> None:
        if self.genus != INFINITE and (self.genus < 0 or int(self.genus) != self.genus):
            raise SurfaceSpecError(f"genus must be a natural number or infinite, got {self.genus}")
        if self.boundary < 0:
            raise SurfaceSpecError(f"boundary count must be >= 0, got {self.boundary}")
        object.__setattr__(self, "genus", INFINITE if self.genus == INFINITE else int(self.genus))
        object.__setattr__(self, "ends", canonical(self.ends))
        object.__setattr__(self, "nonplanar_ends", canonical(self.nonplanar_ends))
        if is_opaque(self.ends) or is_opaque(self.nonplanar_ends):
            return
        has_nonplanar = not is_empty(self.nonplanar_ends)
        if has_nonplanar != (self.genus == INFINITE):
            raise SurfaceSpecError(
                f"genus {_genus_text(self.genus)} is inconsistent with nonplanar ends {self.nonplanar_ends}"
            )
        marked = cardinality(self.nonplanar_ends)
        total = cardinality(self.ends)
        if marked > total:
            raise SurfaceSpecError(f"nonplanar ends {self.nonplanar_ends} exceed ends {self.ends}")

    @property
    def is_compact(self) -> bool:
        return self.genus != INFINITE and is_empty(self.ends)

    def matches(self, other: "SurfaceType") -> Comparison:
        """Homeomorphism check by the classification theorem, inside the descriptor algebra."""
        if self.genus != other.genus or self.boundary != other.boundary:
            return False
        same_ends = equal(self.ends, other.ends)
        same_marks = equal(self.nonplanar_ends, other.nonplanar_ends)
        for verdict in (same_ends, same_marks):
            if isinstance(verdict, Incomparable):
                return verdict
        return same_ends and same_marks

    def with_boundary(self, boundary: int) -> "SurfaceType":
        return SurfaceType(self.genus, boundary, self.nonplanar_ends, self.ends)

    def __str__(self) -> str:
        return f"({_genus_text(self.genus)}, {self.boundary}, {self.nonplanar_ends}, {self.ends})"


@dataclass(frozen=True)
class PiSpec:
    """The decorating surface: exactly one boundary component and not a disk."""

    surface: SurfaceType
    name: str = "pi"

    def __post_init__(self) -> None:
        if self.surface.boundary != 1:
            raise SurfaceSpecError(f"{self.name} must have exactly one boundary component, got {self.surface.boundary}")
        if self.surface.genus == 0 and is_empty(self.surface.ends):
            raise SurfaceSpecError(f"{self.name} is a disk")

    @property
    def compact(self) -> bool:
        return self.surface.is_compact

    @property
    def genus(self) -> Genus:
        return self.surface.genus

    @property
    def ends(self) -> EndDescriptor:
        return self.surface.ends

    @property
    def nonplanar_ends(self) -> EndDescriptor:
        return self.surface.nonplanar_ends


def is_infinite_type(s: SurfaceType) -> Comparison:
    """Infinite genus or infinitely many ends."""
    if s.genus == INFINITE:
        return True
    total = cardinality(s.ends)
    if isinstance(total, Incomparable):
        return total
    return total == INFINITE


# Catalog


def sphere() -> SurfaceType:
    return SurfaceType(0, 0, EMPTY_ENDS, EMPTY_ENDS)


def closed_surface(genus: int) -> SurfaceType:
    return SurfaceType(genus, 0, EMPTY_ENDS, EMPTY_ENDS)


def one_holed_torus() -> SurfaceType:
    return SurfaceType(1, 1, EMPTY_ENDS, EMPTY_ENDS)


def punctured_sphere(punctures: int) -> SurfaceType:
    return SurfaceType(0, 0, EMPTY_ENDS, Finite(punctures))


def flute(genus: int = 0) -> SurfaceType:
    """Finite genus, planar ends of type omega + 1."""
    return SurfaceType(genus, 0, EMPTY_ENDS, OmegaPlusOne())


def loch_ness_monster() -> SurfaceType:
    return SurfaceType(INFINITE, 0, Finite(1), Finite(1))


def ladder() -> SurfaceType:
    return SurfaceType(INFINITE, 0, Finite(2), Finite(2))


def blooming_cantor_tree() -> SurfaceType:
    return SurfaceType(INFINITE, 0, Cantor(), Cantor())


def cantor_tree() -> SurfaceType:
    """The sphere minus a Cantor set."""
    return SurfaceType(0, 0, EMPTY_ENDS, Cantor())


def handle() -> PiSpec:
    return PiSpec(one_holed_torus(), "handle")


SURFACE_CATALOG = {
    "sphere": sphere,
    "one_holed_torus": one_holed_torus,
    "flute": flute,
    "loch_ness_monster": loch_ness_monster,
    "ladder": ladder,
    "blooming_cantor_tree": blooming_cantor_tree,
    "cantor_tree": cantor_tree,
}


class DomainKind(str, Enum):
    SHIFT = "shift"
    ONE_ENDED_SHIFT = "one_ended_shift"
    FINITE_SHIFT = "finite_shift"


@dataclass(frozen=True)
class Symbolic:
    """A classification the catalog cannot carry out, with the reason."""

    reason: str

    def __str__(self) -> str:
        return f"symbolic({self.reason})"


def push_domain_type(kind: Union[DomainKind, str], pi: PiSpec, period: int = 1) -> Union[SurfaceType, Symbolic]:
    """Interior type of a push domain decorated with copies of pi.

    A shift domain is a bi-infinite strip carrying a copy of pi at every
    integer; a one-ended shift is a strip whose two ends coincide; a finite
    shift is an annulus carrying `period` copies, translated mod `period`.
    """
    kind = DomainKind(kind)
    if kind is DomainKind.FINITE_SHIFT:
        if period < 1:
            raise SurfaceSpecError(f"finite shift needs period >= 1, got {period}")
        genus = pi.genus * period if pi.genus != INFINITE else INFINITE
        return SurfaceType(genus, 2, copies(pi.nonplanar_ends, period), copies(pi.ends, period))

    graph_ends = Finite(2) if kind is DomainKind.SHIFT else Finite(1)
    ends = accumulate(pi.ends, graph_ends)
    if ends is None:
        return Symbolic(f"ends of {kind.value} domain over {pi.ends}")
    if pi.genus == 0:
        if not is_empty(pi.nonplanar_ends):
            return Symbolic(f"nonplanar ends of {kind.value} domain over {pi.nonplanar_ends}")
        return SurfaceType(0, 0, EMPTY_ENDS, ends)
    # genus accumulates onto the strip ends and onto every nonplanar end of a copy
    nonplanar = accumulate(pi.nonplanar_ends, graph_ends)
    if nonplanar is None:
        return Symbolic(f"nonplanar ends of {kind.value} domain over {pi.nonplanar_ends}")
    return SurfaceType(INFINITE, 0, nonplanar, ends)


class ClosureKind(str, Enum):
    FULL = "full"          # the closure of Map_c is all of Map
    PROPER = "proper"      # some mapping class is of intrinsically infinite type


def closure_of_compact_support(s: SurfaceType) -> Union[ClosureKind, Incomparable]:
    """Whether the closure of the compactly supported mapping classes is everything.

    Compact surfaces and the Loch Ness monster give FULL; at least two
    nonplanar ends give PROPER through handle shifts.
    """
    if s.is_compact:
        return ClosureKind.FULL
    marked = cardinality(s.nonplanar_ends)
    if isinstance(marked, Incomparable):
        return marked
    if marked >= 2:
        return ClosureKind.PROPER
    if s.matches(loch_ness_monster().with_boundary(s.boundary)) is True:
        return ClosureKind.FULL
    return INCOMPARABLE
