"""Distinguished surfaces, complement invariants and the families C(Π), B, B∞."""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, FrozenSet, Iterable, Optional, Tuple, Union

from groups.errors import SurfaceSpecError
from schreier.graphs import INFINITE, Node, breadth_first
from surfaces.ends import INCOMPARABLE, Comparison, Incomparable, cardinality, is_countable, planar_count
from surfaces.schreier_surface import SchreierSurfaceSpec, classify
from surfaces.surface_type import PiSpec, SurfaceType, Symbolic, is_infinite_type

if TYPE_CHECKING:
    from actions.support import SupportRegion

logger = logging.getLogger(__name__)

Count = Union[int, float]


def distinguished_conditions(pi: PiSpec) -> FrozenSet[int]:
    """Which of the three distinguishing conditions Π satisfies.

    1: finite genus.  2: finitely many ends, all planar.  3: finitely many
    ends, all nonplanar.
    """
    held = set()
    if pi.genus != INFINITE:
        held.add(1)
    total = cardinality(pi.ends)
    marked = cardinality(pi.nonplanar_ends)
    if not isinstance(total, Incomparable) and total != INFINITE:
        if marked == 0:
            held.add(2)
        if marked == total:
            held.add(3)
    return frozenset(held)


def canonical_omission(spec: SchreierSurfaceSpec, m: int) -> Tuple[Node, ...]:
    """The first m vertices in breadth-first order from the basepoint."""
    if m < 0:
        raise SurfaceSpecError(f"omission count must be >= 0, got {m}")
    g = spec.graph
    if m == 0:
        return ()
    if g.is_finite:
        vertices = g.vertices()
        if m > len(vertices):
            raise SurfaceSpecError(f"cannot omit {m} copies from a graph with {len(vertices)} vertices")
        return tuple(vertices[:m])
    radius = 1
    while True:
        found = list(breadth_first(g, g.basepoint, radius))
        if len(found) >= m:
            return tuple(found[:m])
        radius += 1


@dataclass(frozen=True)
class ComplementRecord:
    """Genus and end counts of the complement of the multipush supports."""

    genus: Count
    planar_ends: Union[Count, Incomparable]
    nonplanar_ends: Union[Count, Incomparable]
    omitted: int

    def fields(self):
        return (("genus", self.genus), ("planar_ends", self.planar_ends), ("nonplanar_ends", self.nonplanar_ends))

    def finite_fields(self):
        return tuple(
            (name, value) for name, value in self.fields()
            if not isinstance(value, Incomparable) and value != INFINITE
        )

    def __str__(self) -> str:
        parts = ", ".join(
            f"{name}={'inf' if value == INFINITE else value}" for name, value in self.fields()
        )
        return f"complement({parts}; omitted={self.omitted})"


def _times(k: int, value: Union[Count, Incomparable]) -> Union[Count, Incomparable]:
    if isinstance(value, Incomparable):
        return value
    if k == 0:
        return 0
    return value * k


def _plus(a, b):
    if isinstance(a, Incomparable):
        return a
    if isinstance(b, Incomparable):
        return b
    return a + b


def complement_invariant(
    spec: SchreierSurfaceSpec,
    omission: Union[int, Iterable[Node]],
    support: Optional["SupportRegion"] = None,
) -> Union[ComplementRecord, Incomparable]:
    """Invariant of S minus the supports of the multipushes.

    The complement consists of the omitted Π copies and the Ω surfaces;
    omitted copies whose Π cell lies in the `support` region do not count.
    Returns Incomparable when Π is not distinguished or no field is finite.
    """
    pi = spec.pi
    if not distinguished_conditions(pi):
        return Incomparable(f"{pi.name} is not distinguished")

    nodes = canonical_omission(spec, omission) if isinstance(omission, int) else tuple(omission)
    inside = support.pi_nodes if support is not None else frozenset()
    kept = [v for v in dict.fromkeys(nodes) if v not in inside]
    m = len(kept)

    pi_planar = planar_count(pi.ends, pi.nonplanar_ends)
    pi_marked = cardinality(pi.nonplanar_ends)
    genus: Count = _times(m, pi.genus)
    planar = _times(m, pi_planar)
    marked = _times(m, pi_marked)
    for _, omega in spec.omega_items:
        genus = _plus(genus, omega.genus)
        planar = _plus(planar, planar_count(omega.ends, omega.nonplanar_ends))
        marked = _plus(marked, cardinality(omega.nonplanar_ends))

    record = ComplementRecord(genus, planar, marked, m)
    if not record.finite_fields():
        return Incomparable(f"no finite field in {record}")
    logger.debug(f"{spec.name}: {record}")
    return record


def distinguishes(a: ComplementRecord, b: ComplementRecord) -> Optional[str]:
    """Name of a field finite in both records where they differ, if any."""
    for (name, x), (_, y) in zip(a.fields(), b.fields()):
        if isinstance(x, Incomparable) or isinstance(y, Incomparable):
            continue
        if x == INFINITE or y == INFINITE:
            continue
        if x != y:
            return name
    return None


@dataclass(frozen=True)
class FamilyFlags:
    in_c: Comparison
    in_b: Comparison
    in_b_infinity: Comparison


def _in_c(pi: PiSpec, record: Union[ComplementRecord, Incomparable]) -> Comparison:
    if isinstance(record, Incomparable):
        return record
    held = distinguished_conditions(pi)
    fields = {1: record.genus, 2: record.planar_ends, 3: record.nonplanar_ends}
    undecided = None
    for condition in sorted(held):
        value = fields[condition]
        if isinstance(value, Incomparable):
            undecided = value
            continue
        if value != INFINITE:
            return True
    return undecided if undecided is not None else False


def family_membership(
    pi: PiSpec,
    ambient: SchreierSurfaceSpec,
    domain: Union[int, Iterable[Node]] = 0,
) -> FamilyFlags:
    """Evaluate membership in C(Π), B and B∞ inside the descriptor algebra.

    `domain` is the omission defining the multipush domain.  The B-family
    compatibility is checked by comparing the complements for 0 and 1
    omitted copies; both vary linearly in the omission count.
    """
    record = complement_invariant(ambient, domain)
    in_c = _in_c(pi, record)

    bare = classify(ambient.without_omegas())
    if isinstance(bare, Symbolic):
        in_b: Comparison = Incomparable(bare.reason)
    else:
        in_b = _in_b(pi, ambient, bare)

    if isinstance(in_b, Incomparable) or in_b is False:
        in_b_infinity = in_b
    else:
        in_b_infinity = is_infinite_type(pi.surface)
    return FamilyFlags(in_c, in_b, in_b_infinity)


def _in_b(pi: PiSpec, ambient: SchreierSurfaceSpec, bare: SurfaceType) -> Comparison:
    infinite = is_infinite_type(bare)
    countable = is_countable(pi.ends)
    for verdict in (infinite, countable):
        if isinstance(verdict, Incomparable):
            return verdict
        if verdict is False:
            return False
    first = complement_invariant(ambient, 0)
    second = complement_invariant(ambient, 1)
    if isinstance(first, Incomparable) or isinstance(second, Incomparable):
        return INCOMPARABLE
    return distinguishes(first, second) is not None
