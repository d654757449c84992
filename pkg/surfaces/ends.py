"""A small closed algebra of end spaces.

Terms are finite discrete sets, the one-point compactification of N
(omega + 1), the two-point compactification of Z, the Cantor set, disjoint
unions of those, and opaque tags for graph families whose end space is not
catalogued.  Equality is structural on canonical forms; anything the algebra
cannot decide is reported as ``INCOMPARABLE`` rather than guessed.
"""

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, List, Tuple, Union

import pyparsing as pp

from groups.errors import SurfaceSpecError
from schreier.graphs import EndsTag

INFINITE = math.inf


@dataclass(frozen=True)
class Incomparable:
    """Outcome of a comparison the descriptor algebra cannot decide."""

    reason: str = "outside the end-space catalog"

    def __bool__(self) -> bool:
        raise TypeError("Incomparable has no truth value")

    def __str__(self) -> str:
        return f"incomparable ({self.reason})"


INCOMPARABLE = Incomparable()


@dataclass(frozen=True)
class Finite:
    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise ValueError(f"end count must be >= 0, got {self.count}")

    def __str__(self) -> str:
        return "empty" if self.count == 0 else f"finite({self.count})"


@dataclass(frozen=True)
class OmegaPlusOne:
    """N u {inf}: isolated ends accumulating onto a single end."""

    def __str__(self) -> str:
        return "omega+1"


@dataclass(frozen=True)
class ZTwoPoint:
    """{-inf} u Z u {+inf}."""

    def __str__(self) -> str:
        return "z+2"


@dataclass(frozen=True)
class Cantor:
    def __str__(self) -> str:
        return "cantor"


@dataclass(frozen=True)
class GraphEnds:
    """End space of an uncatalogued graph family, compared by tag only."""

    tag: str

    def __str__(self) -> str:
        return f"graph-ends({self.tag})"


@dataclass(frozen=True)
class DisjointUnion:
    terms: Tuple["EndDescriptor", ...]

    def __str__(self) -> str:
        return " + ".join(str(t) for t in self.terms)


EndDescriptor = Union[Finite, OmegaPlusOne, ZTwoPoint, Cantor, GraphEnds, DisjointUnion]
Comparison = Union[bool, Incomparable]

EMPTY_ENDS = Finite(0)

_TAG_TERMS = {
    EndsTag.NONE: Finite(0),
    EndsTag.ONE: Finite(1),
    EndsTag.TWO: Finite(2),
    EndsTag.THREE: Finite(3),
    EndsTag.FOUR: Finite(4),
    EndsTag.CANTOR: Cantor(),
    EndsTag.Z_TWO_POINT: ZTwoPoint(),
}


def from_tag(tag: EndsTag, family: str = "graph") -> EndDescriptor:
    """Descriptor of a catalogued graph end tag; UNKNOWN becomes an opaque GraphEnds."""
    if tag in _TAG_TERMS:
        return _TAG_TERMS[tag]
    return GraphEnds(family)


def _flatten(terms: Iterable[EndDescriptor]) -> List[EndDescriptor]:
    flat: List[EndDescriptor] = []
    for term in terms:
        if isinstance(term, DisjointUnion):
            flat.extend(_flatten(term.terms))
        else:
            flat.append(term)
    return flat


def union(*terms: EndDescriptor) -> EndDescriptor:
    """Canonical disjoint union.

    Finite sets are absorbed by any term with a limit point of type omega;
    two omega+1 terms make the two-point compactification of Z; the Cantor
    set absorbs another Cantor set.
    """
    flat = _flatten(terms)
    isolated = sum(t.count for t in flat if isinstance(t, Finite))
    limits = sum(1 for t in flat if isinstance(t, OmegaPlusOne)) + 2 * sum(
        1 for t in flat if isinstance(t, ZTwoPoint)
    )
    cantor = any(isinstance(t, Cantor) for t in flat)
    tags = sorted({t.tag for t in flat if isinstance(t, GraphEnds)})

    parts: List[EndDescriptor] = []
    if limits == 0 and isolated:
        parts.append(Finite(isolated))
    if limits == 1:
        parts.append(OmegaPlusOne())
    elif limits == 2:
        parts.append(ZTwoPoint())
    elif limits > 2:
        parts.extend([OmegaPlusOne()] * limits)
    if cantor:
        parts.append(Cantor())
    parts.extend(GraphEnds(tag) for tag in tags)

    if not parts:
        return EMPTY_ENDS
    if len(parts) == 1:
        return parts[0]
    return DisjointUnion(tuple(parts))


def canonical(d: EndDescriptor) -> EndDescriptor:
    return union(d)


def copies(d: EndDescriptor, k: int) -> EndDescriptor:
    """Disjoint union of k copies of d."""
    if k < 0:
        raise ValueError(f"copy count must be >= 0, got {k}")
    return union(*([d] * k)) if k else EMPTY_ENDS


def is_opaque(d: EndDescriptor) -> bool:
    return any(isinstance(t, GraphEnds) for t in _flatten([d]))


def is_empty(d: EndDescriptor) -> bool:
    return canonical(d) == EMPTY_ENDS


def equal(a: EndDescriptor, b: EndDescriptor) -> Comparison:
    """Structural equality; opaque tags only compare with themselves."""
    a, b = canonical(a), canonical(b)
    if is_opaque(a) or is_opaque(b):
        if a == b:
            return True
        return Incomparable(f"cannot compare {a} with {b}")
    return a == b


def cardinality(d: EndDescriptor) -> Union[int, float, Incomparable]:
    """Number of ends: an int, INFINITE, or Incomparable for opaque terms."""
    d = canonical(d)
    if is_opaque(d):
        return Incomparable(f"size of {d} is unknown")
    if isinstance(d, Finite):
        return d.count
    return INFINITE


def is_countable(d: EndDescriptor) -> Comparison:
    d = canonical(d)
    if is_opaque(d):
        return Incomparable(f"countability of {d} is unknown")
    return not any(isinstance(t, Cantor) for t in _flatten([d]))


def planar_count(ends: EndDescriptor, nonplanar: EndDescriptor) -> Union[int, float, Incomparable]:
    """Number of planar ends given all ends and the nonplanar ones."""
    total = cardinality(ends)
    marked = cardinality(nonplanar)
    if isinstance(total, Incomparable) or isinstance(marked, Incomparable):
        return INCOMPARABLE
    if total != INFINITE:
        return total - marked
    if marked != INFINITE:
        return INFINITE
    if canonical(ends) == canonical(nonplanar):
        return 0
    return Incomparable(f"planar part of {ends} minus {nonplanar}")


def accumulate(per_vertex: EndDescriptor, graph_ends: EndDescriptor) -> Union[EndDescriptor, None]:
    """Ends of infinitely many copies of a space accumulating onto graph ends.

    The result includes the graph ends themselves as limit points.  Returns
    None when the algebra cannot name the closure.
    """
    per_vertex, graph_ends = canonical(per_vertex), canonical(graph_ends)
    if is_empty(per_vertex):
        return graph_ends
    if is_opaque(per_vertex) or is_opaque(graph_ends):
        return None
    if isinstance(per_vertex, Cantor):
        # every limit point is a limit of Cantor sets, so nothing is isolated
        return None if graph_ends == EMPTY_ENDS else Cantor()
    if isinstance(per_vertex, Finite) and isinstance(graph_ends, Finite):
        return {1: OmegaPlusOne(), 2: ZTwoPoint()}.get(graph_ends.count)
    return None


def to_text(d: EndDescriptor) -> str:
    return str(canonical(d))


@lru_cache(maxsize=1)
def _ends_grammar():
    count = pp.Word(pp.nums).set_parse_action(lambda t: int(t[0]))
    tag = pp.Regex(r"[A-Za-z0-9_-]+")
    term = (
        pp.Literal("empty").set_parse_action(lambda _: EMPTY_ENDS)
        | (pp.Suppress("finite(") + count + pp.Suppress(")")).set_parse_action(lambda t: Finite(t[0]))
        | pp.Literal("omega+1").set_parse_action(lambda _: OmegaPlusOne())
        | pp.Literal("z+2").set_parse_action(lambda _: ZTwoPoint())
        | pp.Literal("cantor").set_parse_action(lambda _: Cantor())
        | (pp.Suppress("graph-ends(") + tag + pp.Suppress(")")).set_parse_action(lambda t: GraphEnds(t[0]))
    )
    return term + pp.ZeroOrMore(pp.Suppress("+") + term) + pp.StringEnd()


def parse_ends(text: str) -> EndDescriptor:
    """Inverse of to_text: terms such as `finite(2)`, `omega+1` or `cantor` joined by ` + `."""
    try:
        terms = _ends_grammar().parse_string(text.strip(), parse_all=True)
    except pp.ParseBaseException as e:
        raise SurfaceSpecError(f"cannot parse end space {text!r}: {e}") from e
    return union(*terms)
