"""Lazily explorable labeled Schreier graphs.

Vertices are right cosets Hg with an edge Hg -> Hgs for every letter s.
H is trivial (Cayley graphs), the kernel of a weight map, or implicit in an
explicitly listed graph.  Labels are canonical, so two nodes are equal iff
their labels are.
"""

import logging
import math
from abc import ABC, abstractmethod
from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, Hashable, Iterable, Iterator, List, Optional, Sequence, Tuple, Union

import networkx as nx

from groups.errors import ShiftforgeError, UnknownGeneratorError
from groups.oracles import FreeAbelianOracle, FreeOracle, GroupOracle
from groups.weights import WeightMap
from groups.words import EMPTY, Letter, Word, format_word, parse_word

logger = logging.getLogger(__name__)

INFINITE = math.inf


class EndsTag(str, Enum):
    """Catalogued end spaces of graph families."""

    NONE = "none"          # finite graph
    ONE = "one"
    TWO = "two"
    CANTOR = "cantor"
    THREE = "three"        # tripod figure
    FOUR = "four"          # cross on the coordinate axes
    Z_TWO_POINT = "z_two_point"  # comb figure
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Node:
    label: Hashable

    def __str__(self) -> str:
        if isinstance(self.label, Word):
            return format_word(self.label)
        if isinstance(self.label, tuple):
            return "(" + ",".join(str(x) for x in self.label) + ")"
        return str(self.label)


LetterLike = Union[Letter, str]


def as_letter(s: LetterLike) -> Letter:
    if isinstance(s, str):
        return (s, 1)
    return (s[0], s[1])


class GraphSpec(ABC):
    """Abstract base class for all Schreier graph kinds."""

    @property
    @abstractmethod
    def kind(self) -> str:
        """Return the catalog tag of this graph kind."""
        pass

    @property
    @abstractmethod
    def letters(self) -> Tuple[str, ...]:
        """Return the edge alphabet T."""
        pass

    @property
    @abstractmethod
    def basepoint(self) -> Node:
        pass

    @abstractmethod
    def _step(self, label: Hashable, name: str, sign: int) -> Hashable:
        pass

    @property
    def is_finite(self) -> bool:
        return False

    @property
    def ends_tag(self) -> EndsTag:
        return EndsTag.UNKNOWN

    def cycle_rank(self) -> Optional[float]:
        """First Betti number; INFINITE for infinitely many cycles, None if unknown."""
        if self.is_finite:
            return finite_cycle_rank(self)
        return None

    def vertices(self) -> List[Node]:
        """All vertices of a finite graph, in breadth-first order."""
        if not self.is_finite:
            raise ShiftforgeError(f"{self.kind} graph is infinite")
        return list(breadth_first(self, self.basepoint, None))

    def node(self, label: Hashable) -> Node:
        return Node(label)

    def step(self, v: Node, s: LetterLike) -> Node:
        name, sign = as_letter(s)
        if name not in self.letters:
            raise UnknownGeneratorError(name, f"{self.kind} graph")
        return Node(self._step(v.label, name, sign))

    def walk(self, v: Node, w: Word) -> Node:
        """Right multiplication v·w, reading w left to right."""
        for letter in w.letters:
            v = self.step(v, letter)
        return v


def iter_breadth_first(g: GraphSpec, start: Node, radius: Optional[int]) -> Iterator[Tuple[Node, int]]:
    """Lazily yield (node, distance) within `radius` of start, in BFS order."""
    seen = {start: 0}
    queue = deque([start])
    yield start, 0
    while queue:
        v = queue.popleft()
        d = seen[v]
        if radius is not None and d >= radius:
            continue
        for name in g.letters:
            for sign in (1, -1):
                u = g.step(v, (name, sign))
                if u not in seen:
                    seen[u] = d + 1
                    queue.append(u)
                    yield u, d + 1


def breadth_first(g: GraphSpec, start: Node, radius: Optional[int]) -> Dict[Node, int]:
    """Nodes within `radius` of start (all of them when None), in BFS order, with distances."""
    return dict(iter_breadth_first(g, start, radius))


def finite_cycle_rank(g: GraphSpec) -> int:
    multigraph = nx.MultiGraph()
    vertices = list(breadth_first(g, g.basepoint, None))
    multigraph.add_nodes_from(vertices)
    for v in vertices:
        for name in g.letters:
            multigraph.add_edge(v, g.step(v, (name, 1)), key=name)
    return (
        multigraph.number_of_edges()
        - multigraph.number_of_nodes()
        + nx.number_connected_components(multigraph)
    )


class CayleyGraph(GraphSpec):
    """Cayley graph: labels are oracle normal forms."""

    def __init__(self, oracle: GroupOracle, letters: Optional[Sequence[str]] = None):
        self.oracle = oracle
        self._letters = tuple(letters) if letters is not None else oracle.generators
        for name in self._letters:
            if name not in oracle.generators:
                raise UnknownGeneratorError(name, f"{oracle.kind} oracle")

    @property
    def kind(self) -> str:
        return "cayley"

    @property
    def letters(self) -> Tuple[str, ...]:
        return self._letters

    @property
    def basepoint(self) -> Node:
        return Node(EMPTY)

    @property
    def is_finite(self) -> bool:
        return self.oracle.is_finite

    def node(self, label: Hashable) -> Node:
        if isinstance(label, str):
            label = parse_word(label, self.oracle.generators)
        return Node(self.oracle.normalize(label))

    def _step(self, label: Word, name: str, sign: int) -> Word:
        return self.oracle.normalize(label * Word(((name, sign),)))

    @property
    def ends_tag(self) -> EndsTag:
        o = self.oracle
        if o.is_finite:
            return EndsTag.NONE
        generates = set(self._letters) == set(o.generators)
        if isinstance(o, FreeOracle) and generates:
            return {0: EndsTag.NONE, 1: EndsTag.TWO}.get(o.rank, EndsTag.CANTOR)
        if isinstance(o, FreeAbelianOracle) and generates:
            return {0: EndsTag.NONE, 1: EndsTag.TWO}.get(o.rank, EndsTag.ONE)
        return EndsTag.UNKNOWN

    def cycle_rank(self) -> Optional[float]:
        o = self.oracle
        if o.is_finite:
            return finite_cycle_rank(self)
        if set(self._letters) != set(o.generators):
            return None
        if isinstance(o, FreeOracle):
            return 0
        if isinstance(o, FreeAbelianOracle):
            return 0 if o.rank <= 1 else INFINITE
        return None


class KernelCosetGraph(GraphSpec):
    """Schreier graph of ker f; the coset Hg is labeled by f(g)."""

    def __init__(self, oracle: GroupOracle, weights: WeightMap, letters: Optional[Sequence[str]] = None):
        self.oracle = oracle
        self.weights = weights
        self._letters = tuple(letters) if letters is not None else oracle.generators
        for name in self._letters:
            if name not in weights:
                raise UnknownGeneratorError(name, "weight map")

    @property
    def kind(self) -> str:
        return "kernel_cosets"

    @property
    def letters(self) -> Tuple[str, ...]:
        return self._letters

    @property
    def basepoint(self) -> Node:
        return Node(0)

    @property
    def is_finite(self) -> bool:
        return all(self.weights[s] == 0 for s in self._letters)

    def node(self, label: Hashable) -> Node:
        return Node(int(label))

    def _step(self, label: int, name: str, sign: int) -> int:
        return label + sign * self.weights[name]

    @property
    def ends_tag(self) -> EndsTag:
        return EndsTag.NONE if self.is_finite else EndsTag.TWO

    def cycle_rank(self) -> Optional[float]:
        if self.is_finite:
            return len(self._letters)
        moving = [s for s in self._letters if self.weights[s] != 0]
        if len(self._letters) == 1 and len(moving) == 1:
            return 0
        return INFINITE


class ExplicitGraph(GraphSpec):
    """Finite graph listed as (u, letter, v) triples; each letter must act as a permutation."""

    def __init__(self, vertices: Sequence[Hashable], edges: Iterable[Tuple[Hashable, str, Hashable]],
                 letters: Optional[Sequence[str]] = None):
        self._vertices = tuple(vertices)
        if not self._vertices:
            raise ShiftforgeError("explicit graph needs at least one vertex")
        forward: Dict[str, Dict[Hashable, Hashable]] = {}
        backward: Dict[str, Dict[Hashable, Hashable]] = {}
        known = set(self._vertices)
        for u, name, v in edges:
            if u not in known or v not in known:
                raise ShiftforgeError(f"edge {u}-{name}->{v} uses an undeclared vertex")
            if u in forward.setdefault(name, {}) or v in backward.setdefault(name, {}):
                raise ShiftforgeError(f"letter {name} is not a permutation at {u} -> {v}")
            forward[name][u] = v
            backward[name][v] = u
        self._letters = tuple(letters) if letters is not None else tuple(sorted(forward))
        for name in self._letters:
            if len(forward.get(name, {})) != len(self._vertices):
                raise ShiftforgeError(f"letter {name} is not defined on every vertex")
        self._forward = forward
        self._backward = backward

    @property
    def kind(self) -> str:
        return "finite"

    @property
    def letters(self) -> Tuple[str, ...]:
        return self._letters

    @property
    def basepoint(self) -> Node:
        return Node(self._vertices[0])

    @property
    def is_finite(self) -> bool:
        return True

    @property
    def ends_tag(self) -> EndsTag:
        return EndsTag.NONE

    def node(self, label: Hashable) -> Node:
        if label in self._vertices:
            return Node(label)
        for v in self._vertices:
            if str(v) == str(label):
                return Node(v)
        raise ShiftforgeError(f"{label!r} is not a vertex")

    def _step(self, label: Hashable, name: str, sign: int) -> Hashable:
        table = self._forward[name] if sign > 0 else self._backward[name]
        if label not in table:
            raise ShiftforgeError(f"{label!r} is not a vertex")
        return table[label]


def cycle_graph(k: int, letter: str = "t") -> ExplicitGraph:
    """k-cycle labeled by one letter, i -> i+1 mod k."""
    return ExplicitGraph(list(range(k)), [(i, letter, (i + 1) % k) for i in range(k)])


class LazyGraph(GraphSpec):
    """Infinite graph given by a deterministic step function and declared ends."""

    def __init__(self, name: str, letters: Sequence[str], basepoint: Hashable,
                 step_fn: Callable[[Hashable, str, int], Hashable],
                 ends: EndsTag, cycles: Optional[float] = 0,
                 parse_label: Optional[Callable[[object], Hashable]] = None):
        self.name = name
        self._letters = tuple(letters)
        self._basepoint = basepoint
        self._step_fn = step_fn
        self._ends = ends
        self._cycles = cycles
        self._parse_label = parse_label

    @property
    def kind(self) -> str:
        return "lazy"

    @property
    def letters(self) -> Tuple[str, ...]:
        return self._letters

    @property
    def basepoint(self) -> Node:
        return Node(self._basepoint)

    @property
    def ends_tag(self) -> EndsTag:
        return self._ends

    def cycle_rank(self) -> Optional[float]:
        return self._cycles

    def node(self, label: Hashable) -> Node:
        if self._parse_label is not None:
            return Node(self._parse_label(label))
        return Node(label)

    def _step(self, label: Hashable, name: str, sign: int) -> Hashable:
        return self._step_fn(label, name, sign)


def _pair(value) -> Tuple[int, int]:
    x, y = value
    return (int(x), int(y))


def _cross_step(label: Tuple[int, int], name: str, sign: int) -> Tuple[int, int]:
    x, y = label
    if name == "a":
        return (x + sign, 0) if y == 0 else (x, y)
    return (0, y + sign) if x == 0 else (x, y)


def cross_graph() -> LazyGraph:
    """Four-ended tree on the coordinate axes.

    a acts as +(1,0) on the x-axis and b as +(0,1) on the y-axis; off its own
    axis each letter fixes the vertex.  Those fixed points are not edges of
    the underlying tree, so the declared cycle rank is 0.
    """
    return LazyGraph("cross", ("a", "b"), (0, 0), _cross_step, EndsTag.FOUR, 0, _pair)


_TRIPOD_PAIRS = {"a": (0, 1), "b": (1, 2), "c": (2, 0)}


def _tripod_step(label: Tuple[int, int], name: str, sign: int) -> Tuple[int, int]:
    ray, depth = label
    p, q = _TRIPOD_PAIRS[name]
    if depth > 0 and ray not in (p, q):
        return label
    coord = 0 if depth == 0 else (-depth if ray == p else depth)
    coord += sign
    if coord == 0:
        return (0, 0)
    return (p, -coord) if coord < 0 else (q, coord)


def tripod_graph() -> LazyGraph:
    """Three rays joined at a centre; each letter walks through two of them.

    Vertices are (ray, depth) with the centre (0, 0).
    """
    return LazyGraph("tripod", ("a", "b", "c"), (0, 0), _tripod_step, EndsTag.THREE, INFINITE, _pair)


def _comb_step(label: Tuple[int, int], name: str, sign: int) -> Tuple[int, int]:
    i, j = label
    if name == "a":
        return (i + sign, 0) if j == 0 else label
    p = i - (i % 2)
    coord = -j if i == p else j + 1
    coord += sign
    return (p, -coord) if coord <= 0 else (p + 1, coord - 1)


def comb_graph() -> LazyGraph:
    """A line with a ray (tooth) at every integer; ends {-inf} u Z u {+inf}.

    a walks the spine; b walks down tooth 2k and up tooth 2k+1.
    """
    return LazyGraph("comb", ("a", "b"), (0, 0), _comb_step, EndsTag.Z_TWO_POINT, INFINITE, _pair)


CATALOG = {
    "cross": cross_graph,
    "tripod": tripod_graph,
    "comb": comb_graph,
}
