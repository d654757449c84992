"""Catalog of group oracles with normal-form word problem solvers."""

import logging
from abc import ABC, abstractmethod
from collections import Counter, deque
from itertools import combinations
from typing import Dict, Hashable, Iterable, List, Mapping, Optional, Sequence, Tuple

import networkx as nx

from groups.bs import bs_normal_form, bs_relator, bs_word
from groups.errors import MissingOracleError, ShiftforgeError, UnknownGeneratorError
from groups.presentations import Presentation
from groups.raag import commutation_table, depile, pile
from groups.words import Word, free_reduce, signed_alphabet

logger = logging.getLogger(__name__)


def default_names(rank: int) -> Tuple[str, ...]:
    """a, b, c, ... for small ranks, x1, x2, ... beyond the alphabet."""
    if rank <= 26:
        return tuple("abcdefghijklmnopqrstuvwxyz"[:rank])
    return tuple(f"x{i}" for i in range(1, rank + 1))


class GroupOracle(ABC):
    """Abstract base class for all group oracles."""

    @property
    @abstractmethod
    def kind(self) -> str:
        """Return the catalog tag of this oracle."""
        pass

    @property
    @abstractmethod
    def generators(self) -> Tuple[str, ...]:
        """Return the generator names, in presentation order."""
        pass

    @abstractmethod
    def _normalize(self, w: Word) -> Word:
        pass

    @property
    def is_finite(self) -> bool:
        return False

    def check(self, w: Word) -> None:
        known = set(self.generators)
        for name in w.letters_used:
            if name not in known:
                raise UnknownGeneratorError(name, f"{self.kind} oracle")

    def normalize(self, w: Word) -> Word:
        """Canonical word; the identity's form is the empty word."""
        self.check(w)
        return self._normalize(w)

    def is_trivial(self, w: Word) -> bool:
        return not self.normalize(w)

    def multiply(self, u: Word, v: Word) -> Word:
        return self.normalize(u * v)

    def presentation(self) -> Presentation:
        raise MissingOracleError(f"{self.kind} oracle has no finite presentation")

    def __repr__(self) -> str:
        return f"{type(self).__name__}({', '.join(self.generators)})"


def oracle_is_trivial(o: GroupOracle, w: Word) -> bool:
    return o.is_trivial(w)


def _commutators(pairs: Iterable[Tuple[str, str]]) -> Tuple[Word, ...]:
    return tuple(Word.gen(x).commutator(Word.gen(y)) for x, y in pairs)


class FreeOracle(GroupOracle):
    def __init__(self, generators: Sequence[str]):
        self._generators = tuple(generators)

    @property
    def kind(self) -> str:
        return "free"

    @property
    def generators(self) -> Tuple[str, ...]:
        return self._generators

    @property
    def rank(self) -> int:
        return len(self._generators)

    def _normalize(self, w: Word) -> Word:
        return free_reduce(w)

    def presentation(self) -> Presentation:
        return Presentation(self._generators)


class FreeAbelianOracle(GroupOracle):
    def __init__(self, generators: Sequence[str]):
        self._generators = tuple(generators)

    @property
    def kind(self) -> str:
        return "free_abelian"

    @property
    def generators(self) -> Tuple[str, ...]:
        return self._generators

    @property
    def rank(self) -> int:
        return len(self._generators)

    def exponents(self, w: Word) -> Tuple[int, ...]:
        self.check(w)
        counts = Counter()
        for name, sign in w.letters:
            counts[name] += sign
        return tuple(counts[g] for g in self._generators)

    def _normalize(self, w: Word) -> Word:
        return Word.concat(Word.gen(g, k) for g, k in zip(self._generators, self.exponents(w)))

    def presentation(self) -> Presentation:
        return Presentation(self._generators, _commutators(combinations(self._generators, 2)))


class CyclicOracle(GroupOracle):
    """Z/k on one generator."""

    def __init__(self, generator: str, order: int):
        if order < 1:
            raise ShiftforgeError(f"cyclic order must be >= 1, got {order}")
        self.generator = generator
        self.order = order

    @property
    def kind(self) -> str:
        return "cyclic"

    @property
    def generators(self) -> Tuple[str, ...]:
        return (self.generator,)

    @property
    def is_finite(self) -> bool:
        return True

    def _normalize(self, w: Word) -> Word:
        total = sum(sign for _, sign in w.letters)
        return Word.gen(self.generator, total % self.order)

    def presentation(self) -> Presentation:
        return Presentation(self.generators, (Word.gen(self.generator, self.order),))


class BS1nOracle(GroupOracle):
    """BS(1,n) = <a, t | t a t^-1 a^-n>."""

    def __init__(self, n: int, a: str = "a", t: str = "t"):
        if n < 2:
            raise ShiftforgeError(f"BS(1,n) needs n >= 2, got {n}")
        self.n = n
        self.a = a
        self.t = t

    @property
    def kind(self) -> str:
        return "bs1n"

    @property
    def generators(self) -> Tuple[str, ...]:
        return (self.a, self.t)

    def _normalize(self, w: Word) -> Word:
        return bs_word(self.n, bs_normal_form(self.n, w, self.a, self.t), self.a, self.t)

    def presentation(self) -> Presentation:
        return Presentation(self.generators, (bs_relator(self.n, self.a, self.t),))


class RaagOracle(GroupOracle):
    """Right-angled Artin group of a simple graph."""

    def __init__(self, graph: nx.Graph):
        self.graph = graph
        self._table = commutation_table(graph)

    @property
    def kind(self) -> str:
        return "raag"

    @property
    def generators(self) -> Tuple[str, ...]:
        return self._table.vertices

    def _normalize(self, w: Word) -> Word:
        return depile(self._table, pile(self._table, w))

    def presentation(self) -> Presentation:
        edges = sorted(tuple(sorted((str(u), str(v)))) for u, v in self.graph.edges if u != v)
        return Presentation(self.generators, _commutators(edges))


class DirectProductOracle(GroupOracle):
    """Product of oracles on pairwise disjoint alphabets."""

    def __init__(self, components: Sequence[GroupOracle]):
        seen = set()
        for c in components:
            overlap = seen.intersection(c.generators)
            if overlap:
                raise ShiftforgeError(f"direct product factors share generators {sorted(overlap)}")
            seen.update(c.generators)
        self.components = tuple(components)

    @property
    def kind(self) -> str:
        return "direct_product"

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(g for c in self.components for g in c.generators)

    @property
    def is_finite(self) -> bool:
        return all(c.is_finite for c in self.components)

    def _normalize(self, w: Word) -> Word:
        return Word.concat(c.normalize(w.restrict(c.generators)) for c in self.components)

    def presentation(self) -> Presentation:
        relators: List[Word] = []
        for c in self.components:
            relators.extend(c.presentation().relators)
        for left, right in combinations(self.components, 2):
            relators.extend(_commutators((x, y) for x in left.generators for y in right.generators))
        return Presentation(self.generators, tuple(relators))


class OpaqueOracle(GroupOracle):
    """Finite group given by a multiplication table.

    Normal forms are the shortlex-least words reaching each element; the
    oracle has no presentation, so constructions needing one refuse it.
    """

    def __init__(
        self,
        elements: Sequence[Hashable],
        identity: Hashable,
        generators: Mapping[str, Hashable],
        table: Mapping[Tuple[Hashable, Hashable], Hashable],
    ):
        self.elements = tuple(elements)
        self.identity = identity
        self.generator_values = dict(generators)
        self.table = dict(table)
        if identity not in self.elements:
            raise ShiftforgeError("identity is not one of the elements")
        self._inverse: Dict[Hashable, Hashable] = {}
        for name, g in self.generator_values.items():
            for x in self.elements:
                if (x, g) not in self.table:
                    raise ShiftforgeError(f"multiplication table lacks {x!r}*{g!r} for generator {name}")
            inv = [y for y in self.elements if self.table.get((g, y)) == identity]
            if not inv:
                raise ShiftforgeError(f"generator {name} has no inverse in the table")
            self._inverse[name] = inv[0]
            for x in self.elements:
                if (x, inv[0]) not in self.table:
                    raise ShiftforgeError(f"multiplication table lacks {x!r}*{inv[0]!r}")
        self._forms = self._shortlex_forms()

    @property
    def kind(self) -> str:
        return "opaque"

    @property
    def generators(self) -> Tuple[str, ...]:
        return tuple(sorted(self.generator_values))

    @property
    def is_finite(self) -> bool:
        return True

    def _value(self, letter) -> Hashable:
        name, sign = letter
        return self.generator_values[name] if sign > 0 else self._inverse[name]

    def _shortlex_forms(self) -> Dict[Hashable, Word]:
        forms = {self.identity: Word()}
        queue = deque([self.identity])
        while queue:
            x = queue.popleft()
            for letter in signed_alphabet(self.generators):
                y = self.table[(x, self._value(letter))]
                if y not in forms:
                    forms[y] = forms[x] * Word((letter,))
                    queue.append(y)
        return forms

    def evaluate(self, w: Word) -> Hashable:
        self.check(w)
        x = self.identity
        for letter in w.letters:
            x = self.table[(x, self._value(letter))]
        return x

    def _normalize(self, w: Word) -> Word:
        return self._forms[self.evaluate(w)]


def cayley_table(elements: Sequence[Hashable], multiply) -> Dict[Tuple[Hashable, Hashable], Hashable]:
    """Full multiplication table of a finite group from a product function."""
    return {(x, y): multiply(x, y) for x in elements for y in elements}
