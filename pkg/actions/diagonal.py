"""Diagonal systems: bar elements acting on every copy of Π, times multipushes.

Each factor G_i is rewritten so every generator has weight 1, and an
augmented generator t of factor i maps to t̄·x_{s_i}, where s_i is the i-th
letter of the graph.  Bar elements commute with the multipushes and bars of
different factors commute, so an image is a pair: a reduced word over the
push letters and one oracle normal form per factor.
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from groups.errors import ShiftforgeError, UnknownGeneratorError
from groups.oracles import FreeOracle, GroupOracle, default_names
from groups.presentations import Presentation, ZeroSumResult, zero_sum_presentation
from groups.syllables import project_to_factor
from groups.weights import WeightMap
from groups.words import EMPTY, Word, format_word, free_reduce
from schreier.graphs import CayleyGraph, GraphSpec

from actions.multipush import MultipushSystem, multipush_is_trivial
from actions.verdicts import Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DiagonalFactor:
    index: int
    oracle: GroupOracle
    zero_sum: ZeroSumResult
    push_letter: str

    @property
    def augmented(self) -> Tuple[str, ...]:
        return self.zero_sum.presentation.alphabet

    @property
    def original(self) -> Tuple[str, ...]:
        return self.zero_sum.source.alphabet

    @property
    def weights(self) -> WeightMap:
        return self.zero_sum.weights


@dataclass(frozen=True)
class NormalizedDiagonal:
    """Collected push word and per-factor normal forms (identity normalizes to the empty word)."""

    x_word: Word
    per_factor: Tuple[Word, ...]

    @property
    def is_trivial(self) -> bool:
        return not self.x_word and not any(self.per_factor)

    def __str__(self) -> str:
        factors = ", ".join(format_word(g) for g in self.per_factor)
        return f"x={format_word(self.x_word)}; factors=({factors})"


class DiagonalSystem:
    """Factors with zero-sum rewrites and the multipush system carrying their pushes."""

    def __init__(self, factors: Sequence[DiagonalFactor], multipush: MultipushSystem):
        self.factors = tuple(factors)
        self.multipush = multipush
        self._partition: Dict[str, int] = {}
        self._original: Dict[str, int] = {}
        for factor in self.factors:
            if factor.push_letter not in multipush.letters:
                raise UnknownGeneratorError(factor.push_letter, "diagonal push letters")
            for name in factor.augmented:
                if name in self._partition:
                    raise ShiftforgeError(f"generator {name!r} appears in two factors")
                self._partition[name] = factor.index
        for factor in self.factors:
            for name in factor.original:
                if name in self._original or (name in self._partition and self._partition[name] != factor.index):
                    raise ShiftforgeError(f"generator {name!r} appears in two factors")
                self._original[name] = factor.index

    @property
    def augmented_alphabet(self) -> Tuple[str, ...]:
        return tuple(self._partition)

    @property
    def original_alphabet(self) -> Tuple[str, ...]:
        return tuple(self._original)

    @property
    def partition(self) -> Dict[str, int]:
        return dict(self._partition)

    def factor_of(self, name: str) -> DiagonalFactor:
        if name in self._partition:
            return self.factors[self._partition[name]]
        if name in self._original:
            return self.factors[self._original[name]]
        raise UnknownGeneratorError(name, "diagonal system")

    def to_augmented(self, w: Word) -> Word:
        """Rewrite original generators through the zero-sum dictionaries; augmented letters pass through."""
        parts = []
        for name, sign in w.letters:
            if name in self._partition:
                parts.append(Word(((name, sign),)))
                continue
            factor = self.factor_of(name)
            image = factor.zero_sum.to_new[name]
            parts.append(image if sign > 0 else image.inverse())
        return Word.concat(parts)

    def push_word(self, w: Word) -> Word:
        """The collected push word of an augmented word, before reduction."""
        return Word(tuple((self.factors[self._partition[name]].push_letter, sign) for name, sign in w.letters))

    def multiply(self, x: NormalizedDiagonal, y: NormalizedDiagonal) -> NormalizedDiagonal:
        return NormalizedDiagonal(
            free_reduce(x.x_word * y.x_word),
            tuple(f.oracle.multiply(g, h) for f, g, h in zip(self.factors, x.per_factor, y.per_factor)),
        )


def diagonal_system(
    factors: Sequence[Tuple[GroupOracle, WeightMap]],
    graph: Optional[GraphSpec] = None,
    presentations: Optional[Sequence[Optional[Presentation]]] = None,
    name: str = "diagonal",
    multipush: Optional[MultipushSystem] = None,
) -> DiagonalSystem:
    """Build the system over `graph` (default: Cayley graph of the free group of rank n).

    A prepared `multipush` system (with omissions or non-sphere copies) takes
    the place of `graph`; factor i pushes along its i-th letter.
    """
    if not factors:
        raise ShiftforgeError("a diagonal system needs at least one factor")
    if multipush is not None:
        graph = multipush.graph
    elif graph is None:
        graph = CayleyGraph(FreeOracle(default_names(len(factors))))
    letters = multipush.letters if multipush is not None else graph.letters
    if len(letters) < len(factors):
        raise ShiftforgeError(f"{len(factors)} factors need {len(factors)} push letters, got {letters}")
    built = []
    for i, (oracle, weights) in enumerate(factors):
        given = presentations[i] if presentations is not None and i < len(presentations) else None
        presentation = given if given is not None else oracle.presentation()
        built.append(DiagonalFactor(i, oracle, zero_sum_presentation(presentation, weights), letters[i]))
    if multipush is None:
        multipush = MultipushSystem(graph, tuple(letters[: len(factors)]), name=name)
    return DiagonalSystem(built, multipush)


def diagonal_normalize(sys: DiagonalSystem, w: Word) -> NormalizedDiagonal:
    """Canonical image of w: reduced push word and each factor's oracle normal form."""
    augmented = sys.to_augmented(w)
    partition = sys.partition
    per_factor = []
    for factor in sys.factors:
        projection = project_to_factor(augmented, factor.index, partition)
        underlying = factor.zero_sum.underlying(projection)
        per_factor.append(factor.oracle.normalize(underlying))
    return NormalizedDiagonal(free_reduce(sys.push_word(augmented)), tuple(per_factor))


def diagonal_is_trivial(sys: DiagonalSystem, w: Word, window: Optional[int] = None) -> Verdict:
    """Trivial exactly when the push word is trivial and every factor projection is."""
    image = diagonal_normalize(sys, w)
    pushed = multipush_is_trivial(sys.multipush, image.x_word, window)
    if not pushed.is_trivial:
        return pushed
    for factor, g in zip(sys.factors, image.per_factor):
        if g != EMPTY:
            return Verdict.nontrivial(f"factor {factor.index + 1} part {format_word(g)}", pushed.window)
    return Verdict.trivial(pushed.window)


def bar(sys: DiagonalSystem, w: Word) -> NormalizedDiagonal:
    """The bar element of a word over one factor's original generators."""
    names = w.letters_used
    factors = {sys.factor_of(name).index for name in names}
    if len(factors) > 1:
        raise ShiftforgeError(f"{format_word(w)} mixes factors")
    per_factor = [EMPTY] * len(sys.factors)
    for i in factors:
        per_factor[i] = sys.factors[i].oracle.normalize(w)
    return NormalizedDiagonal(EMPTY, tuple(per_factor))


def push_power(sys: DiagonalSystem, factor: int, k: int) -> NormalizedDiagonal:
    """x_{s_i}^k as a diagonal element."""
    return NormalizedDiagonal(
        Word.gen(sys.factors[factor].push_letter, k),
        tuple(EMPTY for _ in sys.factors),
    )
