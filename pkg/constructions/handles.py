"""Subgroup handles: an embedded group together with its word problem solver."""

import logging
from abc import ABC, abstractmethod
from typing import Dict, Optional, Tuple

from config import get_settings
from groups.syllables import syllable_decompose
from groups.weights import exponent_sum
from groups.words import Word, free_reduce, parse_word

from actions.diagonal import DiagonalSystem, NormalizedDiagonal, bar, diagonal_is_trivial, diagonal_normalize, push_power
from actions.multipush import MultipushSystem, PushSystem, first_moved, multipush_is_trivial
from actions.verdicts import Verdict

logger = logging.getLogger(__name__)


class SubgroupHandle(ABC):
    """Abstract base class for every embedding construction."""

    def __init__(self, name: str, window: Optional[int] = None):
        self.name = name
        self.window = window

    @property
    @abstractmethod
    def kind(self) -> str:
        """Kind tag used in spec documents."""
        pass

    @property
    @abstractmethod
    def alphabet(self) -> Tuple[str, ...]:
        """Generators accepted by `solve`."""
        pass

    @abstractmethod
    def solve(self, w: Word) -> Verdict:
        """Decide whether w is trivial in the embedded group."""
        pass

    def parse(self, text: str) -> Word:
        return parse_word(text, self.alphabet)

    def solve_text(self, text: str) -> Verdict:
        return self.solve(self.parse(text))

    def describe(self) -> Dict[str, object]:
        return {"name": self.name, "kind": self.kind, "alphabet": list(self.alphabet)}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name!r})"


class MultipushHandle(SubgroupHandle):
    """The free group generated by the multipushes x_s."""

    def __init__(self, system: MultipushSystem, name: str = "free", window: Optional[int] = None):
        super().__init__(name, window)
        self.system = system

    @property
    def kind(self) -> str:
        return "free"

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self.system.letters

    @property
    def rank(self) -> int:
        return len(self.system.letters)

    def solve(self, w: Word) -> Verdict:
        return multipush_is_trivial(self.system, w, self.window)


class PushHandle(SubgroupHandle):
    """Pushes with no freeness theorem: a moved copy decides, anything else stays open."""

    def __init__(self, system: PushSystem, name: str = "push", window: Optional[int] = None):
        super().__init__(name, window)
        self.system = system

    @property
    def kind(self) -> str:
        return "explicit-push"

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self.system.letters

    def solve(self, w: Word) -> Verdict:
        window = self.window if self.window is not None else get_settings().window_radius
        self.system.check(w)
        reduced = free_reduce(w)
        if not reduced:
            return Verdict.trivial(window)
        moved = first_moved(self.system, reduced, window)
        if moved is not None:
            return Verdict.nontrivial(f"moves {moved[0]} -> {moved[1]}", window)
        return Verdict.unknown("no copy moves in the window", window)


class DiagonalHandle(SubgroupHandle):
    """Groups embedded through bar elements times multipushes."""

    def __init__(self, system: DiagonalSystem, name: str, window: Optional[int] = None):
        super().__init__(name, window)
        self.system = system

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self.system.original_alphabet

    @property
    def augmented_alphabet(self) -> Tuple[str, ...]:
        return self.system.augmented_alphabet

    def solve(self, w: Word) -> Verdict:
        return diagonal_is_trivial(self.system, w, self.window)

    def normalize(self, w: Word) -> NormalizedDiagonal:
        return diagonal_normalize(self.system, w)

    def original_partition(self) -> Dict[str, int]:
        return {name: self.system.factor_of(name).index for name in self.alphabet}

    def syllable_weights(self, w: Word) -> Tuple[int, ...]:
        """f_i of each maximal single-factor block of w, over the original generators."""
        blocks = syllable_decompose(w, self.original_partition())
        return tuple(exponent_sum(block, self.system.factors[i].zero_sum.weights) for i, block in blocks)

    def psi_form(self, generator: str) -> NormalizedDiagonal:
        """ḡ · h^f(g) for an original generator g."""
        factor = self.system.factor_of(generator)
        g = Word.gen(generator)
        return self.system.multiply(bar(self.system, g), push_power(self.system, factor.index, factor.weights[generator]))

    def psi_agreement(self) -> Dict[str, bool]:
        """Per generator: does the embedding send g to ḡ · h^f(g)?"""
        return {g: self.psi_form(g) == self.normalize(Word.gen(g)) for g in self.alphabet}

    def parse(self, text: str) -> Word:
        """Words over the original generators or the augmented ones (base letters and pushes)."""
        return parse_word(text, self.alphabet + self.augmented_alphabet)
