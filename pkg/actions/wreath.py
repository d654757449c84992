"""Wreath systems: a lamp group acting on one copy of Π, moved around by pushes.

An element (F, p) applies the push p and then the lamp values F, so that
(F1, p1)(F2, p2) = (F1 · p1_*F2, p1 p2) with (p1_*F2)(p1(λ)) = F2(λ).
Lamp generators act on the copy at the origin.
"""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Dict, Hashable, List, Optional, Tuple, Union

from config import get_settings
from groups.errors import ShiftforgeError, UnknownGeneratorError
from groups.oracles import GroupOracle
from groups.words import EMPTY, Letter, Word, format_word, free_reduce
from schreier.graphs import Node, iter_breadth_first

from actions.multipush import MultipushSystem, PushSystem, coset_action, first_moved, multipush_is_trivial
from actions.verdicts import Verdict

logger = logging.getLogger(__name__)

Position = Hashable
Shift = Union[int, Word]


class PushGroup(ABC):
    """The acting group H with its action on the copy index set Λ."""

    @property
    @abstractmethod
    def letters(self) -> Tuple[str, ...]:
        pass

    @property
    @abstractmethod
    def origin(self) -> Position:
        pass

    @abstractmethod
    def identity(self) -> Shift:
        pass

    @abstractmethod
    def letter(self, letter: Letter) -> Shift:
        pass

    @abstractmethod
    def multiply(self, p: Shift, q: Shift) -> Shift:
        pass

    @abstractmethod
    def act(self, p: Shift, position: Position) -> Position:
        """p(λ)."""
        pass

    @abstractmethod
    def is_trivial(self, p: Shift, window: int) -> Verdict:
        pass

    @abstractmethod
    def neighborhood(self, radius: int) -> List[Position]:
        pass

    def position_key(self, position: Position):
        return str(position)

    def format_shift(self, p: Shift) -> str:
        return format_word(p) if isinstance(p, Word) else str(p)


class IntegerShift(PushGroup):
    """H = Z acting on Λ = Z by translation; the letter moves every copy up by one."""

    def __init__(self, letter: str = "t"):
        self._letter = letter

    @property
    def letters(self) -> Tuple[str, ...]:
        return (self._letter,)

    @property
    def origin(self) -> int:
        return 0

    def identity(self) -> int:
        return 0

    def letter(self, letter: Letter) -> int:
        return letter[1]

    def multiply(self, p: int, q: int) -> int:
        return p + q

    def act(self, p: int, position: int) -> int:
        return position + p

    def is_trivial(self, p: int, window: int) -> Verdict:
        return Verdict.trivial(window) if p == 0 else Verdict.nontrivial(f"shift by {p}", window)

    def neighborhood(self, radius: int) -> List[int]:
        return list(range(-radius, radius + 1))

    def position_key(self, position: int):
        return position


class WordPushGroup(PushGroup):
    """H generated by the pushes of a push system, acting on graph nodes.

    For a multipush system the group is free and words are decided exactly;
    for any other push system a coset-fixing reduced word stays UNKNOWN.
    """

    def __init__(self, system: PushSystem):
        self.system = system

    @property
    def letters(self) -> Tuple[str, ...]:
        return self.system.letters

    @property
    def origin(self) -> Node:
        return self.system.graph.basepoint

    def identity(self) -> Word:
        return EMPTY

    def letter(self, letter: Letter) -> Word:
        return Word((letter,))

    def multiply(self, p: Word, q: Word) -> Word:
        return free_reduce(p * q)

    def act(self, p: Word, position: Node) -> Node:
        return coset_action(self.system, p, position)

    def is_trivial(self, p: Word, window: int) -> Verdict:
        if isinstance(self.system, MultipushSystem):
            return multipush_is_trivial(self.system, p, window)
        if not free_reduce(p):
            return Verdict.trivial(window)
        moved = first_moved(self.system, p, window)
        if moved is not None:
            return Verdict.nontrivial(f"moves {moved[0]} -> {moved[1]}", window)
        return Verdict.unknown(f"push {format_word(p)} fixes every copy in the window", window)

    def neighborhood(self, radius: int) -> List[Node]:
        return [v for v, _ in iter_breadth_first(self.system.graph, self.origin, radius)]


@dataclass(frozen=True)
class WreathElement:
    """Finitely supported lamp values (normal forms, sorted by position) and a push."""

    support: Tuple[Tuple[Position, Word], ...]
    shift: Shift

    def lamps(self) -> Dict[Position, Word]:
        return dict(self.support)

    @property
    def positions(self) -> Tuple[Position, ...]:
        return tuple(p for p, _ in self.support)

    def __str__(self) -> str:
        lamps = ", ".join(f"{p}:{format_word(g)}" for p, g in self.support) or "-"
        shift = format_word(self.shift) if isinstance(self.shift, Word) else str(self.shift)
        return f"lamps[{lamps}] shift[{shift}]"


class WreathSystem:
    def __init__(self, lamp: GroupOracle, push: PushGroup, name: str = "wreath"):
        overlap = set(lamp.generators) & set(push.letters)
        if overlap:
            raise ShiftforgeError(f"lamp and push letters overlap: {sorted(overlap)}")
        self.lamp = lamp
        self.push = push
        self.name = name

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tuple(self.lamp.generators) + tuple(self.push.letters)

    def identity(self) -> WreathElement:
        return WreathElement((), self.push.identity())

    def _element(self, lamps: Dict[Position, Word], shift: Shift) -> WreathElement:
        kept = [(p, g) for p, g in lamps.items() if g]
        kept.sort(key=lambda item: self.push.position_key(item[0]))
        return WreathElement(tuple(kept), shift)

    def generator(self, letter: Letter) -> WreathElement:
        name, sign = letter
        if name in self.lamp.generators:
            value = self.lamp.normalize(Word((letter,)))
            return self._element({self.push.origin: value}, self.push.identity())
        if name in self.push.letters:
            return WreathElement((), self.push.letter(letter))
        raise UnknownGeneratorError(name, f"wreath system {self.name}")

    def multiply(self, x: WreathElement, y: WreathElement) -> WreathElement:
        lamps = x.lamps()
        for position, value in y.support:
            moved = self.push.act(x.shift, position)
            lamps[moved] = self.lamp.multiply(lamps.get(moved, EMPTY), value)
        return self._element(lamps, self.push.multiply(x.shift, y.shift))


def wreath_normalize(sys: WreathSystem, w: Word) -> WreathElement:
    """Canonical (lamps, push) pair of a word over lamp and push letters."""
    result = sys.identity()
    for letter in w.letters:
        result = sys.multiply(result, sys.generator(letter))
    return result


def wreath_is_trivial(sys: WreathSystem, w: Word, window: Optional[int] = None) -> Verdict:
    """Trivial iff no lamp is lit and the push is trivial."""
    if window is None:
        window = get_settings().window_radius
    element = wreath_normalize(sys, w)
    if element.support:
        position, value = element.support[0]
        return Verdict.nontrivial(f"lamp {format_word(value)} at {position}", window)
    return sys.push.is_trivial(element.shift, window)


def lamp_at(sys: WreathSystem, position: int, lamp: Word) -> Word:
    """t^λ · lamp · t^-λ for the integer shift: the lamp placed at copy λ."""
    if not isinstance(sys.push, IntegerShift):
        raise ShiftforgeError("lamp_at needs an integer shift")
    t = sys.push.letters[0]
    return Word.gen(t, position) * lamp * Word.gen(t, -position)


def simulate(sys: WreathSystem, w: Word, radius: int) -> Dict[Position, Tuple[Position, Word]]:
    """Move copies and apply lamps letter by letter, rightmost first.

    Returns, for every position within `radius + |w|` of the origin, where
    its copy ends up and the lamp value it carries.
    """
    positions = sys.push.neighborhood(radius + len(w))
    # where each original copy sits now, and the lamp value it carries
    where: Dict[Position, Position] = {p: p for p in positions}
    carried: Dict[Position, Word] = {p: EMPTY for p in positions}
    for name, sign in reversed(w.letters):
        if name in sys.lamp.generators:
            value = Word(((name, sign),))
            for original, current in where.items():
                if current == sys.push.origin:
                    carried[original] = sys.lamp.multiply(value, carried[original])
        elif name in sys.push.letters:
            step = sys.push.letter((name, sign))
            where = {original: sys.push.act(step, current) for original, current in where.items()}
        else:
            raise UnknownGeneratorError(name, f"wreath system {sys.name}")
    return {original: (where[original], carried[original]) for original in positions}


def brute_force_agrees(sys: WreathSystem, w: Word, radius: int) -> bool:
    """Compare the normal form with the letter-by-letter simulation on a window."""
    element = wreath_normalize(sys, w)
    lamps = element.lamps()
    for original, (current, value) in simulate(sys, w, radius).items():
        if sys.push.act(element.shift, original) != current:
            return False
        if lamps.get(current, EMPTY) != value:
            return False
    return True


def lamplighter(lamp: GroupOracle, letter: str = "t") -> WreathSystem:
    return WreathSystem(lamp, IntegerShift(letter), name=f"{lamp.kind}_wr_Z")

