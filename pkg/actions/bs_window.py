"""Windowed simulation of the BS(1,n) action on curve slots.

Each copy of Π carries curve slots at levels -d..d; level ℓ has n^ℓ slots
per unit, so the conjugate t^-ℓ a t^ℓ moves the level-ℓ slots by one.  A
copy's state is its position along the shift and the total slot offset τ
it has accumulated, measured in level-0 units.  Letters act rightmost
first: t moves every copy up one position, a shifts the copy sitting at
position p by n^-p.
"""

import logging
import math
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Optional, Tuple

from config import get_settings
from groups.bs import NAdic, bs_normal_form
from groups.errors import UnknownGeneratorError
from groups.words import Word

from actions.verdicts import Status, Verdict

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CopyState:
    position: int
    offset: NAdic

    def __str__(self) -> str:
        return f"@{self.position} shift {self.offset}"


@dataclass(frozen=True)
class BSWindow:
    """States of copies -c..c with levels -d..d, plus the copies that left the levels."""

    n: int
    depth: int
    copies: Dict[int, CopyState]
    overflowed: FrozenSet[int] = field(default_factory=frozenset)

    @classmethod
    def start(cls, n: int, depth: int, copies: int = 1) -> "BSWindow":
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        if depth < 1 or copies < 0:
            raise ValueError(f"need depth >= 1 and copies >= 0, got {depth}, {copies}")
        zero = NAdic.integer(0, n)
        return cls(n, depth, {i: CopyState(i, zero) for i in range(-copies, copies + 1)})

    def level_shift(self, copy: int, level: int) -> NAdic:
        """Slots moved at `level` in the copy that started at `copy`."""
        return self.copies[copy].offset.scaled(level)

    def block_offset(self, copy: int, level: int) -> int:
        """Whole level blocks the copy moved; 0 means its level blocks are preserved."""
        return math.floor(self.level_shift(copy, level).as_fraction())

    def is_identity(self) -> bool:
        return all(s.position == i and s.offset.is_zero() for i, s in self.copies.items())

    def same_states(self, other: "BSWindow") -> bool:
        return self.copies == other.copies


@dataclass(frozen=True)
class BSWindowResult:
    window: BSWindow
    verdict: Verdict


def apply_word(state: BSWindow, w: Word, a: str = "a", t: str = "t") -> BSWindow:
    """Act on a window state, rightmost letter first."""
    n = state.n
    positions = {i: s.position for i, s in state.copies.items()}
    offsets = {i: s.offset for i, s in state.copies.items()}
    overflowed = set(state.overflowed)
    for name, sign in reversed(w.letters):
        if name == t:
            for i in positions:
                positions[i] += sign
        elif name == a:
            for i, p in positions.items():
                if abs(p) > state.depth:
                    overflowed.add(i)
                    continue
                step = NAdic.integer(1, n).scaled(-p)
                offsets[i] = offsets[i] + (step if sign > 0 else -step)
        else:
            raise UnknownGeneratorError(name, f"BS(1,{n})")
        for i, p in positions.items():
            if abs(p) > state.depth:
                overflowed.add(i)
    copies = {i: CopyState(positions[i], offsets[i]) for i in state.copies}
    return BSWindow(n, state.depth, copies, frozenset(overflowed))


def bs_window_action(n: int, w: Word, depth: Optional[int] = None, copies: int = 1,
                     a: str = "a", t: str = "t") -> BSWindowResult:
    """Simulate w on the window; the verdict reads the copy at position 0."""
    if depth is None:
        depth = get_settings().bs_depth
    final = apply_word(BSWindow.start(n, depth, copies), w, a, t)
    home = final.copies[0]
    if 0 in final.overflowed:
        verdict = Verdict.truncated(f"levels beyond {depth}", depth)
    elif home.position == 0 and home.offset.is_zero():
        verdict = Verdict.trivial(depth)
    else:
        verdict = Verdict.nontrivial(f"copy 0 {home}", depth)
    logger.debug(f"BS(1,{n}) window for {w}: {verdict.line()}")
    return BSWindowResult(final, verdict)


def window_matches_normal_form(n: int, w: Word, depth: Optional[int] = None,
                               a: str = "a", t: str = "t") -> Optional[bool]:
    """Compare the copy-0 state with the algebraic normal form (r, e).

    The copy ends at position e carrying r·n^-e.  None when the window overflowed.
    """
    result = bs_window_action(n, w, depth, 0, a, t)
    if result.verdict.status is Status.TRUNCATED:
        return None
    r, e = bs_normal_form(n, w, a, t)
    home = result.window.copies[0]
    return home.position == e and home.offset == r.scaled(-e)


def level_table(state: BSWindow, copy: int = 0) -> Tuple[Tuple[int, NAdic], ...]:
    return tuple((level, state.level_shift(copy, level)) for level in range(-state.depth, state.depth + 1))
