"""Displacement in the covering tree of a multipush system.

The copies of Π lift to the vertices of the Cayley tree of F(T).  A word
with trivial coset action lifts to a deck transformation, left
multiplication v -> w·v.  Measured from the lifted basepoint, a vertex v
at depth |v| is pushed |v^-1 w v| - |v| further out than the basepoint
itself, and this excess grows without bound with the depth.  Right
multiplication moves every vertex exactly |w|.
"""

import logging
from typing import Dict, Iterable, Sequence

from groups.errors import DegenerateSystemError
from groups.words import Word, enumerate_ball, free_reduce

logger = logging.getLogger(__name__)


def _checked(w: Word, depth: int) -> Word:
    reduced = free_reduce(w)
    if not reduced:
        raise DegenerateSystemError("a freely trivial word has no displacement")
    if depth < 0:
        raise ValueError(f"depth must be >= 0, got {depth}")
    return reduced


def deck_distance(w: Word, v: Word) -> int:
    """Tree distance between v and w·v."""
    return len(free_reduce(v.inverse() * w * v))


def lift_displacement(alphabet: Iterable[str], w: Word, depth: int) -> int:
    """Largest deck displacement beyond the basepoint, max |v^-1 w v| - |v| over |v| <= depth.

    At depth 0 this is |w|.  Over two or more letters it is |w| + depth.
    """
    reduced = _checked(w, depth)
    names = sorted(set(alphabet) | set(reduced.letters_used))
    best = max(deck_distance(reduced, v) - len(v) for v in enumerate_ball(names, depth))
    logger.debug(f"lift displacement of {reduced} at depth {depth}: {best}")
    return best


def multipush_displacement(alphabet: Iterable[str], w: Word, depth: int) -> int:
    """Largest right-multiplication displacement |w| over the same ball (constant in depth)."""
    return len(_checked(w, depth))


def displacement_profile(alphabet: Sequence[str], w: Word, depths: Iterable[int]) -> Dict[int, int]:
    return {d: lift_displacement(alphabet, w, d) for d in depths}
