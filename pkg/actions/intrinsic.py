"""Witnesses that a push word is of intrinsically infinite type.

Two sufficient conditions certify that a mapping class lies outside the
closure of the compactly supported ones: it permutes ends nontrivially, or
it is a handle shift (a nonzero net push of positive-genus compact copies
along an infinite orbit).  Finding neither proves nothing.
"""

import logging
from dataclasses import dataclass
from typing import Optional

from config import get_settings
from groups.words import Word, format_word, free_reduce
from schreier.exploration import s_orbit
from surfaces.ends import is_empty
from surfaces.surface_type import PiSpec

from actions.multipush import PushSystem, first_moved

logger = logging.getLogger(__name__)

END_PERMUTATION = "end_permutation"
HANDLE_SHIFT = "handle_shift"


@dataclass(frozen=True)
class IntrinsicWitness:
    kind: str
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {self.detail}"


def intrinsic_type_witness(sys: PushSystem, w: Word, pi: PiSpec,
                           window: Optional[int] = None) -> Optional[IntrinsicWitness]:
    if window is None:
        window = get_settings().window_radius
    sys.check(w)
    reduced = free_reduce(w)
    if not reduced:
        return None

    moved = first_moved(sys, reduced, window)
    if moved is not None and not is_empty(pi.ends):
        v, image = moved
        return IntrinsicWitness(END_PERMUTATION, f"ends of the copy at {v} go to the copy at {image}")

    names = reduced.letters_used
    if len(names) != 1 or not pi.compact or pi.genus == 0:
        return None
    (s,) = names
    exponent = sum(sign for _, sign in reduced.letters)
    if exponent == 0:
        return None
    orbit = s_orbit(sys.graph, sys.graph.basepoint, s, window)
    if not orbit.is_infinite:
        logger.debug(f"{format_word(reduced)}: {s}-orbit is finite, no handle shift")
        return None
    return IntrinsicWitness(HANDLE_SHIFT, f"net {s}-exponent {exponent} on genus-{pi.genus} copies")
