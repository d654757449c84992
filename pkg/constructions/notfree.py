"""Commuting conjugates of [h_a, h_b] in the cross system: copies of Z^n in a non-free push group."""

import logging
from itertools import combinations
from typing import List, Optional

from config import get_settings
from groups.errors import InvariantViolation
from groups.words import Word, format_word

from actions.multipush import PushSystem, first_moved
from actions.support import axis_conjugator, commute_by_disjoint_support, cross_commutator, cross_system

logger = logging.getLogger(__name__)


def notfree_family(count: int, system: Optional[PushSystem] = None, window: Optional[int] = None,
                   verify: bool = True) -> List[Word]:
    """c = [h_a, h_b] and its conjugates w_j c w_j^-1, with supports marching out along the a-axis.

    Verification checks that every pair commutes by disjoint support and that
    every element moves a copy; a failure raises InvariantViolation.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    system = system or cross_system()
    if window is None:
        window = max(get_settings().window_radius, 3 * count + 4)

    c = cross_commutator()
    family = [c]
    for j in range(count - 1):
        w = axis_conjugator(j)
        family.append(w * c * w.inverse())

    if verify:
        for u in family:
            if first_moved(system, u, window) is None:
                raise InvariantViolation(f"{format_word(u)} moves no copy in window {window}")
        for u, v in combinations(family, 2):
            if commute_by_disjoint_support(system, u, v, window) is not True:
                raise InvariantViolation(f"{format_word(u)} and {format_word(v)} do not have disjoint supports")
    logger.debug(f"non-free family of {count} commuting elements verified={verify}")
    return family
