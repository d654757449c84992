"""BS(1,n) embedded through curve-level shifts on a shift domain."""

import logging
from typing import Optional, Tuple

from config import get_settings
from groups.bs import bs_normal_form, bs_word
from groups.words import Word, format_word

from actions.bs_window import BSWindowResult, bs_window_action, window_matches_normal_form
from actions.verdicts import Verdict
from constructions.handles import SubgroupHandle

logger = logging.getLogger(__name__)


class BSHandle(SubgroupHandle):
    """Algebra decides; the window simulation is the independent check."""

    def __init__(self, n: int, depth: Optional[int] = None, a: str = "a", t: str = "t",
                 name: str = "bs1n", window: Optional[int] = None):
        if n < 2:
            raise ValueError(f"n must be >= 2, got {n}")
        super().__init__(name, window)
        self.n = n
        self.depth = depth if depth is not None else get_settings().bs_depth
        self.a = a
        self.t = t

    @property
    def kind(self) -> str:
        return "bs1n"

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return (self.a, self.t)

    def solve(self, w: Word) -> Verdict:
        r, e = bs_normal_form(self.n, w, self.a, self.t)
        if r.is_zero() and e == 0:
            return Verdict.trivial()
        canonical = bs_word(self.n, (r, e), self.a, self.t)
        return Verdict.nontrivial(f"normal form {format_word(canonical)}")

    def window_action(self, w: Word) -> BSWindowResult:
        return bs_window_action(self.n, w, self.depth, a=self.a, t=self.t)

    def cross_check(self, w: Word) -> Optional[bool]:
        """Does the window state agree with the normal form?  None when w leaves the levels."""
        return window_matches_normal_form(self.n, w, self.depth, self.a, self.t)


def embed_bs1n(n: int, depth: Optional[int] = None, name: str = "bs1n") -> BSHandle:
    logger.debug(f"BS(1,{n}) embedding with level depth {depth}")
    return BSHandle(n, depth, name=name)
