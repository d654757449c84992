"""Wreath products G ≀_Λ H: lamps on one copy of Π, moved by pushes."""

import logging
from typing import Optional, Tuple, Union

from groups.oracles import GroupOracle
from groups.words import Word

from actions.multipush import PushSystem
from actions.verdicts import Verdict
from actions.wreath import IntegerShift, PushGroup, WordPushGroup, WreathElement, WreathSystem, wreath_is_trivial, wreath_normalize
from constructions.handles import SubgroupHandle

logger = logging.getLogger(__name__)


class WreathHandle(SubgroupHandle):
    def __init__(self, system: WreathSystem, name: str = "wreath", window: Optional[int] = None):
        super().__init__(name, window)
        self.system = system

    @property
    def kind(self) -> str:
        return "wreath"

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return self.system.alphabet

    def solve(self, w: Word) -> Verdict:
        return wreath_is_trivial(self.system, w, self.window)

    def normalize(self, w: Word) -> WreathElement:
        return wreath_normalize(self.system, w)


def embed_wreath(lamp: GroupOracle, push: Union[PushGroup, PushSystem, str] = "t",
                 name: str = "wreath", window: Optional[int] = None) -> WreathHandle:
    """G ≀_Λ H for the integer shift (a letter name), a push system, or a prepared push group."""
    if isinstance(push, str):
        group: PushGroup = IntegerShift(push)
    elif isinstance(push, PushSystem):
        group = WordPushGroup(push)
    else:
        group = push
    logger.debug(f"wreath {name}: {lamp.kind} lamps over {type(group).__name__}")
    return WreathHandle(WreathSystem(lamp, group, name), name, window)
