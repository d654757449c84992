"""Indicable groups embedded along a push: g -> ḡ · h^f(g)."""

import dataclasses
import logging
from itertools import islice
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

from groups.oracles import FreeOracle, GroupOracle, oracle_is_trivial
from groups.presentations import Presentation
from groups.weights import WeightMap, end_flux_weight_map, exponent_sum
from groups.words import Word
from schreier.graphs import iter_breadth_first
from surfaces.surface_type import DomainKind, PiSpec, SurfaceType, Symbolic, push_domain_type

from actions.diagonal import diagonal_system
from actions.multipush import (
    MultipushSystem,
    OmittedCopy,
    finite_shift_system,
    one_ended_shift_system,
    shift_system,
)
from constructions.handles import DiagonalHandle

logger = logging.getLogger(__name__)


class IndicableHandle(DiagonalHandle):
    def __init__(self, system, name: str, domain: DomainKind, period: int = 1, omitted: int = 0,
                 window: Optional[int] = None):
        super().__init__(system, name, window)
        self.domain = domain
        self.period = period
        self.omitted = omitted

    @property
    def kind(self) -> str:
        return "indicable"

    @property
    def factor(self):
        return self.system.factors[0]

    def criterion(self, w: Word) -> bool:
        """All-ones exponent sum of the augmented word is 0 and its underlying word is trivial."""
        augmented = self.system.to_augmented(w)
        ones = WeightMap.all_ones(self.factor.augmented)
        if exponent_sum(augmented, ones) != 0:
            return False
        return oracle_is_trivial(self.factor.oracle, self.factor.zero_sum.underlying(augmented))

    def domain_type(self, pi: PiSpec) -> Union[SurfaceType, Symbolic]:
        return push_domain_type(self.domain, pi, self.period)


def _push_system(domain: DomainKind, period: int, non_sphere_at: Iterable[int]) -> MultipushSystem:
    if domain is DomainKind.SHIFT:
        return shift_system("h")
    if domain is DomainKind.ONE_ENDED_SHIFT:
        return one_ended_shift_system()
    return finite_shift_system(period, non_sphere_at, letter="h")


def embed_indicable(
    oracle: GroupOracle,
    f: WeightMap,
    domain: Union[DomainKind, str] = DomainKind.SHIFT,
    omitted: int = 0,
    period: int = 1,
    presentation: Optional[Presentation] = None,
    non_sphere_at: Iterable[int] = (),
    name: str = "indicable",
    window: Optional[int] = None,
) -> IndicableHandle:
    """Embed G along a shift, one-ended shift or finite shift, with `omitted` copies capped off."""
    domain = DomainKind(domain)
    push = _push_system(domain, period, non_sphere_at)
    if omitted:
        letter = push.letters[0]
        nodes = [v for v, _ in islice(iter_breadth_first(push.graph, push.graph.basepoint, None), omitted)]
        push = dataclasses.replace(push, omissions=tuple(OmittedCopy(letter, v) for v in nodes))
    system = diagonal_system([(oracle, f)], presentations=[presentation], name=name, multipush=push)
    logger.debug(f"indicable embedding {name}: {oracle.kind} along {domain.value}, {omitted} omitted")
    return IndicableHandle(system, name, domain, period, omitted, window)


# Weight maps of the end-counting examples: per generator, how many ends it
# carries from A into B and from B into A.
END_FLUX_EXAMPLES: Dict[str, Mapping[str, Tuple[int, int]]] = {
    # bi-infinite flute with one nonplanar end
    "flute_one_nonplanar": {"h": (1, 0), "d": (0, 0)},
    # Cantor set union the two-point compactification of Z
    "cantor_two_point": {"h": (1, 0), "r": (1, 1)},
    # ladder with punctures accumulating on both ends
    "punctured_ladder": {"h": (2, 1), "p": (0, 0)},
}


def ell_weight_map(example: str) -> WeightMap:
    return end_flux_weight_map(END_FLUX_EXAMPLES[example])


def ell_handle(example: str, domain: Union[DomainKind, str] = DomainKind.SHIFT) -> IndicableHandle:
    """The example's generators as a free group indicable through the end flux."""
    f = ell_weight_map(example)
    return embed_indicable(FreeOracle(f.alphabet), f, domain, name=example)
