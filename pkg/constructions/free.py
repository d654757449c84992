"""Free subgroups generated by multipushes."""

import logging
from typing import Iterable, Optional, Tuple, Union

from config import get_settings
from groups.errors import DegenerateSystemError
from schreier.exploration import FiniteCycle, s_orbit
from schreier.graphs import GraphSpec, Node
from surfaces.schreier_surface import SchreierSurfaceSpec

from actions.multipush import MultipushSystem, OmittedCopy
from constructions.handles import MultipushHandle

logger = logging.getLogger(__name__)


def embed_free(
    graph: Union[GraphSpec, SchreierSurfaceSpec],
    letters: Optional[Iterable[str]] = None,
    omissions: Iterable[Tuple[str, Node]] = (),
    name: Optional[str] = None,
    window: Optional[int] = None,
) -> MultipushHandle:
    """The multipushes x_s, s in T, as a free group of rank |T|.

    A single letter whose orbit is a finite cycle decorated by spheres only
    does not give an infinite cyclic group the construction can vouch for.
    """
    if isinstance(graph, SchreierSurfaceSpec):
        system = MultipushSystem.on_surface(graph, letters, omissions, name)
    else:
        names = tuple(letters) if letters is not None else graph.letters
        system = MultipushSystem(
            graph, names,
            name=name or f"free{len(names)}",
            omissions=tuple(OmittedCopy(s, v) for s, v in omissions),
        )

    if len(system.letters) == 1:
        s = system.letters[0]
        orbit = s_orbit(system.graph, system.graph.basepoint, s, window or get_settings().window_radius)
        if isinstance(orbit, FiniteCycle) and not any(v in system.non_sphere for v in orbit.nodes):
            raise DegenerateSystemError(
                f"{s} acts on an all-sphere {orbit.length}-cycle; its multipush need not have infinite order"
            )
    logger.debug(f"free embedding {system.name} of rank {len(system.letters)}")
    return MultipushHandle(system, name=system.name, window=window)
