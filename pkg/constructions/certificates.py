"""Non-conjugacy certificates from complement invariants."""

import logging
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, Iterable, List, Optional, Tuple, Union

from surfaces.ends import Incomparable
from surfaces.invariants import ComplementRecord, canonical_omission, complement_invariant, distinguishes
from surfaces.schreier_surface import SchreierSurfaceSpec

from constructions.free import embed_free
from constructions.handles import MultipushHandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NonconjugacyCertificate:
    """The embeddings with m and n omitted copies have complements differing in `field`."""

    m: int
    n: int
    field: str
    first: ComplementRecord
    second: ComplementRecord

    def __str__(self) -> str:
        return f"m={self.m} vs n={self.n}: {self.field} differs ({self.first} / {self.second})"


CertificateResult = Union[NonconjugacyCertificate, Incomparable, None]


def nonconjugacy_certificate(spec: SchreierSurfaceSpec, m: int, n: int) -> CertificateResult:
    """A certificate when the complement invariants for m and n omitted copies differ."""
    if m == n:
        return None
    first = complement_invariant(spec, m)
    if isinstance(first, Incomparable):
        return first
    second = complement_invariant(spec, n)
    if isinstance(second, Incomparable):
        return second
    field = distinguishes(first, second)
    if field is None:
        return None
    return NonconjugacyCertificate(m, n, field, first, second)


@dataclass(frozen=True)
class EmbeddingFamily:
    handles: Tuple[MultipushHandle, ...]
    certificates: Dict[Tuple[int, int], CertificateResult]

    def uncertified(self) -> List[Tuple[int, int]]:
        return [pair for pair, cert in self.certificates.items() if not isinstance(cert, NonconjugacyCertificate)]


def nonconjugate_embeddings(spec: SchreierSurfaceSpec, count: int,
                            letters: Optional[Iterable[str]] = None) -> EmbeddingFamily:
    """Embeddings omitting 0, 1, ..., count-1 copies, with a certificate for every pair."""
    names = tuple(letters) if letters is not None else spec.graph.letters
    handles = []
    for m in range(count):
        omission = [(names[0], v) for v in canonical_omission(spec, m)]
        handles.append(embed_free(spec, names, omission, name=f"{spec.name}-omit{m}"))
    certificates = {(m, n): nonconjugacy_certificate(spec, m, n) for m, n in combinations(range(count), 2)}
    family = EmbeddingFamily(tuple(handles), certificates)
    logger.debug(f"{spec.name}: {count} embeddings, {len(family.uncertified())} pairs uncertified")
    return family
