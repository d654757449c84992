"""Faithfulness probe: compare the model solver with a claimed group on a word ball.

Every divergence found so far has a freely trivial collected push word and
a nonzero syllable weight; a report whose entries break that pattern points
at a bug in the solvers rather than at the claimed presentation.
"""

import io
import logging
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from rich.console import Console
from rich.table import Table

from config import get_settings
from groups.errors import MissingOracleError, ShiftforgeError, UnknownGeneratorError
from groups.oracles import GroupOracle
from groups.words import Word, enumerate_ball, format_word, free_reduce

from actions.verdicts import Status
from constructions.handles import DiagonalHandle

logger = logging.getLogger(__name__)

Mapper = Callable[[Callable, Iterable], Iterable]


@dataclass(frozen=True)
class Divergence:
    word: Word
    normal_form: Word
    model: Status
    claimed: Status
    x_word: Word
    syllable_weights: Tuple[int, ...]

    @property
    def gap_condition(self) -> bool:
        """Freely trivial push word while some syllable carries weight."""
        return not free_reduce(self.x_word) and any(w != 0 for w in self.syllable_weights)

    def row(self) -> Tuple[str, ...]:
        return (
            format_word(self.word),
            self.model.value,
            self.claimed.value,
            format_word(self.x_word),
            ",".join(str(w) for w in self.syllable_weights),
        )


@dataclass
class ProbeChunk:
    compared: int = 0
    undecided: int = 0
    divergences: List[Divergence] = field(default_factory=list)


@dataclass(frozen=True)
class ProbeReport:
    system: str
    claimed: str
    radius: int
    compared: int
    undecided: int
    divergences: Tuple[Divergence, ...]
    apply_order: str = "rightmost-first"

    @property
    def diverged(self) -> int:
        return len(self.divergences)

    def summary(self) -> str:
        return f"compared: {self.compared} diverged: {self.diverged}"

    def all_pass_gap_condition(self) -> bool:
        return all(d.gap_condition for d in self.divergences)

    def to_text(self) -> str:
        """Plain report; byte-identical for identical inputs."""
        lines = [
            "faithfulness probe",
            f"system: {self.system}",
            f"claimed: {self.claimed}",
            f"radius: {self.radius}",
            f"apply-order: {self.apply_order}",
            f"compared: {self.compared}",
            f"undecided: {self.undecided}",
            f"diverged: {self.diverged}",
            "word\tmodel\tclaimed\tx-word\tsyllable-weights",
        ]
        lines.extend("\t".join(d.row()) for d in self.divergences)
        return "\n".join(lines) + "\n"

    def to_table(self, width: int = 100) -> str:
        """The divergences as a fixed-width text table."""
        table = Table(title=f"{self.system} vs {self.claimed}, radius {self.radius}")
        for column in ("word", "model", "claimed", "x-word", "syllable weights"):
            table.add_column(column)
        for d in self.divergences:
            table.add_row(*d.row())
        buffer = io.StringIO()
        Console(file=buffer, width=width, color_system=None, force_terminal=False).print(table)
        return buffer.getvalue()

    def to_dict(self) -> Dict[str, object]:
        return {
            "system": self.system,
            "claimed": self.claimed,
            "radius": self.radius,
            "apply_order": self.apply_order,
            "compared": self.compared,
            "undecided": self.undecided,
            "diverged": self.diverged,
            "divergences": [dict(zip(("word", "model", "claimed", "x_word", "syllable_weights"), d.row()))
                            for d in self.divergences],
        }


def ball_chunks(alphabet: Iterable[str], radius: int) -> List[List[Word]]:
    """The ball split by first letter, the empty word in the first chunk."""
    chunks: Dict[object, List[Word]] = {}
    for w in enumerate_ball(alphabet, radius):
        key = w.letters[0] if w else None
        chunks.setdefault(key, []).append(w)
    return list(chunks.values())


def probe_words(handle: DiagonalHandle, claimed: GroupOracle, words: Sequence[Word]) -> ProbeChunk:
    chunk = ProbeChunk()
    for w in words:
        chunk.compared += 1
        model = handle.solve(w)
        if not model.is_decided:
            chunk.undecided += 1
            continue
        claimed_trivial = claimed.is_trivial(w)
        if model.is_trivial == claimed_trivial:
            continue
        chunk.divergences.append(Divergence(
            word=w,
            normal_form=claimed.normalize(w),
            model=model.status,
            claimed=Status.TRIVIAL if claimed_trivial else Status.NONTRIVIAL,
            x_word=handle.normalize(w).x_word,
            syllable_weights=handle.syllable_weights(w),
        ))
    return chunk


def merge_chunks(chunks: Iterable[ProbeChunk]) -> ProbeChunk:
    """Sum the counts and keep one divergence per claimed normal form, the shortlex-least word."""
    merged = ProbeChunk()
    best: Dict[Word, Divergence] = {}
    for chunk in chunks:
        merged.compared += chunk.compared
        merged.undecided += chunk.undecided
        for d in chunk.divergences:
            kept = best.get(d.normal_form)
            if kept is None or d.word.shortlex_key() < kept.word.shortlex_key():
                best[d.normal_form] = d
    merged.divergences = sorted(best.values(), key=lambda d: d.word.shortlex_key())
    return merged


def faithfulness_probe(
    handle: DiagonalHandle,
    claimed: Optional[GroupOracle],
    radius: int,
    mapper: Mapper = map,
    system_name: Optional[str] = None,
    claimed_name: Optional[str] = None,
) -> ProbeReport:
    """Every word of the radius ball on which the model and the claimed group disagree.

    `mapper` runs the chunk comparisons (the builtin map, or an executor's
    map to fan out across threads); the merge does not depend on its order.
    """
    settings = get_settings()
    if claimed is None:
        raise MissingOracleError("the claimed group has no word problem oracle")
    if radius < 0 or radius > settings.max_radius:
        raise ShiftforgeError(f"radius {radius} outside 0..{settings.max_radius}")
    for name in handle.alphabet:
        if name not in claimed.generators:
            raise UnknownGeneratorError(name, f"claimed {claimed.kind} group")

    chunks = ball_chunks(handle.alphabet, radius)
    merged = merge_chunks(mapper(lambda words: probe_words(handle, claimed, words), chunks))
    report = ProbeReport(
        system=system_name or handle.name,
        claimed=claimed_name or claimed.kind,
        radius=radius,
        compared=merged.compared,
        undecided=merged.undecided,
        divergences=tuple(merged.divergences),
        apply_order=settings.apply_order,
    )
    logger.debug(f"probe {report.system} vs {report.claimed} at radius {radius}: {report.summary()}")
    return report
