"""Finite presentations and the zero-exponent-sum rewriting."""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from groups.errors import NotAHomomorphismError, NotSurjectiveError, UnknownGeneratorError
from groups.weights import WeightMap, exponent_sum
from groups.words import Letter, Word, free_reduce, signed_alphabet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Presentation:
    """<alphabet | relators>; every relator letter lies in the alphabet."""

    alphabet: Tuple[str, ...]
    relators: Tuple[Word, ...] = ()

    def __post_init__(self) -> None:
        known = set(self.alphabet)
        for r in self.relators:
            for name in r.letters_used:
                if name not in known:
                    raise UnknownGeneratorError(name, "presentation")


def is_homomorphism(f: WeightMap, p: Presentation) -> bool:
    """True when f is defined on the alphabet and kills every relator."""
    if any(name not in f for name in p.alphabet):
        return False
    return all(exponent_sum(r, f) == 0 for r in p.relators)


def find_unit_word(f: WeightMap, alphabet: Tuple[str, ...]) -> Word:
    """Shortest word of weight 1, by breadth-first search over partial sums.

    Partial sums stay within [-M, M] where M is the largest absolute weight;
    any integer combination reaching 1 can be reordered to respect that bound.
    """
    weights = {name: f[name] for name in alphabet}
    bound = max([abs(v) for v in weights.values()] + [1])
    letters = [l for l in signed_alphabet(alphabet) if weights[l[0]] != 0]
    parent: Dict[int, Optional[Tuple[int, Letter]]] = {0: None}
    queue = deque([0])
    while queue:
        state = queue.popleft()
        if state == 1:
            break
        for name, sign in letters:
            nxt = state + sign * weights[name]
            if abs(nxt) > bound or nxt in parent:
                continue
            parent[nxt] = (state, (name, sign))
            queue.append(nxt)
    if 1 not in parent:
        raise NotSurjectiveError(f"weights {weights} never sum to 1")
    path: List[Letter] = []
    state = 1
    while parent[state] is not None:
        prev, letter = parent[state]
        path.append(letter)
        state = prev
    return Word(tuple(reversed(path)))


def _fresh(name: str, taken: set) -> str:
    while name in taken:
        name += "'"
    taken.add(name)
    return name


@dataclass(frozen=True)
class ZeroSumResult:
    """Rewritten presentation with the dictionaries in both directions."""

    presentation: Presentation
    to_new: Dict[str, Word] = field(hash=False)
    to_old: Dict[str, Word] = field(hash=False)
    base: Word
    base_generator: str
    source: Presentation
    weights: WeightMap

    def rewrite(self, w: Word) -> Word:
        """A word over the original generators, in the new generators."""
        return w.substitute(self.to_new)

    def underlying(self, w: Word) -> Word:
        """A word over the new generators, in the original generators."""
        return w.substitute(self.to_old)


def zero_sum_presentation(p: Presentation, f: WeightMap) -> ZeroSumResult:
    """Rewrite p so every generator has weight 1 and every relator weight 0.

    With a base word u of weight 1, each generator g with f(g) != 1 is
    replaced by u^(1-f(g))·g, or by g·u^(1-f(g)) when u is a single
    generator listed after g, so ⟨a, t⟩ with f(t) = 1 gains at rather than ta.
    When u is not a single generator a new generator stands for u and one
    relator ties it to u.
    """
    if not is_homomorphism(f, p):
        raise NotAHomomorphismError(f"weight map {f.as_dict()} does not kill the relators of {p.alphabet}")
    if not f.is_surjective():
        raise NotSurjectiveError(f"weight map {f.as_dict()} is not onto the integers")

    base = find_unit_word(f, p.alphabet)
    taken = set(p.alphabet)
    to_new: Dict[str, Word] = {}
    to_old: Dict[str, Word] = {}
    new_alphabet: List[str] = []
    extra: List[Word] = []

    single = len(base) == 1 and base.letters[0][1] == 1
    if single:
        base_name = base.letters[0][0]
    else:
        label = "".join(n if s > 0 else f"{n}i" for n, s in base.letters)
        base_name = _fresh(label, taken)
        to_old[base_name] = base
        new_alphabet.append(base_name)
    base_new = Word.gen(base_name)
    position = {name: i for i, name in enumerate(p.alphabet)}

    for g in p.alphabet:
        weight = f[g]
        if weight == 1:
            to_new[g] = Word.gen(g)
            to_old[g] = Word.gen(g)
            new_alphabet.append(g)
            continue
        k = 1 - weight
        power = base_name if k == 1 else f"{base_name}{k}".replace("-", "m")
        if single and position[g] < position[base_name]:
            name = _fresh(f"{g}{power}", taken)
            to_old[name] = Word.gen(g) * (base ** k)
            to_new[g] = Word.gen(name) * (base_new ** (-k))
        else:
            name = _fresh(f"{power}{g}", taken)
            to_old[name] = (base ** k) * Word.gen(g)
            to_new[g] = (base_new ** (-k)) * Word.gen(name)
        new_alphabet.append(name)

    if not single:
        extra.append(free_reduce(base_new.inverse() * base.substitute(to_new)))

    relators = tuple(free_reduce(r.substitute(to_new)) for r in p.relators) + tuple(extra)
    result = Presentation(tuple(new_alphabet), relators)
    logger.debug(f"zero-sum rewrite: base {base} -> generators {new_alphabet}")
    return ZeroSumResult(
        presentation=result,
        to_new=to_new,
        to_old=to_old,
        base=base,
        base_generator=base_name,
        source=p,
        weights=f,
    )
