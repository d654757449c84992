"""Factor syllables of words over a partitioned alphabet."""

from typing import Hashable, List, Mapping, Tuple

from groups.errors import UnknownGeneratorError
from groups.words import Word


def syllable_decompose(w: Word, partition: Mapping[str, Hashable]) -> List[Tuple[Hashable, Word]]:
    """Maximal single-factor blocks of w, in order."""
    blocks: List[Tuple[Hashable, list]] = []
    for letter in w.letters:
        if letter[0] not in partition:
            raise UnknownGeneratorError(letter[0], "factor partition")
        factor = partition[letter[0]]
        if blocks and blocks[-1][0] == factor:
            blocks[-1][1].append(letter)
        else:
            blocks.append((factor, [letter]))
    return [(factor, Word(tuple(letters))) for factor, letters in blocks]


def project_to_factor(w: Word, i: Hashable, partition: Mapping[str, Hashable]) -> Word:
    """Delete every letter outside factor i."""
    for name in w.letters_used:
        if name not in partition:
            raise UnknownGeneratorError(name, "factor partition")
    return Word(tuple(l for l in w.letters if partition[l[0]] == i))
