"""Words over generator alphabets.

A word is a tuple of letters ``(name, sign)`` with ``sign`` in ``{+1, -1}``.
Words are immutable and hashable; multiplication concatenates without
reducing, ``free_reduce`` produces the canonical free-group form.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import groupby
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple, Union

from pyparsing import (
    Forward,
    Group,
    Literal,
    ParseBaseException,
    Regex,
    StringEnd,
    Suppress,
    ZeroOrMore,
)

from groups.errors import UnknownGeneratorError, WordSyntaxError

Letter = Tuple[str, int]


def letter_key(letter: Letter) -> Tuple[str, int]:
    """Total order on letters: by generator name, then a before a^-1."""
    name, sign = letter
    return (name, 0 if sign > 0 else 1)


@dataclass(frozen=True)
class Word:
    """An unreduced word; equality is letter-by-letter."""

    letters: Tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for name, sign in self.letters:
            if sign not in (1, -1):
                raise WordSyntaxError(f"letter {name!r} has sign {sign}, expected +1 or -1")

    @classmethod
    def gen(cls, name: str, power: int = 1) -> "Word":
        """The word name^power."""
        sign = 1 if power > 0 else -1
        return cls(((name, sign),) * abs(power))

    @classmethod
    def concat(cls, words: Iterable["Word"]) -> "Word":
        letters: List[Letter] = []
        for w in words:
            letters.extend(w.letters)
        return cls(tuple(letters))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[Letter]:
        return iter(self.letters)

    def __bool__(self) -> bool:
        return bool(self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __pow__(self, k: int) -> "Word":
        if k >= 0:
            return Word(self.letters * k)
        return Word(self.inverse().letters * (-k))

    def inverse(self) -> "Word":
        return Word(tuple((name, -sign) for name, sign in reversed(self.letters)))

    def commutator(self, other: "Word") -> "Word":
        """[self, other] = self·other·self⁻¹·other⁻¹."""
        return self * other * self.inverse() * other.inverse()

    @property
    def letters_used(self) -> frozenset:
        return frozenset(name for name, _ in self.letters)

    def shortlex_key(self) -> Tuple[int, Tuple[Tuple[str, int], ...]]:
        return (len(self.letters), tuple(letter_key(l) for l in self.letters))

    def substitute(self, table: dict) -> "Word":
        """Replace every generator by a word; inverse letters use the inverse image."""
        parts = []
        for name, sign in self.letters:
            if name not in table:
                raise UnknownGeneratorError(name, "substitution")
            image = table[name]
            parts.append(image if sign > 0 else image.inverse())
        return Word.concat(parts)

    def restrict(self, names: Iterable[str]) -> "Word":
        keep = set(names)
        return Word(tuple(l for l in self.letters if l[0] in keep))

    def __str__(self) -> str:
        return format_word(self)


EMPTY = Word()


def free_reduce(w: Word) -> Word:
    """Cancel adjacent inverse pairs until none remain."""
    stack: List[Letter] = []
    for name, sign in w.letters:
        if stack and stack[-1][0] == name and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((name, sign))
    return Word(tuple(stack))


def is_freely_trivial(w: Word) -> bool:
    return not free_reduce(w)


def signed_alphabet(alphabet: Iterable[str]) -> List[Letter]:
    """All letters over the alphabet in letter_key order."""
    names = sorted(set(alphabet))
    return [(name, sign) for name in names for sign in (1, -1)]


def enumerate_ball(alphabet: Iterable[str], radius: int) -> Iterator[Word]:
    """Yield every freely reduced word of length <= radius in shortlex order."""
    letters = signed_alphabet(alphabet)
    layer: List[Tuple[Letter, ...]] = [()]
    yield EMPTY
    for _ in range(radius):
        next_layer = []
        for prefix in layer:
            for letter in letters:
                if prefix and prefix[-1][0] == letter[0] and prefix[-1][1] == -letter[1]:
                    continue
                next_layer.append(prefix + (letter,))
        for letters_ in next_layer:
            yield Word(letters_)
        layer = next_layer


def ball_size(rank: int, radius: int) -> int:
    """Number of reduced words of length <= radius over a rank-`rank` alphabet."""
    if rank == 0 or radius == 0:
        return 1
    total, layer = 1, 2 * rank
    for _ in range(radius):
        total += layer
        layer *= 2 * rank - 1
    return total


# Word grammar: whitespace separated tokens name, name^k, and brackets [u,v]
# expanding to u v u^-1 v^-1; "1" is the empty word.

def _token_action(tokens):
    text = tokens[0]
    if "^" in text:
        name, power = text.split("^", 1)
        return [Word.gen(name, int(power))]
    return [Word.gen(text)]


def _bracket_action(tokens):
    u = Word.concat(tokens[0])
    v = Word.concat(tokens[1])
    return [u.commutator(v)]


@lru_cache(maxsize=1)
def _grammar():
    word = Forward()
    token = Regex(r"[A-Za-z_][A-Za-z0-9_']*(\^-?[0-9]+)?").set_parse_action(_token_action)
    identity = Literal("1").set_parse_action(lambda _: [EMPTY])
    bracket = (
        Suppress("[") + Group(word) + Suppress(",") + Group(word) + Suppress("]")
    ).set_parse_action(_bracket_action)
    word <<= ZeroOrMore(bracket | identity | token)
    return word + StringEnd()


def parse_word(text: str, alphabet: Optional[Iterable[str]] = None) -> Word:
    """Parse the token syntax into a Word, checking letters against `alphabet`."""
    try:
        parsed = _grammar().parse_string(text, parse_all=True)
    except ParseBaseException as e:
        raise WordSyntaxError(f"cannot parse word {text!r}: {e}") from e
    w = Word.concat(parsed)
    if alphabet is not None:
        known = set(alphabet)
        for name in w.letters_used:
            if name not in known:
                raise UnknownGeneratorError(name, "word alphabet")
    return w


def format_word(w: Word) -> str:
    """Inverse of parse_word; runs of one letter are written name^k."""
    if not w.letters:
        return "1"
    tokens = []
    for (name, sign), run in groupby(w.letters):
        k = sign * len(list(run))
        tokens.append(name if k == 1 else f"{name}^{k}")
    return " ".join(tokens)


WordLike = Union[Word, str, Sequence[Letter]]


def as_word(value: WordLike, alphabet: Optional[Iterable[str]] = None) -> Word:
    if isinstance(value, Word):
        return value
    if isinstance(value, str):
        return parse_word(value, alphabet)
    return Word(tuple(value))
