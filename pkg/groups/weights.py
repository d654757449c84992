"""Exponent-weight homomorphisms from free groups to the integers."""

from dataclasses import dataclass
from math import gcd
from typing import Dict, Iterable, Mapping, Tuple

from groups.errors import UnknownGeneratorError
from groups.words import Word


@dataclass(frozen=True)
class WeightMap:
    """Generator -> integer; extends uniquely to F(alphabet) -> Z."""

    items: Tuple[Tuple[str, int], ...]

    @classmethod
    def of(cls, assignment: Mapping[str, int]) -> "WeightMap":
        return cls(tuple(sorted((str(k), int(v)) for k, v in assignment.items())))

    @classmethod
    def all_ones(cls, alphabet: Iterable[str]) -> "WeightMap":
        return cls.of({name: 1 for name in alphabet})

    @classmethod
    def zero(cls, alphabet: Iterable[str]) -> "WeightMap":
        return cls.of({name: 0 for name in alphabet})

    def as_dict(self) -> Dict[str, int]:
        return dict(self.items)

    @property
    def alphabet(self) -> Tuple[str, ...]:
        return tuple(name for name, _ in self.items)

    def __getitem__(self, name: str) -> int:
        for key, value in self.items:
            if key == name:
                return value
        raise UnknownGeneratorError(name, "weight map")

    def __contains__(self, name: str) -> bool:
        return any(key == name for key, _ in self.items)

    def is_surjective(self) -> bool:
        """Onto Z iff the weights have gcd 1."""
        g = 0
        for _, value in self.items:
            g = gcd(g, value)
        return g == 1

    def merged(self, other: "WeightMap") -> "WeightMap":
        table = self.as_dict()
        table.update(other.as_dict())
        return WeightMap.of(table)


def exponent_sum(w: Word, f: WeightMap) -> int:
    """Image of w under the homomorphism determined by f."""
    table = f.as_dict()
    total = 0
    for name, sign in w.letters:
        if name not in table:
            raise UnknownGeneratorError(name, "weight map")
        total += sign * table[name]
    return total


def end_flux_weight_map(moved: Mapping[str, Tuple[int, int]]) -> WeightMap:
    """Weight map counting ends carried from one end set into another.

    `moved` gives, per generator, how many ends it carries from A into B and
    how many from B into A; the weight is the net flux into B.
    """
    return WeightMap.of({name: into_b - into_a for name, (into_b, into_a) in moved.items()})
