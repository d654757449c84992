"""Normal forms in right-angled Artin groups.

Words are normalised with the piling algorithm of Crisp, Godelle and
Wiest: each vertex keeps a pile; a letter is pushed onto its own pile and
a blocking marker onto the piles of the vertices it does not commute with.
Reading the piles back, always taking the first vertex (by name) whose pile
starts with a letter, yields the shortlex-least reduced representative.
"""

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, List, Tuple

import networkx as nx

from groups.errors import UnknownGeneratorError
from groups.words import Letter, Word


@dataclass(frozen=True)
class CommutationTable:
    vertices: Tuple[str, ...]
    blockers: Dict[str, FrozenSet[str]]  # non-commuting vertices, excluding self

    def __hash__(self) -> int:
        return hash(self.vertices)


@lru_cache(maxsize=256)
def _table(vertices: Tuple[str, ...], edges: FrozenSet[FrozenSet[str]]) -> CommutationTable:
    blockers = {}
    for v in vertices:
        blockers[v] = frozenset(u for u in vertices if u != v and frozenset((u, v)) not in edges)
    return CommutationTable(vertices, blockers)


def commutation_table(graph: nx.Graph) -> CommutationTable:
    vertices = tuple(sorted(str(v) for v in graph.nodes))
    edges = frozenset(frozenset((str(u), str(v))) for u, v in graph.edges if u != v)
    return _table(vertices, edges)


def pile(table: CommutationTable, w: Word) -> Dict[str, deque]:
    piles: Dict[str, deque] = {v: deque() for v in table.vertices}
    for name, sign in w.letters:
        if name not in piles:
            raise UnknownGeneratorError(name, "RAAG graph")
        own = piles[name]
        if own and own[-1] == -sign:
            own.pop()
            for other in table.blockers[name]:
                piles[other].pop()
        else:
            own.append(sign)
            for other in table.blockers[name]:
                piles[other].append(0)
    return piles


def depile(table: CommutationTable, piles: Dict[str, deque]) -> Word:
    out: List[Letter] = []
    while True:
        for v in table.vertices:
            if piles[v] and piles[v][0]:
                break
        else:
            return Word(tuple(out))
        out.append((v, piles[v][0]))
        piles[v].popleft()
        for other in table.blockers[v]:
            piles[other].popleft()


def raag_normalize(graph: nx.Graph, w: Word) -> Word:
    """Shortlex-least word equal to w in the RAAG defined by graph."""
    table = commutation_table(graph)
    return depile(table, pile(table, w))


def raag_graph(vertices: Iterable[str], edges: Iterable[Tuple[str, str]]) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from(edges)
    return g


def path_graph(names: Iterable[str]) -> nx.Graph:
    names = list(names)
    return raag_graph(names, zip(names, names[1:]))
