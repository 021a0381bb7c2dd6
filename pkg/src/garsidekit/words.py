"""Signed words over the generators of a Coxeter graph.

Words are the exchange format between every module: the Garside engine
reads them and writes them back, the retractions act on them letter by
letter, and the command line speaks them as whitespace separated letters
with a ``^-1`` suffix for inverses.

>>> from garsidekit.graph import standard_graph
>>> g = standard_graph("A", 2)
>>> w = ArtinWord.parse(g, "s1 s2^-1 s2 s1")
>>> str(w.free_reduce())
's1 s1'
>>> str(w.inverse())
's1^-1 s2^-1 s2 s1^-1'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import CoxeterGraph

Letter = tuple[int, int]  # (generator index, sign)


@dataclass(frozen=True)
class ArtinWord:
    graph: CoxeterGraph
    letters: tuple[Letter, ...] = ()

    def __post_init__(self):
        n = self.graph.rank
        for gen, sign in self.letters:
            if not 0 <= gen < n:
                raise ValueError(f"generator index {gen} outside the graph")
            if sign not in (1, -1):
                raise ValueError("signs must be +1 or -1")

    @classmethod
    def parse(cls, graph: CoxeterGraph, text: str | Iterable[str]) -> ArtinWord:
        tokens = text.split() if isinstance(text, str) else list(text)
        if tokens in (["1"], ["e"]):
            tokens = []
        letters = []
        for tok in tokens:
            sign = 1
            if tok.endswith("^-1"):
                tok, sign = tok[:-3], -1
            elif tok.endswith("^1"):
                tok = tok[:-2]
            letters.append((graph.index(tok), sign))
        return cls(graph, tuple(letters))

    @classmethod
    def positive(cls, graph: CoxeterGraph, gens: Iterable[int]) -> ArtinWord:
        return cls(graph, tuple((i, 1) for i in gens))

    @classmethod
    def from_names(cls, graph: CoxeterGraph, pairs: Iterable[tuple[str, int]]) -> ArtinWord:
        return cls(graph, tuple((graph.index(s), e) for s, e in pairs))

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __mul__(self, other: ArtinWord) -> ArtinWord:
        if other.graph != self.graph:
            raise ValueError("words live over different graphs")
        return ArtinWord(self.graph, self.letters + other.letters)

    def inverse(self) -> ArtinWord:
        return ArtinWord(self.graph, tuple((g, -e) for g, e in reversed(self.letters)))

    def free_reduce(self) -> ArtinWord:
        out: list[Letter] = []
        for g, e in self.letters:
            if out and out[-1] == (g, -e):
                out.pop()
            else:
                out.append((g, e))
        return ArtinWord(self.graph, tuple(out))

    def is_positive(self) -> bool:
        return all(e == 1 for _, e in self.letters)

    def support(self) -> frozenset[int]:
        return frozenset(g for g, _ in self.letters)

    def support_names(self) -> tuple[str, ...]:
        return self.graph.names(self.support())

    def exponent_sum(self) -> int:
        return sum(e for _, e in self.letters)

    def generators(self) -> tuple[int, ...]:
        return tuple(g for g, _ in self.letters)

    def names(self) -> list[tuple[str, int]]:
        return [(self.graph.generators[g], e) for g, e in self.letters]

    def __str__(self) -> str:
        gens = self.graph.generators
        return " ".join(gens[g] if e == 1 else f"{gens[g]}^-1" for g, e in self.letters)

    def compact(self) -> str:
        """Letters glued together, inverses marked with a trailing ``'``."""
        gens = self.graph.generators
        return "".join(gens[g] if e == 1 else gens[g] + "'" for g, e in self.letters)


def parse_word(graph: CoxeterGraph, text: str) -> ArtinWord:
    return ArtinWord.parse(graph, text)
