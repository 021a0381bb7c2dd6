"""Labelled Coxeter graphs and their text file format.

A graph lists its generators in a fixed order (the order used for every
ShortLex comparison in the package) together with a symmetric label
``m(s, t)`` in ``{2, 3, ...} ∪ {inf}`` for each pair of distinct
generators.

The file format::

    generators: a b c
    default: 2
    a b 3
    b c 5

``default`` is mandatory and is either ``2`` or ``inf``; it applies to
every pair not listed.  ``#`` starts a comment.

>>> g = parse_graph("generators: a b c\\ndefault: 2\\na b 3\\nb c 5\\n")
>>> g.label("c", "b")
5
>>> g.label("a", "c")
2
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Mapping

INF = math.inf

__all__ = [
    "INF",
    "CoxeterGraph",
    "GraphFormatError",
    "parse_graph",
    "load_graph",
    "format_graph",
    "standard_graph",
]


class GraphFormatError(ValueError):
    pass


def _parse_label(text: str) -> int | float:
    if text.lower() in ("inf", "infinity", "∞"):
        return INF
    value = int(text)
    if value < 2:
        raise GraphFormatError(f"label must be >= 2 or inf, got {text}")
    return value


@dataclass(frozen=True)
class CoxeterGraph:
    """Generators in declaration order plus the symmetric label matrix.

    ``matrix[i][j]`` is the label between generators ``i`` and ``j``
    (``1`` on the diagonal, ``INF`` for no relation).
    """

    generators: tuple[str, ...]
    matrix: tuple[tuple[int | float, ...], ...]
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        n = len(self.generators)
        if len(set(self.generators)) != n:
            raise GraphFormatError("generator names must be unique")
        for name in self.generators:
            if not name or any(ch.isspace() for ch in name) or name.endswith("^-1"):
                raise GraphFormatError(f"bad generator name {name!r}")
        if len(self.matrix) != n or any(len(row) != n for row in self.matrix):
            raise GraphFormatError("label matrix has the wrong shape")
        for i in range(n):
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise GraphFormatError("labels must be symmetric")

    @classmethod
    def from_labels(
        cls,
        generators: Iterable[str],
        labels: Mapping[tuple[str, str], int | float] | None = None,
        default: int | float = 2,
    ) -> CoxeterGraph:
        gens = tuple(generators)
        index = {s: i for i, s in enumerate(gens)}
        n = len(gens)
        rows = [[1 if i == j else default for j in range(n)] for i in range(n)]
        for (s, t), m in (labels or {}).items():
            if s not in index or t not in index:
                raise GraphFormatError(f"unknown generator in pair ({s}, {t})")
            if s == t:
                raise GraphFormatError("labels are only defined for distinct generators")
            i, j = index[s], index[t]
            rows[i][j] = rows[j][i] = m
        return cls(gens, tuple(tuple(r) for r in rows))

    @property
    def rank(self) -> int:
        return len(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._index_map()[name]
        except KeyError:
            raise KeyError(f"unknown generator {name!r}") from None

    def _index_map(self) -> dict[str, int]:
        m = self._cache.get("index")
        if m is None:
            m = {s: i for i, s in enumerate(self.generators)}
            self._cache["index"] = m
        return m

    def label(self, s: str, t: str) -> int | float:
        return self.matrix[self.index(s)][self.index(t)]

    def m(self, i: int, j: int) -> int | float:
        return self.matrix[i][j]

    def indices(self, names: Iterable[str]) -> frozenset[int]:
        return frozenset(self.index(s) for s in names)

    def names(self, idx: Iterable[int]) -> tuple[str, ...]:
        return tuple(self.generators[i] for i in sorted(idx))

    def pairs(self):
        """Yield ``(i, j, m)`` for every unordered pair ``i < j``."""
        for i, j in combinations(range(self.rank), 2):
            yield i, j, self.matrix[i][j]

    def is_even(self) -> bool:
        return all(m == INF or m % 2 == 0 for _, _, m in self.pairs())

    def infinite_pairs(self) -> list[tuple[int, int]]:
        return [(i, j) for i, j, m in self.pairs() if m == INF]

    def subgraph(self, names: Iterable[str]) -> CoxeterGraph:
        keep = sorted(self.index(s) for s in set(names))
        gens = tuple(self.generators[i] for i in keep)
        rows = tuple(tuple(self.matrix[i][j] for j in keep) for i in keep)
        return CoxeterGraph(gens, rows)

    def __str__(self) -> str:
        return format_graph(self)


def parse_graph(text: str) -> CoxeterGraph:
    gens: list[str] | None = None
    default = None
    labels: dict[tuple[str, str], int | float] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if line.startswith("generators:"):
            gens = line.split(":", 1)[1].split()
            continue
        if line.startswith("default:"):
            value = line.split(":", 1)[1].strip()
            if value.lower() not in ("2", "inf", "infinity", "∞"):
                raise GraphFormatError(f"line {lineno}: default must be 2 or inf")
            default = _parse_label(value)
            continue
        parts = line.split()
        if len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 's t label', got {raw!r}")
        s, t, m = parts
        try:
            labels[(s, t)] = _parse_label(m)
        except ValueError as exc:
            raise GraphFormatError(f"line {lineno}: {exc}") from None
    if gens is None:
        raise GraphFormatError("missing 'generators:' header")
    if default is None:
        raise GraphFormatError("missing mandatory 'default:' line")
    return CoxeterGraph.from_labels(gens, labels, default)


def load_graph(path: str) -> CoxeterGraph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def format_graph(g: CoxeterGraph) -> str:
    lines = ["generators: " + " ".join(g.generators), "default: 2"]
    for i, j, m in g.pairs():
        if m != 2:
            lines.append(f"{g.generators[i]} {g.generators[j]} {'inf' if m == INF else m}")
    return "\n".join(lines) + "\n"


def standard_graph(kind: str, n: int | None = None, prefix: str = "s") -> CoxeterGraph:
    """Graph of a named type with generators ``s1, s2, ...``.

    ``kind`` is one of ``A B D E F H I`` (``I`` takes the dihedral label as
    ``n``) or ``Atilde`` for the affine cycle on ``t0 ... tn``.

    >>> standard_graph("B", 3).label("s2", "s3")
    4
    >>> standard_graph("I", 5).generators
    ('s1', 's2')
    """
    kind = kind.upper() if kind.lower() != "atilde" else "ATILDE"
    edges: dict[tuple[int, int], int] = {}
    if kind == "I":
        if n is None or n < 2:
            raise ValueError("I needs a label >= 2")
        rank = 2
        if n > 2:
            edges[(1, 2)] = n
    elif kind == "ATILDE":
        if n is None or n < 2:
            raise ValueError("affine type needs n >= 2")
        gens = tuple(f"t{i}" for i in range(n + 1))
        labels = {(gens[i], gens[(i + 1) % (n + 1)]): 3 for i in range(n + 1)}
        return CoxeterGraph.from_labels(gens, labels)
    else:
        if n is None or n < 1:
            raise ValueError("rank must be positive")
        rank = n
        path = [(i, i + 1) for i in range(1, n)]
        if kind == "A":
            edges = {e: 3 for e in path}
        elif kind == "B":
            edges = {e: 3 for e in path}
            if n >= 2:
                edges[(n - 1, n)] = 4
        elif kind == "D":
            if n < 4:
                raise ValueError("D needs rank >= 4")
            edges = {(i, i + 1): 3 for i in range(1, n - 1)}
            edges[(n - 2, n)] = 3
        elif kind == "E":
            if n not in (6, 7, 8):
                raise ValueError("E needs rank 6, 7 or 8")
            edges = {(1, 3): 3, (2, 4): 3, (3, 4): 3}
            edges.update({(i, i + 1): 3 for i in range(4, n)})
        elif kind == "F":
            if n != 4:
                raise ValueError("F needs rank 4")
            edges = {(1, 2): 3, (2, 3): 4, (3, 4): 3}
        elif kind == "H":
            if n not in (3, 4):
                raise ValueError("H needs rank 3 or 4")
            edges = {e: 3 for e in path}
            edges[(1, 2)] = 5
        else:
            raise ValueError(f"unknown type {kind}")
    gens = tuple(f"{prefix}{i}" for i in range(1, rank + 1))
    labels = {(gens[i - 1], gens[j - 1]): m for (i, j), m in edges.items()}
    return CoxeterGraph.from_labels(gens, labels)
