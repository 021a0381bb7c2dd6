"""Coxeter group arithmetic by braid-move rewriting.

The word problem is solved combinatorially.  A word is reduced exactly
when no member of its braid-move orbit contains two equal adjacent
letters, so reducing a word amounts to walking its orbit, cancelling a
square whenever one shows up, and repeating.  The canonical
representative of an element is the ShortLex-least reduced word, with
letters ordered by their declaration order in the graph.

Reduction is incremental (left to right) and memoised per graph: every
member of a computed orbit is mapped to the canonical word, and the first
and last letters seen in the orbit give the left and right descent sets
for free.

>>> from garsidekit.graph import standard_graph
>>> g = standard_graph("A", 2)
>>> reduce(g, ["s1", "s2", "s1", "s2"]).names
('s2', 's1')
>>> reduce(g, ["s2", "s1", "s2"]).names
('s1', 's2', 's1')
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from .caps import GROUP_SIZE_CAP, ORBIT_CAP, ResourceCapExceeded, cap
from .graph import INF, CoxeterGraph
from .words import ArtinWord

__all__ = [
    "CoxeterElement",
    "ComponentType",
    "FiniteCoxeterGroup",
    "reduce",
    "cox_mul",
    "cox_eq",
    "cox_inv",
    "descents",
    "coset_split",
    "classify_spherical",
    "is_spherical",
    "theta",
    "finite_group",
    "positive_words_equal",
]


# ---------------------------------------------------------------------------
# braid-move orbits


def _alternating(a: int, b: int, length: int) -> tuple[int, ...]:
    return tuple(a if k % 2 == 0 else b for k in range(length))


def _braid_neighbours(graph: CoxeterGraph, word: tuple[int, ...]):
    n = len(word)
    for i in range(n - 1):
        a, b = word[i], word[i + 1]
        if a == b:
            continue
        m = graph.matrix[a][b]
        if m == INF or i + m > n:
            continue
        if word[i : i + m] == _alternating(a, b, m):
            yield word[:i] + _alternating(b, a, m) + word[i + m :]


def positive_words_equal(graph: CoxeterGraph, a: Sequence[int], b: Sequence[int]) -> bool:
    """Equality of two positive words in the Artin group, for any graph.

    The positive monoid embeds in the group, and two positive words are
    equal in the monoid iff braid moves connect them, so the orbit search
    is a complete decision.
    """
    a, b = tuple(a), tuple(b)
    # braid moves keep the length and the set of letters
    if len(a) != len(b) or set(a) != set(b):
        return False
    limit = cap(ORBIT_CAP)
    seen = {a}
    queue = deque([a])
    while queue:
        w = queue.popleft()
        if w == b:
            return True
        for nb in _braid_neighbours(graph, w):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > limit:
                    raise ResourceCapExceeded(f"positive braid orbit exceeded {limit} members")
                queue.append(nb)
    return False


@dataclass
class _OrbitInfo:
    canonical: tuple[int, ...]
    right_ends: dict[int, tuple[int, ...]]  # s -> a reduced word ending in s
    left_starts: dict[int, tuple[int, ...]]


def _memo(graph: CoxeterGraph) -> tuple[dict, dict]:
    canon = graph._cache.get("tits_canon")
    if canon is None:
        canon = graph._cache["tits_canon"] = {(): ()}
        graph._cache["tits_info"] = {(): _OrbitInfo((), {}, {})}
    return canon, graph._cache["tits_info"]


def _explore(graph: CoxeterGraph, word: tuple[int, ...]):
    """Walk the braid orbit of ``word``.

    Returns ``("square", w)`` with ``w`` an orbit member holding two equal
    adjacent letters, or ``("orbit", members)`` when the word is reduced.
    """
    limit = cap(ORBIT_CAP)
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if w[i] == w[i + 1]:
                return "square", w[:i] + w[i + 2 :]
        for nb in _braid_neighbours(graph, w):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > limit:
                    raise ResourceCapExceeded(
                        f"braid orbit of a length-{len(word)} word exceeded {limit} members"
                    )
                queue.append(nb)
    return "orbit", seen


def _register(graph: CoxeterGraph, members: set) -> tuple[int, ...]:
    canon, info = _memo(graph)
    best = min(members)
    right: dict[int, tuple[int, ...]] = {}
    left: dict[int, tuple[int, ...]] = {}
    for w in members:
        canon[w] = best
        if w:
            right.setdefault(w[-1], w)
            left.setdefault(w[0], w)
    info[best] = _OrbitInfo(best, right, left)
    return best


def _canonical_reduced(graph: CoxeterGraph, word: tuple[int, ...]) -> tuple[int, ...]:
    """Canonical form of a word already known to be reduced."""
    canon, _ = _memo(graph)
    hit = canon.get(word)
    if hit is not None:
        return hit
    kind, data = _explore(graph, word)
    if kind == "square":
        raise AssertionError("word expected to be reduced")
    return _register(graph, data)


def _step(graph: CoxeterGraph, u: tuple[int, ...], s: int) -> tuple[int, ...]:
    """Canonical form of ``u * s`` for canonical ``u``."""
    canon, info = _memo(graph)
    rec = info.get(u)
    if rec is None:
        u = _canonical_reduced(graph, u)
        rec = info[u]
    ending = rec.right_ends.get(s)
    if ending is not None:
        return _canonical_reduced(graph, ending[:-1])
    return _canonical_reduced(graph, u + (s,))


def _reduce_indices(graph: CoxeterGraph, word: Sequence[int]) -> tuple[int, ...]:
    canon, _ = _memo(graph)
    hit = canon.get(tuple(word))
    if hit is not None:
        return hit
    cur: tuple[int, ...] = ()
    for s in word:
        cur = _step(graph, cur, s)
    return cur


def _as_indices(graph: CoxeterGraph, word) -> tuple[int, ...]:
    if isinstance(word, ArtinWord):
        return word.generators()
    if isinstance(word, str):
        word = word.split()
    out = []
    for x in word:
        if isinstance(x, str):
            out.append(graph.index(x))
        else:
            if not 0 <= x < graph.rank:
                raise KeyError(f"generator index {x} outside the graph")
            out.append(int(x))
    return tuple(out)


# ---------------------------------------------------------------------------
# elements


@dataclass(frozen=True)
class CoxeterElement:
    """An element of W stored as its canonical (ShortLex-least) reduced word."""

    graph: CoxeterGraph
    word: tuple[int, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(self.graph.generators[i] for i in self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __mul__(self, other: CoxeterElement) -> CoxeterElement:
        return cox_mul(self, other)

    def inverse(self) -> CoxeterElement:
        return cox_inv(self)

    def __str__(self) -> str:
        return " ".join(self.names) if self.word else "1"


def reduce(graph: CoxeterGraph, word: Iterable[str] | Iterable[int] | str) -> CoxeterElement:
    """Canonical reduced form of a positive word (names or indices)."""
    return CoxeterElement(graph, _reduce_indices(graph, _as_indices(graph, word)))


def identity(graph: CoxeterGraph) -> CoxeterElement:
    return CoxeterElement(graph, ())


def generator(graph: CoxeterGraph, name: str) -> CoxeterElement:
    return CoxeterElement(graph, (graph.index(name),))


def _same(u: CoxeterElement, v: CoxeterElement):
    if u.graph != v.graph:
        raise ValueError("elements belong to different Coxeter groups")


def cox_mul(u: CoxeterElement, v: CoxeterElement) -> CoxeterElement:
    _same(u, v)
    cur = u.word
    for s in v.word:
        cur = _step(u.graph, cur, s)
    return CoxeterElement(u.graph, cur)


def cox_eq(u: CoxeterElement, v: CoxeterElement) -> bool:
    _same(u, v)
    return u.word == v.word


def cox_inv(u: CoxeterElement) -> CoxeterElement:
    return CoxeterElement(u.graph, _canonical_reduced(u.graph, u.word[::-1]))


def _info(u: CoxeterElement) -> _OrbitInfo:
    _canonical_reduced(u.graph, u.word)
    return _memo(u.graph)[1][u.word]


def right_descent_indices(u: CoxeterElement) -> frozenset[int]:
    return frozenset(_info(u).right_ends)


def left_descent_indices(u: CoxeterElement) -> frozenset[int]:
    return frozenset(_info(u).left_starts)


def descents(u: CoxeterElement) -> tuple[frozenset[str], frozenset[str]]:
    """``(left, right)`` descent sets as generator names."""
    g = u.graph
    return (
        frozenset(g.generators[i] for i in left_descent_indices(u)),
        frozenset(g.generators[i] for i in right_descent_indices(u)),
    )


def coset_split(u: CoxeterElement, X: Iterable[str]) -> tuple[CoxeterElement, CoxeterElement]:
    """Split ``u = u0 * u1`` with ``u0`` in ``W_X`` and ``u1`` minimal in ``W_X u1``."""
    g = u.graph
    xs = g.indices(X)
    head: list[int] = []
    rest = u
    while True:
        lefts = left_descent_indices(rest) & xs
        if not lefts:
            break
        x = min(lefts)
        head.append(x)
        rest = cox_mul(CoxeterElement(g, (x,)), rest)
    return reduce(g, head), rest


def in_parabolic(u: CoxeterElement, X: Iterable[str]) -> bool:
    """Whether ``u`` lies in ``W_X`` (every reduced word uses only X)."""
    return set(u.names) <= set(X)


def theta(w: ArtinWord) -> CoxeterElement:
    """Image in W: forget the signs and reduce."""
    return CoxeterElement(w.graph, _reduce_indices(w.graph, w.generators()))


# ---------------------------------------------------------------------------
# classification of spherical subsets


@dataclass(frozen=True)
class ComponentType:
    name: str
    rank: int
    k_delta: int
    generators: tuple[str, ...]
    order: int

    def as_tuple(self) -> tuple[str, int, int]:
        return (self.name, self.rank, self.k_delta)


def _factorial(n: int) -> int:
    out = 1
    for k in range(2, n + 1):
        out *= k
    return out


def _k_delta(family: str, n: int, p: int = 0) -> int:
    if family == "A":
        return 1 if n == 1 else n + 1
    if family == "B":
        return n
    if family == "D":
        return n - 1 if n % 2 == 0 else 2 * n - 2
    if family == "E":
        return {6: 12, 7: 9, 8: 15}[n]
    if family == "F":
        return 6
    if family == "H":
        return {3: 5, 4: 15}[n]
    if family == "I":
        return p // 2 if p % 2 == 0 else p
    raise ValueError(family)


def _group_order(family: str, n: int, p: int = 0) -> int:
    if family == "A":
        return _factorial(n + 1)
    if family == "B":
        return 2**n * _factorial(n)
    if family == "D":
        return 2 ** (n - 1) * _factorial(n)
    if family == "E":
        return {6: 51_840, 7: 2_903_040, 8: 696_729_600}[n]
    if family == "F":
        return 1152
    if family == "H":
        return {3: 120, 4: 14_400}[n]
    return 2 * p


def _identify(graph: CoxeterGraph, comp: list[int]) -> ComponentType | None:
    names = tuple(graph.generators[i] for i in comp)
    n = len(comp)

    def make(family: str, p: int = 0, label: str | None = None):
        return ComponentType(
            label or f"{family}{n}", n, _k_delta(family, n, p), names, _group_order(family, n, p)
        )

    if n == 1:
        return make("A")
    edges = {
        (i, j): graph.matrix[i][j]
        for i, j in combinations(comp, 2)
        if graph.matrix[i][j] != 2
    }
    if any(m == INF for m in edges.values()):
        return None
    if n == 2:
        (m,) = edges.values()
        if m == 3:
            return make("A")
        if m == 4:
            return make("B")
        return make("I", m, f"I2({m})")
    if len(edges) != n - 1 or any(m not in (3, 4, 5) for m in edges.values()):
        return None
    adj: dict[int, list[int]] = {i: [] for i in comp}
    for i, j in edges:
        adj[i].append(j)
        adj[j].append(i)
    degrees = {i: len(v) for i, v in adj.items()}
    if max(degrees.values()) > 3:
        return None
    special = [(e, m) for e, m in edges.items() if m != 3]
    if len(special) > 1:
        return None
    branches = [i for i, d in degrees.items() if d == 3]
    if branches:
        if special or len(branches) > 1:
            return None
        centre = branches[0]
        arms = []
        for start in adj[centre]:
            length, prev, cur = 1, centre, start
            while degrees[cur] == 2:
                nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
                prev, cur = cur, nxt
                length += 1
            arms.append(length)
        arms.sort()
        if arms[0] == 1 and arms[1] == 1:
            return make("D")
        if arms[:2] == [1, 2] and arms[2] in (2, 3, 4):
            return make("E")
        return None
    if not special:
        return make("A")
    (i, j), m = special[0]
    at_end = degrees[i] == 1 or degrees[j] == 1
    if m == 4:
        if at_end:
            return make("B")
        if n == 4:
            return make("F")
        return None
    if at_end and n in (3, 4):
        return make("H")
    return None


def _components(graph: CoxeterGraph, xs: Iterable[int]) -> list[list[int]]:
    remaining = sorted(set(xs))
    comps: list[list[int]] = []
    seen: set[int] = set()
    for start in remaining:
        if start in seen:
            continue
        comp, stack = [], [start]
        seen.add(start)
        while stack:
            i = stack.pop()
            comp.append(i)
            for j in remaining:
                if j not in seen and graph.matrix[i][j] != 2:
                    seen.add(j)
                    stack.append(j)
        comps.append(sorted(comp))
    return comps


def components(graph: CoxeterGraph, X: Iterable[str]) -> list[tuple[str, ...]]:
    """Connected components of the subgraph on X (edges are labels other than 2)."""
    return [graph.names(c) for c in _components(graph, graph.indices(X))]


def classify_spherical(graph: CoxeterGraph, X: Iterable[str]) -> list[ComponentType] | None:
    """Irreducible types of the components of X, or ``None`` if W_X is infinite.

    >>> from garsidekit.graph import standard_graph
    >>> [c.as_tuple() for c in classify_spherical(standard_graph("A", 3), ["s1", "s2", "s3"])]
    [('A3', 3, 4)]
    """
    out = []
    for comp in _components(graph, graph.indices(X)):
        t = _identify(graph, comp)
        if t is None:
            return None
        out.append(t)
    return out


def is_spherical(graph: CoxeterGraph, X: Iterable[str]) -> bool:
    return classify_spherical(graph, X) is not None


# ---------------------------------------------------------------------------
# finite parabolic subgroups as explicit tables


class FiniteCoxeterGroup:
    """All elements of a parabolic ``W_X`` (or a ball of it) with Cayley tables.

    Elements are numbered level by level; ``0`` is the identity.  The
    table is built without any word rewriting: two products ``u*s`` and
    ``v*t`` (``s != t``) of the same length coincide exactly when both
    ``s`` and ``t`` are right descents of the product, which happens iff
    ``u`` ends in an alternating ``t s t ...`` string of length
    ``m(s,t) - 1`` and ``v`` in the matching ``s t s ...`` string.
    """

    def __init__(self, graph: CoxeterGraph, X: Iterable[str], max_length: int | None = None):
        self.graph = graph
        self.gens = tuple(sorted(graph.indices(X)))
        self.rank = len(self.gens)
        self.local = {g: k for k, g in enumerate(self.gens)}
        self.max_length = max_length
        self._build()

    def _build(self):
        r = self.rank
        mloc = [[self.graph.matrix[a][b] for b in self.gens] for a in self.gens]
        limit = cap(GROUP_SIZE_CAP)
        right: list[list[int | None]] = [[None] * r]
        desc = [0]
        length = [0]
        words: list[tuple[int, ...]] = [()]
        current = [0]
        level = 0
        while current and (self.max_length is None or level < self.max_length):
            nxt = []
            for u in current:
                for s in range(r):
                    if right[u][s] is not None:
                        continue
                    merges = []
                    for t in range(r):
                        if t == s or mloc[s][t] == INF:
                            continue
                        m = mloc[s][t]
                        cur, ok = u, True
                        for i in range(m - 1):
                            a = t if i % 2 == 0 else s
                            if not (desc[cur] >> a) & 1:
                                ok = False
                                break
                            cur = right[cur][a]
                        if not ok:
                            continue
                        v = cur
                        for a in reversed([s if i % 2 == 0 else t for i in range(m - 1)]):
                            v = right[v][a]
                        merges.append((t, v))
                    new = len(right)
                    if new >= limit:
                        raise ResourceCapExceeded(f"parabolic subgroup larger than {limit} elements")
                    right.append([None] * r)
                    desc.append(1 << s)
                    length.append(level + 1)
                    right[u][s] = new
                    right[new][s] = u
                    best = words[u] + (self.gens[s],)
                    for t, v in merges:
                        right[v][t] = new
                        right[new][t] = v
                        desc[new] |= 1 << t
                        cand = words[v] + (self.gens[t],)
                        if cand < best:
                            best = cand
                    words.append(best)
                    nxt.append(new)
            current = nxt
            level += 1
        self.right = right
        self.desc_right = desc
        self.lengths = length
        self.words = words
        self.index = {w: i for i, w in enumerate(words)}
        self.size = len(words)
        self._left: list[list[int]] | None = None
        self._inverse: list[int] | None = None
        self.longest = max(range(self.size), key=lambda i: length[i])

    # basic arithmetic -----------------------------------------------------
    def rmul_gen(self, u: int, k: int) -> int:
        return self.right[u][k]

    def id_of_word(self, word: Iterable[int]) -> int:
        """Element id of a word of global generator indices (must lie in W_X)."""
        u = 0
        for g in word:
            u = self.right[u][self.local[g]]
            if u is None:
                raise ResourceCapExceeded("word leaves the enumerated ball")
        return u

    def mul(self, u: int, v: int) -> int:
        for g in self.words[v]:
            u = self.right[u][self.local[g]]
        return u

    def inverse(self, u: int) -> int:
        if self._inverse is None:
            self._inverse = [self.id_of_word(w[::-1]) for w in self.words]
        return self._inverse[u]

    def left(self, u: int, k: int) -> int:
        if self._left is None:
            self._left = [
                [self.id_of_word((g,) + w) for g in self.gens] for w in self.words
            ]
        return self._left[u][k]

    def desc_left(self, u: int) -> int:
        inv = self.inverse(u)
        return self.desc_right[inv]

    def element(self, u: int) -> CoxeterElement:
        return CoxeterElement(self.graph, self.words[u])

    def id_of(self, e: CoxeterElement) -> int:
        return self.index[e.word]

    def is_prefix(self, a: int, b: int) -> bool:
        """``a <= b`` in the right weak order: ``l(a) + l(a^-1 b) = l(b)``."""
        return self.lengths[a] + self.lengths[self.mul(self.inverse(a), b)] == self.lengths[b]


def finite_group(graph: CoxeterGraph, X: Iterable[str]) -> FiniteCoxeterGroup:
    """Memoised table for a spherical subset X."""
    key = ("finite_group", frozenset(X))
    hit = graph._cache.get(key)
    if hit is None:
        types = classify_spherical(graph, X)
        if types is None:
            raise ValueError("subset is not of spherical type")
        order = 1
        for t in types:
            order *= t.order
        limit = cap(GROUP_SIZE_CAP)
        if order > limit:
            raise ResourceCapExceeded(f"W_X has {order} elements, above the cap {limit}")
        hit = graph._cache[key] = FiniteCoxeterGroup(graph, X)
    return hit
