"""Garside arithmetic for spherical-type Artin groups.

Every element is stored in left normal form ``Δ^p x_1 ... x_r``: ``p`` is
an integer and the ``x_i`` are simple elements other than ``1`` and
``Δ``.  Simple elements are in bijection with the finite Coxeter group
``W_X`` (through minimal-length lifts), so a simple is just an element id
of the :class:`~garsidekit.coxeter.FiniteCoxeterGroup` table, and prefix
order on simples is the right weak order on ``W_X``.

A pair ``(x, y)`` of simples is left-weighted when every left descent of
``y`` is already a right descent of ``x``; normal forms are produced by
sliding letters leftwards across pairs until this holds everywhere.

>>> from garsidekit.graph import standard_graph
>>> from garsidekit.words import ArtinWord
>>> g = standard_graph("A", 2)
>>> x = normalize(ArtinWord.parse(g, "s1^-1"))
>>> x.power, [str(f) for f in x.simples()]
(-1, ['s1 s2'])
>>> profile(x)
(-1, 0, 1)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .caps import SEARCH_CAP, ResourceCapExceeded, cap
from .coxeter import (
    CoxeterElement,
    classify_spherical,
    components,
    finite_group,
)
from .graph import CoxeterGraph
from .words import ArtinWord

__all__ = [
    "GarsideStructure",
    "GarsideElement",
    "Simple",
    "Recurrence",
    "structure",
    "lattice",
    "delta",
    "normalize",
    "to_word",
    "right_normal_form",
    "g_mul",
    "g_inv",
    "g_eq",
    "profile",
    "mixed_form",
    "positive_meet",
    "cycling",
    "swap",
    "recurrent",
    "support",
    "center_generator",
    "parabolic_center",
    "member_standard",
    "is_left_weighted",
]


class GarsideStructure:
    """Lookup tables for the Garside structure of ``A_X`` (X spherical)."""

    def __init__(self, graph: CoxeterGraph, X: Iterable[str]):
        self.graph = graph
        self.X = frozenset(X)
        unknown = self.X - set(graph.generators)
        if unknown:
            raise KeyError(f"unknown generators {sorted(unknown)}")
        if classify_spherical(graph, self.X) is None:
            raise ValueError("Garside structure needs a spherical-type subset")
        W = finite_group(graph, self.X)
        self.W = W
        n = W.size
        self.delta = W.longest
        self.dr = list(W.desc_right)
        self.dl = [W.desc_left(u) for u in range(n)]
        d = self.delta
        self.tau = [W.mul(W.mul(d, u), d) for u in range(n)]
        # x' = Δ x^{-1}, so that x^{-1} = Δ^{-1} x'
        self.left_comp = [W.mul(d, W.inverse(u)) for u in range(n)]
        self.full_mask = (1 << W.rank) - 1

    def __eq__(self, other):
        return isinstance(other, GarsideStructure) and (self.graph, self.X) == (other.graph, other.X)

    def __hash__(self):
        return hash((self.graph.generators, self.X))

    def atom(self, name: str) -> int:
        return self.W.right[0][self.W.local[self.graph.index(name)]]

    def atom_index(self, gen: int) -> int:
        try:
            return self.W.right[0][self.W.local[gen]]
        except KeyError:
            raise ValueError(
                f"letter {self.graph.generators[gen]} outside the ambient {sorted(self.X)}"
            ) from None

    def tau_pow(self, u: int, k: int) -> int:
        return self.tau[u] if k % 2 else u

    def letters_of(self, u: int) -> frozenset[str]:
        return frozenset(self.graph.generators[i] for i in self.W.words[u])

    # -- normal form kernels ------------------------------------------------
    def weight_pair(self, a: int, b: int) -> tuple[int, int]:
        """Slide letters of ``b`` into ``a`` until the pair is left-weighted."""
        W = self.W
        while True:
            extra = self.dl[b] & ~self.dr[a]
            if not extra:
                return a, b
            k = (extra & -extra).bit_length() - 1
            a = W.right[a][k]
            b = W.left(b, k)

    def absorb(self, fs: list[int], y: int) -> None:
        """Right-multiply the left-weighted list ``fs`` by the simple ``y``."""
        fs.append(y)
        for i in range(len(fs) - 2, -1, -1):
            a, b = self.weight_pair(fs[i], fs[i + 1])
            if a == fs[i] and b == fs[i + 1]:
                break
            fs[i], fs[i + 1] = a, b

    def finish(self, power: int, fs: list[int]) -> GarsideElement:
        d = self.delta
        start = 0
        while start < len(fs) and fs[start] == d:
            start += 1
        end = len(fs)
        while end > start and fs[end - 1] == 0:
            end -= 1
        return GarsideElement(self, power + start, tuple(fs[start:end]))

    def from_simples(self, power: int, simples: Sequence[int]) -> GarsideElement:
        fs: list[int] = []
        for y in simples:
            if y != 0:
                self.absorb(fs, y)
        return self.finish(power, fs)

    def identity(self) -> GarsideElement:
        return GarsideElement(self, 0, ())

    def delta_element(self, power: int = 1) -> GarsideElement:
        return GarsideElement(self, power, ())

    def simple_element(self, u: int) -> GarsideElement:
        return self.from_simples(0, [u])

    def word(self, text: str | Iterable[str]) -> GarsideElement:
        return normalize(ArtinWord.parse(self.graph, text), self)


def structure(graph: CoxeterGraph, X: Iterable[str] | None = None) -> GarsideStructure:
    X = frozenset(graph.generators if X is None else X)
    key = ("garside", X)
    hit = graph._cache.get(key)
    if hit is None:
        hit = graph._cache[key] = GarsideStructure(graph, X)
    return hit


@dataclass(frozen=True)
class Simple:
    structure: GarsideStructure = field(compare=False)
    id: int

    @property
    def element(self) -> CoxeterElement:
        return self.structure.W.element(self.id)

    @property
    def names(self) -> tuple[str, ...]:
        return self.element.names

    def __str__(self) -> str:
        return str(self.element)


@dataclass(frozen=True)
class GarsideElement:
    """``Δ^power`` times the left-weighted simples ``factors``."""

    structure: GarsideStructure
    power: int
    factors: tuple[int, ...]

    def __post_init__(self):
        s = self.structure
        if any(f in (0, s.delta) for f in self.factors):
            raise ValueError("normal form factors must be proper simples")

    @property
    def graph(self) -> CoxeterGraph:
        return self.structure.graph

    def simples(self) -> list[Simple]:
        return [Simple(self.structure, f) for f in self.factors]

    def is_identity(self) -> bool:
        return self.power == 0 and not self.factors

    def is_positive(self) -> bool:
        return self.power >= 0

    def __mul__(self, other: GarsideElement) -> GarsideElement:
        return g_mul(self, other)

    def inverse(self) -> GarsideElement:
        return g_inv(self)

    def conjugate(self, by: GarsideElement) -> GarsideElement:
        """``by * self * by^-1``."""
        return g_mul(g_mul(by, self), g_inv(by))

    def to_word(self) -> ArtinWord:
        return to_word(self)

    @property
    def inf(self) -> int:
        return self.power

    @property
    def sup(self) -> int:
        return self.power + len(self.factors)

    def key(self) -> tuple[int, tuple[int, ...]]:
        return (self.power, self.factors)

    def __str__(self) -> str:
        parts = []
        if self.power:
            parts.append("Δ" if self.power == 1 else f"Δ^{self.power}")
        parts.extend("(" + str(self.structure.W.element(f)) + ")" for f in self.factors)
        return " ".join(parts) if parts else "1"


def _check(a: GarsideElement, b: GarsideElement) -> None:
    if a.structure != b.structure:
        raise ValueError("elements live in different Garside structures")


def is_left_weighted(s: GarsideStructure, factors: Sequence[int]) -> bool:
    return all(
        (s.dl[b] & ~s.dr[a]) == 0 for a, b in zip(factors, factors[1:])
    )


# ---------------------------------------------------------------------------
# lattice of simples


def _prefix_meet(s: GarsideStructure, a: int, b: int) -> int:
    W = s.W
    c = 0
    while True:
        ra = W.mul(W.inverse(c), a)
        rb = W.mul(W.inverse(c), b)
        common = s.dl[ra] & s.dl[rb]
        if not common:
            return c
        k = (common & -common).bit_length() - 1
        c = W.right[c][k]


def _prefix_join(s: GarsideStructure, a: int, b: int) -> int:
    W = s.W
    for j in range(W.size):  # ids are ordered by length
        if W.is_prefix(a, j) and W.is_prefix(b, j):
            return j
    raise AssertionError("simples always have a join")


def lattice(a: Simple, b: Simple, order: str = "prefix") -> tuple[Simple, Simple]:
    """Meet and join of two simples in prefix or suffix order.

    >>> from garsidekit.graph import standard_graph
    >>> st = structure(standard_graph("A", 2))
    >>> m, j = lattice(Simple(st, st.atom("s1")), Simple(st, st.atom("s2")))
    >>> str(m), str(j)
    ('1', 's1 s2 s1')
    """
    s = a.structure
    if b.structure != s:
        raise ValueError("simples from different structures")
    if order == "prefix":
        return Simple(s, _prefix_meet(s, a.id, b.id)), Simple(s, _prefix_join(s, a.id, b.id))
    if order == "suffix":
        inv = s.W.inverse
        m = _prefix_meet(s, inv(a.id), inv(b.id))
        j = _prefix_join(s, inv(a.id), inv(b.id))
        return Simple(s, inv(m)), Simple(s, inv(j))
    raise ValueError("order must be 'prefix' or 'suffix'")


def delta(graph: CoxeterGraph, X: Iterable[str] | None = None) -> Simple:
    """The Garside element of ``A_X`` as a simple (the longest element of ``W_X``)."""
    s = structure(graph, X)
    return Simple(s, s.delta)


# ---------------------------------------------------------------------------
# normal forms


def normalize(
    w: ArtinWord, ambient: GarsideStructure | Iterable[str] | None = None
) -> GarsideElement:
    """Left normal form of a signed word."""
    s = ambient if isinstance(ambient, GarsideStructure) else structure(w.graph, ambient)
    if w.graph != s.graph:
        raise ValueError("word and structure use different graphs")
    # letters right to left: each s^e is Δ^{-1}·x' or x, and the Δ powers
    # collected on the right are moved across with τ
    power = 0
    simples: list[int] = []
    for gen, e in reversed(w.letters):
        atom = s.atom_index(gen)
        if e == 1:
            simples.append(s.tau_pow(atom, power))
        else:
            simples.append(s.tau_pow(s.left_comp[atom], power))
            power -= 1
    simples.reverse()
    return s.from_simples(power, simples)


def to_word(g: GarsideElement) -> ArtinWord:
    s = g.structure
    dword = s.W.words[s.delta]
    letters: list[tuple[int, int]] = []
    if g.power > 0:
        letters.extend((i, 1) for _ in range(g.power) for i in dword)
    elif g.power < 0:
        letters.extend((i, -1) for _ in range(-g.power) for i in reversed(dword))
    for f in g.factors:
        letters.extend((i, 1) for i in s.W.words[f])
    return ArtinWord(s.graph, tuple(letters))


def _reverse(g: GarsideElement) -> GarsideElement:
    """Image under the anti-automorphism fixing every generator."""
    w = to_word(g)
    return normalize(ArtinWord(w.graph, w.letters[::-1]), g.structure)


def right_normal_form(g: GarsideElement) -> tuple[tuple[int, ...], int]:
    """``(factors, p)`` with ``g = y_1 ... y_r Δ^p`` right-weighted."""
    rev = _reverse(g)
    inv = g.structure.W.inverse
    return tuple(inv(f) for f in reversed(rev.factors)), rev.power


def g_mul(a: GarsideElement, b: GarsideElement) -> GarsideElement:
    _check(a, b)
    s = a.structure
    fs = [s.tau_pow(x, b.power) for x in a.factors]
    for y in b.factors:
        s.absorb(fs, y)
    return s.finish(a.power + b.power, fs)


def g_inv(a: GarsideElement) -> GarsideElement:
    """Inverse, emitted directly in left normal form.

    ``(Δ^p x_1...x_r)^-1 = Δ^-(p+r) · τ^{p+r-1}(x'_r) ··· τ^p(x'_1)`` where
    ``x'_i = Δ x_i^-1`` and ``τ`` is conjugation by ``Δ``.
    """
    s = a.structure
    p, r = a.power, len(a.factors)
    out = tuple(
        s.tau_pow(s.left_comp[a.factors[j - 1]], p + j - 1) for j in range(r, 0, -1)
    )
    return GarsideElement(s, -(p + r), out)


def g_eq(a: GarsideElement, b: GarsideElement) -> bool:
    _check(a, b)
    return a.key() == b.key()


def profile(g: GarsideElement, right: bool = False) -> tuple[int, int, int]:
    """``(inf, sup, canonical length)``, read off either normal form."""
    if right:
        factors, p = right_normal_form(g)
        return p, p + len(factors), len(factors)
    return g.power, g.power + len(g.factors), len(g.factors)


# ---------------------------------------------------------------------------
# mixed forms, gcd of positive elements


def _head(g: GarsideElement) -> int:
    s = g.structure
    if g.power > 0:
        return s.delta
    return g.factors[0] if g.factors else 0


def positive_meet(a: GarsideElement, b: GarsideElement) -> GarsideElement:
    """Greatest common prefix of two positive elements."""
    _check(a, b)
    if a.power < 0 or b.power < 0:
        raise ValueError("meet is only defined here for positive elements")
    s = a.structure
    c = s.identity()
    while True:
        ra = g_mul(g_inv(c), a)
        rb = g_mul(g_inv(c), b)
        m = _prefix_meet(s, _head(ra), _head(rb))
        if m == 0:
            return c
        c = g_mul(c, s.simple_element(m))


def mixed_form(g: GarsideElement, kind: str = "np") -> tuple[GarsideElement, GarsideElement]:
    """``np``: ``g = a^-1 b``; ``pn``: ``g = a b^-1``; ``a``, ``b`` positive and coprime."""
    s = g.structure
    if kind == "pn":
        A, B = mixed_form(_reverse(g), "np")
        return _reverse(B), _reverse(A)
    if kind != "np":
        raise ValueError("kind must be 'np' or 'pn'")
    if g.power >= 0:
        return s.identity(), g
    k = min(-g.power, len(g.factors))
    negative = GarsideElement(s, g.power, g.factors[:k])
    return g_inv(negative), GarsideElement(s, 0, g.factors[k:])


# ---------------------------------------------------------------------------
# conjugation dynamics


def cycling(g: GarsideElement) -> tuple[GarsideElement, GarsideElement]:
    """``(c^-1 g c, c)`` with ``c = Δ^p x_1 Δ^-p``."""
    if not g.factors:
        raise ValueError("cycling needs at least one non-Δ factor")
    s = g.structure
    c = s.tau_pow(g.factors[0], g.power)
    result = s.from_simples(g.power, list(g.factors[1:]) + [c])
    return result, s.simple_element(c)


def swap(g: GarsideElement) -> tuple[GarsideElement, GarsideElement]:
    """``(b a^-1, a)`` for ``g = a^-1 b``; the result equals ``a g a^-1``."""
    a, b = mixed_form(g, "np")
    return g_mul(b, g_inv(a)), a


@dataclass
class Recurrence:
    witness: GarsideElement
    conjugator: GarsideElement
    circuit: list[GarsideElement]
    trace: list[tuple[int, int]]


def recurrent(g: GarsideElement, limit: int | None = None) -> Recurrence:
    """Iterate the swap until it cycles.

    ``witness = conjugator * g * conjugator^-1`` is the first repeated
    iterate, and ``circuit`` lists the cycle starting at the witness.
    """
    limit = cap(SEARCH_CAP) if limit is None else limit
    seen: dict[tuple, int] = {}
    states: list[GarsideElement] = []
    conjugators: list[GarsideElement] = []
    trace: list[tuple[int, int]] = []
    x, c = g, g.structure.identity()
    while x.key() not in seen:
        if len(states) >= limit:
            raise ResourceCapExceeded(f"swap iteration exceeded {limit} steps")
        seen[x.key()] = len(states)
        states.append(x)
        conjugators.append(c)
        trace.append((x.inf, x.sup))
        x, a = swap(x)
        c = g_mul(a, c)
    start = seen[x.key()]
    return Recurrence(states[start], conjugators[start], states[start:], trace)


def support(g: GarsideElement) -> frozenset[str]:
    """Generators occurring in the np mixed form of ``g``."""
    s = g.structure
    out: set[str] = set()
    for part in mixed_form(g, "np"):
        if part.power > 0:
            out |= s.X
        for f in part.factors:
            out |= s.letters_of(f)
    return frozenset(out)


def member_standard(g: GarsideElement, Y: Iterable[str]) -> bool:
    return support(g) <= frozenset(Y)


# ---------------------------------------------------------------------------
# central elements


def center_generator(
    graph: CoxeterGraph, X: Iterable[str], ambient: GarsideStructure | None = None
) -> GarsideElement:
    """``(s_1 ... s_n)^k`` for an irreducible spherical X, ``k`` from the type table.

    Generators are multiplied in declaration order.
    """
    X = frozenset(X)
    types = classify_spherical(graph, X)
    if types is None:
        raise ValueError("subset is not of spherical type")
    if len(types) != 1:
        raise ValueError("subset is reducible; use parabolic_center for the product")
    t = types[0]
    s = ambient or structure(graph, X)
    word = ArtinWord.positive(graph, [graph.index(n) for n in t.generators] * t.k_delta)
    return normalize(word, s)


def parabolic_center(
    graph: CoxeterGraph, X: Iterable[str], ambient: GarsideStructure | None = None
) -> GarsideElement:
    """Product of the componentwise central elements (identity for X empty)."""
    s = ambient or structure(graph, X)
    z = s.identity()
    for comp in components(graph, X):
        z = g_mul(z, center_generator(graph, comp, s))
    return z
