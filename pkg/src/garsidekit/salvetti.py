"""Word retraction onto a standard parabolic subgroup, for any Artin group.

Reading a word letter by letter, we keep the prefix image ``u_j`` in the
Coxeter group and split it as ``u_j = u'_j u''_j`` with ``u'_j ∈ W_X``
and ``u''_j`` the shortest element of the coset ``W_X u_j``.  The letter
``s^ε`` is conjugated into ``x_j = u'' s u''^-1`` (using ``u''_{j-1}`` for
``ε = +1`` and ``u''_j`` for ``ε = -1``); it survives as ``σ_{x_j}^ε``
exactly when ``x_j`` is a generator in ``X`` and is dropped otherwise.

The map is a retraction on words over ``X`` and sends equal elements to
equal elements of ``A_X``.

>>> from garsidekit.graph import CoxeterGraph
>>> g = CoxeterGraph.from_labels("abc", {("b", "c"): 2}, default=3)
>>> w, _ = retract_word(ArtinWord.parse(g, "a b^-1 c"), {"a", "c"})
>>> str(w)
'a c'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional

from .caps import SEARCH_CAP, ResourceCapExceeded, cap
from .coxeter import CoxeterElement, coset_split, cox_inv, cox_mul, identity, theta
from .garside import GarsideStructure, normalize, structure, support
from .graph import CoxeterGraph
from .words import ArtinWord

__all__ = [
    "LetterRecord",
    "RetractionTrace",
    "retract_word",
    "member_standard_general",
    "garside_oracle",
    "restandardise_word",
    "ConvexityReport",
    "convexity_scan",
]

EqualityOracle = Callable[[ArtinWord, ArtinWord], Optional[bool]]


@dataclass
class LetterRecord:
    letter: tuple[str, int]
    u: CoxeterElement
    u_head: CoxeterElement
    u_tail: CoxeterElement
    x: Optional[str]
    chi: Optional[tuple[str, int]]

    def to_json(self) -> dict:
        return {
            "letter": self.letter[0] + ("" if self.letter[1] == 1 else "^-1"),
            "u": list(self.u.names),
            "uPrime": list(self.u_head.names),
            "uDoublePrime": list(self.u_tail.names),
            "x": self.x,
            "chi": None if self.chi is None else self.chi[0] + ("" if self.chi[1] == 1 else "^-1"),
        }


@dataclass
class RetractionTrace:
    word: ArtinWord
    X: frozenset[str]
    records: list[LetterRecord] = field(default_factory=list)
    output: Optional[ArtinWord] = None

    def to_json(self) -> dict:
        return {
            "input": str(self.word),
            "X": list(self.word.graph.names(self.word.graph.indices(self.X))),
            "letters": [r.to_json() for r in self.records],
            "output": str(self.output) if self.output is not None else None,
        }


def retract_word(w: ArtinWord, X: Iterable[str]) -> tuple[ArtinWord, RetractionTrace]:
    g = w.graph
    X = frozenset(X)
    xs = g.indices(X)
    trace = RetractionTrace(w, X)
    u = identity(g)
    tail_prev = identity(g)
    out: list[tuple[int, int]] = []
    for gen, e in w.letters:
        s = CoxeterElement(g, (gen,))
        u = cox_mul(u, s)
        head, tail = coset_split(u, X)
        conj_by = tail_prev if e == 1 else tail
        x = cox_mul(cox_mul(conj_by, s), cox_inv(conj_by))
        chi = None
        x_name = None
        if x.length == 1:
            x_name = g.generators[x.word[0]]
            if x.word[0] in xs:
                chi = (x.word[0], e)
                out.append(chi)
        trace.records.append(
            LetterRecord(
                (g.generators[gen], e), u, head, tail, x_name,
                None if chi is None else (g.generators[chi[0]], e),
            )
        )
        tail_prev = tail
    result = ArtinWord(g, tuple(out))
    trace.output = result
    return result, trace


def restandardise_word(
    beta: ArtinWord, Z: Iterable[str], X: Iterable[str]
) -> tuple[ArtinWord, frozenset[str]]:
    """Rewrite ``β A_Z β^-1 ⊆ A_X`` as ``α A_Y α^-1`` with ``α`` a word over X.

    Works in any Artin group.  With ``g = θ(β)`` split as ``g = x d' z``
    (``x ∈ W_X``, ``z ∈ W_Z``, ``d'`` minimal in its double coset), ``d'``
    conjugates Z onto a subset Y of X and ``ι(g) A_Z ι(g)^-1 = ι(x) A_Y ι(x)^-1``.
    The remaining factor ``β ι(g)^-1`` lies in the kernel of θ, and conjugating
    ``A_X`` by it agrees with conjugating by its retraction onto ``A_X``.
    The containment ``β A_Z β^-1 ⊆ A_X`` is a precondition; when it fails
    the Coxeter step usually detects it and raises ``ValueError``.
    """
    g = beta.graph
    Z = frozenset(Z)
    X = frozenset(X)
    image = theta(beta)
    x, d = coset_split(image, X)
    zinv, dmin_inv = coset_split(cox_inv(d), Z)
    dmin = cox_inv(dmin_inv)
    Y = set()
    for name in Z:
        s = CoxeterElement(g, (g.index(name),))
        c = cox_mul(cox_mul(dmin, s), dmin_inv)
        if c.length != 1 or g.generators[c.word[0]] not in X:
            raise ValueError("conjugate is not contained in A_X")
        Y.add(g.generators[c.word[0]])
    iota_g = ArtinWord.positive(g, image.word)
    beta1 = (beta * iota_g.inverse()).free_reduce()
    projected, _ = retract_word(beta1, X)
    alpha = (projected * ArtinWord.positive(g, x.word)).free_reduce()
    return alpha, frozenset(Y)


# ---------------------------------------------------------------------------
# membership


def garside_oracle(s: GarsideStructure) -> EqualityOracle:
    """Word equality in a spherical-type ambient."""

    def equal(a: ArtinWord, b: ArtinWord) -> bool:
        return normalize(a, s).key() == normalize(b, s).key()

    return equal


def member_standard_general(
    w: ArtinWord, X: Iterable[str], oracle: EqualityOracle | None
) -> Optional[bool]:
    """Whether ``w`` represents an element of ``A_X``; ``None`` when undecided.

    An element of ``A_X`` equals its retraction, and anything equal to a
    word over X lies in ``A_X``, so one equality query settles membership.
    """
    X = frozenset(X)
    if w.support() <= w.graph.indices(X):
        return True
    if oracle is None:
        return None
    retracted, _ = retract_word(w, X)
    return oracle(w, retracted)


# ---------------------------------------------------------------------------
# convexity scan


@dataclass
class ConvexityReport:
    X: frozenset[str]
    max_length: int
    elements_scanned: int
    members: int
    violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "X": sorted(self.X),
            "maxLength": self.max_length,
            "elementsScanned": self.elements_scanned,
            "membersOfAX": self.members,
            "violations": self.violations,
            "passed": self.passed,
        }


def convexity_scan(
    graph: CoxeterGraph, X: Iterable[str], max_length: int, max_reported: int = 10
) -> ConvexityReport:
    """Check that every geodesic word of an element of ``A_X`` uses only X.

    Breadth-first search over the word metric of the whole (spherical)
    group.  A geodesic word for ``g`` is a path in the BFS layering, so
    ``g`` has only X-geodesics iff every edge entering it from the previous
    layer is labelled by an X letter and starts at a vertex with the same
    property.
    """
    X = frozenset(X)
    s = structure(graph)
    xs = graph.indices(X)
    limit = cap(SEARCH_CAP)
    letters = [(i, e) for i in range(graph.rank) for e in (1, -1)]
    steps = {l: normalize(ArtinWord(graph, (l,)), s) for l in letters}
    start = s.identity()
    dist = {start.key(): 0}
    clean = {start.key(): True}
    witness = {start.key(): ()}
    elements = {start.key(): start}
    frontier = [start]
    for depth in range(1, max_length + 1):
        nxt = []
        for g in frontier:
            gk = g.key()
            for l in letters:
                h = g * steps[l]
                hk = h.key()
                if hk not in dist:
                    dist[hk] = depth
                    clean[hk] = True
                    witness[hk] = witness[gk] + (l,)
                    elements[hk] = h
                    nxt.append(h)
                    if len(dist) > limit:
                        raise ResourceCapExceeded(f"word ball exceeded {limit} elements")
                if dist[hk] == depth:
                    ok = clean[gk] and l[0] in xs
                    if not ok and clean[hk]:
                        # this geodesic leaves X somewhere: keep it as evidence
                        clean[hk] = False
                        witness[hk] = witness[gk] + (l,)
        frontier = nxt
    members = 0
    violations = []
    for key, h in elements.items():
        if support(h) <= X:
            members += 1
            if not clean[key] and len(violations) < max_reported:
                violations.append(str(ArtinWord(graph, witness[key])))
    return ConvexityReport(X, max_length, len(elements), members, violations)
