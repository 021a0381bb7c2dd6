"""Letter-filter retractions of even Artin groups and what they buy.

When every label is even or ∞, deleting the letters outside ``X`` sends
each defining relation to a word that freely reduces to the identity (or to
a relation of ``A_X``), so the filter ``ρ_X`` is a homomorphism onto
``A_X`` fixing ``A_X``.  Two consequences are implemented here:

* the reduction of ``f A_X f^-1 ∩ g A_Y g^-1`` to an intersection of two
  conjugates of ``A_{X∩Y}``, with the explicit witnesses ``x`` and ``y``;
* equality of ``g A_X g^-1`` and ``h A_X h^-1`` whenever one contains the
  other.

Even groups need not have a solvable word problem in this library, so
membership questions are answered by sound semi-decisions: a positive
answer comes with a syntactic proof and a negative one with a retraction
onto a subgroup where the question is decidable.

>>> from garsidekit.graph import CoxeterGraph, INF
>>> g = CoxeterGraph.from_labels("ab", {("a", "b"): INF})
>>> str(rho(ArtinWord.parse(g, "a b a^-1"), {"a"}))
'a a^-1'
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .caps import SEARCH_CAP, ResourceCapExceeded, cap
from .coxeter import components, is_spherical
from .garside import normalize, structure, support
from .graph import INF, CoxeterGraph
from .words import ArtinWord

__all__ = [
    "OddLabelError",
    "even_graph_example",
    "rho",
    "direct_split",
    "member_standard_even",
    "EvenReduction",
    "even_intersect_reduce",
    "CrossCheck",
    "even_cross_check",
    "conjugate_containment_check",
]


class OddLabelError(ValueError):
    """The ambient graph has an odd label, so letter filters are not homomorphisms."""


def _require_even(graph: CoxeterGraph) -> None:
    if not graph.is_even():
        odd = [graph.names((i, j)) for i, j, m in graph.pairs() if m != INF and m % 2]
        raise OddLabelError(f"odd labels present: {odd}")


def even_graph_example() -> CoxeterGraph:
    """Six generators: a–b 4, c–d 6, c–e ∞, d–f 8, e–f ∞, every other pair commuting."""
    return CoxeterGraph.from_labels(
        "abcdef",
        {("a", "b"): 4, ("c", "d"): 6, ("c", "e"): INF, ("d", "f"): 8, ("e", "f"): INF},
        default=2,
    )


def rho(w: ArtinWord, X: Iterable[str]) -> ArtinWord:
    """Delete the letters outside X, keeping signs and order (no reduction)."""
    _require_even(w.graph)
    keep = w.graph.indices(X)
    return ArtinWord(w.graph, tuple(l for l in w.letters if l[0] in keep))


def direct_split(graph: CoxeterGraph) -> list[frozenset[str]]:
    """Generator sets of the direct factors (components of the non-commuting graph)."""
    return [frozenset(c) for c in components(graph, graph.generators)]


# ---------------------------------------------------------------------------
# membership semi-decision


def _filter(w: ArtinWord, keep: frozenset[int]) -> ArtinWord:
    return ArtinWord(w.graph, tuple(l for l in w.letters if l[0] in keep))


def _probe_sets(graph: CoxeterGraph, comp: frozenset[str]) -> list[frozenset[str]]:
    """Subsets of a factor on which membership is decidable: spherical sets and ∞-pairs."""
    names = sorted(comp, key=graph.index)
    out = []
    for r in range(1, min(len(names), 3) + 1):
        for T in combinations(names, r):
            T = frozenset(T)
            if is_spherical(graph, T):
                out.append(T)
            elif r == 2 and graph.label(*T) == INF:
                out.append(T)
    return out


def _decide_in(w: ArtinWord, T: frozenset[str], X: frozenset[str]) -> bool:
    """Exact membership of a word over T in ``A_{X∩T}``, for T spherical or a free pair."""
    graph = w.graph
    if is_spherical(graph, T):
        return support(normalize(w, structure(graph, T))) <= X
    reduced = w.free_reduce()
    return reduced.support() <= graph.indices(X)


def member_standard_even(w: ArtinWord, X: Iterable[str]) -> Optional[bool]:
    """Whether ``w ∈ A_X`` in an even group; ``None`` when neither proof applies.

    The word is split over the direct factors (an exact rewriting).  A
    spherical factor is decided by normal forms; otherwise a free reduction
    into X letters proves membership, and a letter filter ``ρ_T`` landing
    outside ``A_{X∩T}`` for a decidable ``T`` proves non-membership.
    """
    graph = w.graph
    _require_even(graph)
    X = frozenset(X)
    verdict: Optional[bool] = True
    for comp in direct_split(graph):
        piece = _filter(w, graph.indices(comp)).free_reduce()
        if not piece.letters or piece.support() <= graph.indices(X):
            continue
        if is_spherical(graph, comp):
            if not _decide_in(piece, comp, X):
                return False
            continue
        refuted = False
        for T in _probe_sets(graph, comp):
            image = _filter(piece, graph.indices(T))
            if not _decide_in(image, T, X):
                refuted = True
                break
        if refuted:
            return False
        verdict = None
    return verdict


def _member_conjugate(w: ArtinWord, conj: ArtinWord, X: frozenset[str]) -> Optional[bool]:
    """``w ∈ conj A_X conj^-1``."""
    return member_standard_even((conj.inverse() * w * conj).free_reduce(), X)


# ---------------------------------------------------------------------------
# intersection reduction


@dataclass
class EvenReduction:
    """``f A_X f^-1 ∩ g A_Y g^-1 = u A_Z u^-1 ∩ v A_Z v^-1`` with ``u = f x``, ``v = g y``."""

    f: ArtinWord
    X: frozenset[str]
    g: ArtinWord
    Y: frozenset[str]
    x: ArtinWord
    y: ArtinWord
    Z: frozenset[str]
    trivial: bool
    certified_base: Optional[frozenset[str]]
    reason: str

    @property
    def u(self) -> ArtinWord:
        return (self.f * self.x).free_reduce()

    @property
    def v(self) -> ArtinWord:
        return (self.g * self.y).free_reduce()

    def to_json(self) -> dict:
        g = self.f.graph
        order = lambda S: list(g.names(g.indices(S)))
        return {
            "x": str(self.x),
            "y": str(self.y),
            "commonBase": order(self.Z),
            "left": {"conjugator": str(self.u), "base": order(self.Z)},
            "right": {"conjugator": str(self.v), "base": order(self.Z)},
            "trivial": self.trivial,
            "certified": None if self.certified_base is None else {
                "conjugator": str(self.u), "base": order(self.certified_base)
            },
            "reason": self.reason,
        }


def _normalises(k: ArtinWord, Z: frozenset[str]) -> bool:
    """Syntactic proof that ``k ∈ A_Z · C(A_Z)``, hence ``k A_Z k^-1 = A_Z``.

    ``k`` equals the product of its filters onto the direct factors.  A
    factor disjoint from Z centralises ``A_Z``; a factor meeting Z must
    freely reduce to a word over Z.
    """
    graph = k.graph
    zs = graph.indices(Z)
    for comp in direct_split(graph):
        cs = graph.indices(comp)
        if not cs & zs:
            continue
        piece = _filter(k, cs).free_reduce()
        if not piece.support() <= zs:
            return False
    return True


def even_intersect_reduce(
    f: ArtinWord, X: Iterable[str], g: ArtinWord, Y: Iterable[str]
) -> EvenReduction:
    """Witnesses ``x = ρ_X(f^-1 g)`` and ``y = ρ_Y((f^-1 g)^-1 x)``.

    When ``X ∩ Y`` is empty the intersection is trivial.  When the two
    reduced conjugates provably coincide, their common value is recorded
    as a certified parabolic over ``X ∩ Y``.
    """
    _require_even(f.graph)
    X, Y = frozenset(X), frozenset(Y)
    h = (f.inverse() * g).free_reduce()
    x = rho(h, X).free_reduce()
    y = rho(h.inverse() * x, Y).free_reduce()
    Z = X & Y
    if not Z:
        return EvenReduction(f, X, g, Y, x, y, Z, True, frozenset(), "X and Y are disjoint")
    k = (x.inverse() * h * y).free_reduce()
    if _normalises(k, Z):
        return EvenReduction(
            f, X, g, Y, x, y, Z, False, Z,
            "u^-1 v splits into a word over X∩Y and letters centralising it",
        )
    return EvenReduction(f, X, g, Y, x, y, Z, False, None, "reduced pair not resolved")


# ---------------------------------------------------------------------------
# ball cross-check


def _free_words(graph: CoxeterGraph, X: Iterable[str], radius: int):
    """Freely reduced words over X of length at most ``radius``."""
    letters = [(i, e) for i in sorted(graph.indices(X)) for e in (1, -1)]
    limit = cap(SEARCH_CAP)
    layer = [()]
    yield ArtinWord(graph, ())
    count = 1
    for _ in range(radius):
        nxt = []
        for w in layer:
            for l in letters:
                if w and w[-1] == (l[0], -l[1]):
                    continue
                nw = w + (l,)
                nxt.append(nw)
                count += 1
                if count > limit:
                    raise ResourceCapExceeded(f"free ball exceeded {limit} words")
                yield ArtinWord(graph, nw)
        layer = nxt


@dataclass
class CrossCheck:
    radius: int
    checked: int
    confirmed: int
    undecided: int
    violations: list[str]

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {
            "radius": self.radius,
            "checked": self.checked,
            "confirmed": self.confirmed,
            "undecided": self.undecided,
            "violations": self.violations,
            "passed": self.passed,
        }


def even_cross_check(red: EvenReduction, radius: int = 4) -> CrossCheck:
    """Compare both sides of the reduction on balls of the given radius.

    The reduction says ``P ∩ Q = u A_Z u^-1 ∩ v A_Z v^-1`` with
    ``u A_Z u^-1 ⊆ P`` and ``v A_Z v^-1 ⊆ Q``.  So an element ``u z u^-1``
    (``z`` in the radius ball of ``A_Z``) must lie in P, and it lies in Q
    exactly when it lies in ``v A_Z v^-1``; symmetrically for ``v z v^-1``.
    When the reduction is certified, elements ``f w f^-1`` (``w`` in the
    ball of ``A_X``) lying in Q must also lie in ``u A_Z u^-1``.  A
    violation is a disagreement between decided memberships; questions
    neither side can settle are counted as undecided.
    """
    checked = confirmed = undecided = 0
    violations: list[str] = []
    sides = (
        (red.u, red.f, red.X, red.g, red.Y, red.v),
        (red.v, red.g, red.Y, red.f, red.X, red.u),
    )
    if red.trivial:
        sides = ()
    for mine, own, own_base, other, other_base, twin in sides:
        for z in _free_words(red.f.graph, red.Z, radius):
            w = (mine * z * mine.inverse()).free_reduce()
            checked += 1
            if _member_conjugate(w, own, own_base) is False:
                violations.append(str(w))
                continue
            in_other = _member_conjugate(w, other, other_base)
            in_twin = _member_conjugate(w, twin, red.Z)
            if in_other is None or in_twin is None:
                undecided += 1
            elif in_other != in_twin:
                violations.append(str(w))
            else:
                confirmed += 1
    u = red.u
    if red.certified_base is not None:
        for a in _free_words(red.f.graph, red.X, radius):
            w = (red.f * a * red.f.inverse()).free_reduce()
            inside_q = _member_conjugate(w, red.g, red.Y)
            if inside_q is not True:
                if inside_q is None:
                    undecided += 1
                continue
            checked += 1
            verdict = _member_conjugate(w, u, red.certified_base)
            if verdict is False:
                violations.append(str(w))
            elif verdict is None:
                undecided += 1
            else:
                confirmed += 1
    return CrossCheck(radius, checked, confirmed, undecided, violations)


# ---------------------------------------------------------------------------
# conjugate containment


def _contained(g: ArtinWord, h: ArtinWord, X: frozenset[str]) -> Optional[bool]:
    """``g A_X g^-1 ⊆ h A_X h^-1``, generator by generator."""
    graph = g.graph
    verdict: Optional[bool] = True
    for name in sorted(X, key=graph.index):
        s = ArtinWord.parse(graph, name)
        m = _member_conjugate((g * s * g.inverse()).free_reduce(), h, X)
        if m is False:
            return False
        if m is None:
            verdict = None
    return verdict


def conjugate_containment_check(g: ArtinWord, h: ArtinWord, X: Iterable[str]) -> str:
    """Compare ``g A_X g^-1`` with ``h A_X h^-1``: ``equal``, ``incomparable`` or ``undecided``.

    In an even group containment in either direction forces equality, so a
    proof of one inclusion settles the question; refuting both inclusions
    shows the two subgroups are incomparable.
    """
    _require_even(g.graph)
    X = frozenset(X)
    k = (h.inverse() * g).free_reduce()
    if member_standard_even(k, X) is True:
        return "equal"
    forward = _contained(g, h, X)
    backward = _contained(h, g, X)
    if forward is True or backward is True:
        return "equal"
    if forward is False and backward is False:
        return "incomparable"
    return "undecided"
