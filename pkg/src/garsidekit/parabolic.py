"""Parabolic subgroups of spherical-type Artin groups.

A parabolic subgroup is stored as ``P = α A_X α^-1`` (conjugator on the
left) and carries its canonical central element ``z_P = α z_X α^-1``.
Two values describe the same subgroup exactly when their ``z`` agree, and
``P ⊆ Q`` exactly when ``z_P ∈ Q``; both facts reduce every comparison to
a single normal-form computation.

>>> from garsidekit.graph import standard_graph
>>> from garsidekit.garside import structure
>>> st = structure(standard_graph("A", 2))
>>> P = parabolic_closure(st.word("s2^-1 s1 s2"))
>>> sorted(P.base), str(P.conjugator)
(['s1'], '(s2)')
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .caps import SEARCH_CAP, ResourceCapExceeded, cap
from .coxeter import components
from .garside import (
    GarsideElement,
    GarsideStructure,
    g_inv,
    g_mul,
    mixed_form,
    normalize,
    parabolic_center,
    recurrent,
    structure,
    support,
    to_word,
)
from .graph import CoxeterGraph
from .words import ArtinWord

__all__ = [
    "ParabolicSubgroup",
    "WordParabolic",
    "Certificate",
    "make_parabolic",
    "standard_parabolic",
    "trivial_parabolic",
    "member_parabolic",
    "contains",
    "parabolic_closure",
    "parabolic_eq",
    "intersect",
    "restandardise",
    "parse_parabolic",
    "ball",
    "from_words",
    "conjugate_parabolic",
    "phi",
]


@dataclass(frozen=True)
class WordParabolic:
    """``g A_X g^-1`` given by a conjugating word, for any ambient."""

    conjugator: ArtinWord
    base: frozenset[str]

    @property
    def graph(self) -> CoxeterGraph:
        return self.conjugator.graph

    def __str__(self) -> str:
        conj = str(self.conjugator) or "1"
        return f"{conj}|{','.join(self.graph.names(self.graph.indices(self.base)))}"

    def to_json(self) -> dict:
        return {
            "conjugator": str(self.conjugator) or "1",
            "base": list(self.graph.names(self.graph.indices(self.base))),
        }


def parse_parabolic(graph: CoxeterGraph, text: str) -> WordParabolic:
    """Parse ``"conjugator word|a,b"``; an empty or ``1`` conjugator is the identity."""
    if "|" not in text:
        raise ValueError("parabolic syntax is 'conjugatorWord|comma,separated,base'")
    conj, base = text.split("|", 1)
    names = frozenset(b.strip() for b in base.split(",") if b.strip())
    for n in names:
        graph.index(n)
    return WordParabolic(ArtinWord.parse(graph, conj), names)


@dataclass(frozen=True, eq=False)
class ParabolicSubgroup:
    conjugator: GarsideElement
    base: frozenset[str]
    z: GarsideElement = field(repr=False)
    irreducible: bool = False

    @property
    def structure(self) -> GarsideStructure:
        return self.conjugator.structure

    @property
    def graph(self) -> CoxeterGraph:
        return self.conjugator.graph

    @property
    def dimension(self) -> int:
        return len(self.base)

    def is_trivial(self) -> bool:
        return not self.base

    def __eq__(self, other) -> bool:
        return isinstance(other, ParabolicSubgroup) and parabolic_eq(self, other)

    def __hash__(self) -> int:
        return hash(self.z.key())

    def sorted_base(self) -> tuple[str, ...]:
        return self.graph.names(self.graph.indices(self.base))

    def as_words(self) -> WordParabolic:
        return WordParabolic(to_word(self.conjugator).free_reduce(), self.base)

    def to_json(self) -> dict:
        return {
            "conjugator": str(to_word(self.conjugator).free_reduce()) or "1",
            "base": list(self.sorted_base()),
            "z": str(to_word(self.z).free_reduce()) or "1",
        }

    def __str__(self) -> str:
        return f"{self.conjugator} · A_{{{','.join(self.sorted_base())}}} · ({self.conjugator})^-1"


def make_parabolic(alpha: GarsideElement, X: Iterable[str]) -> ParabolicSubgroup:
    s = alpha.structure
    X = frozenset(X)
    if not X <= s.X:
        raise ValueError(f"base {sorted(X - s.X)} not in the ambient generators")
    z = g_mul(g_mul(alpha, parabolic_center(s.graph, X, s)), g_inv(alpha))
    irreducible = len(components(s.graph, X)) == 1
    return ParabolicSubgroup(alpha, X, z, irreducible)


def standard_parabolic(s: GarsideStructure, X: Iterable[str]) -> ParabolicSubgroup:
    return make_parabolic(s.identity(), X)


def trivial_parabolic(s: GarsideStructure) -> ParabolicSubgroup:
    return make_parabolic(s.identity(), ())


def from_words(s: GarsideStructure, p: WordParabolic) -> ParabolicSubgroup:
    return make_parabolic(normalize(p.conjugator, s), p.base)


def member_parabolic(g: GarsideElement, P: ParabolicSubgroup) -> bool:
    """``g ∈ α A_X α^-1`` iff the support of ``α^-1 g α`` lies in X."""
    inner = g_mul(g_mul(g_inv(P.conjugator), g), P.conjugator)
    return support(inner) <= P.base


def contains(P: ParabolicSubgroup, Q: ParabolicSubgroup) -> bool:
    """``Q ⊆ P``, decided by ``z_Q ∈ P``."""
    return member_parabolic(Q.z, P)


def parabolic_eq(P: ParabolicSubgroup, Q: ParabolicSubgroup) -> bool:
    if P.structure != Q.structure:
        raise ValueError("parabolics live in different ambients")
    return P.z.key() == Q.z.key()


def parabolic_closure(g: GarsideElement) -> ParabolicSubgroup:
    """Smallest parabolic subgroup containing ``g``.

    A recurrent conjugate ``y = c g c^-1`` has closure ``A_{supp(y)}``, so
    the closure of ``g`` is ``c^-1 A_{supp(y)} c``.
    """
    s = g.structure
    if g.is_identity():
        return trivial_parabolic(s)
    rec = recurrent(g)
    base = support(rec.witness)
    return make_parabolic(g_inv(rec.conjugator), base)


def conjugate_parabolic(P: ParabolicSubgroup, h: GarsideElement) -> ParabolicSubgroup:
    """``h P h^-1``."""
    return make_parabolic(g_mul(h, P.conjugator), P.base)


def phi(P: ParabolicSubgroup) -> int:
    """Length of the Garside element of the base."""
    if not P.base:
        return 0
    s = structure(P.graph, P.base)
    return len(s.W.words[s.delta])


# ---------------------------------------------------------------------------
# balls


def ball(s: GarsideStructure, X: Iterable[str], radius: int) -> list[tuple[GarsideElement, int]]:
    """Elements of ``A_X`` of word length at most ``radius``, with their lengths.

    Breadth-first over the generators of X and their inverses, deduplicated
    by normal form; the order is deterministic.
    """
    X = frozenset(X)
    key = ("ball", X, radius)
    cache = s.graph._cache.setdefault(("balls", s.X), {})
    if key in cache:
        return cache[key]
    limit = cap(SEARCH_CAP)
    gens = [
        normalize(ArtinWord(s.graph, ((s.graph.index(x), e),)), s)
        for x in s.graph.names(s.graph.indices(X))
        for e in (1, -1)
    ]
    start = s.identity()
    seen = {start.key()}
    out = [(start, 0)]
    frontier = [start]
    for depth in range(1, radius + 1):
        nxt = []
        for g in frontier:
            for a in gens:
                h = g_mul(g, a)
                if h.key() not in seen:
                    seen.add(h.key())
                    if len(seen) > limit:
                        raise ResourceCapExceeded(f"ball of radius {radius} exceeded {limit} elements")
                    out.append((h, depth))
                    nxt.append(h)
        frontier = nxt
    cache[key] = out
    return out


# ---------------------------------------------------------------------------
# intersections


@dataclass
class Certificate:
    subgroup: ParabolicSubgroup
    z_in_p: bool
    z_in_q: bool
    ball_radius: int
    ball_certified_to: int
    exact: bool
    common_elements: int = 0

    @property
    def certified(self) -> bool:
        return self.z_in_p and self.z_in_q and (self.exact or self.ball_certified_to >= self.ball_radius)

    def to_json(self) -> dict:
        return {
            "subgroup": self.subgroup.to_json(),
            "inclusionProof": {"zInP": self.z_in_p, "zInQ": self.z_in_q},
            "ballRadius": self.ball_radius,
            "ballCertifiedTo": self.ball_certified_to,
            "exact": self.exact,
        }


def _conjugator_size(P: ParabolicSubgroup) -> tuple:
    c = P.conjugator
    return (len(to_word(c)), c.power, c.factors)


def _ranking(P: ParabolicSubgroup) -> tuple:
    g = P.graph
    return (-phi(P), tuple(sorted(g.indices(P.base))), _conjugator_size(P))


def _common_elements(P, Q, radius):
    """Ball elements of P lying in Q and of Q lying in P, with their radii."""
    s = P.structure
    found: dict[tuple, tuple[GarsideElement, int]] = {}
    for A, B in ((P, Q), (Q, P)):
        a, ai = A.conjugator, g_inv(A.conjugator)
        for h, depth in ball(s, A.base, radius):
            if h.is_identity():
                continue
            x = g_mul(g_mul(a, h), ai)
            if x.key() in found and found[x.key()][1] <= depth:
                continue
            if member_parabolic(x, B):
                found[x.key()] = (x, depth)
    return sorted(found.values(), key=lambda t: (t[1], t[0].power, t[0].factors))


def _boost(R: ParabolicSubgroup, w: GarsideElement, rounds: int) -> ParabolicSubgroup | None:
    """Try ``z_T (α Δ_Z α^-1)^m`` for ``T`` the closure of ``w``; return a larger closure."""
    s = R.structure
    T = parabolic_closure(w)
    if R.base:
        sub = structure(s.graph, R.base)
        dz = normalize(ArtinWord.positive(s.graph, sub.W.words[sub.delta]), s)
        dz = g_mul(g_mul(R.conjugator, dz), g_inv(R.conjugator))
    else:
        dz = s.identity()
    beta = T.z
    best = None
    for _ in range(rounds):
        beta = g_mul(beta, dz)
        C = parabolic_closure(beta)
        if phi(C) > phi(R) and (best is None or _ranking(C) < _ranking(best)):
            best = C
    return best


def intersect(
    P: ParabolicSubgroup, Q: ParabolicSubgroup, ball_radius: int = 5, boost_rounds: int = 4
) -> tuple[ParabolicSubgroup, Certificate]:
    """Intersection of two parabolic subgroups with its certificate.

    The result ``R`` is always the closure of an element of ``P ∩ Q``,
    so ``R ⊆ P ∩ Q`` holds unconditionally.  The reverse inclusion is exact
    when one subgroup contains the other or both are standard, and is
    otherwise certified on every common element found in the balls of
    radius ``ball_radius`` around the identity of ``P`` and ``Q``.
    """
    if P.structure != Q.structure:
        raise ValueError("parabolics live in different ambients")
    s = P.structure

    def done(R, exact, certified_to, count=0):
        cert = Certificate(
            R, member_parabolic(R.z, P), member_parabolic(R.z, Q),
            ball_radius, certified_to, exact, count,
        )
        return R, cert

    if contains(Q, P):
        return done(P, True, ball_radius)
    if contains(P, Q):
        return done(Q, True, ball_radius)
    if P.conjugator.is_identity() and Q.conjugator.is_identity():
        return done(standard_parabolic(s, P.base & Q.base), True, ball_radius)

    common = _common_elements(P, Q, ball_radius)
    R = trivial_parabolic(s)
    for x, _ in common:
        C = parabolic_closure(x)
        if _ranking(C) < _ranking(R):
            R = C
    # escalate while a common element escapes the candidate
    for _ in range(len(s.X) + 1):
        outside = [x for x, _ in common if not member_parabolic(x, R)]
        if not outside:
            break
        better = None
        for w in outside:
            better = _boost(R, w, boost_rounds)
            if better is not None:
                break
        if better is None:
            break
        R = better
    certified_to = ball_radius
    for x, depth in common:
        if not member_parabolic(x, R):
            certified_to = min(certified_to, depth - 1)
    return done(R, False, certified_to, len(common))


# ---------------------------------------------------------------------------
# restandardisation


def restandardise(P: ParabolicSubgroup, X: Iterable[str]) -> tuple[GarsideElement, frozenset[str]]:
    """Rewrite ``P ⊆ A_X`` as ``α A_Y α^-1`` with ``α ∈ A_X`` and ``Y ⊆ X``.

    The closure of ``z_P`` computed inside the Garside structure of ``A_X``
    is a parabolic subgroup of ``A_X`` containing ``z_P``, hence equal to
    ``P``.  The returned ``α`` lives in the ambient structure of ``P``.
    """
    s = P.structure
    X = frozenset(X)
    if not X <= s.X:
        raise ValueError("X must be a subset of the ambient generators")
    if not support(P.z) <= X:
        raise ValueError("P is not contained in A_X")
    sub = structure(s.graph, X)
    a, b = mixed_form(P.z, "np")
    z_sub = normalize(to_word(a).inverse() * to_word(b), sub)
    local = parabolic_closure(z_sub)
    alpha = normalize(to_word(local.conjugator), s)
    result = make_parabolic(alpha, local.base)
    if not parabolic_eq(result, P):
        raise AssertionError("restandardisation failed to reproduce P")
    return alpha, local.base
