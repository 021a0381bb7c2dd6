"""Finite pieces of coset posets and their order complexes.

Four posets are supported, all ordered by inclusion of cosets:

``salvetti``
    pairs ``(u, X)`` with ``u ∈ W`` and ``W_X`` finite, where
    ``(u, X) < (v, Y)`` iff ``X ⊊ Y``, ``v^-1 u ∈ W_Y`` and ``v^-1 u`` is
    the shortest element of ``v^-1 u W_X``;
``deligne``
    cosets ``α A_T`` with ``T`` spherical;
``artin``
    cosets ``α A_T`` with ``T`` a proper subset of S;
``clique``
    cosets ``α A_T`` with ``T`` free of ∞ labels.

Cosets are collected for every ``α`` in the word ball of the given radius
and deduplicated with a word-problem oracle (Garside normal forms for
spherical groups, amalgam pinching for FC groups).  The derived complex
has one simplex per chain.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Optional

from .caps import SEARCH_CAP, ResourceCapExceeded, cap
from .coxeter import (
    CoxeterElement,
    cox_inv,
    cox_mul,
    in_parabolic,
    is_spherical,
    reduce,
    right_descent_indices,
)
from .fc import NotFCError, fc_member, fc_word_trivial, fc_factorize
from .garside import g_inv, g_mul, normalize, structure, support
from .graph import INF, CoxeterGraph
from .parabolic import (
    ParabolicSubgroup,
    WordParabolic,
    contains,
    intersect,
)
from .words import ArtinWord

__all__ = [
    "NoOracleError",
    "CosetPoset",
    "DerivedComplex",
    "coset_poset_ball",
    "subset_poset",
    "derive",
    "interval",
    "to_dot",
    "irreducible_parabolic_adjacent",
    "salvetti_two_skeleton",
]

KINDS = ("salvetti", "deligne", "artin", "clique")


class NoOracleError(ValueError):
    """Coset deduplication needs a word-problem oracle the ambient does not have."""


@dataclass
class CosetPoset:
    kind: str
    graph: CoxeterGraph
    elements: list[tuple[str, frozenset[str]]]  # (representative text, subset)
    relation: set[tuple[int, int]]  # strict order, transitively closed

    def __len__(self) -> int:
        return len(self.elements)

    def less(self, i: int, j: int) -> bool:
        return (i, j) in self.relation

    def label(self, i: int) -> str:
        rep, T = self.elements[i]
        names = ",".join(self.graph.names(self.graph.indices(T)))
        return f"{rep or '1'}·A_{{{names}}}"

    def check_order(self) -> bool:
        """Irreflexive, antisymmetric and transitive on the exported piece."""
        rel = self.relation
        if any(i == j or (j, i) in rel for i, j in rel):
            return False
        succ: dict[int, set[int]] = {}
        for i, j in rel:
            succ.setdefault(i, set()).add(j)
        return all((i, k) in rel for i, j in rel for k in succ.get(j, ()))

    def to_json(self) -> dict:
        g = self.graph
        return {
            "kind": self.kind,
            "elements": [
                {"id": i, "rep": rep, "base": list(g.names(g.indices(T))), "label": self.label(i)}
                for i, (rep, T) in enumerate(self.elements)
            ],
            "relation": sorted(self.relation),
        }


@dataclass
class DerivedComplex:
    poset: CosetPoset
    simplices: list[list[tuple[int, ...]]]  # simplices[k] = k-simplices (chains of k+1 elements)

    @property
    def dimension(self) -> int:
        return len(self.simplices) - 1

    def counts(self) -> list[int]:
        return [len(s) for s in self.simplices]

    def to_json(self) -> dict:
        return {
            "poset": self.poset.to_json(),
            "counts": self.counts(),
            "simplices": {str(k): [list(s) for s in layer] for k, layer in enumerate(self.simplices)},
        }


# ---------------------------------------------------------------------------
# subsets and oracles


def _subsets(graph: CoxeterGraph, kind: str, include_empty: bool) -> list[frozenset[str]]:
    names = list(graph.generators)
    out = []
    for r in range(0 if include_empty else 1, len(names) + 1):
        for T in combinations(names, r):
            T = frozenset(T)
            if kind == "artin":
                ok = len(T) < len(names)
            elif kind == "clique":
                ok = all(graph.label(a, b) != INF for a, b in combinations(sorted(T), 2))
            else:
                ok = is_spherical(graph, T)
            if ok:
                out.append(T)
    return out


def _membership_oracle(graph: CoxeterGraph) -> Callable[[ArtinWord, frozenset[str]], bool]:
    """``w ∈ A_T`` for the ambient, or :class:`NoOracleError`."""
    if is_spherical(graph, graph.generators):
        s = structure(graph)
        return lambda w, T: support(normalize(w, s)) <= T
    try:
        fc_factorize(graph)
    except NotFCError:
        raise NoOracleError("coset deduplication needs a spherical or FC ambient") from None
    return lambda w, T: fc_member(w, T)


def _ball_words(graph: CoxeterGraph, radius: int) -> list[ArtinWord]:
    """Freely reduced words of length ≤ radius in ShortLex order (s before s^-1)."""
    letters = [(i, e) for i in range(graph.rank) for e in (1, -1)]
    limit = cap(SEARCH_CAP)
    out = [ArtinWord(graph, ())]
    layer: list[tuple] = [()]
    for _ in range(radius):
        layer = [w + (l,) for w in layer for l in letters if not w or w[-1] != (l[0], -l[1])]
        out.extend(ArtinWord(graph, w) for w in layer)
        if len(out) > limit:
            raise ResourceCapExceeded(f"word ball exceeded {limit} words")
    return out


# ---------------------------------------------------------------------------
# posets


def _salvetti_ball(graph: CoxeterGraph, radius: int) -> CosetPoset:
    subsets = _subsets(graph, "deligne", include_empty=True)
    seen: dict[tuple, CoxeterElement] = {}
    for w in _ball_words(graph, radius):
        u = reduce(graph, w.generators())
        seen.setdefault(u.word, u)
    elems = sorted(seen.values(), key=lambda u: (u.length, u.word))
    items = [(u, T) for u in elems for T in sorted(subsets, key=lambda T: (len(T), sorted(graph.indices(T))))]
    rel = set()
    for i, (u, X) in enumerate(items):
        for j, (v, Y) in enumerate(items):
            if not X < Y:
                continue
            q = cox_mul(cox_inv(v), u)
            if not in_parabolic(q, Y):
                continue
            if right_descent_indices(q) & graph.indices(X):
                continue
            rel.add((i, j))
    elements = [(str(u) if u.word else "", T) for u, T in items]
    return CosetPoset("salvetti", graph, elements, rel)


def _coset_ball(graph: CoxeterGraph, kind: str, radius: int, include_empty: bool) -> CosetPoset:
    subsets = sorted(_subsets(graph, kind, include_empty), key=lambda T: (len(T), sorted(graph.indices(T))))
    words = _ball_words(graph, radius)
    member = _membership_oracle(graph) if radius > 0 else None
    reps: list[tuple[ArtinWord, frozenset[str]]] = []
    for T in subsets:
        kept: list[ArtinWord] = []
        for w in words:
            if member is None:
                if not kept:
                    kept.append(w)
                continue
            if any(member((k.inverse() * w).free_reduce(), T) for k in kept):
                continue
            kept.append(w)
        reps.extend((k, T) for k in kept)
    rel = set()
    for i, (a, T1) in enumerate(reps):
        for j, (b, T2) in enumerate(reps):
            if i == j or not T1 <= T2:
                continue
            q = (b.inverse() * a).free_reduce()
            inside = (not q.letters) if member is None else member(q, T2)
            if inside:
                rel.add((i, j))
    elements = [(str(w), T) for w, T in reps]
    return CosetPoset(kind, graph, elements, rel)


def coset_poset_ball(
    graph: CoxeterGraph, kind: str, radius: int = 0, include_empty: Optional[bool] = None
) -> CosetPoset:
    """Cosets with representatives in the word ball of ``radius``.

    ``include_empty`` decides whether ``T = ∅`` appears; by default it does
    for the salvetti and artin kinds and not for deligne and clique, so that
    radius 0 reproduces the poset of nonempty spherical subsets.
    """
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    if graph.rank == 0:
        return CosetPoset(kind, graph, [], set())
    if kind == "salvetti":
        return _salvetti_ball(graph, radius)
    if include_empty is None:
        include_empty = kind == "artin"
    return _coset_ball(graph, kind, radius, include_empty)


def subset_poset(graph: CoxeterGraph, subsets: Iterable[Iterable[str]]) -> CosetPoset:
    """The given subsets ordered by inclusion, as cosets of the identity."""
    items = [frozenset(T) for T in subsets]
    rel = {(i, j) for i, a in enumerate(items) for j, b in enumerate(items) if a < b}
    return CosetPoset("subsets", graph, [("", T) for T in items], rel)


# ---------------------------------------------------------------------------
# derived complex


def derive(p: CosetPoset) -> DerivedComplex:
    """Order complex: every chain ``x_0 < ... < x_k`` is a k-simplex."""
    n = len(p)
    up = [sorted(j for j in range(n) if p.less(i, j)) for i in range(n)]
    layers: list[list[tuple[int, ...]]] = []
    current = [(i,) for i in range(n)]
    while current:
        layers.append(current)
        current = [c + (j,) for c in current for j in up[c[-1]]]
    return DerivedComplex(p, layers)


def interval(p: CosetPoset, i: int, j: int) -> list[int]:
    """Elements ``z`` with ``x_i ≤ z ≤ x_j``."""
    if i != j and not p.less(i, j):
        return []
    return [k for k in range(len(p)) if (k == i or p.less(i, k)) and (k == j or p.less(k, j))]


def to_dot(c: DerivedComplex) -> str:
    """1-skeleton of the derived complex in DOT format."""
    p = c.poset
    lines = ["graph derived {"]
    for i in range(len(p)):
        lines.append(f'  v{i} [label="{p.label(i)}"];')
    if len(c.simplices) > 1:
        for i, j in c.simplices[1]:
            lines.append(f"  v{i} -- v{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# adjacency of irreducible parabolics


def _word_center(P: WordParabolic) -> ArtinWord:
    from .garside import parabolic_center, to_word

    z = to_word(parabolic_center(P.graph, P.base))
    return (P.conjugator * z * P.conjugator.inverse()).free_reduce()


def irreducible_parabolic_adjacent(P, Q, mode: str = "general") -> Optional[bool]:
    """Adjacency of two parabolic subgroups in the sense of the curve-graph analogue.

    ``general`` (spherical ambient, :class:`ParabolicSubgroup` inputs) checks
    ``P ⊆ Q``, ``Q ⊆ P``, or ``P ∩ Q = 1`` with P and Q commuting, and
    returns ``None`` if triviality is only known up to the ball radius.
    ``fc-spherical`` (:class:`WordParabolic` inputs with spherical bases in
    an FC ambient) checks whether ``z_P`` and ``z_Q`` commute.
    """
    if mode == "fc-spherical":
        graph = P.graph
        for X in (P.base, Q.base):
            if not is_spherical(graph, X):
                raise ValueError("fc-spherical mode needs spherical bases")
        zp, zq = _word_center(P), _word_center(Q)
        return fc_word_trivial(zp * zq * zp.inverse() * zq.inverse())
    if mode != "general":
        raise ValueError("mode must be 'general' or 'fc-spherical'")
    if not isinstance(P, ParabolicSubgroup) or not isinstance(Q, ParabolicSubgroup):
        raise TypeError("general mode takes ParabolicSubgroup values")
    if contains(Q, P) or contains(P, Q):
        return True
    R, cert = intersect(P, Q)
    if not R.is_trivial():
        return False
    s = P.structure

    def gens(A: ParabolicSubgroup):
        a, ai = A.conjugator, g_inv(A.conjugator)
        return [g_mul(g_mul(a, s.word(x)), ai) for x in sorted(A.base)]

    for p in gens(P):
        for q in gens(Q):
            if g_mul(p, q).key() != g_mul(q, p).key():
                return False
    return True if cert.exact else None


# ---------------------------------------------------------------------------
# Salvetti 2-skeleton


def _alternating(a: str, b: str, m: int) -> list[str]:
    return [a if k % 2 == 0 else b for k in range(m)]


def salvetti_two_skeleton(graph: CoxeterGraph) -> dict:
    """One vertex, one loop per generator, one 2-cell per finite label.

    The boundary of the cell for ``{s, t}`` reads ``prod(s,t;m) prod(t,s;m)^-1``.
    """
    cells = []
    for i, j, m in graph.pairs():
        if m == INF:
            continue
        s, t = graph.generators[i], graph.generators[j]
        left = _alternating(s, t, m)
        right = _alternating(t, s, m)
        boundary = left + [x + "^-1" for x in reversed(right)]
        cells.append({"pair": [s, t], "m": int(m), "boundary": " ".join(boundary), "length": 2 * int(m)})
    return {"vertices": ["x0"], "loops": list(graph.generators), "cells": cells}
