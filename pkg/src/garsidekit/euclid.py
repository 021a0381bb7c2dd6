"""The affine braid group of type Ã_n inside the spherical group B_{n+1}.

Generators ``t0 ... tn`` of Ã_n (a cycle of 3-labels) are sent to
``r1 ... r(n+1)`` of B_{n+1} (a path of 3-labels with a 4 on the last
edge) by ``t_i -> r_i`` for ``i >= 1`` and ``t0 -> ρ r_n ρ^-1`` where
``ρ = r1 r2 ... r(n+1)``.  The image is the kernel of the homomorphism
``ξ`` counting the exponent of ``r(n+1)``, and conjugation by ``ρ`` acts
on the image as the rotation ``t_i -> t_{i+1}`` of the cycle.

Intersections of parabolic subgroups of Ã_n are computed in B_{n+1},
where Garside theory applies, and pulled back.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .garside import normalize, structure, to_word
from .graph import CoxeterGraph, standard_graph
from .parabolic import Certificate, WordParabolic, intersect, make_parabolic
from .words import ArtinWord

__all__ = [
    "EuclideanPair",
    "euclidean_pair",
    "euclid_embed",
    "euclid_xi",
    "euclid_shift",
    "euclid_pullback",
    "euclid_intersect",
]


@dataclass(frozen=True)
class EuclideanPair:
    n: int
    affine: CoxeterGraph
    spherical: CoxeterGraph

    def rho(self) -> ArtinWord:
        return ArtinWord.positive(self.spherical, range(self.n + 1))


def euclidean_pair(n: int) -> EuclideanPair:
    if n < 2:
        raise ValueError("the affine cycle needs n >= 2")
    return EuclideanPair(n, standard_graph("Atilde", n), standard_graph("B", n + 1, prefix="r"))


def _pair_for(graph: CoxeterGraph) -> EuclideanPair:
    n = graph.rank - 1
    pair = euclidean_pair(n)
    if graph == pair.affine or graph == pair.spherical:
        return pair
    raise ValueError("graph is neither the Ã_n cycle nor B_{n+1} in standard naming")


def euclid_embed(w: ArtinWord) -> ArtinWord:
    """Image of an Ã_n word in B_{n+1}."""
    pair = _pair_for(w.graph)
    if w.graph != pair.affine:
        raise ValueError("expected a word over t0 ... tn")
    n = pair.n
    rho = pair.rho()
    t0 = rho * ArtinWord(pair.spherical, ((n - 1, 1),)) * rho.inverse()
    letters: list[tuple[int, int]] = []
    for i, e in w.letters:
        if i == 0:
            letters.extend(t0.letters if e == 1 else t0.inverse().letters)
        else:
            letters.append((i - 1, e))
    return ArtinWord(pair.spherical, tuple(letters))


def euclid_xi(w: ArtinWord) -> int:
    """Exponent sum of the last generator ``r(n+1)``."""
    last = w.graph.rank - 1
    return sum(e for i, e in w.letters if i == last)


def euclid_shift(w: ArtinWord, k: int = 1) -> ArtinWord:
    """Apply the rotation ``t_i -> t_{i+k}`` (indices mod n+1)."""
    size = w.graph.rank
    return ArtinWord(w.graph, tuple(((i + k) % size, e) for i, e in w.letters))


def shift_names(pair: EuclideanPair, X: Iterable[str], k: int) -> frozenset[str]:
    size = pair.n + 1
    return frozenset(f"t{(int(x[1:]) + k) % size}" for x in X)


def euclid_pullback(w: ArtinWord) -> ArtinWord:
    """Ã_n word for an element of B_{n+1} with ``ξ = 0``.

    Each ``r(n+1)`` is rewritten as ``r_n^-1 ... r_1^-1 ρ``; a letter ``r_i``
    sitting at ρ-height ``k`` then reads as ``t_{i+k}``.
    """
    pair = _pair_for(w.graph)
    if w.graph != pair.spherical:
        raise ValueError("expected a word over r1 ... r(n+1)")
    if euclid_xi(w) != 0:
        raise ValueError("element is not in the image of the embedding (ξ ≠ 0)")
    n = pair.n
    size = n + 1
    # expand into letters r_1..r_n (index 1..n) and ρ-steps (index 0)
    tokens: list[tuple[int, int]] = []
    for i, e in w.letters:
        if i < n:
            tokens.append((i + 1, e))
        else:
            expansion = [(j, -1) for j in range(n, 0, -1)] + [(0, 1)]
            if e == 1:
                tokens.extend(expansion)
            else:
                tokens.extend((j, -x) for j, x in reversed(expansion))
    height = 0
    out: list[tuple[int, int]] = []
    for i, e in tokens:
        if i == 0:
            height += e
        else:
            out.append(((i + height) % size, e))
    assert height == 0
    return ArtinWord(pair.affine, tuple(out)).free_reduce()


def _to_spherical(pair: EuclideanPair, P: WordParabolic) -> WordParabolic:
    """``φ(g A_X g^-1)`` written with a standard base inside ``r1 ... rn``."""
    size = pair.n + 1
    indices = {int(x[1:]) for x in P.base}
    if len(indices) >= size:
        raise ValueError("parabolic must be proper")
    missing = min(set(range(size)) - indices)
    k = (size - missing) % size  # rotation sending t_missing to t0
    shifted = {(i + k) % size for i in indices}
    assert 0 not in shifted
    rho = pair.rho()
    conj = euclid_embed(P.conjugator)
    for _ in range(k):
        conj = conj * rho.inverse()
    base = frozenset(f"r{i}" for i in shifted)
    return WordParabolic(conj, base)


def euclid_intersect(
    P: WordParabolic, Q: WordParabolic, ball_radius: int = 5
) -> tuple[WordParabolic, Certificate]:
    """Intersection of two proper parabolics of Ã_n, computed through B_{n+1}."""
    pair = _pair_for(P.graph)
    s = structure(pair.spherical)
    images = []
    for X in (P, Q):
        w = _to_spherical(pair, X)
        images.append(make_parabolic(normalize(w.conjugator, s), w.base))
    R2, cert = intersect(images[0], images[1], ball_radius)
    if f"r{pair.n + 1}" in R2.base:
        raise AssertionError("intersection left the image of the embedding")
    h = to_word(R2.conjugator)
    m = euclid_xi(h)
    rho = pair.rho()
    h1 = h
    step = rho.inverse() if m > 0 else rho
    for _ in range(abs(m)):
        h1 = h1 * step
    conj = euclid_pullback(h1)
    base = shift_names(pair, (f"t{x[1:]}" for x in R2.base), m)
    return WordParabolic(conj, base), cert


def embed_parabolic(P: WordParabolic):
    """The B_{n+1} parabolic ``φ(P)`` as a :class:`ParabolicSubgroup`."""
    pair = _pair_for(P.graph)
    s = structure(pair.spherical)
    w = _to_spherical(pair, P)
    return make_parabolic(normalize(w.conjugator, s), w.base)
