"""FC-type Artin groups as iterated amalgams of spherical groups.

If ``m_{s,t} = ∞`` then ``A_S = A_I *_{A_K} A_J`` with ``I = S∖{s}``,
``J = S∖{t}`` and ``K = I ∩ J``.  Splitting repeatedly (always on the
least ∞-pair in declaration order) ends in spherical leaves when the group
is FC, i.e. when every ∞-free subset is spherical.

The word problem follows the normal form theorem for amalgams: cut a word
into syllables lying alternately in ``A_I`` and ``A_J``, merge any syllable
that lies in ``A_K`` into its neighbours, and repeat.  A word is trivial
iff it pinches down to a single trivial syllable.  Membership of a syllable
in ``A_K`` is tested by comparing it with its retraction onto ``A_K``,
which is an equality question one level down the tree.

>>> from garsidekit.graph import CoxeterGraph, INF
>>> g = CoxeterGraph.from_labels("st", {("s", "t"): INF})
>>> fc_word_trivial(ArtinWord.parse(g, "s t"))
False
>>> fc_word_trivial(ArtinWord.parse(g, "s t t^-1 s^-1"))
True
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .coxeter import coset_split, cox_inv, is_spherical, theta
from .garside import normalize, structure, to_word
from .graph import INF, CoxeterGraph
from .parabolic import WordParabolic, intersect, make_parabolic
from .salvetti import restandardise_word, retract_word
from .words import ArtinWord

__all__ = [
    "NotFCError",
    "AmalgamNode",
    "is_fc",
    "fc_factorize",
    "fc_word_trivial",
    "fc_equal",
    "fc_member",
    "fc_syllables",
    "TreeVertex",
    "TreePath",
    "tree_geodesic",
    "vertex_equal",
    "FCCertificate",
    "fc_intersect_spherical_any",
]


class NotFCError(ValueError):
    """Some ∞-free subset of generators is not of spherical type."""


# ---------------------------------------------------------------------------
# decomposition


@dataclass(frozen=True, eq=False)
class AmalgamNode:
    """``A_S = A_I *_{A_K} A_J`` (or a spherical leaf when ``pair`` is ``None``).

    ``pair = (s, t)`` is an ∞-labelled pair with ``s ∉ I`` and ``t ∉ J``.
    """

    graph: CoxeterGraph
    generators: frozenset[str]
    pair: Optional[tuple[str, str]] = None
    I: frozenset[str] = frozenset()
    J: frozenset[str] = frozenset()
    left: Optional["AmalgamNode"] = None
    right: Optional["AmalgamNode"] = None

    @property
    def is_leaf(self) -> bool:
        return self.pair is None

    @property
    def K(self) -> frozenset[str]:
        return self.I & self.J

    def side_set(self, side: str) -> frozenset[str]:
        return self.I if side == "I" else self.J

    def child(self, side: str) -> "AmalgamNode":
        return self.left if side == "I" else self.right

    def _names(self, X: Iterable[str]) -> list[str]:
        return list(self.graph.names(self.graph.indices(X)))

    def leaves(self) -> list[frozenset[str]]:
        if self.is_leaf:
            return [self.generators]
        return self.left.leaves() + self.right.leaves()

    def to_json(self) -> dict:
        if self.is_leaf:
            return {"leaf": self._names(self.generators)}
        return {
            "pair": list(self.pair),
            "I": self._names(self.I),
            "J": self._names(self.J),
            "K": self._names(self.K),
            "left": self.left.to_json(),
            "right": self.right.to_json(),
        }


def is_fc(graph: CoxeterGraph, S: Iterable[str] | None = None) -> bool:
    """Every ∞-free subset of S is spherical."""
    names = list(graph.generators if S is None else graph.names(graph.indices(S)))
    for r in range(1, len(names) + 1):
        for T in combinations(names, r):
            if any(graph.label(a, b) == INF for a, b in combinations(T, 2)):
                continue
            if not is_spherical(graph, T):
                return False
    return True


def fc_factorize(graph: CoxeterGraph, S: Iterable[str] | None = None) -> AmalgamNode:
    """Decomposition tree of ``A_S``; raises :class:`NotFCError` when S is not FC."""
    S = frozenset(graph.generators if S is None else S)
    memo = graph._cache.setdefault("amalgam", {})
    if S in memo:
        return memo[S]
    if not is_fc(graph, S):
        raise NotFCError(f"{sorted(S)} has an ∞-free subset of non-spherical type")
    idx = sorted(graph.indices(S))
    inf_pairs = [(i, j) for i, j in combinations(idx, 2) if graph.m(i, j) == INF]
    if not inf_pairs:
        node = AmalgamNode(graph, S)
    else:
        pieces = _finite_components(graph, idx)
        if len(pieces) > 1:
            # free product: the first piece against the rest
            I = frozenset(graph.names(pieces[0]))
            J = S - I
            t, s = graph.generators[pieces[0][0]], graph.generators[pieces[1][0]]
        else:
            i, j = min(inf_pairs)
            s, t = graph.generators[j], graph.generators[i]
            I, J = S - {s}, S - {t}
        node = AmalgamNode(graph, S, (s, t), I, J, fc_factorize(graph, I), fc_factorize(graph, J))
    memo[S] = node
    return node


def _finite_components(graph: CoxeterGraph, idx: list[int]) -> list[list[int]]:
    """Components of the graph whose edges are the finite labels."""
    left = list(idx)
    out = []
    while left:
        comp = [left.pop(0)]
        k = 0
        while k < len(comp):
            nbrs = [j for j in left if graph.m(comp[k], j) != INF]
            for j in nbrs:
                left.remove(j)
            comp.extend(nbrs)
            k += 1
        out.append(sorted(comp))
    return out


# ---------------------------------------------------------------------------
# word problem


def _memo(node: AmalgamNode, kind: str) -> dict:
    return node.graph._cache.setdefault(("fc", kind, node.generators), {})


def _trivial(node: AmalgamNode, w: ArtinWord) -> bool:
    w = w.free_reduce()
    if not w.letters:
        return True
    memo = _memo(node, "trivial")
    if w.letters in memo:
        return memo[w.letters]
    if node.is_leaf:
        result = normalize(w, structure(node.graph, node.generators)).is_identity()
    else:
        syl = _pinch(node, w, "left")
        if len(syl) > 1:
            result = False
        else:
            side, word = syl[0]
            result = _trivial(node.child(side or "I"), word)
    memo[w.letters] = result
    return result


def _member(node: AmalgamNode, w: ArtinWord, X: frozenset[str]) -> Optional[ArtinWord]:
    """A word over X equal to ``w`` when ``w ∈ A_X``, else ``None``."""
    w = w.free_reduce()
    xs = node.graph.indices(X)
    if w.support() <= xs:
        return w
    r, _ = retract_word(w, X)
    return r if _trivial(node, w * r.inverse()) else None


def _syllables(node: AmalgamNode, w: ArtinWord) -> list[list]:
    only_i = node.graph.indices(node.I - node.J)
    only_j = node.graph.indices(node.J - node.I)
    out: list[list] = []
    cur: list[tuple[int, int]] = []
    side: Optional[str] = None
    for letter in w.letters:
        here = "I" if letter[0] in only_i else "J" if letter[0] in only_j else None
        if here is None or side is None or here == side:
            cur.append(letter)
            side = side or here
        else:
            out.append([side, ArtinWord(w.graph, tuple(cur))])
            cur, side = [letter], here
    if cur:
        out.append([side or "I", ArtinWord(w.graph, tuple(cur))])
    return out


def _pinch(node: AmalgamNode, w: ArtinWord, strategy: str) -> list[list]:
    """Reduced syllable sequence of ``w``; a lone syllable in ``A_K`` gets side ``None``."""
    syl = _syllables(node, w)
    K = node.K
    while len(syl) > 1:
        order = range(len(syl)) if strategy == "left" else range(len(syl) - 1, -1, -1)
        for i in order:
            side, word = syl[i]
            r = _member(node.child(side), word, K)
            if r is not None:
                break
        else:
            return syl
        if 0 < i < len(syl) - 1:
            merged = (syl[i - 1][1] * r * syl[i + 1][1]).free_reduce()
            syl[i - 1 : i + 2] = [[syl[i - 1][0], merged]]
        elif i > 0:
            syl[i - 1 : i + 1] = [[syl[i - 1][0], (syl[i - 1][1] * r).free_reduce()]]
        else:
            syl[0:2] = [[syl[1][0], (r * syl[1][1]).free_reduce()]]
    if len(syl) == 1:
        side, word = syl[0]
        r = _member(node.child(side), word, K)
        if r is not None:
            syl[0] = [None, r]
    return syl


def _top(w: ArtinWord) -> AmalgamNode:
    return fc_factorize(w.graph)


def fc_word_trivial(w: ArtinWord) -> bool:
    """Whether ``w`` represents the identity of an FC-type Artin group."""
    node = _top(w)
    if node.is_leaf:
        return normalize(w, structure(w.graph)).is_identity()
    return _trivial(node, w)


def fc_equal(a: ArtinWord, b: ArtinWord) -> bool:
    return fc_word_trivial(a * b.inverse())


def fc_member(w: ArtinWord, X: Iterable[str]) -> bool:
    """Whether ``w ∈ A_X``."""
    return _member(_top(w), w, frozenset(X)) is not None


def fc_syllables(w: ArtinWord, strategy: str = "left") -> list[tuple[Optional[str], ArtinWord]]:
    """Pinch-reduced syllables at the root split; ``strategy`` picks which pinch goes first."""
    node = _top(w)
    if node.is_leaf:
        return [] if normalize(w, structure(w.graph)).is_identity() else [(None, w)]
    syl = _pinch(node, w.free_reduce(), strategy)
    if len(syl) == 1 and syl[0][0] is None and _trivial(node, syl[0][1]):
        return []
    return [(side, word) for side, word in syl]


# ---------------------------------------------------------------------------
# Bass–Serre tree


@dataclass(frozen=True)
class TreeVertex:
    """The coset ``rep · A_side`` of the split at ``node``."""

    rep: ArtinWord
    side: str
    node: AmalgamNode = field(compare=False, repr=False)

    def to_json(self) -> dict:
        return {"rep": str(self.rep), "side": self.side}

    def __str__(self) -> str:
        return f"{self.rep or '1'}·A_{{{','.join(self.node._names(self.node.side_set(self.side)))}}}"


@dataclass(frozen=True)
class TreePath:
    vertices: list[TreeVertex]
    edges: list[ArtinWord]  # representatives c_i of the edge cosets c_i A_K

    @property
    def length(self) -> int:
        return len(self.edges)

    def to_json(self) -> dict:
        return {
            "length": self.length,
            "vertices": [v.to_json() for v in self.vertices],
            "edges": [str(e) for e in self.edges],
        }


def vertex_equal(u: TreeVertex, v: TreeVertex) -> bool:
    if u.side != v.side:
        return False
    return _member(u.node, u.rep.inverse() * v.rep, u.node.side_set(u.side)) is not None


def tree_geodesic(u: TreeVertex, v: TreeVertex) -> TreePath:
    """The unique reduced path from ``u`` to ``v``, read off the syllables of ``u^-1 v``."""
    node = u.node
    if node.is_leaf:
        raise ValueError("a spherical group has no splitting")
    syl = _pinch(node, (u.rep.inverse() * v.rep).free_reduce(), "left")
    p = u.rep
    cur = u.side
    vertices = [u]
    edges: list[ArtinWord] = []
    for side, h in syl:
        if side is not None and side != cur:
            edges.append(p)
            cur = side
            vertices.append(TreeVertex(p, cur, node))
        p = (p * h).free_reduce()
    if cur != v.side:
        edges.append(p)
        vertices.append(v)
    elif edges:
        vertices[-1] = v
    return TreePath(vertices, edges)


# ---------------------------------------------------------------------------
# intersections


@dataclass
class FCCertificate:
    ball_radius: int
    exact: bool = True
    ball_certified_to: int = -1
    steps: list[str] = field(default_factory=list)

    @property
    def status(self) -> str:
        return "exact" if self.exact else "ball-certified"

    def to_json(self) -> dict:
        return {
            "status": self.status,
            "ballRadius": self.ball_radius,
            "ballCertifiedTo": self.ball_radius if self.exact else self.ball_certified_to,
            "exact": self.exact,
            "steps": self.steps,
        }


def _leaf_intersect(node, b, X, d, Y, cert):
    s = structure(node.graph, node.generators)
    P = make_parabolic(normalize(b, s), X)
    Q = make_parabolic(normalize(d, s), Y)
    R, c = intersect(P, Q, cert.ball_radius)
    if not c.exact:
        cert.exact = False
        prev = cert.ball_certified_to
        cert.ball_certified_to = c.ball_certified_to if prev < 0 else min(prev, c.ball_certified_to)
    cert.steps.append(f"leaf {node._names(node.generators)}: {'exact' if c.exact else 'ball'}")
    return to_word(R.conjugator), R.base


def _isect(node, b, X, d, Y, cert):
    empty = ArtinWord(node.graph, ())
    if not X or not Y:
        return empty, frozenset()
    if node.is_leaf:
        return _leaf_intersect(node, b, X, d, Y, cert)
    u = TreeVertex(b, "I" if X <= node.I else "J", node)
    if Y <= node.I or Y <= node.J:
        v = TreeVertex(d, "I" if Y <= node.I else "J", node)
        return _case_path(node, b, X, u, d, Y, v, cert)
    v = _project(node, u, d, Y, cert)
    V = node.side_set(v.side) & Y
    cert.steps.append(f"projection onto the Q-subtree at {v}")
    return _case_path(node, b, X, u, v.rep, V, v, cert)


def _case_path(node, b, X, u, d, Y, v, cert):
    empty = ArtinWord(node.graph, ())
    while True:
        path = tree_geodesic(u, v)
        a = u.rep
        U = node.side_set(u.side)
        b1, X1 = restandardise_word((a.inverse() * b).free_reduce(), X, U)
        if path.length == 0:
            d1, Y1 = restandardise_word((a.inverse() * d).free_reduce(), Y, U)
            c, B = _isect(node.child(u.side), b1, X1, d1, Y1, cert)
            return (a * c).free_reduce(), B
        cert.steps.append(f"distance {path.length}: cut by the first edge")
        edge = path.edges[0]
        p1, _ = retract_word((a.inverse() * edge).free_reduce(), U)
        c, B = _isect(node.child(u.side), b1, X1, p1, node.K, cert)
        if not B:
            return empty, frozenset()
        b, X = (a * c).free_reduce(), B
        u = path.vertices[1]


def _double_coset_trivial(w: ArtinWord, Y: frozenset[str], K: frozenset[str]) -> bool:
    """Whether ``θ(w) ∈ W_Y W_K``."""
    g = theta(w)
    while True:
        _, g = coset_split(g, Y)
        _, gi = coset_split(cox_inv(g), K)
        h = cox_inv(gi)
        if h == g:
            return g.length == 0
        g = h


def _project(node, u, d, Y, cert) -> TreeVertex:
    """Vertex of ``d·T_Y`` nearest to ``u``.

    ``T_Y`` is a subtree, so the vertices of the geodesic from ``d·A_I`` to
    ``u`` that lie in ``d·T_Y`` form an initial segment; its last vertex is
    the projection.  From a subtree vertex ``y·A_U`` (``y ∈ A_Y``) the next
    vertex ``y a A_{U'}`` stays in the subtree iff ``a ∈ A_{Y∩U} A_K``.  The
    retraction ``π̂`` onto ``A_{Y∩U}`` is left-equivariant and maps ``A_K``
    into ``A_K``, so this holds iff ``π̂(a)^-1 a ∈ A_K``.  A Coxeter-level
    test (``θ(a) ∈ W_{Y∩U} W_K``) rules most steps out before that.
    """
    start = TreeVertex(d, "I", node)
    path = tree_geodesic(start, u)
    y = d
    side = "I"
    for edge in path.edges:
        gens = node.side_set(side)
        Yside = Y & gens
        a, _ = retract_word((y.inverse() * edge).free_reduce(), gens)
        if not _double_coset_trivial(a, Yside, node.K):
            break
        y0, _ = retract_word(a, Yside)
        if _member(node.child(side), y0.inverse() * a, node.K) is None:
            break
        y = (y * y0).free_reduce()
        side = "J" if side == "I" else "I"
    return TreeVertex(y, side, node)


def fc_intersect_spherical_any(
    P: WordParabolic, Q: WordParabolic, ball_radius: int = 5
) -> tuple[WordParabolic, FCCertificate]:
    """``P ∩ Q`` for P of spherical type and Q arbitrary, in an FC-type group.

    Follows the double induction on the number of ∞ labels and the tree
    distance.  Only the spherical leaf intersections can be inexact; the
    certificate then reports the smallest radius they were certified to.
    """
    graph = P.graph
    if not is_spherical(graph, P.base):
        raise ValueError("P must have a spherical base")
    node = fc_factorize(graph)
    cert = FCCertificate(ball_radius)
    c, B = _isect(node, P.conjugator, frozenset(P.base), Q.conjugator, frozenset(Q.base), cert)
    if not B:
        c = ArtinWord(graph, ())
    return WordParabolic(c.free_reduce(), frozenset(B)), cert
