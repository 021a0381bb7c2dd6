"""Brute-force models used as independent oracles by the tests.

Nothing here imports the library's algorithms; only the graph and word
containers are shared.
"""

from __future__ import annotations

from collections import deque
from itertools import combinations


# ---------------------------------------------------------------------------
# Coxeter groups of types A and B as (signed) permutation groups


class PermCoxeter:
    """W(A_n) as S_{n+1}, or W(B_n) as signed permutations of 1..n.

    Generator indices follow ``standard_graph``: ``s_1 ... s_{n-1}`` swap
    neighbours and, in type B, ``s_n`` changes the sign of the last entry.
    """

    def __init__(self, kind: str, n: int):
        self.kind, self.n = kind, n
        size = n + 1 if kind == "A" else n
        self.identity = tuple(range(1, size + 1))
        self.gens = []
        for i in range(n):
            if kind == "A" or i < n - 1:
                p = list(self.identity)
                p[i], p[i + 1] = p[i + 1], p[i]
            else:
                p = list(self.identity)
                p[-1] = -p[-1]
            self.gens.append(tuple(p))

    @staticmethod
    def compose(p, q):
        """``p ∘ q`` acting on signed points."""
        def at(x):
            v = p[abs(x) - 1]
            return v if x > 0 else -v
        return tuple(at(x) for x in q)

    def element(self, gens) -> tuple:
        p = self.identity
        for i in gens:
            p = self.compose(p, self.gens[i])
        return p

    def shortlex_words(self) -> dict:
        """Element -> ShortLex-least word, by breadth-first search in letter order."""
        words = {self.identity: ()}
        queue = deque([self.identity])
        while queue:
            p = queue.popleft()
            for i, g in enumerate(self.gens):
                q = self.compose(p, g)
                if q not in words:
                    words[q] = words[p] + (i,)
                    queue.append(q)
        return words


class Dihedral:
    """W(I_2(m)) as pairs (rotation k, reflection flag)."""

    def __init__(self, m: int):
        self.m = m
        self.identity = (0, 0)
        self.gens = [(0, 1), (1, 1)]

    def compose(self, a, b):
        k1, f1 = a
        k2, f2 = b
        return ((k1 + (-k2 if f1 else k2)) % self.m, f1 ^ f2)

    def element(self, gens):
        p = self.identity
        for i in gens:
            p = self.compose(p, self.gens[i])
        return p


# ---------------------------------------------------------------------------
# braid groups acting on free groups


def _free_reduce(word):
    out = []
    for x in word:
        if out and out[-1] == (x[0], -x[1]):
            out.pop()
        else:
            out.append(x)
    return tuple(out)


def _invert(word):
    return tuple((g, -e) for g, e in reversed(word))


class FreeGroupAction:
    """Artin's faithful action of the braid group on ``n+1`` strands.

    ``σ_i`` sends ``x_{i-1} -> x_{i-1} x_i x_{i-1}^-1`` and ``x_i -> x_{i-1}``.
    A braid is recorded by the images of the free generators.
    """

    def __init__(self, strands: int):
        self.strands = strands

    def _letter(self, i: int, e: int):
        a, b = (i, 1), (i + 1, 1)
        if e == 1:
            return {i: (a, b, (i, -1)), i + 1: (a,)}
        return {i: (b,), i + 1: ((i + 1, -1), a, b)}

    def act(self, braid_letters) -> tuple:
        """Images of ``x_0 ... x_n`` under the composite automorphism."""
        images = [((j, 1),) for j in range(self.strands)]
        for i, e in reversed(braid_letters):
            sub = self._letter(i, e)
            new = []
            for img in images:
                out = []
                for g, s in img:
                    piece = sub.get(g, ((g, 1),))
                    out.extend(piece if s == 1 else _invert(piece))
                new.append(_free_reduce(out))
            images = new
        return tuple(images)


def artin_image(word, kind: str, n: int) -> tuple:
    """Free-group image of an Artin word of type A_n or B_n.

    Type B_n embeds in the braid group on ``n+1`` strands by
    ``s_n -> σ_1^2`` and ``s_i -> σ_{n-i+1}`` for ``i < n``.
    """
    letters = []
    for i, e in word.letters:
        if kind == "A":
            letters.append((i, e))
        elif i == n - 1:
            letters.extend([(0, e), (0, e)])
        else:
            letters.append((n - 1 - i, e))
    return FreeGroupAction(n + 1).act(letters)


# ---------------------------------------------------------------------------
# posets


def count_chains(elements, less) -> list[int]:
    """Number of chains of each size, by testing every subset."""
    n = len(elements)
    counts = []
    for k in range(1, n + 1):
        total = 0
        for combo in combinations(range(n), k):
            ok = True
            for a, b in combinations(combo, 2):
                if not (less(a, b) or less(b, a)):
                    ok = False
                    break
            total += ok
        if total == 0:
            break
        counts.append(total)
    return counts


def positive_orbit(graph, word: tuple) -> set:
    """All positive words reachable by braid moves (a finite set)."""
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            a, b = w[i], w[i + 1]
            if a == b:
                continue
            m = graph.m(a, b)
            if m == float("inf") or i + m > len(w):
                continue
            alt = tuple(a if k % 2 == 0 else b for k in range(m))
            if w[i:i + m] == alt:
                nb = w[:i] + tuple(b if k % 2 == 0 else a for k in range(m)) + w[i + m:]
                if nb not in seen:
                    seen.add(nb)
                    queue.append(nb)
    return seen


# ---------------------------------------------------------------------------
# free products


def free_product_trivial(letters, factor_of, factor_trivial) -> bool:
    """Word problem in a free product by repeated syllable cancellation.

    ``factor_of`` maps a generator index to its factor; ``factor_trivial``
    decides triviality of a letter tuple inside one factor.
    """
    syllables = []
    for letter in letters:
        f = factor_of(letter[0])
        if syllables and syllables[-1][0] == f:
            syllables[-1][1].append(letter)
        else:
            syllables.append((f, [letter]))
    changed = True
    while changed:
        changed = False
        for i, (f, word) in enumerate(syllables):
            if factor_trivial(f, tuple(word)):
                del syllables[i]
                if 0 < i < len(syllables) and syllables[i - 1][0] == syllables[i][0]:
                    syllables[i - 1][1].extend(syllables.pop(i)[1])
                changed = True
                break
    return not syllables
