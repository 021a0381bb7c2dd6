from collections import deque

import pytest
from hypothesis import given, settings, strategies as st

from garsidekit.coxeter import theta
from garsidekit.garside import structure
from garsidekit.graph import CoxeterGraph, standard_graph
from garsidekit.salvetti import convexity_scan, garside_oracle, member_standard_general, retract_word
from garsidekit.words import ArtinWord

from oracles import PermCoxeter, artin_image

INF = float("inf")


def signed(names, max_len=10):
    return st.lists(st.tuples(st.sampled_from(names), st.sampled_from((1, -1))), max_size=max_len)


def word_of(g, pairs):
    return ArtinWord(g, tuple((g.index(x), e) for x, e in pairs))


def relator(g, a, b):
    m = int(g.m(g.index(a), g.index(b)))
    left = [(a if k % 2 == 0 else b, 1) for k in range(m)]
    right = [(b if k % 2 == 0 else a, 1) for k in range(m)]
    return word_of(g, left) * word_of(g, right).inverse()


def respell(g, w, data):
    """Insert braid relators and cancelling pairs at random positions."""
    finite = [(a, b) for a in g.generators for b in g.generators if a < b and g.m(g.index(a), g.index(b)) != INF]
    for _ in range(data.draw(st.integers(1, 3))):
        cut = data.draw(st.integers(0, len(w)))
        if finite and data.draw(st.booleans()):
            a, b = data.draw(st.sampled_from(finite))
            piece = relator(g, a, b)
        else:
            x = data.draw(st.sampled_from(g.generators))
            piece = word_of(g, [(x, 1), (x, -1)])
        w = ArtinWord(g, w.letters[:cut]) * piece * ArtinWord(g, w.letters[cut:])
    return w


# ---------------------------------------------------------------------------
# worked values


def test_retraction_example():
    g = CoxeterGraph.from_labels("abc", {("b", "c"): 2}, default=3)
    w, trace = retract_word(ArtinWord.parse(g, "a b^-1 c"), {"a", "c"})
    assert str(w) == "a c"
    assert [r.letter for r in trace.records] == [("a", 1), ("b", -1), ("c", 1)]
    assert trace.output == w


def test_empty_word_and_empty_x():
    g = standard_graph("A", 3)
    assert retract_word(ArtinWord(g, ()), {"s1"})[0].letters == ()
    assert retract_word(ArtinWord.parse(g, "s1 s2 s3^-1"), ())[0].letters == ()


def test_words_over_x_are_fixed():
    g = standard_graph("Atilde", 2)
    w = ArtinWord.parse(g, "t0 t1^-1 t0 t0 t1")
    assert retract_word(w, {"t0", "t1"})[0] == w
    w = ArtinWord.parse(g, "t0 t1^-1 t2")
    assert retract_word(w, g.generators)[0] == w


def test_membership_examples():
    g = standard_graph("A", 2)
    oracle = garside_oracle(structure(g))
    assert member_standard_general(ArtinWord.parse(g, "s1 s1"), {"s1"}, None) is True
    assert member_standard_general(ArtinWord.parse(g, "s2 s1 s2^-1"), {"s1"}, None) is None
    assert member_standard_general(ArtinWord.parse(g, "s2 s1 s2^-1"), {"s1"}, oracle) is False
    assert member_standard_general(ArtinWord.parse(g, "s1 s2 s1 s2^-1 s1^-1"), {"s2"}, oracle) is True
    assert member_standard_general(ArtinWord.parse(g, "s1 s2 s1 s2^-1 s1^-1"), {"s1"}, oracle) is False


def test_convexity_examples():
    g = standard_graph("A", 2)
    rep = convexity_scan(g, {"s1"}, 0)
    assert rep.elements_scanned == 1 and rep.members == 1 and rep.passed
    rep = convexity_scan(g, {"s1"}, 4)
    assert rep.passed and rep.members == 9
    full = convexity_scan(g, g.generators, 3)
    assert full.passed and full.members == full.elements_scanned
    assert full.to_json()["passed"] is True


@pytest.mark.parametrize("radius", [1, 2, 3, 4])
def test_convexity_ball_size_matches_free_group_model(radius):
    g = standard_graph("A", 2)
    seen = {artin_image(ArtinWord(g, ()), "A", 2)}
    frontier = deque([()])
    for _ in range(radius):
        nxt = deque()
        for w in frontier:
            for l in ((0, 1), (0, -1), (1, 1), (1, -1)):
                v = w + (l,)
                img = artin_image(ArtinWord(g, v), "A", 2)
                if img not in seen:
                    seen.add(img)
                    nxt.append(v)
        frontier = nxt
    assert convexity_scan(g, {"s1"}, radius).elements_scanned == len(seen)


# ---------------------------------------------------------------------------
# properties

GRAPHS = [
    standard_graph("A", 3),
    standard_graph("B", 3),
    standard_graph("Atilde", 2),
    CoxeterGraph.from_labels("abcd", {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3}, default=INF),
]


@settings(max_examples=200, deadline=None)
@given(data=st.data())
def test_retraction_is_idempotent_and_shortening(data):
    g = data.draw(st.sampled_from(GRAPHS))
    X = data.draw(st.lists(st.sampled_from(g.generators), unique=True))
    w = word_of(g, data.draw(signed(g.generators, 12)))
    once, _ = retract_word(w, X)
    assert len(once) <= len(w)
    assert once.support() <= g.indices(X)
    assert retract_word(once, X)[0] == once


@pytest.mark.parametrize("kind,n", [("A", 3), ("B", 3)])
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_retraction_respects_equality_spherical(kind, n, data):
    g = standard_graph(kind, n)
    X = data.draw(st.lists(st.sampled_from(g.generators), unique=True))
    w = word_of(g, data.draw(signed(g.generators, 8)))
    v = respell(g, w, data)
    assert artin_image(w, kind, n) == artin_image(v, kind, n)
    rw, rv = retract_word(w, X)[0], retract_word(v, X)[0]
    assert artin_image(rw, kind, n) == artin_image(rv, kind, n)


# two non-spherical ambients whose chosen X spans a braid group A_2
NONSPHERICAL = [
    (CoxeterGraph.from_labels("abc", {("a", "b"): 3, ("b", "c"): 3}, default=INF), ("a", "b")),
    (standard_graph("Atilde", 2), ("t0", "t1")),
    (CoxeterGraph.from_labels("abcd", {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3}, default=INF), ("c", "d")),
]


@pytest.mark.parametrize("g,X", NONSPHERICAL)
@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_retraction_respects_equality_nonspherical(g, X, data):
    w = word_of(g, data.draw(signed(g.generators, 8)))
    v = respell(g, w, data)

    def as_a2(word):
        pos = {g.index(X[0]): 0, g.index(X[1]): 1}
        return ArtinWord(standard_graph("A", 2), tuple((pos[i], e) for i, e in word.letters))

    rw, rv = retract_word(w, X)[0], retract_word(v, X)[0]
    assert artin_image(as_a2(rw), "A", 2) == artin_image(as_a2(rv), "A", 2)


def parabolic_perms(model, indices):
    seen = {model.identity}
    queue = deque([model.identity])
    while queue:
        p = queue.popleft()
        for i in indices:
            q = model.compose(p, model.gens[i])
            if q not in seen:
                seen.add(q)
                queue.append(q)
    return seen


@settings(max_examples=80, deadline=None)
@given(data=st.data())
def test_membership_agrees_with_constructions(data):
    g = standard_graph("A", 3)
    oracle = garside_oracle(structure(g))
    X = data.draw(st.lists(st.sampled_from(g.generators), min_size=1, max_size=2, unique=True))
    inner = word_of(g, data.draw(signed(X, 6)))
    member = respell(g, inner, data)
    assert member_standard_general(member, X, oracle) is True
    w = word_of(g, data.draw(signed(g.generators, 8)))
    verdict = member_standard_general(w, X, oracle)
    model = PermCoxeter("A", 3)
    if verdict:
        assert model.element(theta(w).word) in parabolic_perms(model, g.indices(X))
    assert verdict == (artin_image(w, "A", 3) == artin_image(retract_word(w, X)[0], "A", 3))
