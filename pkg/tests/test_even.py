import pytest
from hypothesis import given, settings, strategies as st

from garsidekit.even import (
    OddLabelError,
    conjugate_containment_check,
    direct_split,
    even_cross_check,
    even_graph_example,
    even_intersect_reduce,
    member_standard_even,
    rho,
)
from garsidekit.graph import INF, CoxeterGraph, standard_graph
from garsidekit.words import ArtinWord

from oracles import artin_image

EVEN = even_graph_example()
TRIANGLE = CoxeterGraph.from_labels("pqr", {("p", "q"): 4, ("p", "r"): INF, ("q", "r"): INF})


def signed(names, max_len=8):
    return st.lists(st.tuples(st.sampled_from(sorted(names)), st.sampled_from((1, -1))), max_size=max_len)


def word_of(g, pairs):
    return ArtinWord(g, tuple((g.index(x), e) for x, e in pairs))


def relator(g, a, b):
    m = int(g.m(g.index(a), g.index(b)))
    left = [(a if k % 2 == 0 else b, 1) for k in range(m)]
    right = [(b if k % 2 == 0 else a, 1) for k in range(m)]
    return word_of(g, left) * word_of(g, right).inverse()


def finite_pairs(g):
    return [(a, b) for a in g.generators for b in g.generators if a < b and g.m(g.index(a), g.index(b)) != INF]


def respell(g, w, data):
    pairs = finite_pairs(g)
    for _ in range(data.draw(st.integers(1, 3))):
        cut = data.draw(st.integers(0, len(w)))
        if data.draw(st.booleans()):
            piece = relator(g, *data.draw(st.sampled_from(pairs)))
        else:
            x = data.draw(st.sampled_from(g.generators))
            piece = word_of(g, [(x, 1), (x, -1)])
        w = ArtinWord(g, w.letters[:cut]) * piece * ArtinWord(g, w.letters[cut:])
    return w


# ---------------------------------------------------------------------------
# the letter filter


def test_rho_examples():
    free = CoxeterGraph.from_labels("ab", {("a", "b"): INF})
    assert rho(ArtinWord.parse(free, "a b a^-1"), {"a"}).free_reduce().letters == ()
    assert str(rho(ArtinWord.parse(EVEN, "a c b^-1 d"), {"c", "d"})) == "c d"
    assert rho(ArtinWord(EVEN, ()), {"a"}).letters == ()


def test_rho_requires_even_labels():
    with pytest.raises(OddLabelError):
        rho(ArtinWord.parse(standard_graph("A", 2), "s1"), {"s1"})


@pytest.mark.parametrize("g", [EVEN, TRIANGLE, standard_graph("B", 2), standard_graph("I", 6)])
def test_rho_kills_or_keeps_each_relator(g):
    for X_size in range(g.rank + 1):
        for X in _subsets(g.generators, X_size):
            for a, b in finite_pairs(g):
                image = rho(relator(g, a, b), X).free_reduce()
                if {a, b} <= X:
                    assert image == relator(g, a, b)
                else:
                    assert image.letters == ()


def _subsets(names, k):
    from itertools import combinations

    return [frozenset(c) for c in combinations(names, k)]


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_rho_is_an_idempotent_retraction(data):
    X = frozenset(data.draw(st.lists(st.sampled_from(EVEN.generators), unique=True)))
    w = word_of(EVEN, data.draw(signed(EVEN.generators, 10)))
    v = word_of(EVEN, data.draw(signed(EVEN.generators, 10)))
    assert rho(rho(w, X), X) == rho(w, X)
    assert rho(w * v, X) == rho(w, X) * rho(v, X)
    inner = word_of(EVEN, data.draw(signed(X, 6))) if X else ArtinWord(EVEN, ())
    assert rho(inner, X) == inner


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_rho_respects_equality_in_b2(data):
    g = standard_graph("B", 2)
    X = data.draw(st.sampled_from([{"s1"}, {"s2"}]))
    w = word_of(g, data.draw(signed(g.generators, 8)))
    v = respell(g, w, data)
    assert artin_image(rho(w, X), "B", 2) == artin_image(rho(v, X), "B", 2)


def test_direct_split():
    assert sorted(map(sorted, direct_split(EVEN))) == [["a", "b"], ["c", "d", "e", "f"]]
    commuting = CoxeterGraph.from_labels("xyz", {}, default=2)
    assert len(direct_split(commuting)) == 3
    assert direct_split(TRIANGLE) == [frozenset("pqr")]


# ---------------------------------------------------------------------------
# membership


@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_membership_in_b2_against_free_group_model(data):
    g = standard_graph("B", 2)
    X = data.draw(st.sampled_from([set(), {"s1"}, {"s2"}, {"s1", "s2"}]))
    w = word_of(g, data.draw(signed(g.generators, 8)))
    if data.draw(st.booleans()) and X:
        w = respell(g, word_of(g, data.draw(signed(X, 6))), data)
    # in an even group, w lies in A_X exactly when it equals its filter
    expected = artin_image(w, "B", 2) == artin_image(rho(w, X), "B", 2)
    assert member_standard_even(w, X) is expected


def test_membership_examples():
    assert member_standard_even(ArtinWord.parse(EVEN, "c e e^-1 d"), {"c", "d"}) is True
    assert member_standard_even(ArtinWord.parse(EVEN, "a b"), {"a"}) is False
    assert member_standard_even(ArtinWord.parse(EVEN, "e c e^-1"), {"c"}) is False
    assert member_standard_even(ArtinWord.parse(TRIANGLE, "r p r^-1"), {"p"}) is False
    assert member_standard_even(ArtinWord.parse(EVEN, "a b a b a^-1 b^-1 a^-1 b^-1"), set()) is True


@settings(max_examples=100, deadline=None)
@given(data=st.data())
def test_membership_never_refutes_a_member(data):
    g = data.draw(st.sampled_from([EVEN, TRIANGLE]))
    X = data.draw(st.lists(st.sampled_from(g.generators), min_size=1, unique=True))
    w = respell(g, word_of(g, data.draw(signed(X, 6))), data)
    assert member_standard_even(w, X) is not False


# ---------------------------------------------------------------------------
# intersection reduction


def test_reduction_examples():
    X, Y = {"a", "c", "d", "e", "f"}, {"b", "c", "d"}
    f = ArtinWord.parse(EVEN, "a e^-1")
    same = even_intersect_reduce(f, X, f, X)
    assert same.x.letters == () and same.y.letters == ()
    assert same.certified_base == frozenset(X)
    disjoint = even_intersect_reduce(f, {"a"}, ArtinWord.parse(EVEN, "c"), {"b", "c"})
    assert disjoint.trivial and disjoint.Z == frozenset()
    red = even_intersect_reduce(f, X, ArtinWord.parse(EVEN, "b c f"), Y)
    assert red.certified_base == frozenset({"c", "d"})
    assert str(red.u) == "c f"
    assert red.to_json()["certified"] == {"conjugator": "c f", "base": ["c", "d"]}


@settings(max_examples=40, deadline=None)
@given(data=st.data())
def test_reduction_witnesses_live_in_the_right_subgroups(data):
    X = frozenset(data.draw(st.lists(st.sampled_from(EVEN.generators), min_size=1, unique=True)))
    Y = frozenset(data.draw(st.lists(st.sampled_from(EVEN.generators), min_size=1, unique=True)))
    f = word_of(EVEN, data.draw(signed(EVEN.generators, 4)))
    g = word_of(EVEN, data.draw(signed(EVEN.generators, 4)))
    red = even_intersect_reduce(f, X, g, Y)
    assert red.x.support() <= EVEN.indices(X)
    assert red.y.support() <= EVEN.indices(Y)
    assert red.Z == X & Y
    assert red.trivial == (not (X & Y))
    cc = even_cross_check(red, radius=2)
    assert cc.passed and not cc.violations


def test_cross_check_on_unresolved_reduction():
    # A_d and c A_d c^-1 meet trivially; the reduced pair is not certified
    red = even_intersect_reduce(ArtinWord(EVEN, ()), {"d"}, ArtinWord.parse(EVEN, "c"), {"d"})
    assert red.certified_base is None and str(red.v) == "c"
    cc = even_cross_check(red, radius=2)
    assert cc.passed and cc.confirmed == cc.checked == 10


@pytest.mark.parametrize(
    "f,g", [("", ""), ("a e^-1", "b c f"), ("e f^-1 b d", "a b^-1 e c")]
)
def test_cross_check_on_worked_cases(f, g):
    red = even_intersect_reduce(
        ArtinWord.parse(EVEN, f), {"a", "c", "d", "e", "f"}, ArtinWord.parse(EVEN, g), {"b", "c", "d"}
    )
    cc = even_cross_check(red, radius=3)
    assert cc.passed and cc.checked > 0 and cc.confirmed > 0


# ---------------------------------------------------------------------------
# conjugate containment


def test_containment_examples():
    one = ArtinWord(TRIANGLE, ())
    assert conjugate_containment_check(one, one, {"p"}) == "equal"
    h = ArtinWord.parse(TRIANGLE, "r q")
    assert conjugate_containment_check(h * ArtinWord.parse(TRIANGLE, "p^-1 p^-1"), h, {"p"}) == "equal"
    assert conjugate_containment_check(one, ArtinWord.parse(TRIANGLE, "r"), {"p"}) == "incomparable"
    with pytest.raises(OddLabelError):
        a2 = standard_graph("A", 2)
        conjugate_containment_check(ArtinWord(a2, ()), ArtinWord(a2, ()), {"s1"})


@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_containment_is_symmetric_and_sees_inner_conjugators(data):
    g = data.draw(st.sampled_from([EVEN, TRIANGLE]))
    X = frozenset(data.draw(st.lists(st.sampled_from(g.generators), min_size=1, unique=True)))
    h = word_of(g, data.draw(signed(g.generators, 4)))
    k = word_of(g, data.draw(signed(g.generators, 4)))
    assert conjugate_containment_check(h, k, X) == conjugate_containment_check(k, h, X)
    inner = respell(g, word_of(g, data.draw(signed(X, 4))), data)
    assert conjugate_containment_check(h * inner, h, X) != "incomparable"
