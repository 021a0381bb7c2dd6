import pytest
from hypothesis import given, settings, strategies as st

from garsidekit.caps import ResourceCapExceeded
from garsidekit.coxeter import (
    CoxeterElement,
    classify_spherical,
    coset_split,
    cox_eq,
    cox_inv,
    cox_mul,
    descents,
    finite_group,
    generator,
    identity,
    in_parabolic,
    is_spherical,
    positive_words_equal,
    reduce,
    theta,
)
from garsidekit.graph import CoxeterGraph, standard_graph
from garsidekit.words import ArtinWord

from oracles import Dihedral, PermCoxeter

A2 = CoxeterGraph.from_labels("st", {("s", "t"): 3})


def words(rank, max_len=12):
    return st.lists(st.integers(0, rank - 1), max_size=max_len)


# ---------------------------------------------------------------------------
# worked values


def test_reduce_small_words():
    assert reduce(A2, list("ss")).names == ()
    assert reduce(A2, list("sts")).names == ("s", "t", "s")
    assert reduce(A2, list("tst")).names == ("s", "t", "s")
    assert reduce(A2, list("stst")).names == ("t", "s")


def test_multiplication_and_equality():
    st_ = reduce(A2, list("st"))
    assert cox_mul(st_, st_).names == ("t", "s")
    assert cox_mul(st_, cox_inv(st_)).is_identity()
    assert cox_eq(reduce(A2, list("sts")), reduce(A2, list("tst")))


def test_descents():
    assert descents(identity(A2)) == (frozenset(), frozenset())
    assert descents(generator(A2, "s")) == ({"s"}, {"s"})
    assert descents(reduce(A2, list("st"))) == ({"s"}, {"t"})


def test_coset_split_examples():
    u = reduce(A2, list("st"))
    head, tail = coset_split(u, {"s"})
    assert (head.names, tail.names) == (("s",), ("t",))
    assert coset_split(identity(A2), {"s"}) == (identity(A2), identity(A2))
    s = generator(A2, "s")
    assert coset_split(s, {"s"}) == (s, identity(A2))


def test_classify_examples():
    assert classify_spherical(A2, ()) == []
    [t] = classify_spherical(standard_graph("A", 3), ("s1", "s2", "s3"))
    assert t.as_tuple() == ("A3", 3, 4)
    free = CoxeterGraph.from_labels("ab", {}, default=float("inf"))
    assert classify_spherical(free, "ab") is None


def test_theta_examples():
    assert theta(ArtinWord.parse(A2, "s s^-1")).is_identity()
    assert theta(ArtinWord.parse(A2, "s^-1")).names == ("s",)
    assert theta(ArtinWord.parse(A2, "t s t")).names == ("s", "t", "s")


# ---------------------------------------------------------------------------
# permutation-model oracle


@pytest.mark.parametrize("kind,n", [("A", 2), ("B", 2), ("A", 3), ("B", 3), ("A", 4)])
def test_canonical_words_match_breadth_first_search(kind, n):
    g = standard_graph(kind, n)
    model = PermCoxeter(kind, n)
    table = model.shortlex_words()
    for perm, word in table.items():
        assert reduce(g, word).word == word
    assert len(finite_group(g, g.generators).words) == len(table)


@pytest.mark.parametrize("kind,n", [("A", 3), ("B", 3)])
@settings(max_examples=150, deadline=None)
@given(data=st.data())
def test_reduce_agrees_with_permutations(kind, n, data):
    g = standard_graph(kind, n)
    model = PermCoxeter(kind, n)
    w = data.draw(words(n))
    expected = model.shortlex_words()[model.element(w)]
    assert reduce(g, w).word == expected


@pytest.mark.parametrize("m", [4, 5, 6, 7])
def test_dihedral_orders(m):
    g = standard_graph("I", m)
    model = Dihedral(m)
    elems = finite_group(g, g.generators).words
    assert len(elems) == 2 * m
    assert len({model.element(w) for w in elems}) == 2 * m


@pytest.mark.parametrize("kind,n,order", [("H", 3, 120), ("F", 4, 1152), ("D", 4, 192)])
def test_group_orders(kind, n, order):
    g = standard_graph(kind, n)
    assert len(finite_group(g, g.generators).words) == order


# ---------------------------------------------------------------------------
# structural properties on fully enumerated groups


@pytest.mark.parametrize("kind,n", [("A", 2), ("B", 2), ("A", 3), ("B", 3)])
def test_exchange_parity(kind, n):
    g = standard_graph(kind, n)
    for w in finite_group(g, g.generators).words:
        u = reduce(g, w)
        for i in range(n):
            v = cox_mul(u, CoxeterElement(g, (i,)))
            assert abs(v.length - u.length) == 1


@pytest.mark.parametrize("kind,n", [("A", 2), ("B", 2), ("A", 3), ("B", 3)])
def test_coset_split_reassembles(kind, n):
    g = standard_graph(kind, n)
    subsets = [set(), {"s1"}, {"s1", "s2"}, set(g.generators), {g.generators[-1]}]
    for w in finite_group(g, g.generators).words:
        u = reduce(g, w)
        for X in subsets:
            head, tail = coset_split(u, X)
            assert cox_mul(head, tail) == u
            assert head.length + tail.length == u.length
            assert in_parabolic(head, X)
            # the tail is the shortest element of its coset W_X u
            assert all(
                cox_mul(CoxeterElement(g, (g.index(x),)), tail).length > tail.length for x in X
            )


@settings(max_examples=200, deadline=None)
@given(a=words(3), b=words(3))
def test_theta_is_a_homomorphism(a, b):
    g = standard_graph("B", 3)
    wa = ArtinWord(g, tuple((i, 1 if k % 2 else -1) for k, i in enumerate(a)))
    wb = ArtinWord(g, tuple((i, 1) for i in b))
    assert theta(wa * wb) == cox_mul(theta(wa), theta(wb))


@settings(max_examples=100, deadline=None)
@given(w=words(4, 10))
def test_reduce_is_idempotent(w):
    g = standard_graph("A", 4)
    once = reduce(g, w)
    assert reduce(g, once.word) == once


@pytest.mark.parametrize(
    "kind,n,expected",
    [
        ("A", 1, ("A1", 1, 1)), ("A", 5, ("A5", 5, 6)), ("B", 4, ("B4", 4, 4)),
        ("D", 4, ("D4", 4, 3)), ("D", 5, ("D5", 5, 8)), ("E", 6, ("E6", 6, 12)),
        ("E", 7, ("E7", 7, 9)), ("E", 8, ("E8", 8, 15)), ("F", 4, ("F4", 4, 6)),
        ("H", 3, ("H3", 3, 5)), ("H", 4, ("H4", 4, 15)), ("I", 5, ("I2(5)", 2, 5)),
        ("I", 8, ("I2(8)", 2, 4)),
    ],
)
def test_classification_table(kind, n, expected):
    g = standard_graph(kind, n)
    [t] = classify_spherical(g, g.generators)
    assert t.as_tuple() == expected


def test_reducible_and_affine_classification():
    g = CoxeterGraph.from_labels("abc", {("a", "b"): 3}, default=2)
    assert [t.as_tuple()[:2] for t in classify_spherical(g, "abc")] == [("A2", 2), ("A1", 1)]
    assert not is_spherical(standard_graph("Atilde", 2), ("t0", "t1", "t2"))
    assert is_spherical(standard_graph("Atilde", 2), ("t0", "t1"))


def test_positive_word_equality():
    tri = CoxeterGraph.from_labels("abc", {}, default=3)
    assert positive_words_equal(tri, (0, 1, 0), (1, 0, 1))
    assert not positive_words_equal(tri, (0, 1, 2), (1, 0, 2))
    assert not positive_words_equal(tri, (0, 1), (0, 1, 1))


def test_cap_override(monkeypatch):
    monkeypatch.setenv("GARSIDEKIT_CAP", "5")
    g = standard_graph("A", 4)
    with pytest.raises(ResourceCapExceeded):
        reduce(g, (0, 1, 0, 2, 1, 0, 3, 2, 1, 0))
