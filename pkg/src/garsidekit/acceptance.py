"""The acceptance suite, shared by ``garsidekit selftest`` and the test run.

Each check returns a :class:`CriterionResult`; nothing here raises on a
failed expectation, so a report always has one line per criterion.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from itertools import combinations, product
from typing import Callable, Iterable, Optional

from .complexes import coset_poset_ball, derive, interval
from .coxeter import reduce
from .euclid import euclid_embed, euclid_xi, euclidean_pair
from .even import even_cross_check, even_graph_example, even_intersect_reduce
from .fc import fc_factorize, fc_word_trivial
from .garside import (
    center_generator,
    delta,
    g_inv,
    g_mul,
    is_left_weighted,
    mixed_form,
    normalize,
    positive_meet,
    recurrent,
    structure,
    swap,
    to_word,
)
from .graph import CoxeterGraph, standard_graph
from .parabolic import (
    ball,
    contains,
    intersect,
    make_parabolic,
    member_parabolic,
    parabolic_closure,
    standard_parabolic,
)
from .salvetti import convexity_scan, retract_word
from .words import ArtinWord

__all__ = ["CriterionResult", "CRITERIA", "run_criterion", "run_all", "format_line"]


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def to_json(self) -> dict:
        return {
            "criterion": self.number,
            "title": self.title,
            "passed": self.passed,
            "detail": self.detail,
            "seconds": round(self.seconds, 3),
        }


def format_line(r: CriterionResult) -> str:
    return f"[{'PASS' if r.passed else 'FAIL'}] {r.number:>2} {r.title}: {r.detail} ({r.seconds:.1f}s)"


# ---------------------------------------------------------------------------
# shared helpers


def _random_word(rng: random.Random, graph: CoxeterGraph, max_len: int, names=None) -> ArtinWord:
    idx = sorted(graph.indices(names)) if names is not None else list(range(graph.rank))
    n = rng.randint(0, max_len)
    return ArtinWord(graph, tuple((rng.choice(idx), rng.choice((1, -1))) for _ in range(n)))


def _small_graphs() -> list[CoxeterGraph]:
    """Spherical graphs of rank at most three."""
    return [
        standard_graph("A", 1),
        standard_graph("A", 2),
        standard_graph("A", 3),
        standard_graph("B", 2),
        standard_graph("B", 3),
        standard_graph("H", 3),
        standard_graph("I", 5),
        standard_graph("I", 8),
        CoxeterGraph.from_labels(("s1", "s2", "s3"), {("s1", "s2"): 3}, default=2),
    ]


def _random_elements(rng: random.Random, count: int, max_len: int = 10):
    graphs = _small_graphs()
    for _ in range(count):
        g = rng.choice(graphs)
        yield normalize(_random_word(rng, g, max_len), structure(g))


def h3_graph() -> CoxeterGraph:
    """The 3-generator group with labels 2, 3 and 5, in letters a, b, c."""
    return CoxeterGraph.from_labels("abc", {("a", "b"): 3, ("b", "c"): 5, ("a", "c"): 2})


def ten_subset_graph() -> CoxeterGraph:
    """Four generators whose nonempty spherical subsets form a 10-element poset."""
    return CoxeterGraph.from_labels(
        "abcd",
        {("a", "b"): 3, ("a", "c"): 3, ("b", "c"): 2, ("a", "d"): 3, ("c", "d"): 3, ("b", "d"): float("inf")},
    )


# ---------------------------------------------------------------------------
# the criteria


def check_delta_h3(rng: random.Random) -> tuple[bool, str]:
    g = h3_graph()
    s = structure(g)
    word = "babcbacbcbabcbc"
    worked = ArtinWord.parse(g, " ".join(word))
    d = delta(g)
    same_element = reduce(g, list(word)) == d.element
    as_garside = normalize(worked, s)
    power = normalize(ArtinWord.parse(g, " ".join("abc" * 5)), s)
    checks = {
        "15 letters": len(worked) == 15 and len(d.names) == 15,
        "reduces to Δ": same_element,
        "equals Δ": as_garside.key() == s.delta_element().key(),
        "equals (abc)^5": as_garside.key() == power.key(),
    }
    bad = [k for k, v in checks.items() if not v]
    return not bad, f"Δ = {''.join(d.names)} (canonical); word {word}: " + (
        "all checks hold" if not bad else "failed " + ", ".join(bad)
    )


# exponent of (s1...sn) generating the centre, per irreducible type
K_DELTA_TABLE = {
    ("A", 1): 1, ("A", 2): 3, ("A", 3): 4, ("A", 4): 5,
    ("B", 2): 2, ("B", 3): 3, ("D", 4): 3,
    ("I", 5): 5, ("I", 6): 3, ("I", 7): 7, ("I", 8): 4,
    ("H", 3): 5,
}


def check_center_table(rng: random.Random) -> tuple[bool, str]:
    failures = []
    for (kind, n), k in K_DELTA_TABLE.items():
        g = standard_graph(kind, n)
        s = structure(g)
        z = center_generator(g, g.generators)
        expected = normalize(ArtinWord.positive(g, list(range(g.rank)) * k), s)
        in_pair = z.key() in (s.delta_element(1).key(), s.delta_element(2).key())
        commutes = all(
            g_mul(z, a).key() == g_mul(a, z).key()
            for a in (s.word(x) for x in g.generators)
        )
        if z.key() != expected.key() or not in_pair or not commutes:
            failures.append(f"{kind}{n}")
    total = len(K_DELTA_TABLE)
    if failures:
        return False, f"mismatch for {', '.join(failures)}"
    return True, f"{total} types match the table, lie in {{Δ, Δ²}} and are central"


def check_inverse(rng: random.Random) -> tuple[bool, str]:
    bad = 0
    for x in _random_elements(rng, 500):
        s = x.structure
        inv = g_inv(x)
        proper = all(f not in (0, s.delta) for f in inv.factors)
        direct = normalize(to_word(x).inverse(), s)
        if not (is_left_weighted(s, inv.factors) and proper
                and g_mul(x, inv).is_identity() and direct.key() == inv.key()):
            bad += 1
    return bad == 0, f"500 elements, {bad} failures"


def check_mixed(rng: random.Random) -> tuple[bool, str]:
    bad = checked_sup = entirely_negative = 0
    for x in _random_elements(rng, 500):
        a, b = mixed_form(x, "np")
        ok = a.power >= 0 and b.power >= 0 and positive_meet(a, b).is_identity()
        ok = ok and g_mul(g_inv(a), b).key() == x.key()
        if x.inf < 0 <= x.sup:
            checked_sup += 1
            ok = ok and a.sup == -x.inf and b.sup == x.sup
        elif x.sup < 0:
            # no np form with b ≠ 1 exists here; a carries the whole element
            entirely_negative += 1
            ok = ok and b.is_identity() and a.sup == -x.inf
        if not ok:
            bad += 1
    return bad == 0, (
        f"500 elements, {checked_sup} with inf<0≤sup checked for sup relations, "
        f"{entirely_negative} entirely negative, {bad} failures"
    )


def check_swap(rng: random.Random) -> tuple[bool, str]:
    bad = 0
    circuit_lengths = []
    for x in _random_elements(rng, 500):
        y, a = swap(x)
        ok = y.key() == g_mul(g_mul(a, x), g_inv(a)).key()
        rec = recurrent(x)
        infs = [t[0] for t in rec.trace]
        sups = [t[1] for t in rec.trace]
        ok = ok and all(p <= q for p, q in zip(infs, infs[1:]))
        ok = ok and all(p >= q for p, q in zip(sups, sups[1:]))
        c = rec.conjugator
        ok = ok and g_mul(g_mul(c, x), g_inv(c)).key() == rec.witness.key()
        ok = ok and swap(rec.circuit[-1])[0].key() == rec.witness.key()
        circuit_lengths.append(len(rec.circuit))
        if not ok:
            bad += 1
    return bad == 0, f"500 elements, longest circuit {max(circuit_lengths)}, {bad} failures"


def _elements_up_to(s, length: int):
    """Every element ``Δ^p x_1...x_r`` with ``|p| + r ≤ length``."""
    proper = [u for u in range(len(s.W.words)) if u not in (0, s.delta)]
    out = []
    for r in range(length + 1):
        for fs in product(proper, repeat=r):
            if r > 1 and not is_left_weighted(s, fs):
                continue
            for p in range(-(length - r), length - r + 1):
                out.append(s.from_simples(p, list(fs)))
    return {x.key(): x for x in out}.values()


def _parabolics_up_to(s, conj_len: int):
    g = s.graph
    letters = [(i, e) for i in range(g.rank) for e in (1, -1)]
    words = [()]
    layer = [()]
    for _ in range(conj_len):
        layer = [w + (l,) for w in layer for l in letters if not w or w[-1] != (l[0], -l[1])]
        words.extend(layer)
    found = {}
    for w in words:
        alpha = normalize(ArtinWord(g, w), s)
        for r in range(1, g.rank + 1):
            for X in combinations(g.generators, r):
                P = make_parabolic(alpha, X)
                found.setdefault(P.z.key(), P)
    return list(found.values())


def check_closure(rng: random.Random) -> tuple[bool, str]:
    bad = pairs = 0
    for g in (standard_graph("A", 2), standard_graph("A", 3)):
        s = structure(g)
        parabolics = _parabolics_up_to(s, 2)
        for x in _elements_up_to(s, 2):
            C = parabolic_closure(x)
            if not member_parabolic(x, C):
                bad += 1
                continue
            for P in parabolics:
                if member_parabolic(x, P):
                    pairs += 1
                    if not contains(P, C):
                        bad += 1
    return bad == 0, f"{pairs} (element, parabolic) pairs, {bad} failures"


def check_intersection(rng: random.Random) -> tuple[bool, str]:
    g = standard_graph("A", 3)
    s = structure(g)
    radius = 5
    bad = exact = 0
    for _ in range(50):
        ps = []
        for _ in range(2):
            conj = normalize(_random_word(rng, g, 3), s)
            size = rng.randint(1, 2)
            ps.append(make_parabolic(conj, rng.sample(g.generators, size)))
        P, Q = ps
        R, cert = intersect(P, Q, radius)
        exact += cert.exact
        ok = member_parabolic(R.z, P) and member_parabolic(R.z, Q)
        for A, B in ((P, Q), (Q, P)):
            a, ai = A.conjugator, g_inv(A.conjugator)
            for h, _ in ball(s, A.base, radius):
                x = g_mul(g_mul(a, h), ai)
                if member_parabolic(x, B) and not member_parabolic(x, R):
                    ok = False
                    break
        bad += not ok
    standard_bad = 0
    for X in _all_subsets(g.generators):
        for Y in _all_subsets(g.generators):
            R, cert = intersect(standard_parabolic(s, X), standard_parabolic(s, Y))
            if not (cert.exact and R == standard_parabolic(s, X & Y)):
                standard_bad += 1
    return bad == 0 and standard_bad == 0, (
        f"50 random pairs ({exact} exact), {bad} failures; standard pairs: {standard_bad} failures"
    )


def _all_subsets(names: Iterable[str]) -> list[frozenset[str]]:
    names = list(names)
    return [frozenset(c) for r in range(len(names) + 1) for c in combinations(names, r)]


def check_convexity(rng: random.Random) -> tuple[bool, str]:
    cases = [
        (standard_graph("A", 2), {"s1"}),
        (standard_graph("B", 2), {"s1"}),
        (standard_graph("A", 3), {"s1", "s2"}),
    ]
    parts = []
    ok = True
    for g, X in cases:
        rep = convexity_scan(g, X, 6)
        ok = ok and rep.passed
        parts.append(f"{rep.elements_scanned} elements/{len(rep.violations)} violations")
    return ok, "; ".join(parts)


def check_retraction(rng: random.Random) -> tuple[bool, str]:
    g = CoxeterGraph.from_labels("abc", {("b", "c"): 2}, default=3)
    image, _ = retract_word(ArtinWord.parse(g, "a b^-1 c"), {"a", "c"})
    example = str(image) == "a c"
    graphs = [
        g,
        standard_graph("A", 3),
        standard_graph("B", 3),
        standard_graph("Atilde", 2),
        CoxeterGraph.from_labels("abcd", {("a", "b"): 3, ("b", "c"): 4, ("c", "d"): 3}, default=float("inf")),
    ]
    bad = 0
    for k in range(1000):
        G = graphs[k % len(graphs)]
        X = frozenset(rng.sample(G.generators, rng.randint(0, G.rank)))
        w = _random_word(rng, G, 12)
        once, _ = retract_word(w, X)
        twice, _ = retract_word(once, X)
        if str(once) != str(twice) or len(once) > len(w) or not once.support() <= G.indices(X):
            bad += 1
    return example and bad == 0, f"example gives '{image}'; 1000 random words, {bad} failures"


def check_even(rng: random.Random) -> tuple[bool, str]:
    g = even_graph_example()
    X = {"a", "c", "d", "e", "f"}
    Y = {"b", "c", "d"}
    cases = [
        (ArtinWord(g, ()), ArtinWord(g, ())),
        (ArtinWord.parse(g, "a e^-1"), ArtinWord.parse(g, "b c f")),
        (ArtinWord.parse(g, "e f^-1 b d"), ArtinWord.parse(g, "a b^-1 e c")),
    ]
    cases += [(_random_word(rng, g, 5), _random_word(rng, g, 5)) for _ in range(2)]
    bad = []
    checked = 0
    for f, h in cases:
        red = even_intersect_reduce(f, X, h, Y)
        cc = even_cross_check(red, radius=4)
        checked += cc.checked
        if red.certified_base != frozenset({"c", "d"}) or not cc.passed:
            bad.append(f"{f}|{h}")
    return not bad, (
        f"{len(cases)} conjugator pairs certify base {{c,d}}; radius-4 cross-check over "
        f"{checked} elements" + ("" if not bad else f"; failed {bad}")
    )


def check_euclid(rng: random.Random) -> tuple[bool, str]:
    pair = euclidean_pair(2)
    A, B = pair.affine, pair.spherical
    s = structure(B)
    bad = 0
    for x, y in combinations(A.generators, 2):
        lhs = euclid_embed(ArtinWord.parse(A, f"{x} {y} {x}"))
        rhs = euclid_embed(ArtinWord.parse(A, f"{y} {x} {y}"))
        if normalize(lhs * rhs.inverse(), s).key() != s.identity().key():
            bad += 1
    xi_bad = sum(euclid_xi(euclid_embed(_random_word(rng, A, 10))) != 0 for _ in range(200))
    xi_rho = euclid_xi(pair.rho())
    ok = bad == 0 and xi_bad == 0 and xi_rho == 1
    return ok, f"relations: {bad} failures; ξ∘φ nonzero on {xi_bad}/200 words; ξ(ρ) = {xi_rho}"


def fc_leaf_graph() -> CoxeterGraph:
    """FC graph with spherical leaves {a,b,c} (type A3) and {c,d} (type B2)."""
    inf = float("inf")
    return CoxeterGraph.from_labels(
        "abcd",
        {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): 2, ("c", "d"): 4, ("b", "d"): inf, ("a", "d"): inf},
    )


def check_fc_word(rng: random.Random) -> tuple[bool, str]:
    g = fc_leaf_graph()
    leaves = fc_factorize(g).leaves()
    bad = trivial = 0
    for k in range(500):
        leaf = sorted(leaves[k % len(leaves)])
        s = structure(g, leaf)
        w = _random_word(rng, g, 10, leaf)
        if k % 2:
            # a different word for the same element, so the product is trivial
            w = w * to_word(normalize(_random_word(rng, g, 0, leaf) * w, s)).inverse()
        expected = normalize(w, s).is_identity()
        trivial += expected
        if fc_word_trivial(w) != expected:
            bad += 1
    st = CoxeterGraph.from_labels("st", {}, default=float("inf"))
    free = fc_word_trivial(ArtinWord.parse(st, "s t")) is False
    return bad == 0 and free, (
        f"500 leaf words ({trivial} trivial), {bad} disagreements; 's t' nontrivial: {free}"
    )


def check_complexes(rng: random.Random) -> tuple[bool, str]:
    g = ten_subset_graph()
    p = coset_poset_ball(g, "deligne", 0)
    c = derive(p)
    counts = c.counts()
    top = [i for i, (_, T) in enumerate(p.elements) if T == frozenset("abc")]
    triangles_ok = len(top) == 1 and all(top[0] in t for t in c.simplices[2]) if len(counts) > 2 else False
    independent = _chain_counts(p)
    fig_ok = counts == [10, 16, 6] and independent == counts and triangles_ok and p.check_order()
    graphs = [
        standard_graph("A", 3), standard_graph("B", 3), standard_graph("H", 3),
        standard_graph("A", 4), standard_graph("B", 4), standard_graph("D", 4),
        standard_graph("F", 4), ten_subset_graph(), fc_leaf_graph(),
    ]
    intervals = bad = 0
    for G in graphs:
        q = coset_poset_ball(G, "deligne", 0)
        for i, j in combinations(range(len(q)), 2):
            for a, b in ((i, j), (j, i)):
                if q.less(a, b):
                    intervals += 1
                    size = len(interval(q, a, b))
                    if size != 2 ** len(q.elements[b][1] - q.elements[a][1]):
                        bad += 1
    return fig_ok and bad == 0, (
        f"derived counts {counts} (chains by brute force {independent}); "
        f"{intervals} intervals on {len(graphs)} graphs, {bad} not cubes"
    )


def _chain_counts(p) -> list[int]:
    """Chains counted by brute force over subsets of elements."""
    n = len(p)
    counts = []
    for k in range(1, n + 1):
        total = 0
        for combo in combinations(range(n), k):
            ordered = sorted(combo, key=lambda i: len(p.elements[i][1]))
            if all(p.less(a, b) for a, b in zip(ordered, ordered[1:])):
                total += 1
        if total == 0:
            break
        counts.append(total)
    return counts


CRITERIA: list[tuple[int, str, Callable[[random.Random], tuple[bool, str]]]] = [
    (1, "Garside element of H3", check_delta_h3),
    (2, "central generator table", check_center_table),
    (3, "inverse formula", check_inverse),
    (4, "mixed normal form", check_mixed),
    (5, "swap and recurrence", check_swap),
    (6, "parabolic closure minimality", check_closure),
    (7, "intersection ball consistency", check_intersection),
    (8, "convexity scan", check_convexity),
    (9, "retraction example and properties", check_retraction),
    (10, "even intersection reduction", check_even),
    (11, "affine embedding into B3", check_euclid),
    (12, "FC word problem", check_fc_word),
    (13, "complex export", check_complexes),
]


def run_criterion(number: int, seed: int = 2024) -> CriterionResult:
    for n, title, fn in CRITERIA:
        if n == number:
            start = time.perf_counter()
            try:
                passed, detail = fn(random.Random(seed + n))
            except Exception as exc:  # reported as a failure line, never swallowed silently
                passed, detail = False, f"raised {type(exc).__name__}: {exc}"
            return CriterionResult(n, title, passed, detail, time.perf_counter() - start)
    raise ValueError(f"no criterion {number}")


def run_all(seed: int = 2024, only: Optional[Iterable[int]] = None) -> list[CriterionResult]:
    wanted = set(only) if only is not None else None
    return [run_criterion(n, seed) for n, _, _ in CRITERIA if wanted is None or n in wanted]
