import json

import pytest

from garsidekit.cli import main
from garsidekit.garside import normalize, structure
from garsidekit.graph import parse_graph, standard_graph
from garsidekit.parabolic import make_parabolic, parabolic_eq
from garsidekit.words import ArtinWord

GRAPHS = {
    "a2.cox": "generators: s1 s2\ndefault: 2\ns1 s2 3\n",
    "a3.cox": "generators: s1 s2 s3\ndefault: 2\ns1 s2 3\ns2 s3 3\n",
    "h3.cox": "generators: a b c\ndefault: 2\na b 3\nb c 5\n",
    "path.cox": "generators: a b c\ndefault: inf\na b 3\nb c 3\n",
    "affine.cox": "generators: t0 t1 t2\ndefault: 2\nt0 t1 3\nt1 t2 3\nt0 t2 3\n",
    "even.cox": "generators: p q r\ndefault: 2\np q 4\nq r 4\np r 4\n",
    "bad.cox": "generators: s1 s2\ndefault: 3\n",
}


@pytest.fixture
def graphs(tmp_path):
    for name, text in GRAPHS.items():
        (tmp_path / name).write_text(text, encoding="utf-8")
    return lambda name: str(tmp_path / name)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


# ---------------------------------------------------------------------------
# worked examples


def test_delta_h3(capsys, graphs):
    doc = run_json(capsys, "delta", "--graph", graphs("h3.cox"))
    assert doc["length"] == 15
    # the printed word and the worked word are the same element
    g = parse_graph(GRAPHS["h3.cox"])
    s = structure(g)
    printed = normalize(ArtinWord.parse(g, doc["word"]), s)
    worked = normalize(ArtinWord.parse(g, " ".join("babcbacbcbabcbc")), s)
    assert printed.key() == worked.key() == s.delta_element().key()


def test_nf_identity(capsys, graphs):
    doc = run_json(capsys, "nf", "--graph", graphs("a2.cox"), "--word", "s1 s1^-1")
    assert doc["identity"] is True and doc["word"] == "1"
    doc = run_json(capsys, "nf", "--graph", graphs("a2.cox"), "--word", "s2 s1 s2 s1^-1")
    assert doc["identity"] is False and doc["canonicalLength"] >= 1


def test_intersect_standard(capsys, graphs):
    doc = run_json(capsys, "intersect", "--graph", graphs("a3.cox"), "--p", "1|s1,s2", "--q", "1|s2,s3")
    assert doc["result"]["base"] == ["s2"]
    assert doc["certified"] is True


def test_center_and_closure(capsys, graphs):
    doc = run_json(capsys, "center", "--graph", graphs("a3.cox"), "--subset", "s1")
    assert doc["word"] == "s1"
    doc = run_json(capsys, "closure", "--graph", graphs("a2.cox"), "--word", "s2^-1 s1 s2")
    assert doc["closure"]["base"] == ["s1"]


def test_restandardise_prints_word_over_x(capsys, graphs):
    doc = run_json(capsys, "restandardise", "--graph", graphs("a3.cox"), "--p", "s1|s2", "--subset", "s1,s2")
    g = standard_graph("A", 3)
    s = structure(g)
    conj = ArtinWord.parse(g, "" if doc["conjugator"] == "1" else doc["conjugator"])
    assert conj.support() <= g.indices({"s1", "s2"})
    got = make_parabolic(normalize(conj, s), doc["base"])
    assert parabolic_eq(got, make_parabolic(s.word("s1"), {"s2"}))
    doc = run_json(capsys, "restandardise", "--graph", graphs("path.cox"), "--p", "a b|a", "--subset", "a,b")
    assert doc["method"] == "Coxeter split and retraction"


def test_retract_and_member(capsys, graphs):
    doc = run_json(capsys, "retract", "--graph", graphs("path.cox"), "--word", "a c b", "--subset", "a,b", "--trace")
    assert len(doc["trace"]) == 3
    doc = run_json(capsys, "member", "--graph", graphs("a2.cox"), "--word", "s1 s2 s1 s2^-1 s1^-1", "--subset", "s2")
    assert doc["member"] is True and doc["method"] == "garside"
    doc = run_json(capsys, "member", "--graph", graphs("path.cox"), "--word", "a c a^-1", "--subset", "a")
    assert doc["member"] is False and doc["method"] == "fc-amalgam"
    doc = run_json(capsys, "member", "--graph", graphs("even.cox"), "--word", "r p r^-1", "--subset", "p")
    assert doc["member"] is False and doc["method"] == "even-retraction"


def test_wordeq(capsys, graphs):
    doc = run_json(capsys, "wordeq", "--graph", graphs("a2.cox"), "--word", "s1 s2 s1", "--other", "s2 s1 s2")
    assert doc["equal"] is True
    doc = run_json(capsys, "wordeq", "--graph", graphs("path.cox"), "--word", "a c", "--other", "c a")
    assert doc["equal"] is False
    doc = run_json(capsys, "wordeq", "--graph", graphs("affine.cox"), "--word", "t0 t1 t0", "--other", "t1 t0 t1")
    assert doc["equal"] is True and doc["method"] == "positive-monoid"


def test_fc_and_euclid_intersections(capsys, graphs):
    doc = run_json(capsys, "fc-intersect", "--graph", graphs("path.cox"), "--p", "1|a,b", "--q", "1|b,c")
    assert doc["result"]["base"] == ["b"] and doc["certificate"]["status"] == "exact"
    doc = run_json(capsys, "euclid-intersect", "--graph", graphs("affine.cox"), "--p", "1|t1", "--q", "1|t1,t2")
    assert doc["result"]["base"] == ["t1"]


def test_complex_exports(capsys, graphs):
    doc = run_json(capsys, "complex", "--graph", graphs("a3.cox"), "--kind", "artin")
    assert doc["counts"] == [7, 12, 6]
    code, out, _ = run(capsys, "complex", "--graph", graphs("a2.cox"), "--format", "dot")
    assert code == 0 and out.startswith("graph derived {")
    doc = run_json(capsys, "complex", "--graph", graphs("a2.cox"), "--include-empty")
    assert doc["counts"][0] == 4


# ---------------------------------------------------------------------------
# exit codes and output stability


def test_usage_errors(capsys, graphs):
    assert run(capsys)[0] == 1
    assert run(capsys, "nf", "--word", "s1")[0] == 1
    assert run(capsys, "nf", "--graph", graphs("bad.cox"), "--word", "s1")[0] == 1
    assert run(capsys, "nf", "--graph", graphs("a2.cox"), "--word", "s7")[0] == 1
    assert run(capsys, "nf", "--graph", graphs("path.cox"), "--word", "a")[0] == 1
    code, _, err = run(capsys, "nf", "--graph", "/nonexistent/graph.cox", "--word", "s1")
    assert code == 1 and json.loads(err)["error"] == "usage"


def test_resource_cap(capsys, graphs, monkeypatch):
    monkeypatch.setenv("GARSIDEKIT_CAP", "10")
    code, _, err = run(capsys, "complex", "--graph", graphs("a3.cox"), "--radius", "3")
    assert code == 2 and json.loads(err)["error"] == "resource-cap"


def test_undecided(capsys, graphs):
    code, out, _ = run(capsys, "complex", "--graph", graphs("affine.cox"), "--radius", "1")
    assert code == 3
    code, out, _ = run(capsys, "wordeq", "--graph", graphs("affine.cox"), "--word", "t0 t1^-1", "--other", "t1^-1 t0")
    assert code == 3 and json.loads(out)["equal"] is None


def test_output_is_stable(capsys, graphs):
    argv = ["closure", "--graph", graphs("a3.cox"), "--word", "s2 s1 s3 s2^-1"]
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


def test_selftest_subset(capsys):
    code, out, err = run(capsys, "selftest", "--only", "1,11")
    assert code == 0
    doc = json.loads(out)
    assert doc["passed"] is True and [c["criterion"] for c in doc["criteria"]] == [1, 11]
    assert err.count("[PASS]") == 2
