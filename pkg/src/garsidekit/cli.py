"""Command-line front end; every subcommand prints one JSON document.

Exit codes: 0 success, 1 usage error, 2 resource cap hit, 3 undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .caps import ResourceCapExceeded
from .complexes import NoOracleError, coset_poset_ball, derive, to_dot
from .coxeter import is_spherical, positive_words_equal
from .euclid import euclid_intersect
from .even import member_standard_even
from .fc import NotFCError, fc_equal, fc_intersect_spherical_any, fc_member, is_fc
from .garside import (
    GarsideElement,
    delta,
    member_standard,
    mixed_form,
    normalize,
    parabolic_center,
    structure,
    to_word,
)
from .graph import GraphFormatError, load_graph
from .parabolic import (
    from_words,
    intersect,
    parabolic_closure,
    parse_parabolic,
    restandardise,
)
from .salvetti import restandardise_word, retract_word
from .words import ArtinWord

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_UNDECIDED = 0, 1, 2, 3


class UsageError(Exception):
    pass


class Undecided(Exception):
    """Raised after printing a result whose answer is not settled."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _emit(obj) -> None:
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def _word_text(w: ArtinWord) -> str:
    return str(w) or "1"


def _element_json(g: GarsideElement) -> dict:
    s = g.structure
    names = s.graph.generators
    a, b = mixed_form(g, "np")
    return {
        "word": _word_text(to_word(g)),
        "power": g.power,
        "factors": [" ".join(names[i] for i in s.W.words[f]) for f in g.factors],
        "inf": g.inf,
        "sup": g.sup,
        "canonicalLength": len(g.factors),
        "identity": g.is_identity(),
        "np": {"a": _word_text(to_word(a)), "b": _word_text(to_word(b))},
    }


def _subset(graph, text: Optional[str]) -> frozenset[str]:
    if text is None:
        return frozenset(graph.generators)
    names = frozenset(x.strip() for x in text.split(",") if x.strip())
    for n in names:
        graph.index(n)
    return names


def _spherical_structure(graph, what: str):
    if not is_spherical(graph, graph.generators):
        raise UsageError(f"{what} needs a spherical-type graph")
    return structure(graph)


# ---------------------------------------------------------------------------
# subcommands


def cmd_nf(args, graph):
    s = _spherical_structure(graph, "nf")
    w = ArtinWord.parse(graph, args.word)
    _emit({"input": args.word, **_element_json(normalize(w, s))})


def cmd_delta(args, graph):
    X = _subset(graph, args.subset)
    d = delta(graph, X)
    _emit({"word": " ".join(d.names), "length": len(d.names)})


def cmd_center(args, graph):
    X = _subset(graph, args.subset)
    z = parabolic_center(graph, X)
    w = to_word(z)
    _emit({"subset": list(graph.names(graph.indices(X))), "word": _word_text(w), "length": len(w)})


def cmd_closure(args, graph):
    s = _spherical_structure(graph, "closure")
    g = normalize(ArtinWord.parse(graph, args.word), s)
    _emit({"input": args.word, "closure": parabolic_closure(g).to_json()})


def cmd_intersect(args, graph):
    s = _spherical_structure(graph, "intersect")
    P = from_words(s, parse_parabolic(graph, args.p))
    Q = from_words(s, parse_parabolic(graph, args.q))
    R, cert = intersect(P, Q, args.ball)
    _emit({"result": R.to_json(), "certified": cert.certified, "certificate": cert.to_json()})
    if args.strict and not cert.certified:
        raise Undecided("intersection not certified on the requested ball")


def cmd_restandardise(args, graph):
    P = parse_parabolic(graph, args.p)
    X = _subset(graph, args.subset)
    if is_spherical(graph, graph.generators):
        s = structure(graph)
        alpha, Y = restandardise(from_words(s, P), X)
        # the np form a^-1 b spells alpha with letters of X only
        a, b = mixed_form(alpha, "np")
        conj = (to_word(a).inverse() * to_word(b)).free_reduce()
        method = "closure inside A_X"
    else:
        conj, Y = restandardise_word(P.conjugator, P.base, X)
        method = "Coxeter split and retraction"
    _emit({
        "conjugator": _word_text(conj),
        "base": list(graph.names(graph.indices(Y))),
        "method": method,
    })


def cmd_retract(args, graph):
    X = _subset(graph, args.subset)
    w = ArtinWord.parse(graph, args.word)
    out, trace = retract_word(w, X)
    doc = {"input": args.word, "X": list(graph.names(graph.indices(X))), "output": _word_text(out)}
    if args.trace:
        doc["trace"] = trace.to_json()["letters"]
    _emit(doc)


def cmd_member(args, graph):
    X = _subset(graph, args.subset)
    w = ArtinWord.parse(graph, args.word)
    if is_spherical(graph, graph.generators):
        verdict, method = member_standard(normalize(w, structure(graph)), X), "garside"
    elif is_fc(graph):
        verdict, method = fc_member(w, X), "fc-amalgam"
    elif graph.is_even():
        verdict, method = member_standard_even(w, X), "even-retraction"
    else:
        verdict = True if w.free_reduce().support() <= graph.indices(X) else None
        method = "syntactic"
    _emit({"input": args.word, "X": list(graph.names(graph.indices(X))), "member": verdict, "method": method})
    if verdict is None:
        raise Undecided("no oracle settles membership for this graph")


def cmd_wordeq(args, graph):
    a = ArtinWord.parse(graph, args.word)
    b = ArtinWord.parse(graph, args.other)
    if is_spherical(graph, graph.generators):
        s = structure(graph)
        verdict, method = normalize(a, s).key() == normalize(b, s).key(), "garside"
    elif is_fc(graph):
        verdict, method = fc_equal(a, b), "fc-amalgam"
    elif a.is_positive() and b.is_positive():
        verdict = positive_words_equal(graph, a.generators(), b.generators())
        method = "positive-monoid"
    else:
        same = str(a.free_reduce()) == str(b.free_reduce())
        verdict, method = (True if same else None), "free-reduction"
    _emit({"word": args.word, "other": args.other, "equal": verdict, "method": method})
    if verdict is None:
        raise Undecided("no word-problem oracle for this graph")


def cmd_fc_intersect(args, graph):
    P = parse_parabolic(graph, args.p)
    Q = parse_parabolic(graph, args.q)
    R, cert = fc_intersect_spherical_any(P, Q, args.ball)
    _emit({"result": R.to_json(), "certificate": cert.to_json()})
    if args.strict and not cert.exact and cert.ball_certified_to < cert.ball_radius:
        raise Undecided("a leaf intersection is not certified on the requested ball")


def cmd_euclid_intersect(args, graph):
    P = parse_parabolic(graph, args.p)
    Q = parse_parabolic(graph, args.q)
    R, cert = euclid_intersect(P, Q, args.ball)
    _emit({"result": R.to_json(), "certified": cert.certified, "certificate": cert.to_json()})
    if args.strict and not cert.certified:
        raise Undecided("intersection not certified on the requested ball")


def cmd_complex(args, graph):
    include = None
    if args.include_empty:
        include = True
    elif args.exclude_empty:
        include = False
    poset = coset_poset_ball(graph, args.kind, args.radius, include)
    c = derive(poset)
    if args.format == "dot":
        sys.stdout.write(to_dot(c))
    else:
        _emit(c.to_json())


def cmd_selftest(args, graph):
    from .acceptance import format_line, run_all

    only = None
    if args.only:
        only = [int(x) for x in args.only.split(",")]
    results = run_all(seed=args.seed, only=only)
    for r in results:
        print(format_line(r), file=sys.stderr)
    _emit({"passed": all(r.passed for r in results), "criteria": [r.to_json() for r in results]})
    if not all(r.passed for r in results):
        raise SelftestFailed()


class SelftestFailed(Exception):
    pass


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="garsidekit", description="Artin and Coxeter group computations.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def add(name, fn, help_text, graph=True):
        p = sub.add_parser(name, help=help_text)
        if graph:
            p.add_argument("--graph", required=True, metavar="FILE", help="Coxeter graph file")
        p.set_defaults(func=fn, needs_graph=graph)
        return p

    def ball_args(p):
        p.add_argument("--ball", type=int, default=5, metavar="N", help="certificate ball radius")
        p.add_argument("--strict", action="store_true", help="exit 3 when not certified")

    p = add("nf", cmd_nf, "left normal form of a word")
    p.add_argument("--word", required=True)
    p = add("delta", cmd_delta, "Garside element")
    p.add_argument("--subset", help="comma-separated generators (default: all)")
    p = add("center", cmd_center, "positive generator of the centre")
    p.add_argument("--subset", help="comma-separated generators (default: all)")
    p = add("closure", cmd_closure, "parabolic closure of an element")
    p.add_argument("--word", required=True)
    p = add("intersect", cmd_intersect, "intersection of two parabolics (spherical type)")
    p.add_argument("--p", required=True, help="conjugatorWord|a,b")
    p.add_argument("--q", required=True, help="conjugatorWord|a,b")
    ball_args(p)
    p = add("restandardise", cmd_restandardise, "rewrite a parabolic inside A_X")
    p.add_argument("--p", required=True, help="conjugatorWord|a,b")
    p.add_argument("--subset", required=True, help="X, comma-separated")
    p = add("retract", cmd_retract, "retraction of a word onto A_X")
    p.add_argument("--word", required=True)
    p.add_argument("--subset", required=True, help="X, comma-separated")
    p.add_argument("--trace", action="store_true", help="include the per-letter trace")
    p = add("member", cmd_member, "membership in a standard parabolic")
    p.add_argument("--word", required=True)
    p.add_argument("--subset", required=True, help="X, comma-separated")
    p = add("wordeq", cmd_wordeq, "equality of two words")
    p.add_argument("--word", required=True)
    p.add_argument("--other", required=True)
    p = add("fc-intersect", cmd_fc_intersect, "intersection in an FC-type group, P spherical")
    p.add_argument("--p", required=True, help="conjugatorWord|a,b (spherical base)")
    p.add_argument("--q", required=True, help="conjugatorWord|a,b")
    ball_args(p)
    p = add("euclid-intersect", cmd_euclid_intersect, "intersection in the affine group of type Ã_n")
    p.add_argument("--p", required=True, help="conjugatorWord|t0,t1")
    p.add_argument("--q", required=True, help="conjugatorWord|t0,t1")
    ball_args(p)
    p = add("complex", cmd_complex, "coset poset and derived complex")
    p.add_argument("--kind", choices=("salvetti", "deligne", "artin", "clique"), default="deligne")
    p.add_argument("--radius", type=int, default=0)
    p.add_argument("--format", choices=("json", "dot"), default="json")
    empty = p.add_mutually_exclusive_group()
    empty.add_argument("--include-empty", action="store_true", help="include cosets of the trivial subgroup")
    empty.add_argument("--exclude-empty", action="store_true", help="omit cosets of the trivial subgroup")
    p = add("selftest", cmd_selftest, "run the acceptance suite", graph=False)
    p.add_argument("--only", help="comma-separated criterion numbers")
    p.add_argument("--seed", type=int, default=2024)
    return parser


def _error(kind: str, message: str, code: int) -> int:
    print(json.dumps({"error": kind, "message": message}), file=sys.stderr)
    return code


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("a subcommand is required")
        graph = load_graph(args.graph) if args.needs_graph else None
        args.func(args, graph)
    except UsageError as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    except ResourceCapExceeded as exc:
        return _error("resource-cap", str(exc), EXIT_CAP)
    except Undecided as exc:
        return _error("undecided", str(exc), EXIT_UNDECIDED)
    except NoOracleError as exc:
        return _error("undecided", str(exc), EXIT_UNDECIDED)
    except SelftestFailed:
        return _error("selftest", "at least one acceptance criterion failed", EXIT_USAGE)
    except (GraphFormatError, NotFCError, KeyError, ValueError, OSError) as exc:
        return _error("usage", str(exc), EXIT_USAGE)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
