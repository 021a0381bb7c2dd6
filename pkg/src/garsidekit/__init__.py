"""Word problems, normal forms and parabolic subgroups for Artin and Coxeter groups."""

from .caps import ResourceCapExceeded
from .complexes import (
    NoOracleError,
    coset_poset_ball,
    derive,
    irreducible_parabolic_adjacent,
    salvetti_two_skeleton,
    to_dot,
)
from .coxeter import CoxeterElement, coset_split, cox_inv, cox_mul, is_spherical, reduce, theta
from .euclid import euclid_embed, euclid_intersect, euclidean_pair
from .even import conjugate_containment_check, even_intersect_reduce, member_standard_even, rho
from .fc import fc_equal, fc_factorize, fc_intersect_spherical_any, fc_member, fc_word_trivial
from .garside import (
    GarsideElement,
    center_generator,
    delta,
    g_inv,
    g_mul,
    mixed_form,
    normalize,
    recurrent,
    structure,
    to_word,
)
from .graph import CoxeterGraph, load_graph, parse_graph, standard_graph
from .parabolic import (
    ParabolicSubgroup,
    WordParabolic,
    intersect,
    make_parabolic,
    parabolic_closure,
    parse_parabolic,
    restandardise,
)
from .salvetti import restandardise_word, retract_word
from .words import ArtinWord

__version__ = "0.1.0"

__all__ = [
    "ArtinWord",
    "CoxeterElement",
    "CoxeterGraph",
    "GarsideElement",
    "NoOracleError",
    "ParabolicSubgroup",
    "ResourceCapExceeded",
    "WordParabolic",
    "center_generator",
    "conjugate_containment_check",
    "coset_poset_ball",
    "coset_split",
    "cox_inv",
    "cox_mul",
    "delta",
    "derive",
    "euclid_embed",
    "euclid_intersect",
    "euclidean_pair",
    "even_intersect_reduce",
    "fc_equal",
    "fc_factorize",
    "fc_intersect_spherical_any",
    "fc_member",
    "fc_word_trivial",
    "g_inv",
    "g_mul",
    "intersect",
    "irreducible_parabolic_adjacent",
    "is_spherical",
    "load_graph",
    "make_parabolic",
    "member_standard_even",
    "mixed_form",
    "normalize",
    "parabolic_closure",
    "parse_graph",
    "parse_parabolic",
    "recurrent",
    "reduce",
    "restandardise",
    "restandardise_word",
    "retract_word",
    "rho",
    "salvetti_two_skeleton",
    "standard_graph",
    "structure",
    "theta",
    "to_dot",
    "to_word",
]
