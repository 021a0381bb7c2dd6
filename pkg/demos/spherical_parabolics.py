"""Normal forms, closures and intersections in the braid group on four strands."""

from garsidekit.garside import mixed_form, normalize, structure, to_word
from garsidekit.graph import standard_graph
from garsidekit.parabolic import intersect, make_parabolic, parabolic_closure, restandardise
from garsidekit.words import ArtinWord

g = standard_graph("A", 3)
s = structure(g)

w = ArtinWord.parse(g, "s2 s1 s3^-1 s2 s2 s1^-1")
x = normalize(w, s)
print("word            ", w)
print("left normal form", to_word(x), f"(inf {x.inf}, sup {x.sup})")
print("Δ               ", to_word(s.delta_element()))

# the smallest parabolic subgroup containing a conjugate of s1 s2
c = normalize(ArtinWord.parse(g, "s3 s1 s2 s3^-1"), s)
C = parabolic_closure(c)
print("closure of s3 s1 s2 s3^-1:", C.to_json())

P = make_parabolic(s.word("s3"), {"s1", "s2"})
Q = make_parabolic(s.identity(), {"s2", "s3"})
R, cert = intersect(P, Q)
print("intersection:", R.to_json(), "| exact" if cert.exact else "| ball-certified")

alpha, Y = restandardise(make_parabolic(s.word("s1"), {"s2"}), {"s1", "s2"})
a, b = mixed_form(alpha, "np")
word = (to_word(a).inverse() * to_word(b)).free_reduce()
print(f"s1 A_{{s2}} s1^-1 = ({word or '1'}) A_{{{','.join(sorted(Y))}}} ({word or '1'})^-1, a word over s1, s2")
