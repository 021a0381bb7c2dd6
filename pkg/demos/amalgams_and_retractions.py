"""Word problem, Bass–Serre tree distances and intersections in an FC-type group."""

from garsidekit.fc import TreeVertex, fc_equal, fc_factorize, fc_intersect_spherical_any, tree_geodesic
from garsidekit.graph import INF, CoxeterGraph
from garsidekit.parabolic import parse_parabolic
from garsidekit.salvetti import retract_word
from garsidekit.words import ArtinWord

# a–b and b–c braid, a–c free: the group splits over A_b
g = CoxeterGraph.from_labels("abc", {("a", "b"): 3, ("b", "c"): 3, ("a", "c"): INF})
node = fc_factorize(g)
print("splitting:", node.to_json())

u = ArtinWord.parse(g, "a b a c")
v = ArtinWord.parse(g, "b a b c")
print(f"{u} = {v}?", fc_equal(u, v))
print("a c = c a?", fc_equal(ArtinWord.parse(g, "a c"), ArtinWord.parse(g, "c a")))

path = tree_geodesic(TreeVertex(ArtinWord(g, ()), "I", node), TreeVertex(ArtinWord.parse(g, "c a"), "I", node))
print("tree distance from A_{a,b} to c a·A_{a,b}:", path.length)

image, _ = retract_word(ArtinWord.parse(g, "a c b c^-1 a"), {"a", "b"})
print("retraction of a c b c^-1 a onto A_{a,b}:", image)

R, cert = fc_intersect_spherical_any(parse_parabolic(g, "c|a,b"), parse_parabolic(g, "1|b,c"))
print("c A_{a,b} c^-1 ∩ A_{b,c} =", R, f"({cert.status})")
