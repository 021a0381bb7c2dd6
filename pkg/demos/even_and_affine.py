"""Letter-filter retractions of an even group, and the affine group Ã_2 inside B_3."""

from garsidekit.euclid import euclid_embed, euclid_intersect, euclidean_pair
from garsidekit.even import even_graph_example, even_intersect_reduce, rho
from garsidekit.parabolic import parse_parabolic
from garsidekit.words import ArtinWord

g = even_graph_example()
w = ArtinWord.parse(g, "a c b^-1 d e")
print(f"ρ onto {{c, d}} of {w}:", rho(w, {"c", "d"}))
red = even_intersect_reduce(ArtinWord.parse(g, "a e^-1"), "acdef", ArtinWord.parse(g, "b c f"), "bcd")
print("reduced intersection:", red.to_json())

pair = euclidean_pair(2)
t0 = ArtinWord.parse(pair.affine, "t0")
print("t0 in B_3:", euclid_embed(t0))
R, cert = euclid_intersect(parse_parabolic(pair.affine, "t2|t0,t1"), parse_parabolic(pair.affine, "1|t1,t2"))
print("t2 A_{t0,t1} t2^-1 ∩ A_{t1,t2} =", R, "| exact" if cert.exact else "| ball-certified")
