"""The poset of spherical subsets of a four-generator graph and its order complex."""

from garsidekit.complexes import coset_poset_ball, derive, to_dot
from garsidekit.graph import INF, CoxeterGraph

g = CoxeterGraph.from_labels(
    "abcd",
    {("a", "b"): 3, ("a", "c"): 3, ("b", "c"): 2, ("a", "d"): 3, ("c", "d"): 3, ("b", "d"): INF},
)
poset = coset_poset_ball(g, "deligne", 0)
complex_ = derive(poset)
print("elements:", [poset.label(i) for i in range(len(poset))])
print("simplices per dimension:", complex_.counts())
print(to_dot(complex_))

# one step further out: cosets with representatives of length at most one
ball = derive(coset_poset_ball(g, "deligne", 1))
print("radius-1 piece, simplices per dimension:", ball.counts())
