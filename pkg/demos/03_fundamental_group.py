# %% [markdown]
# # Fundamental group and first homology
#
# The edge-path group of a complex depends only on its 2-skeleton, which the
# coalgebra recovers.  Matching coalgebras therefore give matching presentations.

# %%
from scoalg import h1, pi1_presentation
from scoalg.corpus import resolve
from scoalg.topology import abelianization, format_h1

for name in ("s1a", "sphere2a", "rp2a"):
    X = resolve(name)
    p = pi1_presentation(X)
    print(name)
    print(p.format(X.labels or None))
    print("H_1 =", format_h1(*h1(X)), "| abelianized:", format_h1(*abelianization(p)))
    print()

# %%
from scoalg.reconstruction import find_coalgebra_isomorphism, vertex_map_of
from scoalg.topology import edge_relabeling, presentations_match

X, Y = resolve("rp2a"), resolve("rp2b")
vm = vertex_map_of(find_coalgebra_isomorphism(X, Y))
base = X.vertices[0]
print(presentations_match(pi1_presentation(X, base), pi1_presentation(Y, vm[base]),
                          edge_relabeling(vm, X.simplices(1))))
