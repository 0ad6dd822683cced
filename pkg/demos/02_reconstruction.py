# %% [markdown]
# # Rebuilding a complex from its chain coalgebra
#
# An n-simplex of the reconstruction is a coalgebra map out of the chains of
# the standard n-simplex.  For simplicial complexes this recovers the
# 3-skeleton on the nose.

# %%
from scoalg import CoalgebraPresentation, enumerate_simplex_morphisms, reconstruct_skeleton, unit_map
from scoalg.corpus import resolve

X = resolve("rp2a")
C = CoalgebraPresentation.from_complex(X, max_degree=3)
print("generators per degree:", C.counts())
print("edges found:", len(enumerate_simplex_morphisms(C, 1)))
Y = reconstruct_skeleton(C, 3)
print("f-vector:", Y.f_vector(), "same complex:", Y == X)

# %%
u = unit_map(X, C)
print("unit map is an isomorphism:", u.is_isomorphism)

# %% [markdown]
# ## Rigidity
#
# The only self-map of the standard simplex fixing the top cell is the identity.

# %%
from scoalg.simplicial import standard_simplex

for n in range(4):
    ms = enumerate_simplex_morphisms(CoalgebraPresentation.from_complex(standard_simplex(n), n), n)
    print(n, [m.vertex_images() for m in ms if m.top == tuple(range(n + 1))])

# %% [markdown]
# ## Comparing two triangulations

# %%
from scoalg.reconstruction import find_coalgebra_isomorphism, vertex_map_of

Z = resolve("rp2b")
w = find_coalgebra_isomorphism(X, Z)
print({X.label(a): Z.label(b) for a, b in sorted(vertex_map_of(w).items())})
print(find_coalgebra_isomorphism(resolve("sphere2a"), X))
