# %% [markdown]
# # Coproducts on a simplex
#
# The structure maps send a bar word and a simplex to a sum of tensor words.
# Degree zero is the Alexander-Whitney coproduct; positive degree words are
# obtained by contracting onto the top vertex.

# %%
from scoalg import CoalgebraEvaluator, e
from scoalg.cartan import chain_map_defect, xi

ev = CoalgebraEvaluator()
print(ev.f(2, e(0), (0, 1, 2)))

# %% [markdown]
# The first higher word, a cup-1 product.  Every term has the top vertex in
# its leftmost factor.

# %%
for k in (1, 2, 3):
    print(f"e1 on [0..{k}]:", ev.f(2, e(1), tuple(range(k + 1))))

# %%
# the recursion produces a chain map, checked word by word
from scoalg.operad import bar_words

bad = [(A, k) for k in range(5) for m in range(4) for A in bar_words(2, m, prefix_identity=False)
       if chain_map_defect(ev, 2, A, tuple(range(k + 1)))]
print("chain map defects:", bad)

# %% [markdown]
# ## The top word is a diagonal
#
# e_k on a k-simplex is plus or minus the simplex tensored with itself.
# Compare the observed sign with (-1)^(k(k-1)/2).

# %%
for k in range(7):
    s = tuple(range(k + 1))
    print(k, ev.f(2, e(k), s).coefficient((s, s)), xi(k))
