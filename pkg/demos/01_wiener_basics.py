"""Wiener index of small trees, computed two ways."""

# %%
import random

import numpy as np

from wienerlab import BroomSpec, canonical_form, classify, diameter
from wienerlab.tree import (
    distance_matrix,
    path_tree,
    random_tree,
    star_tree,
    tree_from_edges,
    wiener_edge_decomposition,
    wiener_pairwise,
)

# %% [markdown]
# The Wiener index is the sum of all pairwise distances.  On a path it is
# C(n+1, 3), on a star (n-1)^2; every other tree of the same order sits between.

# %%
for n in (5, 10, 20):
    print(n, wiener_pairwise(path_tree(n)), wiener_pairwise(star_tree(n)))

# %% [markdown]
# The full distance matrix for a double broom with two leaves at each end.

# %%
t = BroomSpec(6, 2, 2).realize()
D = distance_matrix(t)
print(D)
print("W =", D.sum() // 2, "diameter =", diameter(t), "shape =", classify(t))

# %% [markdown]
# Cutting an edge splits the tree into parts of size s and n - s; that edge
# lies on s(n - s) shortest paths.  Summing over edges gives the same number
# in linear time.

# %%
rng = random.Random(1)
sizes = [50, 200, 1000]
for n in sizes:
    t = random_tree(n, rng)
    a, b = wiener_pairwise(t), wiener_edge_decomposition(t)
    print(n, a, b, a == b)

# %%
# canonical forms ignore labels
t = random_tree(12, rng)
perm = np.random.default_rng(0).permutation(12)
u = tree_from_edges(12, [(int(perm[a]), int(perm[b])) for a, b in t.edges])
print(canonical_form(t) == canonical_form(u))
