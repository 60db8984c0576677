"""Moving a leaf or a whole broom and predicting the change in W."""

# %%
from wienerlab import (
    BroomSpec,
    canonical_form,
    classify,
    find_special_contexts,
    keep_inequality,
    leaf_path,
    predicted_broom_delta_full,
    predicted_broom_delta_reduced,
    predicted_leaf_delta,
    relocate_broom,
    relocate_leaf,
    threshold_f,
)
from wienerlab.tree import path_tree, wiener

# %% [markdown]
# Relocating a leaf: remove leaf x and hang a new leaf next to leaf y.  The
# change only depends on how many vertices hang off each vertex of the x-y path.

# %%
t = path_tree(5)
lp = leaf_path(t, 0, 4)
print(lp)
print("predicted", predicted_leaf_delta(lp), "actual", wiener(relocate_leaf(t, 0, 4)) - wiener(t))

# %% [markdown]
# A triple broom has a vertex with two equally deep brooms hanging off it.

# %%
t = BroomSpec(12, 2, 2, 2).realize()
(ctx,) = find_special_contexts(t)
print("x =", ctx.x, "p =", ctx.p, "t1 =", ctx.t1, "t2 =", ctx.t2)

# %%
new = relocate_broom(t, ctx)
print(classify(t), wiener(t), "->", classify(new), wiener(new))
print(canonical_form(new) == canonical_form(BroomSpec(12, 5, 2).realize()))
print("full formula", predicted_broom_delta_full(ctx, t.n))
print("reduced formula", predicted_broom_delta_reduced(ctx.t1, ctx.t2, ctx.p, t.n))

# %% [markdown]
# With one leaf on each side the move raises W, so such a vertex cannot occur
# in a tree of maximum W.  The smallest balanced size t1 = t2 that survives
# grows like the square root of n.

# %%
for n in (50, 200, 1636, 10_000):
    print(n, predicted_broom_delta_reduced(1, 1, 2, n), threshold_f(2, n).ceil())
