"""Double against triple brooms near the two order bounds."""

# %%
from wienerlab import best_double_broom, best_triple_broom, compare_brooms, proposition_bound, theorem_bound
from wienerlab import okok_bounds, offpath_bound, threshold_f

# %% [markdown]
# For a fixed diameter d, double brooms stay optimal up to one order and a
# triple broom wins from another on.  Between the two is an unresolved gap.

# %%
for d in (9, 100, 500, 1634):
    lo, hi = theorem_bound(d), proposition_bound(d)
    print(f"d={d}: double up to n={lo}, triple from n={hi}")

# %%
d = 1634
for n in range(theorem_bound(d), proposition_bound(d) + 1):
    c = compare_brooms(n, d)
    print(n, c.regime, c.winner, c.margin)

# %%
print(best_double_broom(10, 6))
print(best_triple_broom(12, 6))

# %% [markdown]
# Exact thresholds at p = 2, n = 1636.

# %%
print(okok_bounds(1636), offpath_bound(1636), float(threshold_f(2, 1636)))
