"""Brute force over every free tree of small order."""

# %%
import time

from wienerlab import extremal_table, free_trees

# %%
for n in range(4, 13):
    print(n, sum(1 for _ in free_trees(n)))

# %%
start = time.perf_counter()
print(sum(1 for _ in free_trees(16)), f"{time.perf_counter() - start:.2f}s")

# %% [markdown]
# Per diameter, the maximum W, how many trees attain it and whether they are
# all double brooms.  Ties at small order are common.

# %%
for n in (7, 10, 12):
    for d, rec in extremal_table(n).items():
        shapes = ", ".join(str(s) for s in rec.shapes)
        print(n, d, rec.max_wiener, rec.num_argmax, rec.all_double_broom, shapes)
