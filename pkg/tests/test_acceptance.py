"""Acceptance criteria, each run at its stated scope, tolerance and time budget.

Every test records one ``[PASS]``/``[FAIL]`` line, printed at the end of the
pytest run.
"""

import random

from acceptance_log import criterion
from oracles import count_free_trees_by_prufer, wiener_brute
from wienerlab import (
    BroomSpec,
    best_double_broom,
    best_triple_broom,
    find_special_contexts,
    free_trees,
    leaf_path,
    offpath_bound,
    okok_bounds,
    predicted_broom_delta_full,
    predicted_broom_delta_reduced,
    predicted_leaf_delta,
    proposition_bound,
    relocate_broom,
    relocate_leaf,
    theorem_bound,
    threshold_f,
    threshold_g,
)
from wienerlab.enumeration import extremal_table
from wienerlab.tree import (
    canonical_form,
    distances_from,
    leaves,
    random_tree,
    wiener_edge_decomposition,
    wiener_pairwise,
)
from wienerlab.verification import triple_broom_specs

SEED = 20240601
D_VALUES = (100, 500, 1634)


def test_1_leaf_delta_exact():
    with criterion(1, "leaf relocation delta, 10^4 random instances, 5 <= n <= 60", 10):
        rng = random.Random(SEED)
        for _ in range(10_000):
            t = random_tree(rng.randint(5, 60), rng)
            x, y = rng.sample(sorted(leaves(t)), 2)
            predicted = predicted_leaf_delta(leaf_path(t, x, y))
            actual = wiener_edge_decomposition(relocate_leaf(t, x, y)) - wiener_edge_decomposition(t)
            assert predicted == actual, (t.edges, x, y)


def _check_all_contexts(t):
    before = wiener_edge_decomposition(t)
    count = 0
    for ctx in find_special_contexts(t):
        for c in (ctx, ctx.swapped()):
            full = predicted_broom_delta_full(c, t.n)
            reduced = predicted_broom_delta_reduced(c.t1, c.t2, c.p, t.n)
            actual = wiener_edge_decomposition(relocate_broom(t, c)) - before
            assert full == reduced == actual, (t.edges, c.x)
            count += 1
    return count


def test_2_broom_delta_exact():
    with criterion(2, "broom relocation delta, all triple brooms 12 <= n <= 40 and 10^3 random trees", 30):
        t = BroomSpec(12, 2, 2, 2).realize()
        (ctx,) = find_special_contexts(t)
        new = relocate_broom(t, ctx)
        for w in (wiener_edge_decomposition, wiener_pairwise):
            assert (w(t), w(new)) == (214, 207)
        assert predicted_broom_delta_full(ctx, 12) == predicted_broom_delta_reduced(2, 2, 2, 12) == -7
        assert canonical_form(new) == canonical_form(BroomSpec(12, 5, 2).realize())

        checked = 0
        for spec in triple_broom_specs(12, 40):
            found = _check_all_contexts(spec.realize())
            assert found > 0, spec
            checked += found
        rng = random.Random(SEED)
        for _ in range(1000):
            checked += _check_all_contexts(random_tree(rng.randint(5, 40), rng))
        assert checked > 0


def test_3_wiener_routes_agree():
    with criterion(3, "pairwise == edge decomposition, all free trees n <= 10 and 10^4 random n <= 200", 20):
        total = 0
        for n in range(1, 11):
            for t in free_trees(n):
                assert wiener_pairwise(t) == wiener_edge_decomposition(t)
                total += 1
        assert total == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47 + 106
        rng = random.Random(SEED)
        for _ in range(10_000):
            t = random_tree(rng.randint(1, 200), rng)
            assert wiener_pairwise(t) == wiener_edge_decomposition(t), t.edges


def test_4_balanced_double_broom():
    with criterion(4, "balanced split strictly beats every split off by two, n <= 60", 10):
        for n in range(4, 61):
            for d in range(3, n):
                g = n - d + 1
                a0 = g // 2
                best = BroomSpec(n, a0, g - a0).wiener()
                for a in range(1, g):
                    w = BroomSpec(n, a, g - a).wiener()
                    assert w <= best
                    if abs(2 * a - g) >= 2:
                        assert w < best, (n, d, a)
                assert best_double_broom(n, d).wiener == best
        assert BroomSpec(10, 2, 3).wiener() == wiener_brute(10, BroomSpec(10, 2, 3).realize().edges) == 139
        assert BroomSpec(10, 1, 4).wiener() == wiener_brute(10, BroomSpec(10, 1, 4).realize().edges) == 131


def test_5_triple_wins_from_proposition_bound():
    with criterion(5, "best triple > best double at n = proposition bound, d in {100, 500, 1634}", 5):
        for d in D_VALUES:
            n = proposition_bound(d)
            assert best_triple_broom(n, d).wiener > best_double_broom(n, d).wiener, d


def test_6_double_holds_up_to_theorem_bound():
    with criterion(6, "best double >= every triple at n = theorem bound, d in {100, 500, 1634}", 5):
        for d in D_VALUES:
            n = theorem_bound(d)
            assert best_double_broom(n, d).wiener >= best_triple_broom(n, d).wiener, d


def test_7_argmax_structure():
    with criterion(7, "argmax trees n <= 12: leaves have eccentricity d, contexts have |t1 - t2| <= 1", 60):
        cells = 0
        for n in range(2, 13):
            for d, rec in extremal_table(n).items():
                cells += 1
                for t in rec.trees:
                    for v in leaves(t):
                        assert max(distances_from(t, v)) == d, (n, d, v)
                    for ctx in find_special_contexts(t):
                        assert abs(ctx.t1 - ctx.t2) <= 1, (n, d, ctx.x)
        assert cells == 1 + sum(n - 2 for n in range(3, 13))


def test_8_threshold_arithmetic():
    with criterion(8, "okok/offpath/theorem/proposition bounds and monotone f, g", 1):
        assert okok_bounds(1636) == (28, 29)
        assert offpath_bound(1636) == 56
        assert (theorem_bound(9), proposition_bound(9)) == (15, 21)
        assert (theorem_bound(1634), proposition_bound(1634)) == (1744, 1750)
        for fn in (threshold_f, threshold_g):
            values = [fn(p, 1636) for p in range(2, 112)]
            assert all(b > a for a, b in zip(values, values[1:]))


def test_9_enumeration_counts():
    expected = {4: 2, 5: 3, 6: 6, 7: 11, 8: 23, 9: 47, 10: 106}
    with criterion(9, "free-tree counts n = 4..10 (Prufer cross-check n <= 8) and 19320 at n = 16", 60):
        for n, k in expected.items():
            assert sum(1 for _ in free_trees(n)) == k
        assert sum(1 for _ in free_trees(16)) == 19320
    # the Prufer cross-check sits outside the timed n = 16 budget
    for n in range(4, 9):
        assert count_free_trees_by_prufer(n) == expected[n]
