import pytest
from hypothesis import given, settings, strategies as st

from oracles import diameter_brute, wiener_brute
from wienerlab import (
    BroomSpec,
    DomainError,
    best_double_broom,
    best_triple_broom,
    compare_brooms,
    double_broom,
    proposition_bound,
    theorem_bound,
    triple_broom,
    wiener_broom,
)
from wienerlab.brooms import regime
from wienerlab.tree import broom_vertices, leaves


doubles = st.builds(lambda d, a, b: BroomSpec(d + a + b - 1, a, b),
                    st.integers(3, 40), st.integers(1, 15), st.integers(1, 15))
triples = st.builds(lambda d, a, b, c: BroomSpec(d + a + b + c, a, b, c),
                    st.integers(5, 30), st.integers(1, 10), st.integers(1, 10), st.integers(1, 10))


@given(st.one_of(doubles, triples))
@settings(max_examples=150, deadline=None)
def test_closed_form_matches_bfs(spec):
    t = spec.realize()
    assert t.n == spec.n
    assert spec.wiener() == wiener_broom(spec) == wiener_brute(t.n, t.edges)
    assert diameter_brute(t.n, t.edges) == spec.diameter


@given(triples)
@settings(max_examples=60, deadline=None)
def test_triple_layout(spec):
    t = spec.realize()
    d = spec.diameter
    z = d - 1
    assert broom_vertices(t) == {0, d - 2, z}
    assert len(leaves(t)) == spec.leaf_total
    assert {w for w in t.adj[z]} - leaves(t) == {1}


def test_spot_values():
    assert BroomSpec(10, 2, 3).wiener() == 139
    assert BroomSpec(10, 1, 4).wiener() == 131
    assert BroomSpec(6, 2, 2).wiener() == 29
    assert BroomSpec(12, 2, 2, 2).wiener() == 214
    assert wiener_brute(10, double_broom(10, 2, 3).edges) == 139
    assert wiener_brute(12, triple_broom(12, 2, 2, 2).edges) == 214


@pytest.mark.parametrize("args", [(10, 0, 3), (4, 2, 2), (10, 2, 2, 0), (8, 2, 2, 1)])
def test_invalid_specs(args):
    with pytest.raises(DomainError):
        BroomSpec(*args)


@given(st.integers(3, 60), st.integers(2, 40))
def test_best_double_is_balanced_maximum(d, g):
    n = d + g - 1
    best = best_double_broom(n, d)
    assert best.a == g // 2 and best.a + best.b == g
    assert best.wiener == max(BroomSpec(n, a, g - a).wiener() for a in range(1, g))


def test_best_double_example():
    assert tuple(best_double_broom(10, 6)) == (2, 3, 139)


@pytest.mark.parametrize("n, d", [(12, 6), (15, 7), (20, 9)])
def test_best_triple_by_bfs(n, d):
    g = n - d
    expect = max(
        (wiener_brute(n, BroomSpec(n, a, b, g - a - b).realize().edges), -a, -b)
        for a in range(1, g - 1) for b in range(1, g - a))
    best = best_triple_broom(n, d)
    assert best.wiener == expect[0]
    assert (best.a, best.b) == (-expect[1], -expect[2])


def test_best_triple_example():
    assert tuple(best_triple_broom(12, 6)) == (1, 3, 2, 216)


@pytest.mark.parametrize("n, d", [(5, 5), (6, 2), (4, 4)])
def test_no_double_broom(n, d):
    with pytest.raises(DomainError):
        best_double_broom(n, d)


@pytest.mark.parametrize("n, d", [(7, 5), (10, 4), (8, 6)])
def test_no_triple_broom(n, d):
    with pytest.raises(DomainError):
        best_triple_broom(n, d)


def test_bounds():
    assert (theorem_bound(9), proposition_bound(9)) == (15, 21)
    assert (theorem_bound(1634), proposition_bound(1634)) == (1744, 1750)
    with pytest.raises(DomainError):
        theorem_bound(2)


def test_regimes():
    assert regime(1744, 1634) == "theorem"
    assert regime(1745, 1634) == "gap"
    assert regime(1750, 1634) == "proposition"


def test_compare():
    cmp = compare_brooms(1750, 1634)
    assert cmp.winner == "triple" and cmp.margin == 51 and cmp.regime == "proposition"
    assert compare_brooms(1744, 1634).winner == "double"
    assert compare_brooms(12, 6).margin == 216 - 215
