"""Special vertices, broom and leaf relocation, and their exact Wiener deltas.

Notation follows the usual one for this problem: at a special vertex ``x``
two components ``T1``, ``T2`` of ``T - x`` each hold exactly one broom
vertex; every leaf of either sits ``p`` steps from ``x``; ``t1``, ``t2``
count those leaves.  Relocating the broom deletes ``T2`` and hangs
``|V(T2)| = p + t2 - 1`` new leaves on the broom vertex of ``T1``.

All delta formulas are exact integers and hold for any tree of the right
shape; maximality of the Wiener index is never assumed.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from ._exact import SqrtBound, ceil_sqrt
from .errors import DomainError, StaleContextError, UsageError
from .tree import _trusted, diameter

__all__ = [
    "BroomArm",
    "SpecialContext",
    "SpecialScan",
    "LeafPath",
    "scan_special",
    "find_special_contexts",
    "relocate_broom",
    "predicted_broom_delta_full",
    "predicted_broom_delta_reduced",
    "keep_inequality",
    "threshold_f",
    "threshold_g",
    "okok_bounds",
    "offpath_bound",
    "offpath_bound_scan",
    "monotone_p_limit",
    "leaf_path",
    "relocate_leaf",
    "predicted_leaf_delta",
    "balance_deltas",
]


@dataclass(frozen=True)
class BroomArm:
    """A component of ``T - x`` that is a path ending in a bunch of leaves.

    ``root`` is the neighbour of ``x`` in the component; ``broom`` the only
    broom vertex in it; ``leaves`` the leaves hanging from ``broom``;
    ``p`` the distance from ``x`` to each of those leaves.
    """

    root: int
    broom: int
    leaves: tuple
    p: int
    vertices: frozenset

    @property
    def t(self):
        return len(self.leaves)


@dataclass(frozen=True)
class SpecialContext:
    x: int
    arm1: BroomArm
    arm2: BroomArm
    n: int

    @property
    def p(self):
        return self.arm1.p

    @property
    def t1(self):
        return self.arm1.t

    @property
    def t2(self):
        return self.arm2.t

    @property
    def comp1(self):
        return self.arm1.vertices

    @property
    def comp2(self):
        return self.arm2.vertices

    @property
    def broom1(self):
        return self.arm1.broom

    @property
    def broom2(self):
        return self.arm2.broom

    @property
    def leaf1(self):
        return min(self.arm1.leaves)

    @property
    def leaf2(self):
        return min(self.arm2.leaves)

    @property
    def size_ab(self):
        """``|A u B|``: every vertex outside ``T2``."""
        return self.n - len(self.arm2.vertices)

    @property
    def size_b(self):
        """``|B|``: vertices outside ``T1``, ``T2`` and ``x``."""
        return self.n - len(self.arm1.vertices) - len(self.arm2.vertices) - 1

    def swapped(self):
        """The same pair with the roles of the two components exchanged."""
        return SpecialContext(self.x, self.arm2, self.arm1, self.n)


@dataclass(frozen=True)
class SpecialScan:
    contexts: tuple
    near_misses: tuple


def _walk_arm(adj, x, w):
    """Follow the component of ``T - x`` through ``w``; a BroomArm or None."""
    prev, cur, depth = x, w, 1
    chain = [w]
    while True:
        nbrs = [u for u in adj[cur] if u != prev]
        if not nbrs:
            return None  # w itself is a leaf hanging on x
        leafs = [u for u in nbrs if len(adj[u]) == 1]
        if len(leafs) == len(nbrs):
            verts = frozenset(chain) | frozenset(leafs)
            return BroomArm(w, cur, tuple(sorted(leafs)), depth + 1, verts)
        if leafs or len(nbrs) > 1:
            return None
        prev, cur = cur, nbrs[0]
        chain.append(cur)
        depth += 1


def scan_special(t):
    """Every special (vertex, component pair), plus the near misses.

    A pair of single-broom-vertex components at a vertex of degree >= 3 whose
    leaves are closer than the diameter is a context when both leaf depths
    agree, and a near miss otherwise.  Order is by ``(x, min label of T1,
    min label of T2)`` and ``T1`` is the component with the smaller label.
    """
    if t.n < 5:
        return SpecialScan((), ())
    adj = t.adj
    diam = diameter(t)
    contexts, near = [], []
    for x in range(t.n):
        if len(adj[x]) < 3:
            continue
        arms = [a for a in (_walk_arm(adj, x, w) for w in adj[x] if len(adj[w]) > 1) if a is not None]
        arms.sort(key=lambda a: min(a.vertices))
        for i, a1 in enumerate(arms):
            for a2 in arms[i + 1:]:
                if a1.p + a2.p >= diam:
                    continue
                ctx = SpecialContext(x, a1, a2, t.n)
                (contexts if a1.p == a2.p else near).append(ctx)
    return SpecialScan(tuple(contexts), tuple(near))


def find_special_contexts(t):
    return list(scan_special(t).contexts)


def _check_context(t, ctx):
    """Re-walk both arms of ``ctx`` in ``t``; raise if anything differs."""
    x = ctx.x
    ok = ctx.n == t.n and 0 <= x < t.n and len(t.adj[x]) >= 3
    if ok:
        for arm in (ctx.arm1, ctx.arm2):
            if arm.root not in t.adj[x] or _walk_arm(t.adj, x, arm.root) != arm:
                ok = False
                break
    ok = ok and ctx.arm1.root != ctx.arm2.root and ctx.arm1.p == ctx.arm2.p
    if not ok or 2 * ctx.p >= diameter(t):
        raise StaleContextError(f"context at x={ctx.x} does not belong to this tree")


def relocate_broom(t, ctx):
    """Delete ``T2`` and hang ``|V(T2)|`` fresh leaves on the broom vertex of ``T1``.

    The vertex labels of ``T2`` are reused for the new leaves, so the
    result is again a tree on ``0 .. n-1``.
    """
    _check_context(t, ctx)
    return _relocate_broom(t, ctx)


def _relocate_broom(t, ctx):
    gone = ctx.comp2
    edges = [(u, v) for u, v in t.edges if u not in gone and v not in gone]
    edges.extend((ctx.broom1, v) for v in sorted(gone))
    return _trusted(t.n, edges)


def _exact_div(num, den, what):
    q, r = divmod(num, den)
    if r:
        raise ArithmeticError(f"{what} is not an integer: {num}/{den}")
    return q


def predicted_broom_delta_full(ctx, n=None, *, p=None, t1=None, t2=None, size_ab=None, size_b=None):
    """``W(T') - W(T)`` for broom relocation from the component sizes.

    Either pass a context (and optionally ``n`` for a consistency check) or
    pass the raw quantities as keywords with ``ctx=None``.
    """
    if ctx is not None:
        if n is not None and n != ctx.n:
            raise StaleContextError(f"context built for n={ctx.n}, called with n={n}")
        p, t1, t2, size_ab, size_b = ctx.p, ctx.t1, ctx.t2, ctx.size_ab, ctx.size_b
    m = p + t2 - 1
    # six times the delta, kept in integers
    six = (6 * m * (m - 1)
           - p * (p - 1) * (3 * t2 + p - 2)
           - 6 * t2 * (t2 - 1)
           + size_ab * (6 * m - 3 * p * (p - 1 + 2 * t2))
           + 6 * m * (p - 1) * (size_b - t1))
    return _exact_div(six, 6, "broom delta")


def predicted_broom_delta_reduced(t1, t2, p, n):
    """Same delta written in ``t1, t2, p, n`` only.

    Well defined for any integers; at ``p = 1`` it vanishes.
    """
    six = -(p - 1) * (12 * (t1 - 1) * (p + t2 - 1) + p * (-3 * n - 5 + 12 * t2 + 10 * p))
    return _exact_div(six, 6, "reduced broom delta")


def keep_inequality(t1, t2, p, n):
    """Whether relocating ``T2`` does not increase the Wiener index.

    Evaluated in rationals; equivalent to the reduced delta being <= 0.
    """
    if p < 2:
        raise UsageError(f"keep inequality needs p >= 2, got {p}")
    return t1 - 1 >= Fraction(p * (3 * n + 5 - 12 * t2 - 10 * p), 12 * (p + t2 - 1))


def threshold_f(p, n):
    """Least real ``t`` with ``keep_inequality(t, t, p, n)``, as a SqrtBound."""
    return SqrtBound(Fraction(p * (3 * n + 2 * p - 7), 12), 1 - p)


def threshold_g(p, n):
    """Least real ``t1`` with ``keep_inequality(t1, t1 - 1, p, n)``."""
    return SqrtBound(Fraction(p * (3 * n + 2 * p - 7) + 3, 12), Fraction(3, 2) - p)


def monotone_p_limit(n):
    """``floor(4 * sqrt((n - 1) / 2) - 3)``, the top of the range where f, g increase."""
    return isqrt(8 * (n - 1)) - 3


def okok_bounds(n):
    """Least admissible ``t1`` at ``p = 2`` when ``t1 = t2`` and when ``t1 = t2 + 1``."""
    if n < 1636:
        raise DomainError(f"bound is only established for n >= 1636, got {n}")
    return threshold_f(2, n).ceil(), threshold_g(2, n).ceil()


def offpath_bound(n):
    """``ceil(2 * sqrt((n - 1) / 2)) - 2``.

    Lower bound on the vertices of ``T1 u T2`` off a diametral path; proven
    for n >= 1636 but evaluated for any n >= 1.
    """
    return ceil_sqrt(2 * (n - 1)) - 2


def offpath_bound_scan(n, p_max=None):
    """Minimum over ``p`` of ``ceil(2 * sqrt(p(3n+2p-7)/12) - p)`` and its argmin."""
    p_max = p_max if p_max is not None else n // 2
    best = None
    for p in range(2, p_max + 1):
        v = ceil_sqrt(Fraction(p * (3 * n + 2 * p - 7), 3)) - p
        if best is None or v < best[0]:
            best = (v, p)
    return best


@dataclass(frozen=True)
class LeafPath:
    """The ``x``-``y`` path between two leaves and what hangs off it.

    ``path[i]`` is the vertex at distance ``i`` from ``x``; ``hanging[i-1]``
    is the number of vertices hanging from ``path[i]`` off the path, for
    ``i = 1 .. r-1``.
    """

    path: tuple
    hanging: tuple

    @property
    def r(self):
        return len(self.path) - 1

    @property
    def x(self):
        return self.path[0]

    @property
    def y(self):
        return self.path[-1]


def _check_leaves(t, x, y):
    for v in (x, y):
        if not isinstance(v, int) or not 0 <= v < t.n:
            raise DomainError(f"vertex {v!r} outside 0..{t.n - 1}")
        if len(t.adj[v]) != 1:
            raise DomainError(f"vertex {v} is not a leaf")
    if x == y:
        raise DomainError("the two leaves must differ")


def leaf_path(t, x, y):
    _check_leaves(t, x, y)
    adj = t.adj
    parent = {x: None}
    stack = [x]
    while stack:
        u = stack.pop()
        if u == y:
            break
        for w in adj[u]:
            if w not in parent:
                parent[w] = u
                stack.append(w)
    path = [y]
    while path[-1] != x:
        path.append(parent[path[-1]])
    path.reverse()
    # sizes hanging off each internal path vertex: n minus what lies on the
    # path side, computed by subtree sizes rooted at x
    on_path = set(path)
    size = _subtree_sizes(t, x)
    hanging = []
    for i in range(1, len(path) - 1):
        v = path[i]
        s = sum(size[w] for w in adj[v] if w not in on_path)
        hanging.append(s)
    return LeafPath(tuple(path), tuple(hanging))


def _subtree_sizes(t, root):
    parent = [-1] * t.n
    parent[root] = root
    order = [root]
    for u in order:
        for w in t.adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    size = [1] * t.n
    for u in reversed(order[1:]):
        size[parent[u]] += size[u]
    return size


def relocate_leaf(t, x, y):
    """Remove leaf ``x`` and attach a new leaf (reusing label ``x``) to the neighbour of ``y``."""
    if t.n < 3:
        raise DomainError("leaf relocation needs at least three vertices")
    _check_leaves(t, x, y)
    (y_nb,) = t.adj[y]
    edges = [e for e in t.edges if x not in e]
    edges.append((y_nb, x))
    return _trusted(t.n, edges)


def predicted_leaf_delta(lp):
    r = lp.r
    return sum((r - 2 * i) * s for i, s in enumerate(lp.hanging, start=1)) - (r - 2)


def balance_deltas(ctx):
    """Deltas for moving a witness leaf from ``T1`` to ``T2`` and back the other way."""
    k = 2 * ctx.p - 2
    return k * (ctx.t1 - ctx.t2 - 1), k * (ctx.t2 - ctx.t1 - 1)
