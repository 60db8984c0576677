"""Trees on dense integer labels, distances, Wiener index and shape tests.

A :class:`Tree` is validated once on construction and never mutated, so it
can be shared freely between threads or shipped to worker processes.

Two Wiener-index routes are provided and are kept deliberately unrelated:

* :func:`wiener_pairwise` builds the full distance matrix and sums it;
* :func:`wiener_edge_decomposition` sums ``s * (n - s)`` over edges, where
  ``s`` is the number of vertices on one side of the edge.
"""

from collections import deque
from dataclasses import dataclass
import random

import numpy as np

from .errors import TreeValidationError, UsageError

__all__ = [
    "MAX_ORDER",
    "Tree",
    "ShapeClass",
    "tree_from_edges",
    "parse_tree_text",
    "format_tree_text",
    "path_tree",
    "star_tree",
    "from_prufer",
    "random_tree",
    "distances_from",
    "eccentricity",
    "diameter",
    "diametral_path",
    "wiener_pairwise",
    "wiener_edge_decomposition",
    "wiener",
    "distance_matrix",
    "leaves",
    "broom_vertices",
    "canonical_form",
    "classify",
    "is_double_broom",
]

#: Largest accepted order; keeps every Wiener value inside int64.
MAX_ORDER = 200_000


class Tree:
    """An immutable, validated tree on vertices ``0 .. n-1``.

    Use :func:`tree_from_edges` to build one from user input.
    """

    __slots__ = ("n", "edges", "adj", "_diameter")

    def __init__(self, n, edges, adj):
        self.n = n
        self.edges = edges
        self.adj = adj
        self._diameter = None

    def degree(self, v):
        return len(self.adj[v])

    def __eq__(self, other):
        if not isinstance(other, Tree):
            return NotImplemented
        return self.n == other.n and sorted(self.edges) == sorted(other.edges)

    def __hash__(self):
        return hash((self.n, tuple(sorted(self.edges))))

    def __repr__(self):
        return f"Tree(n={self.n}, edges={list(self.edges)})"

    def __reduce__(self):
        return (_rebuild, (self.n, self.edges))


def _rebuild(n, edges):
    return _trusted(n, edges)


def _trusted(n, edges):
    """Build a Tree from edges already known to form a tree."""
    adj = [[] for _ in range(n)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    return Tree(n, tuple(edges), tuple(tuple(a) for a in adj))


def tree_from_edges(n, edges):
    """Validate ``edges`` and return the :class:`Tree` they describe.

    Raises :class:`TreeValidationError` naming the first violation: bad
    order, out-of-range label, self-loop, duplicate edge, cycle, wrong edge
    count or disconnection.
    """
    if not isinstance(n, int) or n < 1:
        raise TreeValidationError("order", f"n must be a positive integer, got {n!r}")
    if n > MAX_ORDER:
        raise TreeValidationError("order", f"n={n} exceeds {MAX_ORDER}")
    edges = [tuple(e) for e in edges]
    parent = list(range(n))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    seen = set()
    for i, e in enumerate(edges):
        if len(e) != 2:
            raise TreeValidationError("edge", f"edge #{i} is not a pair: {e!r}")
        u, v = e
        for w in (u, v):
            if not isinstance(w, int) or not 0 <= w < n:
                raise TreeValidationError("label", f"edge #{i} {e!r} has label outside 0..{n - 1}")
        if u == v:
            raise TreeValidationError("self-loop", f"edge #{i} ({u}, {v})")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise TreeValidationError("duplicate-edge", f"edge #{i} ({u}, {v})")
        seen.add(key)
        ru, rv = find(u), find(v)
        if ru == rv:
            raise TreeValidationError("cycle", f"edge #{i} ({u}, {v}) closes a cycle")
        parent[ru] = rv
    if len(edges) != n - 1:
        raise TreeValidationError("disconnected", f"{len(edges)} edges for {n} vertices")
    return _trusted(n, edges)


def parse_tree_text(text):
    """Parse the line-oriented tree format.

    Line 1 holds ``n``; each further non-blank line holds one edge ``u v``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if not lines:
        raise TreeValidationError("format", "empty input")
    try:
        n = int(lines[0])
    except ValueError:
        raise TreeValidationError("format", f"first line must be the order, got {lines[0]!r}") from None
    edges = []
    for lineno, ln in enumerate(lines[1:], start=2):
        parts = ln.split()
        if len(parts) != 2:
            raise TreeValidationError("format", f"line {lineno}: expected 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise TreeValidationError("format", f"line {lineno}: non-integer label in {ln!r}") from None
    return tree_from_edges(n, edges)


def format_tree_text(t):
    return "".join([f"{t.n}\n"] + [f"{u} {v}\n" for u, v in t.edges])


def path_tree(n):
    return _trusted(n, [(i, i + 1) for i in range(n - 1)])


def star_tree(n):
    return _trusted(n, [(0, i) for i in range(1, n)])


def from_prufer(seq):
    """Decode a Prufer sequence over labels ``0 .. len(seq)+1``."""
    import heapq

    n = len(seq) + 2
    deg = [1] * n
    for v in seq:
        if not 0 <= v < n:
            raise UsageError(f"Prufer label {v} outside 0..{n - 1}")
        deg[v] += 1
    heap = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(heap)
    edges = []
    for v in seq:
        leaf = heapq.heappop(heap)
        edges.append((leaf, v))
        deg[v] -= 1
        if deg[v] == 1:
            heapq.heappush(heap, v)
    edges.append((heapq.heappop(heap), heapq.heappop(heap)))
    return _trusted(n, edges)


def random_tree(n, rng=None):
    """A labelled tree drawn uniformly at random (via a random Prufer code)."""
    rng = rng if rng is not None else random.Random()
    if n == 1:
        return _trusted(1, [])
    if n == 2:
        return _trusted(2, [(0, 1)])
    return from_prufer([rng.randrange(n) for _ in range(n - 2)])


def _check_vertex(t, v):
    if not isinstance(v, int) or not 0 <= v < t.n:
        raise UsageError(f"vertex {v!r} outside 0..{t.n - 1}")


def distances_from(t, v):
    """Hop distances from ``v`` to every vertex, as a list indexed by vertex."""
    _check_vertex(t, v)
    dist = [-1] * t.n
    dist[v] = 0
    queue = deque([v])
    adj = t.adj
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    return dist


def eccentricity(t, v):
    return max(distances_from(t, v))


def _farthest(t, v):
    dist = distances_from(t, v)
    far = max(range(t.n), key=dist.__getitem__)
    return far, dist


def diameter(t):
    """Largest distance between two vertices, by two sweeps (cached)."""
    if t._diameter is None:
        a, _ = _farthest(t, 0)
        _, dist = _farthest(t, a)
        t._diameter = max(dist)
    return t._diameter


def diametral_path(t):
    """Vertices of one longest path, from one end to the other."""
    a, _ = _farthest(t, 0)
    b, dist = _farthest(t, a)
    path = [b]
    while path[-1] != a:
        u = path[-1]
        path.append(next(w for w in t.adj[u] if dist[w] == dist[u] - 1))
    return path


def _preorder(t, root=0):
    """Preorder list and parent array of the tree rooted at ``root``."""
    parent = [-1] * t.n
    order = []
    stack = [root]
    parent[root] = root
    while stack:
        u = stack.pop()
        order.append(u)
        for w in t.adj[u]:
            if parent[w] < 0:
                parent[w] = u
                stack.append(w)
    parent[root] = -1
    return order, parent


def distance_matrix(t):
    """All-pairs distance matrix as an ``int64`` array.

    Rows are filled in preorder: moving from a parent to its child brings
    every vertex in the child's subtree one step closer and every other
    vertex one step further away.
    """
    n = t.n
    order, parent = _preorder(t)
    pos = [0] * n
    for i, u in enumerate(order):
        pos[u] = i
    # subtree of order[i] occupies preorder positions i .. end[i]-1
    end = list(range(1, n + 1))
    ppos = [pos[parent[u]] if parent[u] >= 0 else -1 for u in order]
    for i in range(n - 1, 0, -1):
        p = ppos[i]
        if end[i] > end[p]:
            end[p] = end[i]
    D = np.empty((n, n), dtype=np.int64)
    D[0, 0] = 0
    for i in range(1, n):
        D[0, i] = D[0, ppos[i]] + 1
    for i in range(1, n):
        row = D[ppos[i]] + 1
        row[i:end[i]] -= 2
        D[i] = row
    # back to vertex labels
    idx = np.asarray(pos)
    return D[np.ix_(idx, idx)]


def wiener_pairwise(t):
    """Sum of ``d(u, v)`` over unordered vertex pairs, from the distance matrix.

    Quadratic in time and memory; use :func:`wiener_edge_decomposition` for
    large trees.
    """
    if t.n == 1:
        return 0
    return int(distance_matrix(t).sum()) // 2


def wiener_edge_decomposition(t):
    """Sum over edges of ``s * (n - s)``, ``s`` the size of one side."""
    n = t.n
    adj = t.adj
    parent = [-1] * n
    parent[0] = 0
    order = [0]
    for u in order:
        for w in adj[u]:
            if parent[w] < 0:
                parent[w] = u
                order.append(w)
    size = [1] * n
    total = 0
    for u in reversed(order):
        s = size[u]
        total += s * (n - s)
        size[parent[u]] += s
    # the root contributed n * 0
    return total


wiener = wiener_edge_decomposition


def leaves(t):
    if t.n < 2:
        raise UsageError("a single vertex is neither a leaf nor a broom vertex")
    return frozenset(v for v in range(t.n) if len(t.adj[v]) == 1)


def broom_vertices(t):
    """Vertices adjacent to at least one leaf."""
    lv = leaves(t)
    return frozenset(w for v in lv for w in t.adj[v])


def _centers(t):
    path = diametral_path(t)
    k = len(path) - 1
    if k % 2 == 0:
        return [path[k // 2]]
    return [path[k // 2], path[k // 2 + 1]]


def canonical_form(t):
    """A string equal for two trees iff they are isomorphic.

    The tree is rooted at its center (or at a virtual vertex subdividing the
    central edge, marked by a leading ``b``).  Siblings are ranked level by
    level from the bottom up, so equal ranks mean isomorphic subtrees, and
    the preorder depth sequence with children taken in rank order is
    emitted, dot separated.
    """
    n = t.n
    if n == 1:
        return "0"
    centers = _centers(t)
    virtual = len(centers) == 2
    # children lists, with vertex n standing for the virtual root
    children = [[] for _ in range(n + 1)]
    depth = [-1] * (n + 1)
    if virtual:
        root = n
        depth[n] = 0
        frontier = centers
        for c in centers:
            depth[c] = 1
            children[n].append(c)
    else:
        root = centers[0]
        depth[root] = 0
        frontier = [root]
    levels = [[root]]
    if virtual:
        levels.append(list(centers))
    while frontier:
        nxt = []
        for u in frontier:
            for w in t.adj[u]:
                if depth[w] < 0:
                    depth[w] = depth[u] + 1
                    children[u].append(w)
                    nxt.append(w)
        if nxt:
            levels.append(nxt)
        frontier = nxt
    rank = [0] * (n + 1)
    for level in reversed(levels):
        keys = {u: tuple(sorted((rank[c] for c in children[u]), reverse=True)) for u in level}
        ordered = sorted(set(keys.values()))
        index = {k: i for i, k in enumerate(ordered)}
        for u in level:
            rank[u] = index[keys[u]]
    seq = []
    stack = [root]
    while stack:
        u = stack.pop()
        seq.append(depth[u])
        # push lowest rank first so the highest rank is emitted first
        stack.extend(sorted(children[u], key=rank.__getitem__))
    body = ".".join(map(str, seq))
    return "b" + body if virtual else body


@dataclass(frozen=True)
class ShapeClass:
    """Shape tag with its broom parameters.

    Parameters are normalised so that isomorphic shapes compare equal:
    ``DoubleBroom`` keeps ``a <= b``; ``TripleBroom`` keeps the two leaf
    counts at distance 2 from each other in ``a <= c`` and the far count
    in ``b``.  At diameter 4 all three broom vertices are mutually at
    distance 2 and the counts are simply sorted.
    """

    tag: str
    params: tuple = ()

    @classmethod
    def double(cls, a, b):
        return cls("DoubleBroom", (min(a, b), max(a, b)))

    @classmethod
    def triple(cls, a, b, c):
        return cls("TripleBroom", (min(a, c), b, max(a, c)))

    def __str__(self):
        if not self.params:
            return self.tag
        return f"{self.tag}({','.join(map(str, self.params))})"


PATH = ShapeClass("Path")
STAR = ShapeClass("Star")
OTHER = ShapeClass("Other")


def classify(t):
    """Path, Star, DoubleBroom(a, b), TripleBroom(a, b, c) or Other."""
    n = t.n
    if n < 2:
        raise UsageError("classify needs at least two vertices")
    adj = t.adj
    if all(len(a) <= 2 for a in adj):
        return PATH
    if any(len(a) == n - 1 for a in adj):
        return STAR
    lv = leaves(t)
    brooms = broom_vertices(t)
    if len(brooms) not in (2, 3):
        return OTHER
    # the tree with its leaves removed
    inner_deg = {v: sum(1 for w in adj[v] if w not in lv) for v in range(n) if v not in lv}
    inner_ends = [v for v, k in inner_deg.items() if k <= 1]
    leaf_count = {v: sum(1 for w in adj[v] if w in lv) for v in brooms}
    if len(brooms) == 2:
        if max(inner_deg.values()) <= 2 and set(inner_ends) == set(brooms):
            a, b = (leaf_count[v] for v in brooms)
            return ShapeClass.double(a, b)
        return OTHER
    hubs = [v for v, k in inner_deg.items() if k >= 3]
    if len(hubs) != 1 or inner_deg[hubs[0]] != 3 or set(inner_ends) != set(brooms):
        return OTHER
    hub = hubs[0]
    near = [v for v in brooms if hub in adj[v]]
    if len(near) == 3:
        # diameter 4: the three broom vertices are interchangeable
        a, b, c = sorted(leaf_count[v] for v in near)
        return ShapeClass.triple(a, b, c)
    if len(near) != 2:
        return OTHER
    (far,) = brooms - set(near)
    a, c = leaf_count[near[0]], leaf_count[near[1]]
    return ShapeClass.triple(a, leaf_count[far], c)


def is_double_broom(t):
    """True for trees with exactly two broom vertices and every leaf on one.

    Unlike :func:`classify`, paths on four or more vertices count: they are
    the brooms with one leaf at each end.
    """
    shape = classify(t)
    return shape.tag == "DoubleBroom" or (shape.tag == "Path" and t.n >= 4)
