"""Double and triple brooms: construction, fast Wiener values, optimisers.

Layout of the realised trees (labels are stable and relied on by tests):

* spine ``0 .. d-2`` with ``x = 0`` and ``y = d-2``;
* for a triple broom, ``z = d-1`` hangs off spine vertex ``1``;
* then the ``a`` leaves of ``x``, the ``b`` leaves of ``y`` and, for a
  triple broom, the ``c`` leaves of ``z``.
"""

from dataclasses import dataclass
from math import isqrt
from typing import NamedTuple, Optional

from .errors import DomainError, InvariantViolation
from .tree import Tree, _trusted

__all__ = [
    "BroomSpec",
    "double_broom",
    "triple_broom",
    "wiener_broom",
    "best_double_broom",
    "best_triple_broom",
    "theorem_bound",
    "proposition_bound",
    "compare_brooms",
    "BroomComparison",
]


def _sum_k_times_rest(lo, hi, n):
    """Sum of k * (n - k) for k = lo .. hi (empty when hi < lo)."""
    if hi < lo:
        return 0
    s1 = (hi * (hi + 1) - (lo - 1) * lo) // 2
    s2 = (hi * (hi + 1) * (2 * hi + 1) - (lo - 1) * lo * (2 * lo - 1)) // 6
    return n * s1 - s2


@dataclass(frozen=True)
class BroomSpec:
    """Parameters of ``B(n, a, b)`` (``c is None``) or ``B(n, a, b, c)``."""

    n: int
    a: int
    b: int
    c: Optional[int] = None

    def __post_init__(self):
        leaves = (self.a, self.b) if self.c is None else (self.a, self.b, self.c)
        if any(k < 1 for k in leaves):
            raise DomainError(f"leaf counts must be >= 1, got {leaves}")
        if self.is_triple and self.diameter < 5:
            raise DomainError(f"triple broom needs diameter >= 5, got d={self.diameter} for {self}")
        if not self.is_triple and self.diameter < 3:
            raise DomainError(f"double broom needs diameter >= 3, got d={self.diameter} for {self}")

    @property
    def is_triple(self):
        return self.c is not None

    @property
    def leaf_total(self):
        return self.a + self.b + (self.c or 0)

    @property
    def diameter(self):
        if self.is_triple:
            return self.n - self.a - self.b - self.c
        return self.n - self.a - self.b + 1

    def realize(self) -> Tree:
        n, a, b, d = self.n, self.a, self.b, self.diameter
        edges = [(i, i + 1) for i in range(d - 2)]
        nxt = d - 1
        if self.is_triple:
            z = nxt
            edges.append((1, z))
            nxt += 1
        for hub, count in ((0, a), (d - 2, b)) + (((z, self.c),) if self.is_triple else ()):
            edges.extend((hub, nxt + i) for i in range(count))
            nxt += count
        assert nxt == n
        return _trusted(n, edges)

    def wiener(self):
        """Closed-form Wiener index via the edge decomposition."""
        n, a, d = self.n, self.a, self.diameter
        total = self.leaf_total * (n - 1)
        if not self.is_triple:
            # spine edge i separates a + i + 1 vertices
            return total + _sum_k_times_rest(a + 1, a + d - 2, n)
        c = self.c
        total += (c + 1) * (n - c - 1)
        total += (a + 1) * (n - a - 1)
        return total + _sum_k_times_rest(a + c + 3, a + c + d - 1, n)


def double_broom(n, a, b):
    return BroomSpec(n, a, b).realize()


def triple_broom(n, a, b, c):
    return BroomSpec(n, a, b, c).realize()


def wiener_broom(spec):
    return spec.wiener()


class DoubleBest(NamedTuple):
    a: int
    b: int
    wiener: int


class TripleBest(NamedTuple):
    a: int
    b: int
    c: int
    wiener: int


def _double_leaf_total(n, d):
    g = n - d + 1
    if d < 3 or g < 2:
        raise DomainError(f"no double broom of order {n} and diameter {d}")
    return g


def best_double_broom(n, d):
    """Best split of the ``n - d + 1`` leaves between the two ends.

    The balanced split is taken as the candidate and every split is then
    scanned; a disagreement raises :class:`InvariantViolation`.  Ties go to
    the lexicographically smallest ``(a, b)``.
    """
    g = _double_leaf_total(n, d)
    a0 = g // 2
    balanced = BroomSpec(n, a0, g - a0).wiener()
    best = None
    for a in range(1, g):
        w = BroomSpec(n, a, g - a).wiener()
        if best is None or w > best.wiener:
            best = DoubleBest(a, g - a, w)
    if best.wiener != balanced or best.a != a0:
        raise InvariantViolation(
            f"balanced split ({a0},{g - a0}) W={balanced} but scan found {best}")
    return best


def best_triple_broom(n, d):
    g = n - d
    if d < 5 or g < 3:
        raise DomainError(f"no triple broom of order {n} and diameter {d}")
    best = None
    for a in range(1, g - 1):
        for b in range(1, g - a):
            w = BroomSpec(n, a, b, g - a - b).wiener()
            if best is None or w > best.wiener:
                best = TripleBest(a, b, g - a - b, w)
    return best


def _root_term(d):
    if d < 3:
        raise DomainError(f"bounds need d >= 3, got {d}")
    return 4 * isqrt((d - 1) // 2)


def theorem_bound(d):
    """Largest order for which double brooms are proven extremal (given n >= 1636)."""
    return d - 2 + _root_term(d)


def proposition_bound(d):
    """Smallest order from which a triple broom beats every double broom."""
    return d + 4 + _root_term(d)


@dataclass(frozen=True)
class BroomComparison:
    n: int
    d: int
    double: DoubleBest
    triple: TripleBest
    regime: str

    @property
    def margin(self):
        """Best triple minus best double; positive when the triple wins."""
        return self.triple.wiener - self.double.wiener

    @property
    def winner(self):
        m = self.margin
        return "triple" if m > 0 else "double" if m < 0 else "tie"


def regime(n, d):
    if n <= theorem_bound(d):
        return "theorem"
    if n >= proposition_bound(d):
        return "proposition"
    return "gap"


def compare_brooms(n, d):
    return BroomComparison(n, d, best_double_broom(n, d), best_triple_broom(n, d), regime(n, d))
