"""Free-tree enumeration and brute-force extremal search.

Free trees are generated as canonical level sequences (root at the centre,
preorder depths) by the successor method of Wright, Richmond, Odlyzko and
McKay, which yields each isomorphism class exactly once.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import os
from typing import Optional

from .brooms import best_double_broom
from .errors import CeilingError, DomainError, UsageError
from .tree import _trusted, canonical_form, classify, diameter, is_double_broom, wiener

__all__ = [
    "DEFAULT_CEILING",
    "HARD_CEILING",
    "enumeration_ceiling",
    "free_level_sequences",
    "free_trees",
    "tree_from_level_sequence",
    "ExtremalRecord",
    "extremal_table",
    "extremal_trees",
]

DEFAULT_CEILING = 16
HARD_CEILING = 20
CEILING_ENV = "WIENERLAB_CEILING"


def enumeration_ceiling(override=None):
    """Effective ceiling: explicit override, else the environment, else 16."""
    if override is None:
        raw = os.environ.get(CEILING_ENV)
        if raw is None:
            return DEFAULT_CEILING
        try:
            override = int(raw)
        except ValueError:
            raise UsageError(f"{CEILING_ENV}={raw!r} is not an integer") from None
    if override > HARD_CEILING:
        raise CeilingError(f"ceiling {override} exceeds the hard limit {HARD_CEILING}")
    return max(override, 1)


def _next_rooted(seq, p=None):
    """Successor of a canonical rooted level sequence, in place on a copy."""
    if p is None:
        p = len(seq) - 1
        while seq[p] == 1:
            p -= 1
    if p == 0:
        return None
    q = p - 1
    while seq[q] != seq[p] - 1:
        q -= 1
    out = list(seq)
    for i in range(p, len(out)):
        out[i] = out[i - p + q]
    return out


def _split(seq):
    """Left subtree of the root (depths shifted up) and the remainder."""
    m = len(seq)
    for i in range(2, len(seq)):
        if seq[i] == 1:
            m = i
            break
    left = [v - 1 for v in seq[1:m]]
    rest = [0] + seq[m:]
    return left, rest


def _next_free(seq):
    """First sequence at or after ``seq`` that is centred, i.e. a free-tree representative."""
    while True:
        left, rest = _split(seq)
        hl, hr = max(left), max(rest)
        ok = hr >= hl
        if ok and hr == hl:
            if len(left) > len(rest) or (len(left) == len(rest) and left > rest):
                ok = False
        if ok:
            return seq
        p = len(left)
        nxt = _next_rooted(seq, p)
        if seq[p] > 2:
            h = max(_split(nxt)[0])
            tail = list(range(1, h + 2))
            nxt[len(nxt) - len(tail):] = tail
        seq = nxt


def free_level_sequences(n, ceiling=None):
    """Yield one level sequence per free tree of order ``n``."""
    if n < 1:
        raise UsageError(f"order must be positive, got {n}")
    limit = enumeration_ceiling(ceiling)
    if n > limit:
        raise CeilingError(f"n={n} is above the enumeration ceiling {limit}")
    if n <= 2:
        yield list(range(n))
        return
    seq = list(range(n // 2 + 1)) + list(range(1, (n + 1) // 2))
    while seq is not None:
        seq = _next_free(seq)
        yield seq
        seq = _next_rooted(seq)


def tree_from_level_sequence(seq):
    last = {}
    edges = []
    for i, depth in enumerate(seq):
        if depth:
            edges.append((last[depth - 1], i))
        last[depth] = i
    return _trusted(len(seq), edges)


def free_trees(n, ceiling=None):
    """Yield one :class:`~wienerlab.tree.Tree` per isomorphism class of order ``n``."""
    for seq in free_level_sequences(n, ceiling):
        yield tree_from_level_sequence(seq)


@dataclass(frozen=True)
class ExtremalRecord:
    """Maximum Wiener index over all trees of order ``n`` and diameter ``d``."""

    n: int
    d: int
    max_wiener: int
    argmax: tuple
    shapes: tuple
    trees: tuple = field(repr=False, compare=False)
    best_double: Optional[int] = None

    @property
    def c(self):
        return self.n - self.d

    @property
    def num_argmax(self):
        return len(self.argmax)

    @property
    def all_double_broom(self):
        return all(is_double_broom(t) for t in self.trees)

    @property
    def double_broom_optimal(self):
        """Whether the best double broom reaches the maximum; None when none exists."""
        if self.best_double is None:
            return None
        return self.best_double == self.max_wiener


def _measure(seq):
    t = tree_from_level_sequence(seq)
    return diameter(t), wiener(t)


def _measure_all(seqs, jobs):
    if jobs <= 1:
        return [_measure(s) for s in seqs]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(_measure, seqs, chunksize=256))


def _record(n, d, best_w, seqs):
    trees = [tree_from_level_sequence(s) for s in seqs]
    keyed = sorted((canonical_form(t), t) for t in trees)
    try:
        bd = best_double_broom(n, d).wiener
    except DomainError:
        bd = None
    shapes = tuple(classify(t) for _, t in keyed) if n >= 2 else ()
    return ExtremalRecord(n, d, best_w, tuple(k for k, _ in keyed), shapes,
                          tuple(t for _, t in keyed), bd)


def extremal_table(n, ceiling=None, jobs=1):
    """Extremal records for every diameter realised by trees of order ``n``."""
    seqs = list(free_level_sequences(n, ceiling))
    best = {}
    for seq, (d, w) in zip(seqs, _measure_all(seqs, jobs)):
        cur = best.get(d)
        if cur is None or w > cur[0]:
            best[d] = (w, [seq])
        elif w == cur[0]:
            cur[1].append(seq)
    return {d: _record(n, d, w, ss) for d, (w, ss) in sorted(best.items())}


def extremal_trees(n, d, ceiling=None, jobs=1):
    if not 1 <= d <= n - 1:
        raise DomainError(f"no tree of order {n} has diameter {d}")
    # the ceiling check must come before the (possibly long) scan
    enumeration_ceiling(ceiling)
    table = extremal_table(n, ceiling, jobs)
    if d not in table:
        raise DomainError(f"no tree of order {n} has diameter {d}")
    return table[d]
