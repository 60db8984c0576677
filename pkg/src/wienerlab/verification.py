"""Exhaustive and randomised checks of the structural lemmas.

Each check returns a :class:`VerificationReport`.  Randomised checks seed a
fresh generator per instance from ``(seed, index)``, so the instance set is
the same whatever the number of worker processes.
"""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
import random

from .brooms import BroomSpec
from .errors import UsageError
from .enumeration import extremal_table
from .tree import distances_from, format_tree_text, leaves, random_tree, wiener
from .transforms import (
    balance_deltas,
    find_special_contexts,
    leaf_path,
    monotone_p_limit,
    predicted_broom_delta_full,
    predicted_broom_delta_reduced,
    predicted_leaf_delta,
    _relocate_broom,
    relocate_leaf,
    threshold_f,
    threshold_g,
)

__all__ = ["Counterexample", "VerificationReport", "LEMMAS", "verify", "triple_broom_specs"]


@dataclass(frozen=True)
class Counterexample:
    detail: str
    tree_text: str = ""

    def csv_row(self, lemma):
        tree = self.tree_text.strip().replace("\n", ";")
        return f"{lemma},{self.detail.replace(',', ' ')},{tree}"


@dataclass
class VerificationReport:
    lemma: str
    scope: str
    checked: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.counterexamples

    def summary(self):
        status = "ok" if self.ok else f"{len(self.counterexamples)} counterexample(s)"
        return f"{self.lemma}: {status}; {self.checked} instance(s) checked; scope {self.scope}"


def _argmax_trees(max_n, min_n=2):
    for n in range(min_n, max_n + 1):
        for d, rec in extremal_table(n).items():
            for t in rec.trees:
                yield n, d, t


def check_ecc(max_n=12):
    rep = VerificationReport("ecc", f"argmax trees, 2 <= n <= {max_n}")
    for n, d, t in _argmax_trees(max_n):
        for v in sorted(leaves(t)):
            rep.checked += 1
            e = max(distances_from(t, v))
            if e != d:
                rep.counterexamples.append(
                    Counterexample(f"n={n} d={d} leaf {v} has eccentricity {e}", format_tree_text(t)))
    return rep


def check_even(max_n=12):
    rep = VerificationReport("even", f"argmax trees, 2 <= n <= {max_n}")
    for n, d, t in _argmax_trees(max_n):
        lv = sorted(leaves(t))
        for u in lv:
            dist = distances_from(t, u)
            for v in lv:
                if v <= u:
                    continue
                rep.checked += 1
                if dist[v] != d and dist[v] % 2:
                    rep.counterexamples.append(
                        Counterexample(f"n={n} d={d} leaves {u},{v} at odd distance {dist[v]}",
                                       format_tree_text(t)))
    return rep


def check_balance(max_n=12):
    rep = VerificationReport("balance", f"special contexts of argmax trees, 2 <= n <= {max_n}")
    for n, d, t in _argmax_trees(max_n):
        for ctx in find_special_contexts(t):
            rep.checked += 1
            if abs(ctx.t1 - ctx.t2) > 1:
                rep.counterexamples.append(
                    Counterexample(f"n={n} d={d} x={ctx.x} t1={ctx.t1} t2={ctx.t2}", format_tree_text(t)))
    return rep


def _instance_rng(seed, i):
    return random.Random(f"{seed}:{i}")


def _leaf_instance(args):
    seed, i, min_n, max_n = args
    rng = _instance_rng(seed, i)
    n = rng.randint(min_n, max_n)
    t = random_tree(n, rng)
    x, y = rng.sample(sorted(leaves(t)), 2)
    predicted = predicted_leaf_delta(leaf_path(t, x, y))
    actual = wiener(relocate_leaf(t, x, y)) - wiener(t)
    if predicted != actual:
        return Counterexample(f"leaves {x}->{y} predicted {predicted} actual {actual}", format_tree_text(t))
    return None


def _run(fn, tasks, jobs):
    if jobs <= 1:
        return [fn(a) for a in tasks]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, tasks, chunksize=max(1, len(tasks) // (8 * jobs))))


def check_delta_leaf(samples=10_000, seed=7, min_n=5, max_n=60, jobs=1):
    rep = VerificationReport("delta-leaf", f"{samples} random trees, {min_n} <= n <= {max_n}, seed {seed}")
    tasks = [(seed, i, min_n, max_n) for i in range(samples)]
    for res in _run(_leaf_instance, tasks, jobs):
        rep.checked += 1
        if res is not None:
            rep.counterexamples.append(res)
    return rep


def _check_contexts(t, found):
    """Check both orientations of every context of ``t``.

    Problems are appended to ``found``; the number of checks is returned.
    """
    before = wiener(t)
    count = 0
    for ctx in find_special_contexts(t):
        for c in (ctx, ctx.swapped()):
            count += 1
            full = predicted_broom_delta_full(c, t.n)
            reduced = predicted_broom_delta_reduced(c.t1, c.t2, c.p, t.n)
            actual = wiener(_relocate_broom(t, c)) - before
            if not full == reduced == actual:
                found.append(Counterexample(
                    f"x={c.x} p={c.p} t1={c.t1} t2={c.t2} full {full} reduced {reduced} actual {actual}",
                    format_tree_text(t)))
            moved = balance_deltas(c)[0]
            leaf_actual = wiener(relocate_leaf(t, c.leaf1, c.leaf2)) - before
            leaf_pred = predicted_leaf_delta(leaf_path(t, c.leaf1, c.leaf2))
            if not moved == leaf_pred == leaf_actual:
                found.append(Counterexample(
                    f"x={c.x} witness move predicted {moved} lemma {leaf_pred} actual {leaf_actual}",
                    format_tree_text(t)))
    return count


def triple_broom_specs(min_n=12, max_n=40):
    """Every triple broom with ``min_n <= n <= max_n``."""
    for n in range(min_n, max_n + 1):
        for g in range(3, n - 4):
            for a in range(1, g - 1):
                for b in range(1, g - a):
                    yield BroomSpec(n, a, b, g - a - b)


def _broom_instance(args):
    kind, payload = args
    found = []
    if kind == "triple":
        t = BroomSpec(*payload).realize()
    else:
        seed, i, min_n, max_n = payload
        rng = _instance_rng(seed, i)
        t = random_tree(rng.randint(min_n, max_n), rng)
    return _check_contexts(t, found), found


def check_delta_broom(samples=1000, seed=7, min_n=5, max_n=40, triple_min_n=12, triple_max_n=40, jobs=1):
    rep = VerificationReport(
        "delta-broom",
        f"all triple brooms {triple_min_n} <= n <= {triple_max_n}; "
        f"{samples} random trees {min_n} <= n <= {max_n}, seed {seed}")
    tasks = [("triple", (s.n, s.a, s.b, s.c)) for s in triple_broom_specs(triple_min_n, triple_max_n)]
    tasks += [("random", (seed, i, min_n, max_n)) for i in range(samples)]
    for count, found in _run(_broom_instance, tasks, jobs):
        rep.checked += count
        rep.counterexamples.extend(found)
    return rep


def check_balanced_double(max_n=60):
    """Balanced leaf split beats every split that is off by two or more."""
    rep = VerificationReport("balanced-double", f"all double brooms, n <= {max_n}")
    for n in range(4, max_n + 1):
        for d in range(3, n):
            g = n - d + 1
            a0 = g // 2
            best = BroomSpec(n, a0, g - a0).wiener()
            for a in range(1, g):
                rep.checked += 1
                w = BroomSpec(n, a, g - a).wiener()
                bad = w > best or (abs(2 * a - g) >= 2 and w >= best)
                if bad:
                    rep.counterexamples.append(Counterexample(
                        f"n={n} d={d} split ({a},{g - a}) W={w} vs balanced ({a0},{g - a0}) W={best}",
                        format_tree_text(BroomSpec(n, a, g - a).realize())))
    return rep


def check_monotone(ns=(1636, 2000, 5000)):
    ns = (ns,) if isinstance(ns, int) else tuple(ns)
    rep = VerificationReport("monotone", f"f and g on integer p in [2, floor(4 sqrt((n-1)/2) - 3)], n in {list(ns)}")
    for n in ns:
        top = monotone_p_limit(n)
        for fn, name in ((threshold_f, "f"), (threshold_g, "g")):
            for p in range(2, top):
                rep.checked += 1
                if not fn(p + 1, n) > fn(p, n):
                    rep.counterexamples.append(Counterexample(f"n={n} {name}({p + 1}) <= {name}({p})"))
    return rep


LEMMAS = {
    "ecc": check_ecc,
    "even": check_even,
    "balance": check_balance,
    "delta-leaf": check_delta_leaf,
    "delta-broom": check_delta_broom,
    "balanced-double": check_balanced_double,
    "monotone": check_monotone,
}


def verify(lemma, **params):
    """Run the named check with keyword parameters."""
    try:
        fn = LEMMAS[lemma]
    except KeyError:
        raise UsageError(f"unknown lemma {lemma!r}; choose from {', '.join(LEMMAS)}") from None
    return fn(**params)
