"""Command line entry point: ``wienerlab <subcommand> ...``.

Exit status: 0 success, 1 counterexample found, 2 usage or parse error,
3 invariant violation, 4 domain error.  Errors are a single stderr line
``error:<code>:<message>``.
"""

import argparse
import inspect
import json
import os
import sys

from . import brooms as br
from .enumeration import extremal_table, extremal_trees, free_trees
from .errors import DomainError, InvariantViolation, UsageError, WienerLabError
from .transforms import (
    find_special_contexts,
    leaf_path,
    predicted_broom_delta_full,
    predicted_leaf_delta,
    relocate_broom,
    relocate_leaf,
)
from .tree import canonical_form, format_tree_text, parse_tree_text, wiener_edge_decomposition, wiener_pairwise
from .verification import LEMMAS, verify

CSV_HEADER = "n,d,max_wiener,num_argmax,all_double_broom,c"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _read_tree(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse_tree_text(text)


def _flag(b):
    return "true" if b else "false"


def cmd_wiener(args, out):
    t = _read_tree(args.tree_file)
    w = wiener_edge_decomposition(t)
    if args.check:
        other = wiener_pairwise(t)
        if other != w:
            raise InvariantViolation(f"edge decomposition {w} != pairwise {other}")
    out.write(f"{w}\n")


def _record_row(rec):
    return f"{rec.n},{rec.d},{rec.max_wiener},{rec.num_argmax},{_flag(rec.all_double_broom)},{rec.c}"


def _record_json(rec):
    return {
        "n": rec.n,
        "d": rec.d,
        "c": rec.c,
        "max_wiener": rec.max_wiener,
        "num_argmax": rec.num_argmax,
        "all_double_broom": rec.all_double_broom,
        "double_broom_optimal": rec.double_broom_optimal,
        "argmax": list(rec.argmax),
        "shapes": [str(s) for s in rec.shapes],
    }


def cmd_extremal(args, out):
    if args.all_cells:
        records = list(extremal_table(args.n, args.ceiling, args.jobs).values())
    elif args.d is None:
        raise UsageError("give --d or --all-cells")
    else:
        records = [extremal_trees(args.n, args.d, args.ceiling, args.jobs)]
    if args.sidecar:
        os.makedirs(args.sidecar, exist_ok=True)
        for rec in records:
            with open(os.path.join(args.sidecar, f"n{rec.n}_d{rec.d}.txt"), "w", encoding="utf-8") as fh:
                fh.write("".join(f"{k}\n" for k in rec.argmax))
    if args.emit == "json":
        out.write(json.dumps([_record_json(r) for r in records], indent=1) + "\n")
    else:
        out.write(CSV_HEADER + "\n")
        for rec in records:
            out.write(_record_row(rec) + "\n")


def _double_line(n, d, best):
    return f"double,{n},{d},{best.a},{best.b},,{best.wiener}"


def _triple_line(n, d, best):
    return f"triple,{n},{d},{best.a},{best.b},{best.c},{best.wiener}"


def cmd_brooms(args, out):
    if args.action == "bounds":
        out.write(f"{br.theorem_bound(args.d)},{br.proposition_bound(args.d)}\n")
    elif args.action == "best-double":
        out.write(_double_line(args.n, args.d, br.best_double_broom(args.n, args.d)) + "\n")
    elif args.action == "best-triple":
        out.write(_triple_line(args.n, args.d, br.best_triple_broom(args.n, args.d)) + "\n")
    else:
        cmp = br.compare_brooms(args.n, args.d)
        out.write(_double_line(cmp.n, cmp.d, cmp.double) + "\n")
        out.write(_triple_line(cmp.n, cmp.d, cmp.triple) + "\n")
        out.write(f"winner={cmp.winner},margin={cmp.margin},regime={cmp.regime}\n")


def cmd_transform(args, out):
    t = _read_tree(args.input)
    if args.list_contexts:
        out.write("index,x,p,t1,t2,broom1,broom2\n")
        for i, c in enumerate(find_special_contexts(t)):
            out.write(f"{i},{c.x},{c.p},{c.t1},{c.t2},{c.broom1},{c.broom2}\n")
        return
    before = wiener_edge_decomposition(t)
    if args.op == "relocate-leaf":
        if args.x is None or args.y is None:
            raise UsageError("relocate-leaf needs --x and --y")
        predicted = predicted_leaf_delta(leaf_path(t, args.x, args.y))
        new = relocate_leaf(t, args.x, args.y)
    elif args.op == "relocate-broom":
        if args.context is None:
            raise UsageError("relocate-broom needs --context")
        contexts = find_special_contexts(t)
        if not 0 <= args.context < len(contexts):
            raise DomainError(f"context {args.context} out of range; tree has {len(contexts)}")
        ctx = contexts[args.context]
        if args.swap:
            ctx = ctx.swapped()
        predicted = predicted_broom_delta_full(ctx, t.n)
        new = relocate_broom(t, ctx)
    else:
        raise UsageError("give --op or --list-contexts")
    actual = wiener_edge_decomposition(new) - before
    text = format_tree_text(new)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        out.write(text)
    out.write(f"{predicted},{actual}\n")
    if predicted != actual:
        raise InvariantViolation(f"predicted delta {predicted} != actual {actual}")


_VERIFY_FLAGS = ("max_n", "min_n", "samples", "seed", "ns", "jobs")


def cmd_verify(args, out):
    fn = LEMMAS.get(args.lemma)
    if fn is None:
        raise UsageError(f"unknown lemma {args.lemma!r}; choose from {', '.join(LEMMAS)}")
    accepted = inspect.signature(fn).parameters
    params = {}
    for name in _VERIFY_FLAGS:
        value = getattr(args, name)
        if value is None:
            continue
        if name not in accepted:
            raise UsageError(f"--{name.replace('_', '-')} does not apply to lemma {args.lemma}")
        params[name] = value
    rep = verify(args.lemma, **params)
    out.write(rep.summary() + "\n")
    if args.counterexamples:
        with open(args.counterexamples, "w", encoding="utf-8") as fh:
            fh.write("lemma,detail,tree\n")
            for c in rep.counterexamples:
                fh.write(c.csv_row(rep.lemma) + "\n")
    return 0 if rep.ok else 1


def cmd_enumerate(args, out):
    count = 0
    for t in free_trees(args.n, args.ceiling):
        count += 1
        if not args.count:
            out.write(canonical_form(t) + "\n")
    if args.count:
        out.write(f"{count}\n")


def build_parser():
    p = _Parser(prog="wienerlab", description="Wiener index of trees with given order and diameter.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    s = sub.add_parser("wiener", help="Wiener index of a tree file")
    s.add_argument("tree_file")
    s.add_argument("--check", action="store_true", help="cross-check against the pairwise sum")
    s.set_defaults(func=cmd_wiener)

    s = sub.add_parser("extremal", help="maximum Wiener index over all trees of given order and diameter")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--d", type=int)
    s.add_argument("--all-cells", action="store_true")
    s.add_argument("--emit", choices=("csv", "json"), default="csv")
    s.add_argument("--ceiling", type=int, help="raise the enumeration ceiling (max 20)")
    s.add_argument("--sidecar", metavar="DIR", help="write argmax canonical forms, one file per cell")
    s.add_argument("--jobs", type=int, default=1)
    s.set_defaults(func=cmd_extremal)

    s = sub.add_parser("brooms", help="double and triple broom optimisers and bounds")
    bsub = s.add_subparsers(dest="action", parser_class=_Parser)
    bsub.required = True
    for name in ("compare", "best-double", "best-triple"):
        b = bsub.add_parser(name)
        b.add_argument("--n", type=int, required=True)
        b.add_argument("--d", type=int, required=True)
        b.set_defaults(func=cmd_brooms)
    b = bsub.add_parser("bounds")
    b.add_argument("--d", type=int, required=True)
    b.set_defaults(func=cmd_brooms)

    s = sub.add_parser("transform", help="relocate a leaf or a broom and report the Wiener change")
    s.add_argument("--input", required=True)
    s.add_argument("--op", choices=("relocate-leaf", "relocate-broom"))
    s.add_argument("--x", type=int)
    s.add_argument("--y", type=int)
    s.add_argument("--context", type=int)
    s.add_argument("--swap", action="store_true", help="absorb the first component instead of the second")
    s.add_argument("--list-contexts", action="store_true")
    s.add_argument("--output")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("verify", help="check a lemma over a parameter range")
    s.add_argument("--lemma", required=True)
    s.add_argument("--max-n", type=int)
    s.add_argument("--min-n", type=int)
    s.add_argument("--samples", type=int)
    s.add_argument("--seed", type=int, help="random seed for sampled lemmas (default 7)")
    s.add_argument("--n", dest="ns", type=int, nargs="+", help="orders for the monotone lemma")
    s.add_argument("--jobs", type=int, help="worker processes for sampled lemmas")
    s.add_argument("--counterexamples", metavar="CSV")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("enumerate", help="list all free trees of an order")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--count", action="store_true")
    s.add_argument("--ceiling", type=int)
    s.set_defaults(func=cmd_enumerate)
    return p


def main(argv=None, out=None, err=None):
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    try:
        args = build_parser().parse_args(argv)
        return args.func(args, out) or 0
    except WienerLabError as exc:
        msg = " ".join(str(exc).split())
        err.write(f"error:{exc.code}:{msg}\n")
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
