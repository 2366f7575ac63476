"""Command-line front end.

Exit status: 0 on success, 1 when a verification finds a counterexample,
2 on usage errors (including malformed shape literals).
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import expansion, posets, theorems
from .shapes import SkewShape, as_composition, as_partition, ribbon
from .tableaux import Filling, descent_set

DEFAULT_BUDGET = 8


class UsageError(Exception):
    pass


def parse_parts(token: str) -> tuple[int, ...]:
    """'4,4,3' or '443' -> (4, 4, 3); '' -> ()."""
    pieces = token.split(",") if "," in token else list(token)
    if not all(p.isdigit() for p in pieces):
        raise UsageError(f"malformed parts: {token!r}")
    return tuple(int(p) for p in pieces)


def parse_partition(token: str) -> tuple[int, ...]:
    try:
        return as_partition(parse_parts(token))
    except ValueError as exc:
        raise UsageError(f"bad partition {token!r}: {exc}") from None


def parse_composition(token: str) -> tuple[int, ...]:
    try:
        return as_composition(parse_parts(token))
    except ValueError as exc:
        raise UsageError(f"bad composition {token!r}: {exc}") from None


def parse_skew(token: str, as_ribbon: bool = False) -> SkewShape:
    if as_ribbon:
        return ribbon(parse_composition(token))
    outer, _, inner = token.partition("/")
    if "/" in inner:
        raise UsageError(f"malformed skew shape: {token!r}")
    try:
        return SkewShape.make(parse_parts(outer), parse_parts(inner))
    except ValueError as exc:
        raise UsageError(f"bad skew shape {token!r}: {exc}") from None


def parse_tableau(token: str) -> Filling:
    """Rows separated by '/', entries by ',': '1,2,3/4,5'."""
    if any("," not in r and len(r) > 1 for r in token.split("/")):
        raise UsageError(f"tableau entries must be comma separated: {token!r}")
    rows = [parse_parts(r) for r in token.split("/")]
    try:
        return Filling.straight(rows)
    except ValueError as exc:
        raise UsageError(f"bad tableau {token!r}: {exc}") from None


def _parts(ps) -> list[list[int]]:
    return [list(p) for p in sorted(ps, reverse=True)]


def _check_budget(n: int, budget: int) -> None:
    if n < 1:
        raise UsageError("N must be positive")
    if n > budget:
        raise UsageError(f"N = {n} exceeds the poset budget {budget}; pass --budget {n} to override")


def cmd_expand(args) -> tuple[object, int]:
    a = parse_skew(args.shape, args.ribbon)
    return {"shape": a.to_json(), "expansion": expansion.lr_expand(a).to_json()}, 0


def cmd_ribbon_expand(args):
    alpha = parse_composition(args.alpha)
    return {"ribbon": list(alpha), "expansion": expansion.ribbon_expand(alpha).to_json()}, 0


def cmd_support(args):
    a = parse_skew(args.shape, args.ribbon)
    return {"shape": a.to_json(), "support": _parts(expansion.support_of(a))}, 0


def cmd_compare(args):
    a = parse_skew(args.a, args.ribbon)
    b = parse_skew(args.b, args.ribbon)
    rel = expansion.diff_schur_positive if args.order == "schur" else (lambda x, y: expansion.support_contained(y, x))
    return {
        "A": a.to_json(),
        "B": b.to_json(),
        "order": args.order,
        "B_leq_A": rel(a, b),
        "A_leq_B": rel(b, a),
    }, 0


def cmd_poset(args):
    _check_budget(args.n, args.budget)
    f = posets.poset(args.n, args.order, args.jobs)
    if args.connected:
        f = f.connected_part()
    if args.dot:
        return f.to_dot(f"{'P' if args.order == 'schur' else 'Supp'}_{args.n}"), 0
    return f.to_json(), 0


def cmd_maximal(args):
    _check_budget(args.n, args.budget)
    maxes = posets.maximal_connected(posets.poset(args.n, args.order, args.jobs))
    return {"n": args.n, "order": args.order, "maximal": [c.to_json() for c in maxes]}, 0


def cmd_verify(args):
    n = args.n
    if args.check == "main":
        with_poset = n <= args.budget
        if not with_poset:
            print(f"N = {n} exceeds the poset budget; checking supports only", file=sys.stderr)
        rep = theorems.verify_theorem_main(n, with_poset=with_poset, jobs=args.jobs)
    elif args.check == "max":
        _check_budget(n, args.budget)
        rep = theorems.verify_conjecture_max(n, args.jobs)
    elif args.check == "minrib":
        rep = theorems.verify_minrib_all(n)
    else:
        rep = theorems.verify_lemma_extreme(n)
    return rep.to_json(), 0 if rep.passed else 1


def cmd_witness(args):
    alpha = parse_composition(args.alpha)
    lam = parse_partition(args.lam)
    try:
        inner = parse_tableau(args.inner) if args.inner else None
        t = theorems.construct_witness_syt(alpha, lam, inner)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out = t.to_json()
    out["descents"] = sorted(descent_set(t))
    return out, 0


def cmd_equitable(args):
    try:
        found = theorems.enumerate_equitable(args.n, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"n": args.n, "l": args.l, "ribbons": [{"ribbon": list(a)} for a in found]}, 0


def cmd_billiard(args):
    try:
        alpha = theorems.conjectured_max_ribbon(args.n, args.l)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return {"n": args.n, "l": args.l, "ribbon": list(alpha), "boundary_word": theorems.boundary_word(alpha)}, 0


def cmd_full_support(args):
    a = parse_skew(args.shape, args.ribbon)
    return {"shape": a.to_json(), "full_support": theorems.has_full_support(a)}, 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="schurkit", description=__doc__.splitlines()[0])
    parser.add_argument("--jobs", type=int, default=None, help="worker processes (default: $SCHURKIT_JOBS or 1)")
    sub = parser.add_subparsers(dest="verb", required=True)

    def shape_cmd(name, func, help_):
        p = sub.add_parser(name, help=help_)
        p.add_argument("shape", help="outer/inner, e.g. 3321/211 or 10,4/2")
        p.add_argument("--ribbon", action="store_true", help="read the shape as a ribbon row composition")
        p.set_defaults(func=func)
        return p

    shape_cmd("expand", cmd_expand, "Schur expansion by the LR rule")
    shape_cmd("support", cmd_support, "support of the skew Schur function")
    shape_cmd("full-support", cmd_full_support, "does the support fill the dominance interval")

    p = sub.add_parser("ribbon-expand", help="ribbon expansion by descent sets")
    p.add_argument("alpha")
    p.set_defaults(func=cmd_ribbon_expand)

    p = sub.add_parser("compare", help="compare two shapes in one order")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--order", choices=["schur", "support"], default="schur")
    p.add_argument("--ribbon", action="store_true")
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("poset", help="P_N or Supp_N as JSON or DOT")
    p.add_argument("n", type=int)
    p.add_argument("--order", choices=["schur", "support"], default="schur")
    p.add_argument("--connected", action="store_true")
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_poset)

    p = sub.add_parser("maximal", help="maximal connected classes")
    p.add_argument("n", type=int)
    p.add_argument("--order", choices=["schur", "support"], default="schur")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_maximal)

    p = sub.add_parser("verify", help="run a theorem or conjecture check")
    p.add_argument("check", choices=["main", "max", "minrib", "extreme"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="SYT of shape lambda with descent set S(alpha)")
    p.add_argument("alpha")
    p.add_argument("lam", metavar="lambda")
    p.add_argument("--inner", help="SYT for the smaller shape, rows split by '/', entries by ','")
    p.set_defaults(func=cmd_witness)

    for name, func in (("equitable", cmd_equitable), ("billiard", cmd_billiard)):
        p = sub.add_parser(name)
        p.add_argument("n", type=int)
        p.add_argument("l", type=int)
        p.set_defaults(func=func)
    return parser


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.jobs is None:
        args.jobs = expansion.default_jobs()
    try:
        payload, status = args.func(args)
    except UsageError as exc:
        print(f"schurkit: error: {exc}", file=sys.stderr)
        return 2
    if isinstance(payload, str):
        out.write(payload)
    else:
        out.write(json.dumps(payload) + "\n")
    return status


def main() -> None:
    sys.exit(run())
