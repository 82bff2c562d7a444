"""Command-line interface: exact character data, Sylow/subnormalizer queries,
pairings, and the acceptance suite."""

from __future__ import annotations

import argparse
import json
import re
import sys

from .partitions import format_partition, parse_partition
from .perms import Permutation
from .suite import SCHEMA, SuiteConfig, _jsonable, run_suite


def parse_permutation(text, degree=None):
    """Parse cycle notation "(1,2,3)(4,5)" or one-line images "2 3 1".

    The empty string is the identity (degree required). Raises ValueError with
    the offending token for malformed input, repeated points, or points
    outside 1..degree.
    """
    text = text.strip()
    if not text:
        if degree is None:
            raise ValueError("empty permutation needs an explicit degree")
        return Permutation.identity(degree)
    if text.startswith("("):
        body = text
        cycles = []
        seen = set()
        for match in re.finditer(r"\(([^()]*)\)|(\S)", body):
            if match.group(0).startswith("("):
                toks = [t for t in re.split(r"[,\s]+", match.group(1)) if t]
                cyc = []
                for tok in toks:
                    if not tok.lstrip("-").isdigit():
                        raise ValueError(f"malformed token {tok!r} in {text!r}")
                    pt = int(tok)
                    if pt < 1:
                        raise ValueError(f"point {pt} out of range in {text!r}")
                    if pt in seen:
                        raise ValueError(f"repeated point {pt} in {text!r}")
                    seen.add(pt)
                    cyc.append(pt)
                cycles.append(cyc)
            elif not match.group(0).isspace():
                raise ValueError(f"malformed token {match.group(0)!r} in {text!r}")
        deg = degree if degree is not None else max(seen, default=1)
        if seen and max(seen) > deg:
            raise ValueError(f"point {max(seen)} exceeds degree {deg}")
        return Permutation.from_cycles(cycles, deg)
    toks = [t for t in re.split(r"[,\s]+", text) if t]
    images = []
    for tok in toks:
        if not tok.isdigit():
            raise ValueError(f"malformed token {tok!r} in {text!r}")
        images.append(int(tok))
    return Permutation(images)


def _emit(args, payload, plain_lines):
    if args.json:
        payload = {"schema": SCHEMA, **payload}
        json.dump(_jsonable(payload), sys.stdout, indent=2, sort_keys=True)
        sys.stdout.write("\n")
    else:
        for line in plain_lines:
            print(line)


def cmd_char(args):
    from .characters import centralizer_order, char_column, degree, mn_value

    if args.column is not None:
        ctype = parse_partition(args.column)
        col = char_column(sum(ctype), ctype)
        rows = sorted(col.items())
        _emit(
            args,
            {
                "command": "char",
                "class": list(ctype),
                "centralizer_order": centralizer_order(ctype),
                "values": {format_partition(l): v for l, v in rows},
            },
            [f"{format_partition(l):>16}  {v}" for l, v in rows],
        )
        return 0
    lam = parse_partition(args.partition)
    if args.at:
        ctype = parse_partition(args.at)
        value = mn_value(lam, ctype)
        _emit(
            args,
            {"command": "char", "partition": list(lam), "class": list(ctype), "value": value},
            [str(value)],
        )
    else:
        d = degree(lam)
        _emit(
            args,
            {"command": "char", "partition": list(lam), "degree": d},
            [str(d)],
        )
    return 0


def cmd_partition(args):
    from .partitions import (
        conjugate,
        hook_product,
        list_q_hooks,
        q_core,
        q_quotient,
        size,
    )

    lam = parse_partition(args.partition)
    payload = {
        "command": "partition",
        "partition": list(lam),
        "size": size(lam),
        "conjugate": list(conjugate(lam)),
        "hook_product": hook_product(lam),
    }
    lines = [
        f"partition  {format_partition(lam)}",
        f"size       {size(lam)}",
        f"conjugate  {format_partition(conjugate(lam))}",
        f"hook prod  {hook_product(lam)}",
    ]
    if args.q:
        q = args.q
        core = q_core(lam, q)
        quot = q_quotient(lam, q)
        hooks = list_q_hooks(lam, q)
        payload.update(
            {
                "q": q,
                "core": list(core),
                "quotient": [list(c) for c in quot],
                "removable_hooks": [
                    {"cells": [list(c) for c in h.cells], "height": h.height}
                    for h in hooks
                ],
            }
        )
        lines += [
            f"{q}-core     {format_partition(core)}",
            f"{q}-quotient {' | '.join(format_partition(c) for c in quot)}",
            f"{q}-hooks    {len(hooks)}",
        ]
    _emit(args, payload, lines)
    return 0


def cmd_tower(args):
    from .towers import build_tower, nu_p_degree, tower_to_json

    lam = parse_partition(args.partition)
    tower = build_tower(lam, args.p)
    payload = {
        "command": "tower",
        "partition": list(lam),
        "p": args.p,
        "tower": tower_to_json(tower),
        "row_weights": list(tower.row_weights()),
        "nu_p_degree": nu_p_degree(lam, args.p),
    }
    lines = [f"row {i}: {' | '.join(format_partition(mu) for mu in row)}"
             for i, row in enumerate(tower.rows)]
    lines.append(f"row weights {list(tower.row_weights())}")
    lines.append(f"nu_{args.p}(degree) = {nu_p_degree(lam, args.p)}")
    _emit(args, payload, lines)
    return 0


def cmd_picky(args):
    from .sylow import PickyType, classify_picky, p_element_types

    if args.type:
        ctype = parse_partition(args.type)
        kind = classify_picky(ctype, args.p)
        _emit(
            args,
            {"command": "picky", "type": list(ctype), "p": args.p, "class": kind.name},
            [kind.name],
        )
        return 0
    rows = []
    for ctype in p_element_types(args.n, args.p):
        kind = classify_picky(ctype, args.p)
        if kind != PickyType.NOT_PICKY:
            rows.append((ctype, kind))
    _emit(
        args,
        {
            "command": "picky",
            "n": args.n,
            "p": args.p,
            "classes": [{"type": list(t), "class": k.name} for t, k in rows],
        },
        [f"{format_partition(t):>16}  {k.name}" for t, k in rows],
    )
    return 0


def cmd_sylow(args):
    from .sylow import (
        canonical_block_structure,
        count_block_structures,
        normalizer_shape,
        sylow_generators,
    )

    structure = canonical_block_structure(args.n, args.p)
    gens = sylow_generators(structure, args.n, args.p)
    shape = normalizer_shape(args.n, args.p)
    payload = {
        "command": "sylow",
        "n": args.n,
        "p": args.p,
        "generators": [list(g.images) for g in gens],
        "block_structures": count_block_structures(args.n, args.p),
        "normalizer_order": shape.order(),
    }
    lines = [f"generator {g!r}" for g in gens]
    lines.append(f"block structures: {count_block_structures(args.n, args.p)}")
    lines.append(f"normalizer order: {shape.order()}")
    _emit(args, payload, lines)
    return 0


def cmd_sub(args):
    from .subnorm import sub_shape_2

    x = parse_permutation(args.element, degree=args.n)
    shape = sub_shape_2(x)
    payload = {
        "command": "sub",
        "element": list(x.images),
        "type": list(x.cycle_type()),
        "shape": repr(shape),
        "order": shape.order(),
    }
    _emit(args, payload, [f"shape {shape!r}", f"order {shape.order()}"])
    return 0


def cmd_local(args):
    from .localchars import eval_local, irr_local, parse_label

    if args.label:
        char = parse_label(args.label)
        g = parse_permutation(args.at or "", degree=2**args.k)
        value = eval_local(char, g)
        shown = str(value.as_int()) if value.is_integer() else repr(value)
        _emit(
            args,
            {"command": "local", "label": char.label, "value": shown},
            [shown],
        )
        return 0
    chars = irr_local(args.k)
    degrees = {}
    for c in chars:
        degrees[c.degree] = degrees.get(c.degree, 0) + 1
    payload = {
        "command": "local",
        "k": args.k,
        "count": len(chars),
        "by_degree": {str(d): c for d, c in sorted(degrees.items())},
    }
    lines = [f"characters: {len(chars)}"] + [
        f"degree {d}: {c}" for d, c in sorted(degrees.items())
    ]
    _emit(args, payload, lines)
    return 0


def cmd_bijection(args):
    from .bijections import element_pairing, picky_bijection, verify

    if args.element:
        x = parse_permutation(args.element, degree=args.n)
        pairing = element_pairing(x)
        rep = verify(pairing)
    else:
        pairing, elements = picky_bijection(args.n, args.p)
        rep = verify(pairing, elements=elements, centralizer_checks=elements)
    rows = [
        {
            "partition": list(t.glob),
            "local": t.local.label,
            "eps": t.eps,
        }
        for t in sorted(pairing.triples, key=lambda t: t.glob)
    ]
    payload = {
        "command": "bijection",
        "context": rep.context,
        "ok": rep.ok,
        "checks": [{"name": n, "pass": ok} for n, ok, _ in rep.checks],
        "pairs": rows,
    }
    lines = [f"{format_partition(t.glob):>16}  {'+' if t.eps > 0 else '-'}  {t.local.label}"
             for t in sorted(pairing.triples, key=lambda t: t.glob)]
    lines.append(f"verify: {'ok' if rep.ok else 'FAILED'}")
    _emit(args, payload, lines)
    return 0 if rep.ok else 1


def cmd_suite(args):
    cfg = SuiteConfig(
        out_dir=args.out,
        seed=args.seed,
        jobs=args.jobs,
        max_n=args.max_n,
    )
    return run_suite(cfg)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pickychar",
        description="Exact symmetric-group character bijections at picky elements.",
    )
    parser.add_argument("--json", action="store_true", help="emit JSON")
    parser.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    parser.add_argument("--jobs", type=int, default=1, help="parallel criterion execution")
    parser.add_argument("--max-n", type=int, default=None, help="cap all check families")
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("char", help="character degrees and values")
    p.add_argument("partition", nargs="?", default="")
    p.add_argument("--at", help="cycle type, e.g. 4,2,1,1")
    p.add_argument("--column", help="full character column at a cycle type")
    p.set_defaults(func=cmd_char)

    p = subs.add_parser("partition", help="hooks, cores, quotients")
    p.add_argument("partition")
    p.add_argument("-q", type=int, default=None, help="hook length / core parameter")
    p.set_defaults(func=cmd_partition)

    p = subs.add_parser("tower", help="iterated p-core tower")
    p.add_argument("partition")
    p.add_argument("-p", type=int, default=2)
    p.set_defaults(func=cmd_tower)

    p = subs.add_parser("picky", help="picky class classification")
    p.add_argument("-n", type=int, default=8)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("--type", help="classify one cycle type")
    p.set_defaults(func=cmd_picky)

    p = subs.add_parser("sylow", help="canonical Sylow subgroup data")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-p", type=int, default=2)
    p.set_defaults(func=cmd_sylow)

    p = subs.add_parser("sub", help="subnormalizer shape and order")
    p.add_argument("element", help='permutation, e.g. "(1,2,3,4)(5,6)"')
    p.add_argument("-n", type=int, default=None, help="ambient degree")
    p.set_defaults(func=cmd_sub)

    p = subs.add_parser("local", help="tower-group characters")
    p.add_argument("-k", type=int, default=3)
    p.add_argument("--label", help="s-expression label, e.g. '(ext (pair b0 b1) -1)'")
    p.add_argument("--at", help="element to evaluate at")
    p.set_defaults(func=cmd_local)

    p = subs.add_parser("bijection", help="build and verify a pairing")
    p.add_argument("-n", type=int, default=8)
    p.add_argument("-p", type=int, default=2)
    p.add_argument("--element", help="explicit 2-element instead of picky classes")
    p.set_defaults(func=cmd_bijection)

    p = subs.add_parser("suite", help="run the full acceptance suite")
    p.add_argument("--out", default="reports", help="report directory")
    p.set_defaults(func=cmd_suite)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
