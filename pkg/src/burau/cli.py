"""Command-line front end.

Subcommands expose the main library operations: `verify` replays the bundled
counterexamples and exits 0 only if every check passes, `burau`, `pairing`,
`twist` and `hom` print single computations, and `search` launches the two
search harnesses.  Exit codes: 0 success, 1 verification failure, 2 usage
error.  Machine-readable output is JSON behind --json; default output is
plain text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .complexes import (
    act_complex,
    euler_pairing,
    hom_table,
    is_spherical,
    k0_class,
    projective,
    render_hom_table,
)
from .criteria import KernelCertificate, Rejection, criterion1, graph_json
from .fixtures import D4_MODULI, affine_fixture, d4_fixture
from .garside import NotFiniteType
from .graphs import CoxeterGraph, load_graph, word_from_string
from .laurent import ZZ, IntegersMod
from .matrices import act, basis_vector, form_from_name, pairing, word_matrix
from .search import bucket_search, confirm_pair, enumerate_curves, find_pairs
from .zigzag import zigzag

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _graph(spec: str) -> CoxeterGraph:
    return load_graph(spec)


def _word(text: str) -> tuple:
    return word_from_string(text)


def _ring(args) -> object:
    return IntegersMod(args.mod) if getattr(args, "mod", None) else ZZ


def _emit(args, human: str, machine) -> None:
    if getattr(args, "json", False):
        print(json.dumps(machine, indent=2, sort_keys=True))
    else:
        print(human)


def _verify_one(name: str, emit_json: bool):
    """Run one named fixture end to end.  Returns (passed, payload)."""
    if name in ("affine-a3", "affine-a3-variant"):
        fixture = affine_fixture(variant=name.endswith("variant"))
        (w1, i1), (w2, i2) = fixture.witnesses
        outcome = criterion1(w1, i1, w2, i2, fixture.graph)
    else:
        p = int(name.split("-")[-1])
        fixture = d4_fixture(p)
        from .search import verify_bigelow3

        (beta, i) = fixture.witnesses[0]
        outcome = verify_bigelow3(fixture.graph, beta, i, p)
    if isinstance(outcome, KernelCertificate) and outcome.verified:
        return True, outcome.to_json()
    if isinstance(outcome, Rejection):
        return False, outcome.to_json()
    return False, outcome.to_json()


def cmd_verify(args) -> int:
    if args.target == "d4-mod":
        if args.p is None:
            print("verify d4-mod needs a modulus, e.g. `verify d4-mod 7`", file=sys.stderr)
            return EXIT_USAGE
        if args.p not in D4_MODULI:
            print(f"no fixture for p={args.p}; available p: 6..16", file=sys.stderr)
            return EXIT_USAGE
        names = [f"d4-mod-{args.p}"]
    elif args.target == "all":
        names = ["affine-a3", "affine-a3-variant"] + [
            f"d4-mod-{p}" for p in D4_MODULI
        ]
    else:
        names = [args.target]
    payloads = {}
    all_ok = True
    for name in names:
        ok, payload = _verify_one(name, args.json)
        payloads[name] = payload
        all_ok = all_ok and ok
        if not args.json:
            status = "PASS" if ok else "FAIL"
            detail = ""
            if not ok:
                detail = f" ({payload.get('clause')}: {payload.get('detail')})"
            print(f"{status} {name}{detail}")
    if args.json:
        print(json.dumps(payloads, indent=2, sort_keys=True))
    return EXIT_OK if all_ok else EXIT_FAILED


def cmd_burau(args) -> int:
    g = _graph(args.graph)
    form = form_from_name(args.form)
    m = word_matrix(g, _word(args.word), form, _ring(args))
    _emit(args, str(m), m.to_json())
    return EXIT_OK


def cmd_pairing(args) -> int:
    g = _graph(args.graph)
    form = form_from_name(args.form)
    ring = _ring(args)
    x = act(g, _word(args.w1), basis_vector(g, args.i1, ring), form)
    y = act(g, _word(args.w2), basis_vector(g, args.i2, ring), form)
    p = pairing(x, y, form)
    _emit(args, str(p), {"pairing": str(p), "terms": p.to_json_terms()})
    return EXIT_OK


def cmd_twist(args) -> int:
    g = _graph(args.graph)
    cx = act_complex(g, _word(args.word), projective(zigzag(g), args.start))
    k0 = k0_class(cx)
    spherical = is_spherical(cx)
    human = "\n".join(
        [str(cx), f"k0 class: {k0}", f"spherical: {spherical}"]
    )
    machine = {
        "summands": [
            {"vertex": v, "g": gg, "h": hh} for v, gg, hh in cx.summands
        ],
        "k0": [c.to_json_terms() for c in k0.coords],
        "spherical": spherical,
    }
    _emit(args, human, machine)
    return EXIT_OK


def cmd_hom(args) -> int:
    g = _graph(args.graph)
    algebra = zigzag(g)
    cx = act_complex(g, _word(args.w1), projective(algebra, args.i1))
    cy = act_complex(g, _word(args.w2), projective(algebra, args.i2))
    table = hom_table(cx, cy)
    euler = euler_pairing(cx, cy)
    human = "\n".join([render_hom_table(table), f"Euler pairing: {euler}"])
    machine = {
        "hom_table": {f"{gg},{hh}": dim for (gg, hh), dim in sorted(table.items())},
        "total": sum(table.values()),
        "euler": str(euler),
    }
    _emit(args, human, machine)
    return EXIT_OK


def cmd_search(args) -> int:
    g = _graph(args.graph)
    if args.kind == "curves":
        store = enumerate_curves(g, budget=args.budget)
        pairs = find_pairs(store, criterion=args.criterion, limit=args.limit)
        confirmed = []
        for pair in pairs:
            outcome = confirm_pair(g, pair, args.criterion)
            if isinstance(outcome, KernelCertificate) and outcome.verified:
                confirmed.append(outcome.to_json())
        result = {
            "manifest": {
                "graph": graph_json(g),
                "kind": "curves",
                "budget": args.budget,
                "seed": args.seed,
                "workers": args.workers,
                "criterion": args.criterion,
            },
            "store_size": len(store),
            "candidate_pairs": len(pairs),
            "certificates": confirmed,
        }
        if args.store:
            store.save(args.store)
    else:
        result = bucket_search(
            g,
            p=args.p,
            budget=args.budget,
            seed=args.seed,
            target=args.target,
            fix_vertex=args.start,
            workers=args.workers,
        )
    text = json.dumps(result, indent=2, sort_keys=True)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        print(f"wrote {args.out}")
    else:
        print(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="burau",
        description="Exact Burau representations, categorical twists, and "
        "kernel-element verification for Artin-Tits groups.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_verify = sub.add_parser("verify", help="replay a bundled counterexample")
    p_verify.add_argument(
        "target",
        choices=["affine-a3", "affine-a3-variant", "d4-mod", "all"],
    )
    p_verify.add_argument("p", type=int, nargs="?", help="modulus for d4-mod")
    p_verify.add_argument("--json", action="store_true")
    p_verify.set_defaults(func=cmd_verify)

    p_burau = sub.add_parser("burau", help="Burau matrix of a word")
    p_burau.add_argument("--graph", required=True)
    p_burau.add_argument("--word", required=True)
    p_burau.add_argument("--form", choices=["standard", "dual"], default="standard")
    p_burau.add_argument("--mod", type=int)
    p_burau.add_argument("--json", action="store_true")
    p_burau.set_defaults(func=cmd_burau)

    p_pair = sub.add_parser("pairing", help="pairing of two twisted roots")
    p_pair.add_argument("--graph", required=True)
    p_pair.add_argument("--w1", required=True)
    p_pair.add_argument("--i1", type=int, required=True)
    p_pair.add_argument("--w2", required=True)
    p_pair.add_argument("--i2", type=int, required=True)
    p_pair.add_argument("--form", choices=["standard", "dual"], default="standard")
    p_pair.add_argument("--mod", type=int)
    p_pair.add_argument("--json", action="store_true")
    p_pair.set_defaults(func=cmd_pairing)

    p_twist = sub.add_parser("twist", help="twisted projective complex of a word")
    p_twist.add_argument("--graph", required=True)
    p_twist.add_argument("--word", required=True)
    p_twist.add_argument("--start", type=int, required=True)
    p_twist.add_argument("--json", action="store_true")
    p_twist.set_defaults(func=cmd_twist)

    p_hom = sub.add_parser("hom", help="bigraded hom table of two twisted projectives")
    p_hom.add_argument("--graph", required=True)
    p_hom.add_argument("--w1", required=True)
    p_hom.add_argument("--i1", type=int, required=True)
    p_hom.add_argument("--w2", required=True)
    p_hom.add_argument("--i2", type=int, required=True)
    p_hom.add_argument("--json", action="store_true")
    p_hom.set_defaults(func=cmd_hom)

    p_search = sub.add_parser("search", help="run a counterexample search")
    p_search.add_argument("kind", choices=["curves", "buckets"])
    p_search.add_argument("--graph", required=True)
    p_search.add_argument("--budget", type=int, default=1000)
    p_search.add_argument("--seed", type=int, default=0)
    p_search.add_argument(
        "--workers",
        type=int,
        default=int(os.environ.get("BURAU_WORKERS", "1")),
    )
    p_search.add_argument("--criterion", type=int, choices=[1, 2], default=1)
    p_search.add_argument("--limit", type=int, default=16)
    p_search.add_argument("--p", type=int, default=5)
    p_search.add_argument(
        "--target", choices=["fix_vector", "spread_zero"], default="fix_vector"
    )
    p_search.add_argument("--start", type=int, default=1, help="vertex to fix")
    p_search.add_argument("--store", help="write the curve store to this path")
    p_search.add_argument("--out", help="write the run result to this path")
    p_search.set_defaults(func=cmd_search)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NotFiniteType as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ValueError, KeyError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
