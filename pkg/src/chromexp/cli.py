"""Batch command-line front end.

Subcommands: expand, poly, combine, coproduct, product, verify, bases,
mr, balanced. Input digraphs come from builder expressions (--dsl) or
JSON files (--json, "-" for stdin); output is JSON by default and
readable text under --pretty.

Exit codes: 0 success, 1 verification failure, 2 usage error, 3 input
validation error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import chromatic, combinat, graph as gr, ncqsym, qsym, verify
from .combinat import (
    r_compositions,
    r_set_compositions,
    compositions,
    partitions,
    set_compositions,
    set_partitions,
    format_composition,
    format_set_composition,
    format_set_partition,
    r_value_from_json,
)
from .ncqsym import NCQSymExpr
from .qsym import QSymExpr
from .tpoly import tpoly_to_json


def _emit(data) -> None:
    sys.stdout.write(json.dumps(data, indent=2, sort_keys=False) + "\n")


def _read_graph(args):
    inputs = []
    for text in args.dsl or []:
        inputs.append(gr.parse_dsl(text))
    for path in args.json or []:
        raw = sys.stdin.read() if path == "-" else open(path, encoding="utf-8").read()
        inputs.append(gr.digraph_from_json(json.loads(raw)))
    if not inputs:
        raise ValueError("no input digraph: pass --dsl or --json")
    return inputs


def _as_labelled(g) -> gr.LabelledDigraph:
    if isinstance(g, gr.LabelledDigraph):
        return g
    return gr.labelled(g)


def _as_plain(g) -> gr.EdgeColouredDigraph:
    return g.graph if isinstance(g, gr.LabelledDigraph) else g


def _graph_args(sub):
    sub.add_argument("--dsl", action="append", metavar="EXPR",
                     help="builder expression, e.g. 'W(C(2),C(1))'")
    sub.add_argument("--json", action="append", metavar="PATH",
                     help="digraph JSON file ('-' reads stdin)")


def _common_flags(sub):
    sub.add_argument("--pretty", action="store_true", help="readable text output")
    sub.add_argument("--threads", type=int, default=1,
                     help="cap on internal parallelism (evaluation is "
                          "sequential; accepted for interface stability)")


def _print_qsym(f: QSymExpr, pretty: bool):
    if pretty:
        print(f.pretty())
    else:
        _emit(qsym.qsym_to_json(f))


def _print_ncqsym(f: NCQSymExpr, pretty: bool):
    if pretty:
        print(f.pretty())
    else:
        _emit(ncqsym.ncqsym_to_json(f))


def _coords_json(coords: dict, index_to_json, basis: str) -> dict:
    items = sorted(coords.items())
    return {"basis": basis,
            "terms": [{"index": index_to_json(k), "coeff_t": tpoly_to_json(c)}
                      for k, c in items]}


def _coords_pretty(coords: dict, fmt, prefix: str) -> str:
    if not coords:
        return "0"
    from .qsym import _join_terms, _pretty_term
    return _join_terms(_pretty_term(c, prefix + fmt(k))
                       for k, c in sorted(coords.items()))


# ---------------------------------------------------------------------------
# subcommand handlers

def _cmd_expand(args) -> int:
    (g,) = _read_graph(args)
    if args.nc:
        f = ncqsym.expand_nc(_as_labelled(g))
        if not args.t:
            f = f.at_t(1)
        if args.basis in (None, "M"):
            _print_ncqsym(f, args.pretty)
        elif args.basis in ("F", "Fbar"):
            coords = ncqsym.to_ncqsym_basis(f, args.basis)
            name = {"F": "F", "Fbar": "Fb"}[args.basis]
            if args.pretty:
                print(_coords_pretty(coords, format_set_composition, name))
            else:
                _emit(_coords_json(coords, lambda k: [list(b) for b in k], args.basis))
        elif args.basis == "m":
            coords = ncqsym.to_ncsym_m(f)
            if args.pretty:
                print(_coords_pretty(coords, format_set_partition, "m"))
            else:
                _emit(_coords_json(coords, lambda k: [list(b) for b in k], "m"))
        else:
            raise ValueError(f"--basis {args.basis} is not available with --nc")
        return 0
    f = chromatic.expand(_as_plain(g))
    if not args.t:
        f = f.at_t(1)
    if args.basis in (None, "M"):
        _print_qsym(f, args.pretty)
    elif args.basis in ("F", "Fbar"):
        coords = qsym.to_qsym_basis(f, args.basis)
        name = {"F": "F", "Fbar": "Fb"}[args.basis]
        if args.pretty:
            print(_coords_pretty(coords, format_composition, name))
        else:
            _emit(_coords_json(coords, list, args.basis))
    elif args.basis.startswith("sym:"):
        kind = args.basis.split(":", 1)[1]
        coords = qsym.to_sym_basis(f, kind)
        if args.pretty:
            print(_coords_pretty(coords, format_composition, kind))
        else:
            _emit(_coords_json(coords, list, args.basis))
    else:
        raise ValueError(f"unknown --basis value {args.basis!r}")
    return 0


def _cmd_poly(args) -> int:
    (g,) = _read_graph(args)
    f = chromatic.expand(_as_plain(g)).at_t(1)
    poly = qsym.chromatic_polynomial(f)
    if args.eval is not None:
        value = qsym.evaluate_ones(f, args.eval)
        if args.pretty:
            print(value)
        else:
            _emit({"p": args.eval, "value": value})
        return 0
    if args.pretty:
        print(poly.pretty())
    else:
        _emit(qsym.rational_poly_to_json(poly))
    return 0


def _cmd_combine(args) -> int:
    (g,) = _read_graph(args)
    if args.pretty:
        print(repr(g))
    else:
        _emit(gr.digraph_to_json(g))
    return 0


def _cmd_coproduct(args) -> int:
    (g,) = _read_graph(args)
    if args.nc:
        f = ncqsym.expand_nc(_as_labelled(g))
        f = f if args.t else f.at_t(1)
        tens = ncqsym.coproduct_nc(f)
        if args.pretty:
            print(tens.pretty())
        else:
            _emit(ncqsym.ncqsym_tensor_to_json(tens))
        return 0
    f = chromatic.expand(_as_plain(g))
    f = f if args.t else f.at_t(1)
    tens = qsym.coproduct(f)
    if args.pretty:
        print(tens.pretty())
    else:
        _emit(qsym.qsym_tensor_to_json(tens))
    return 0


def _cmd_product(args) -> int:
    graphs = _read_graph(args)
    if len(graphs) != 2:
        raise ValueError("product needs exactly two inputs")
    if args.nc:
        f = ncqsym.expand_nc(_as_labelled(graphs[0]))
        g = ncqsym.expand_nc(_as_labelled(graphs[1]))
        out = f * g
        out = out if args.t else out.at_t(1)
        _print_ncqsym(out, args.pretty)
        return 0
    f = chromatic.expand(_as_plain(graphs[0]))
    g = chromatic.expand(_as_plain(graphs[1]))
    out = f * g
    out = out if args.t else out.at_t(1)
    _print_qsym(out, args.pretty)
    return 0


def _cmd_verify(args) -> int:
    suite = args.suite
    if suite == "oracle":
        result = verify.verify_oracle(trials=args.trials or 200,
                                      max_n=args.n or 5, seed=args.seed)
    elif suite == "hopf":
        result = verify.verify_hopf(trials=args.trials or 50,
                                    max_n=args.n or 4, seed=args.seed)
    elif suite == "tables":
        n = args.n or 5
        result = verify.verify_tables(n=n, sym_n=min(n, 4))
    elif suite == "r-closure":
        n = args.n or 5
        result = verify.verify_r_closure(n_qsym=n, n_nc=min(n - 1, 4),
                                         r=args.r, seed=args.seed,
                                         trials=args.trials or 20)
    else:  # unreachable through argparse choices
        raise ValueError(f"unknown suite {suite!r}")
    _emit(result.to_json())
    return 0 if result.ok else 1


def _bases_qsym(n, kind):
    if kind in ("M", "F", "Fbar"):
        maker = {"M": qsym.basis_M, "F": qsym.basis_F, "Fbar": qsym.basis_Fbar}[kind]
        return [(list(alpha), maker(alpha)) for alpha in compositions(n)]
    return [(list(lam), qsym.basis_sym(kind, lam)) for lam in partitions(n)]


def _bases_ncqsym(n, kind):
    if kind in ("M", "F", "Fbar"):
        return [([list(b) for b in phi], ncqsym.basis_nc(kind, phi))
                for phi in set_compositions(n)]
    return [([list(b) for b in pi], ncqsym.basis_ncsym(kind, pi))
            for pi in set_partitions(n)]


def _cmd_bases(args) -> int:
    n, r, kind = args.n, args.r, args.kind
    elements = []
    if args.space == "qsym":
        for index, f in _bases_qsym(n, kind):
            elements.append({"index": index, "expansion": qsym.qsym_to_json(f)})
    elif args.space == "ncqsym":
        for index, f in _bases_ncqsym(n, kind):
            elements.append({"index": index, "expansion": ncqsym.ncqsym_to_json(f)})
    elif args.space == "qsym-r":
        for rc in r_compositions(n, r):
            f = qsym.basis_r(kind, rc.beta, rc.mu, r)
            elements.append({"index": combinat.r_composition_to_json(rc),
                             "expansion": qsym.qsym_to_json(f)})
    elif args.space == "ncqsym-r":
        for rsc in r_set_compositions(n, r):
            f = ncqsym.basis_ncr(kind, rsc.phi, rsc.pi, r)
            elements.append({"index": combinat.r_set_composition_to_json(rsc),
                             "expansion": ncqsym.ncqsym_to_json(f)})
    _emit({"space": args.space, "kind": kind, "n": n,
           "r": None if args.space in ("qsym", "ncqsym") else combinat.r_value_to_json(r),
           "elements": elements})
    return 0


def _parse_permutation(text: str):
    if "," in text:
        return combinat.permutation(int(x) for x in text.split(","))
    return combinat.permutation(int(ch) for ch in text.strip())


def _cmd_mr(args) -> int:
    sigma = _parse_permutation(args.permutation)
    phi = combinat.runs_set_composition(sigma)
    f = ncqsym.mr_F(sigma)
    if args.pretty:
        print(f"F_{format_set_composition(phi)} = {f.pretty()}")
    else:
        _emit({"permutation": list(sigma),
               "set_composition": [list(b) for b in phi],
               "expansion": ncqsym.ncqsym_to_json(f)})
    return 0


def _cmd_balanced(args) -> int:
    raw = sys.stdin.read() if args.graph == "-" else open(args.graph, encoding="utf-8").read()
    data = json.loads(raw)
    h = gr.simple_graph(int(data["n"]), [tuple(e) for e in data.get("edges", [])])
    balanced = []
    for orientation in gr.orientations(h):
        if gr.is_k_balanced(orientation, args.k):
            balanced.append(orientation)
    xk = chromatic.humpert(h, args.k)
    if args.pretty:
        for o in balanced:
            print(repr(o))
        print(xk.pretty())
    else:
        _emit({"k": args.k,
               "orientations": [gr.digraph_to_json(o) for o in balanced],
               "xk": qsym.qsym_to_json(xk)})
    return 0


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="chromexp",
        description="exact chromatic expansions of edge-coloured digraphs")
    subs = parser.add_subparsers(dest="command", required=True)

    sub = subs.add_parser("expand", help="digraph to monomial expansion")
    _graph_args(sub)
    sub.add_argument("--nc", action="store_true", help="noncommuting variables")
    sub.add_argument("--t", action="store_true", help="keep the ascent grading")
    sub.add_argument("--basis", help="M, F, Fbar, sym:<kind>, or m with --nc")
    _common_flags(sub)
    sub.set_defaults(func=_cmd_expand)

    sub = subs.add_parser("poly", help="counting polynomial in p")
    _graph_args(sub)
    sub.add_argument("--eval", type=int, metavar="P", help="evaluate at an integer")
    _common_flags(sub)
    sub.set_defaults(func=_cmd_poly)

    sub = subs.add_parser("combine", help="evaluate a builder expression")
    _graph_args(sub)
    _common_flags(sub)
    sub.set_defaults(func=_cmd_combine)

    sub = subs.add_parser("coproduct", help="coproduct of the expansion")
    _graph_args(sub)
    sub.add_argument("--nc", action="store_true")
    sub.add_argument("--t", action="store_true")
    _common_flags(sub)
    sub.set_defaults(func=_cmd_coproduct)

    sub = subs.add_parser("product", help="product of two expansions")
    _graph_args(sub)
    sub.add_argument("--nc", action="store_true")
    sub.add_argument("--t", action="store_true")
    _common_flags(sub)
    sub.set_defaults(func=_cmd_product)

    sub = subs.add_parser("verify", help="run a verification suite")
    sub.add_argument("--suite", required=True,
                     choices=("hopf", "oracle", "tables", "r-closure"))
    sub.add_argument("--n", type=int)
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--trials", type=int)
    sub.add_argument("--r", type=r_value_from_json, default=2)
    _common_flags(sub)
    sub.set_defaults(func=_cmd_verify)

    sub = subs.add_parser("bases", help="list basis expansions")
    sub.add_argument("--space", required=True,
                     choices=("qsym", "ncqsym", "qsym-r", "ncqsym-r"))
    sub.add_argument("--n", type=int, required=True)
    sub.add_argument("--r", type=r_value_from_json, default=2)
    sub.add_argument("--kind", required=True)
    _common_flags(sub)
    sub.set_defaults(func=_cmd_bases)

    sub = subs.add_parser("mr", help="fundamental image of a permutation")
    sub.add_argument("permutation", help="one-line word, e.g. 836791524 or 8,3,6,...")
    _common_flags(sub)
    sub.set_defaults(func=_cmd_mr)

    sub = subs.add_parser("balanced", help="balanced orientations and X^k")
    sub.add_argument("--graph", required=True, metavar="PATH",
                     help="graph JSON {n, edges:[[u,v],...]} ('-' for stdin)")
    sub.add_argument("--k", type=int, required=True)
    _common_flags(sub)
    sub.set_defaults(func=_cmd_balanced)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError, json.JSONDecodeError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
