"""Command line front end.

Exit status: 0 on success, 1 on a validation error (the error name and its
witness go to stderr), 2 when an input cannot be parsed.
"""

import argparse
import json
import sys

from . import coloring as col
from . import marked as mo
from . import triangles as mt
from .corpus import coloring_corpus, marking_corpus
from .errors import MarkedOrdError, ParseError
from .io import (
    coloring_from_json,
    graph_from_json,
    load_json,
    marking_from_json,
    marking_to_json,
    triangle_to_json,
)
from .polynomial import format_rational


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"ParseError({message})", file=sys.stderr)
        raise SystemExit(2)


def _bottom(text):
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma separated integer list: {text!r}")


def _block_text(block, order):
    return "{" + ",".join(str(x) for x in sorted(block, key=order.index)) + "}"


def _cell_text(cell, order):
    return " < ".join(_block_text(b, order) for b in cell.blocks)


# mop -------------------------------------------------------------------

def _marking(args):
    return marking_from_json(load_json(args.input))


def _mop(args):
    m = _marking(args)
    verb = args.verb
    if verb == "count":
        return mo.count_extensions(m)
    if verb == "brute":
        return mo.count_extensions_bruteforce(m)
    if verb == "strict":
        return mo.count_strict_extensions(m)
    if verb == "dim":
        return mo.dimension(m)
    if verb == "recip":
        return mo.reciprocity_count(m)
    if verb == "chain-count":
        return mo.count_chain_polytope_points(m)
    if verb == "poly":
        return mo.symbolic_polynomial(m.poset, m.marked, mo.cell_of(m), names=_names(m))
    if verb == "cells":
        mo.check_extremes(m.poset, m.marked)
        order = list(m.poset.elements)
        rows = []
        for cell in mo.enumerate_cells(m.poset, m.marked):
            poly = mo.symbolic_polynomial(m.poset, m.marked, cell, names=_names(m))
            rows.append((cell, poly))
        return _CellTable(rows, order)
    raise AssertionError(verb)


def _names(m):
    return {a: str(a) for a in m.marked}


class _CellTable:
    def __init__(self, rows, order):
        self.rows, self.order = rows, order

    def text(self):
        return "\n".join(f"{_cell_text(c, self.order)}\t{p.to_text()}" for c, p in self.rows)

    def json(self):
        return [
            {"blocks": [sorted(map(str, b), key=lambda s: [str(x) for x in self.order].index(s))
                        for b in c.blocks],
             "polynomial": p.to_json()}
            for c, p in self.rows
        ]


# mt --------------------------------------------------------------------

def _mt(args):
    verb = args.verb
    if verb == "alpha-poly":
        return mt.alpha_polynomial(args.n)
    k = args.bottom
    if k is None:
        raise ParseError(message="--bottom is required")
    if len(k) != args.n:
        raise ParseError(message=f"--bottom needs {args.n} entries, got {len(k)}")
    if verb == "count":
        return mt.count_mt_direct(args.n, k)
    if verb == "alpha":
        return mt.alpha_via_moebius(args.n, k)
    if verb == "dmt-signed":
        value = mt.signed_dmt_sum(args.n, k)
        if args.format == "json":
            tris = list(mt.enumerate_dmt(args.n, k))
            return {"value": value, "count": len(tris),
                    "triangles": [dict(triangle_to_json(t), dd=mt.dd(t)) for t in tris]}
        return value
    raise AssertionError(verb)


# chrom -----------------------------------------------------------------

def _chrom(args):
    g = graph_from_json(load_json(args.graph))
    c = coloring_from_json(load_json(args.coloring)) if args.coloring else col.PartialColoring(0, {})
    verb = args.verb
    if verb == "poly":
        poly = col.chi_polynomial(g, c)
        return poly if poly is not None else _Zero()
    if verb == "eval":
        poly = col.chi_polynomial(g, c)
        return 0 if poly is None else poly.eval({"m": args.m})
    if verb == "count":
        return col.count_proper_extensions(g, c, args.m)
    if verb == "orient":
        return col.orientation_sum_count(g, c, args.m)
    if verb == "pairs":
        return col.reciprocity_pairs(g, c, args.m)
    if verb == "acyclic":
        return col.constrained_acyclic_count(g, c)
    raise AssertionError(verb)


class _Zero:
    """The identically-zero extension polynomial."""

    def text(self):
        return "0"

    def json(self):
        return {"identically_zero": True, "terms": []}


# corpus ----------------------------------------------------------------

def _corpus(args):
    if args.kind == "markings":
        return [marking_to_json(m) for m in marking_corpus(args.seed, args.count)]
    return [{"graph": g.to_dict(), "coloring": c.to_dict()}
            for g, c in coloring_corpus(args.seed, args.count)]


# output ----------------------------------------------------------------

def _render(result, fmt, command):
    from fractions import Fraction

    from .polynomial import MultiPoly

    if fmt == "text":
        if isinstance(result, (MultiPoly,)):
            return result.to_text()
        if isinstance(result, (_CellTable, _Zero)):
            return result.text()
        if isinstance(result, Fraction):
            return format_rational(result)
        if isinstance(result, (list, dict)):
            return json.dumps(result, sort_keys=False)
        return str(result)
    if isinstance(result, MultiPoly):
        payload = result.to_json()
    elif isinstance(result, (_CellTable, _Zero)):
        payload = result.json()
    elif isinstance(result, Fraction):
        payload = format_rational(result)
    elif isinstance(result, int):
        # strings keep arbitrary precision exact for every JSON consumer
        payload = str(result)
    else:
        payload = result
    return json.dumps({"command": command, "result": payload})


def build_parser():
    p = _Parser(prog="markedord", description="Exact counting on marked order polytopes.")
    sub = p.add_subparsers(dest="group", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--format", choices=["text", "json"], default="text")

    mop = sub.add_parser("mop", help="marked order polytopes")
    mop.add_argument("verb", choices=["count", "brute", "strict", "poly", "dim",
                                      "recip", "chain-count", "cells"])
    mop.add_argument("-i", "--input", required=True, help="marking JSON file")
    common(mop)

    mtp = sub.add_parser("mt", help="monotone triangles")
    mtp.add_argument("verb", choices=["count", "alpha", "alpha-poly", "dmt-signed"])
    mtp.add_argument("--n", type=int, required=True)
    mtp.add_argument("--bottom", type=_bottom)
    common(mtp)

    ch = sub.add_parser("chrom", help="partial coloring extensions")
    ch.add_argument("verb", choices=["poly", "eval", "count", "orient", "pairs", "acyclic"])
    ch.add_argument("-g", "--graph", required=True, help="graph JSON file")
    ch.add_argument("-c", "--coloring", help="partial coloring JSON file")
    ch.add_argument("--m", type=int)
    common(ch)

    cp = sub.add_parser("corpus", help="print a seeded random test corpus as JSON")
    cp.add_argument("kind", choices=["markings", "colorings"])
    cp.add_argument("--seed", type=int, default=0)
    cp.add_argument("--count", type=int, default=10)
    common(cp)
    return p


def run(argv=None, out=None, err=None):
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    command = " ".join([args.group] + ([args.verb] if hasattr(args, "verb") else [args.kind]))
    try:
        if args.group == "mop":
            result = _mop(args)
        elif args.group == "mt":
            result = _mt(args)
        elif args.group == "chrom":
            if args.verb in ("eval", "count", "orient", "pairs") and args.m is None:
                raise ParseError(message=f"chrom {args.verb} needs --m")
            result = _chrom(args)
        else:
            result = _corpus(args)
    except ParseError as exc:
        print(str(exc), file=err)
        return 2
    except MarkedOrdError as exc:
        print(exc.render(), file=err)
        return 1
    print(_render(result, args.format, command), file=out)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
