"""Command line interface: ``ybq <command> ...``.

Exit codes: 0 success, 2 validation failure, 3 missing catalog data.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import catalog, tables, words
from . import diagram as dg
from .abelian import abelianization
from .biquandle import BiquandleError, enumerate_biquandles, verify
from .cocycles import ConcreteCocycle, FactorizationError, FiniteGroup
from .invariants import MODES, enumerate_colorings, invariant
from .presentation import compute_unc, compute_unc_reduced, gamma_candidates, suggest_s0
from .tietze import tietze_simplify

EXIT_OK, EXIT_INVALID, EXIT_MISSING = 0, 2, 3


class ValidationFailed(Exception):
    pass


def _emit(args, data, text):
    if args.json:
        print(json.dumps(data, indent=1, default=str))
    else:
        print(text)


def parse_s0(text: str):
    """'1,2;1,3' -> ((0,1),(0,2)); 'auto' and '' are handled by the caller."""
    pairs = []
    for chunk in text.replace(" ", "").split(";"):
        if not chunk:
            continue
        x, y = chunk.strip("[]").split(",")
        pairs.append((int(x) - 1, int(y) - 1))
    return tuple(pairs)


def _biquandle(spec):
    B = catalog.load_biquandle_file(spec)
    report = verify(B)
    if not report.is_biquandle:
        raise ValidationFailed(f"{spec}: {report.summary()}")
    return B


def _presentation(args, B):
    if getattr(args, "reduced", False) or getattr(args, "s0", None):
        s0 = args.s0 or "auto"
        s0 = suggest_s0(B) if s0 == "auto" else parse_s0(s0)
        return compute_unc_reduced(B, s0)
    return compute_unc(B)


# -- commands -----------------------------------------------------------------

def cmd_verify(args):
    B = catalog.load_biquandle_file(args.biquandle)
    report = verify(B)
    data = report.to_json()
    data["name"] = B.name
    if report.is_biquandle:
        data["order"] = B.order()
        data["diagonal_fixed"] = B.diagonal_fixed_points()
    text = report.summary()
    if report.is_biquandle:
        text += f"\norder of sigma: {B.order()}\n#diagonal fixed: {B.diagonal_fixed_points()}"
    _emit(args, data, text)
    return EXIT_OK if report.is_biquandle else EXIT_INVALID


def cmd_catalog(args):
    if args.name:
        try:
            B = catalog.biquandle(args.name)
        except catalog.UnknownEntryError:
            D = catalog.diagram(args.name)
            _emit(args, D.to_json(), dg.dumps(D))
            return EXIT_OK
        _emit(args, B.to_json(), json.dumps(B.to_json(), indent=1))
        return EXIT_OK
    rows = []
    for name in catalog.biquandle_names():
        rows.append({"kind": "biquandle", "name": name, "available": catalog.available(name)})
    for e in catalog.entries():
        if e.kind == "diagram":
            rows.append({"kind": "diagram", "name": e.name, "available": True,
                         "provenance": e.provenance})
    lines = []
    for r in rows:
        flag = "" if r["available"] else "  (external data required)"
        lines.append(f"{r['kind']:<10} {r['name']}{flag}")
    _emit(args, rows, "\n".join(lines))
    return EXIT_OK


def cmd_enum(args):
    found = enumerate_biquandles(args.n, args.max_order)
    data = [{"name": B.name, "order": B.order(), "diagonal_fixed": B.diagonal_fixed_points(),
             "table": B.to_json()} for B in found]
    lines = [f"{len(found)} biquandles of size {args.n} up to isomorphism"]
    for B in found:
        lines.append(f"  {B.name}: order {B.order()}, #diagonal fixed {B.diagonal_fixed_points()}")
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_unc(args):
    B = _biquandle(args.biquandle)
    P = compute_unc(B)
    _emit(args, P.to_json(), P.format())
    return EXIT_OK


def cmd_unc_reduced(args):
    B = _biquandle(args.biquandle)
    s0 = suggest_s0(B) if args.s0 == "auto" else parse_s0(args.s0)
    P = compute_unc_reduced(B, s0)
    _emit(args, P.to_json(), P.format())
    return EXIT_OK


def cmd_gamma(args):
    B = _biquandle(args.biquandle)
    cands = gamma_candidates(B)
    data = {"candidates": [{"class": a + 1, "pair": [x + 1, y + 1], "target_class": b + 1}
                           for a, (x, y), b in cands],
            "suggested_s0": [[x + 1, y + 1] for x, y in suggest_s0(B)]}
    lines = [f"[{x + 1},{y + 1}]  joins s-classes {a + 1} and {b + 1}" for a, (x, y), b in cands]
    lines.append("suggested S0: " + tables.format_s0(suggest_s0(B)))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def cmd_simplify(args):
    B = _biquandle(args.biquandle)
    S = tietze_simplify(_presentation(args, B))
    _emit(args, S.to_json(), S.format())
    return EXIT_OK


def cmd_abelianize(args):
    B = _biquandle(args.biquandle)
    A = abelianization(_presentation(args, B))
    _emit(args, {"torsion": list(A.torsion), "free_rank": A.free_rank}, A.format())
    return EXIT_OK


def cmd_diagram(args):
    D = catalog.load_diagram_file(args.diagram)
    if args.action == "validate":
        orders = D.underarc_order()
        data = {"name": D.name, "crossings": D.crossing_count, "components": len(D.components),
                "semi_arcs": len(D.arcs()), "writhe": D.writhe(), "underarc_order": orders}
        text = (f"{D.name or 'diagram'}: valid\ncrossings: {D.crossing_count}\n"
                f"components: {len(D.components)}\nsemi-arcs: {len(D.arcs())}\nwrithe: {D.writhe()}")
        _emit(args, data, text)
    elif args.action == "lk":
        i, j = args.components
        lk = D.linking_number(i - 1, j - 1)
        _emit(args, {"i": i, "j": j, "linking_number": lk}, str(lk))
    elif args.action == "mirror":
        M = dg.mirror(D)
        _emit(args, M.to_json(), dg.dumps(M))
    elif args.action == "r1":
        arc = _arc_id(D, args.arc)
        R = dg.r1_insert(D, arc, 1 if args.sign == "+" else -1, args.chirality)
        _emit(args, R.to_json(), dg.dumps(R))
    return EXIT_OK


def _arc_id(D, text):
    for a in D.arcs():
        if str(a) == text:
            return a
    raise dg.DiagramError(f"no semi-arc {text!r} in the diagram")


def cmd_colorings(args):
    D = catalog.load_diagram_file(args.diagram)
    B = _biquandle(args.biquandle)
    cols = enumerate_colorings(D, B)
    arcs = D.arcs()
    data = {"diagram": D.name, "biquandle": B.name, "count": len(cols)}
    lines = [f"colorings: {len(cols)}"]
    if args.list:
        data["colorings"] = [{str(a): c[a] + 1 for a in arcs} for c in cols]
        for c in cols:
            lines.append("  " + " ".join(f"{a}:{c[a] + 1}" for a in arcs))
    _emit(args, data, "\n".join(lines))
    return EXIT_OK


def _cocycle(args, P, B):
    if not args.group:
        raise ValidationFailed("hom mode needs --group Zm and --assign")
    if not args.group.startswith("Z"):
        raise ValidationFailed("only cyclic groups Zm are supported on the command line")
    G = FiniteGroup.cyclic(int(args.group[1:]))
    assignment = {k: 0 for k in range(1, P.rank + 1)}
    for item in (args.assign or "").split(","):
        if item.strip():
            g, _, v = item.partition("=")
            assignment[words.parse_word(g)[0]] = int(v) % G.order
    return ConcreteCocycle.from_assignment(P, B, G, assignment)


def cmd_invariant(args):
    D = catalog.load_diagram_file(args.diagram)
    B = _biquandle(args.biquandle)
    P = _presentation(args, B)
    cocycle = _cocycle(args, P, B) if args.mode == "hom" else None
    inv = invariant(D, B, P, args.mode, cocycle)
    _emit(args, inv.to_json(), inv.format())
    return EXIT_OK


def cmd_table(args):
    if args.which == "unc":
        rows = tables.table_unc()
        _emit(args, [r.to_json() for r in rows], tables.format_unc(rows))
    elif args.which == "unc-reduced":
        rows = tables.table_unc_reduced()
        _emit(args, [r.to_json() for r in rows], tables.format_unc_reduced(rows))
    else:
        cells = tables.table_knots()
        groups = tables.coloring_groups(cells)
        text = tables.format_knots(cells)
        text += "\ngroups by coloring counts: " + "  ".join("{" + ",".join(g) + "}" for g in groups)
        _emit(args, {"cells": [[c.to_json() for c in row] for row in cells], "groups": groups}, text)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")

    p = argparse.ArgumentParser(prog="ybq", parents=[common],
                                description="Biquandles, their 2-cocycle groups and link invariants.")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        sp = sub.add_parser(name, parents=[common], help=help_text)
        sp.set_defaults(func=func)
        return sp

    def reduced_opts(sp):
        sp.add_argument("--reduced", action="store_true", help="use the reduced group (auto S0)")
        sp.add_argument("--s0", default=None, help="S0 pairs, 1-based: '1,2;1,3' (implies --reduced)")

    bq_help = "catalog name (e.g. BQ3_4, wada(Z3), alex(4,-1,1), D5*) or JSON file"
    sp = add("verify", cmd_verify, "check the biquandle axioms")
    sp.add_argument("biquandle", help=bq_help)

    sp = add("catalog", cmd_catalog, "list catalog entries or show one")
    sp.add_argument("name", nargs="?")

    sp = add("enum", cmd_enum, "enumerate biquandles of a given size up to isomorphism")
    sp.add_argument("n", type=int)
    sp.add_argument("--max-order", type=int, default=3, help="refuse sizes above this (search is exhaustive)")

    sp = add("unc", cmd_unc, "presentation of U_nc")
    sp.add_argument("biquandle", help=bq_help)

    sp = add("unc-reduced", cmd_unc_reduced, "presentation of the reduced group")
    sp.add_argument("biquandle", help=bq_help)
    sp.add_argument("--s0", default="auto", help="'auto' or 1-based pairs '1,2;1,3'")

    sp = add("gamma-candidates", cmd_gamma, "pairs usable in S0")
    sp.add_argument("biquandle", help=bq_help)

    sp = add("simplify", cmd_simplify, "Tietze-simplified presentation")
    sp.add_argument("biquandle", help=bq_help)
    reduced_opts(sp)

    sp = add("abelianize", cmd_abelianize, "abelian invariants of the group")
    sp.add_argument("biquandle", help=bq_help)
    reduced_opts(sp)

    sp = add("diagram", cmd_diagram, "diagram utilities")
    sp.add_argument("action", choices=["validate", "lk", "mirror", "r1"])
    sp.add_argument("diagram", help="catalog name (e.g. 3_1, hopf, 3_1*) or JSON file")
    sp.add_argument("components", nargs="*", type=int, help="for lk: two 1-based component indices")
    sp.add_argument("--arc", help="for r1: semi-arc to kink")
    sp.add_argument("--sign", choices=["+", "-"], default="+")
    sp.add_argument("--chirality", choices=["under-first", "over-first"], default="under-first")

    sp = add("colorings", cmd_colorings, "count (or list) colorings of a diagram")
    sp.add_argument("diagram")
    sp.add_argument("biquandle", help=bq_help)
    sp.add_argument("--list", action="store_true")

    sp = add("invariant", cmd_invariant, "conjugacy cocycle invariant")
    sp.add_argument("diagram")
    sp.add_argument("biquandle", help=bq_help)
    reduced_opts(sp)
    sp.add_argument("--mode", choices=MODES, default="cyclic")
    sp.add_argument("--group", help="hom mode: target group Zm")
    sp.add_argument("--assign", help="hom mode: generator images, e.g. 'f1=1,f2=0'")

    sp = add("table", cmd_table, "print a summary table")
    sp.add_argument("which", choices=["unc", "unc-reduced", "knots"])
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "diagram":
        if args.action == "lk" and len(args.components) != 2:
            parser.error("diagram lk needs two component indices")
        if args.action == "r1" and args.arc is None:
            parser.error("diagram r1 needs --arc")
    try:
        return args.func(args)
    except (catalog.ExternalDataRequired, catalog.UnknownEntryError) as exc:
        print(f"ybq: {exc}", file=sys.stderr)
        return EXIT_MISSING
    except (ValidationFailed, BiquandleError, dg.DiagramError, catalog.IntegrityError,
            FactorizationError, ValueError) as exc:
        print(f"ybq: {exc}", file=sys.stderr)
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
