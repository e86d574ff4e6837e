"""The three summary tables: U_nc, reduced U_nc, and knot colorings."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import catalog, words
from .biquandle import FiniteBiquandle
from .invariants import ConjugacyContext, invariant
from .presentation import compute_unc, compute_unc_reduced, suggest_s0
from .tietze import tietze_simplify

# (catalog name, descriptive label)
ROWS = [
    ("BQ3_1", "flip"),
    ("BQ3_2", "antiflip + point"),
    ("BQ3_3", ""),
    ("BQ3_3*", ""),
    ("BQ3_4", "Wada(Z3)"),
    ("BQ3_4*", "inverse Wada(Z3)"),
    ("BQ3_5", ""),
    ("BQ3_6", "Q3"),
    ("BQ3_6*", "inverse Q3"),
    ("BQ3_7", "(x,y)->(-y,-x)"),
    ("BQ3_8", "D3"),
    ("BQ3_8*", "inverse D3"),
    ("BQ3_9", ""),
    ("BQ3_9*", ""),
    ("BQ3_10", "involutive (Z3)"),
]

KNOT_ROWS = ["BQ3_1", "BQ3_2", "BQ3_3", "BQ3_4", "BQ3_5", "BQ3_6", "BQ3_7", "BQ3_8",
             "BQ3_9", "BQ3_10"]


def _load(name) -> Optional[FiniteBiquandle]:
    try:
        return catalog.biquandle(name)
    except catalog.ExternalDataRequired:
        return None


def format_s0(s0) -> str:
    if not s0:
        return "-"
    return "{" + ", ".join(f"[{x + 1},{y + 1}]" for x, y in s0) + "}"


@dataclass
class UncRow:
    name: str
    label: str
    available: bool
    generators: int = 0
    relations: list = field(default_factory=list)
    order: int = 0
    fixed: int = 0
    simplified_generators: int = 0
    simplified_relations: list = field(default_factory=list)
    s0: tuple = ()

    def to_json(self):
        if not self.available:
            return {"name": self.name, "label": self.label, "available": False}
        return {"name": self.name, "label": self.label, "available": True,
                "generators": self.generators, "relations": self.relations,
                "order": self.order, "diagonal_fixed": self.fixed,
                "s0": [[x + 1, y + 1] for x, y in self.s0],
                "simplified_generators": self.simplified_generators,
                "simplified_relations": self.simplified_relations}


def _row(name, label, reduced: bool) -> UncRow:
    B = _load(name)
    if B is None:
        return UncRow(name, label, False)
    s0 = suggest_s0(B) if reduced else ()
    P = compute_unc_reduced(B, s0) if reduced else compute_unc(B)
    S = tietze_simplify(P)
    return UncRow(name, label, True, P.rank, [r.format() for r in P.relations], B.order(),
                  B.diagonal_fixed_points(), S.rank, [r.format() for r in S.renumbered()], tuple(s0))


def table_unc(names=None) -> list[UncRow]:
    labels = dict(ROWS)
    return [_row(n, labels.get(n, ""), False) for n in (names or [r[0] for r in ROWS])]


def table_unc_reduced(names=None) -> list[UncRow]:
    labels = dict(ROWS)
    return [_row(n, labels.get(n, ""), True) for n in (names or [r[0] for r in ROWS])]


def _align(header, body) -> str:
    widths = [max(len(str(r[i])) for r in [header] + body) for i in range(len(header))]
    lines = ["  ".join(str(c).ljust(w) for c, w in zip(header, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(str(c).ljust(w) for c, w in zip(r, widths)).rstrip())
    return "\n".join(lines)


def format_unc(rows) -> str:
    header = ["name", "sigma", "gens", "relations", "order", "#diag"]
    body = []
    for r in rows:
        if not r.available:
            body.append([r.label, r.name, "?", "external data required", "?", "?"])
            continue
        body.append([r.label, r.name, r.generators, ", ".join(r.relations) or "-", r.order, r.fixed])
    return _align(header, body)


def format_unc_reduced(rows) -> str:
    header = ["name", "sigma", "gens", "relations", "S0", "raw gens"]
    body = []
    for r in rows:
        if not r.available:
            body.append([r.label, r.name, "?", "external data required", "?", "?"])
            continue
        body.append([r.label, r.name, r.simplified_generators,
                     ", ".join(r.simplified_relations) or "-", format_s0(r.s0), r.generators])
    return _align(header, body)


# ---------------------------------------------------------------------------
# knots

@dataclass
class KnotCell:
    knot: str
    biquandle: str
    colorings: Optional[int]
    nontrivial: list = field(default_factory=list)   # formatted values, with multiplicity

    def to_json(self):
        return {"knot": self.knot, "biquandle": self.biquandle, "colorings": self.colorings,
                "nontrivial": self.nontrivial}


def knot_cell(knot: str, name: str, context=None) -> KnotCell:
    B = _load(name)
    if B is None:
        return KnotCell(knot, name, None)
    D = catalog.diagram(knot)
    if context is None:
        context = ConjugacyContext(compute_unc(B), "cyclic")
    inv = invariant(D, B, context.presentation, context=context)
    nontrivial = []
    for value, count in inv.items():
        if all(context.is_trivial(x) for x in value):
            continue
        text = ", ".join(inv.format_value(value))
        nontrivial.extend([text] * count)
    return KnotCell(knot, name, inv.colorings, nontrivial)


def table_knots(knots=None, names=None) -> list[list[KnotCell]]:
    knots = list(knots or catalog.KNOT_TABLE)
    out = []
    for name in names or KNOT_ROWS:
        B = _load(name)
        ctx = ConjugacyContext(compute_unc(B), "cyclic") if B is not None else None
        out.append([knot_cell(k, name, ctx) for k in knots])
    return out


def format_knots(cells) -> str:
    if not cells:
        return ""
    knots = [c.knot for c in cells[0]]
    header = [""] + knots
    body = []
    for row in cells:
        line = [row[0].biquandle]
        for c in row:
            if c.colorings is None:
                line.append("?")
            elif c.nontrivial:
                line.append(f"{c.colorings} [{'; '.join(c.nontrivial)}]")
            else:
                line.append(str(c.colorings))
        body.append(line)
    return _align(header, body)


def coloring_groups(cells) -> list[list[str]]:
    """Partition the knots by their vector of coloring counts over all available rows."""
    if not cells:
        return []
    knots = [c.knot for c in cells[0]]
    signature = {k: tuple(row[i].colorings for row in cells if row[i].colorings is not None)
                 for i, k in enumerate(knots)}
    groups: dict = {}
    for k in knots:
        groups.setdefault(signature[k], []).append(k)
    return list(groups.values())


def relation_keys(relations) -> set:
    """Cyclic canonical forms of relation strings, for comparing presentations."""
    keys = set()
    for text in relations:
        left, _, right = text.partition("=")
        w = words.reduce(words.parse_word(left) + words.inverse(words.parse_word(right)))
        keys.add(words.cyclic_canonical(w))
    return keys
