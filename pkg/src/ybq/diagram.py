"""Oriented link diagrams over semi-arcs with explicitly signed crossings.

Each crossing names its four semi-arcs by role: the under strand runs
``ui -> uo`` and the over strand ``oi -> oo``.  Components are listed as
cyclic sequences of semi-arcs starting at the base point.  A component
with no crossings is a single free loop arc.

JSON format::

    {"name": "3_1",
     "components": [[0, 1, 2, 3, 4, 5]],
     "crossings": [{"sign": "+", "ui": 0, "oi": 3, "uo": 1, "oo": 4}, ...]}
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Hashable, Optional, Sequence


class DiagramError(ValueError):
    pass


ROLES = ("ui", "oi", "uo", "oo")


@dataclass(frozen=True)
class Crossing:
    sign: int
    ui: Hashable
    oi: Hashable
    uo: Hashable
    oo: Hashable

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign!r}")

    def quadruple(self):
        """Arcs (x, y, z, t) with sigma(c(x), c(y)) = (c(z), c(t)) for a coloring c."""
        if self.sign > 0:
            return self.ui, self.oi, self.oo, self.uo
        return self.uo, self.oo, self.oi, self.ui

    def to_json(self):
        return {"sign": "+" if self.sign > 0 else "-", "ui": self.ui, "oi": self.oi,
                "uo": self.uo, "oo": self.oo}


@dataclass(frozen=True)
class LinkDiagram:
    crossings: tuple
    components: tuple
    name: str = field(default="", compare=False)
    provenance: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        object.__setattr__(self, "components", tuple(tuple(c) for c in self.components))
        validate(self)

    # -- basic data ---------------------------------------------------------

    def arcs(self) -> list:
        return [a for comp in self.components for a in comp]

    def component_of(self, arc) -> int:
        for i, comp in enumerate(self.components):
            if arc in comp:
                return i
        raise DiagramError(f"unknown semi-arc {arc!r}")

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def writhe(self) -> int:
        return sum(c.sign for c in self.crossings)

    def linking_number(self, i: int, j: int) -> int:
        return linking_number(self, i, j)

    def underarc_order(self):
        return underarc_order(self)

    def to_json(self) -> dict:
        data = {"name": self.name}
        if self.provenance:
            data["provenance"] = self.provenance
        data["components"] = [list(c) for c in self.components]
        data["crossings"] = [c.to_json() for c in self.crossings]
        return data

    def __repr__(self):
        return (f"<LinkDiagram {self.name!r}: {len(self.crossings)} crossings, "
                f"{len(self.components)} components>")


def _successors(crossings):
    """next[arc] = (following arc, crossing index, 'under'|'over')."""
    nxt = {}
    for k, c in enumerate(crossings):
        for arc_in, arc_out, level in ((c.ui, c.uo, "under"), (c.oi, c.oo, "over")):
            if arc_in in nxt:
                raise DiagramError(f"semi-arc {arc_in!r} enters more than one crossing")
            nxt[arc_in] = (arc_out, k, level)
    return nxt


def validate(D: LinkDiagram) -> None:
    """Raise :class:`DiagramError` unless D is a closed, consistent diagram."""
    incoming, outgoing = {}, {}
    for k, c in enumerate(D.crossings):
        for role in ("ui", "oi"):
            a = getattr(c, role)
            if a in incoming:
                raise DiagramError(f"semi-arc {a!r} used twice as an incoming arc")
            incoming[a] = (k, role)
        for role in ("uo", "oo"):
            a = getattr(c, role)
            if a in outgoing:
                raise DiagramError(f"semi-arc {a!r} used twice as an outgoing arc")
            outgoing[a] = (k, role)
    for a in incoming:
        if a not in outgoing:
            raise DiagramError(f"dangling semi-arc {a!r}: enters a crossing but never leaves one")
    for a in outgoing:
        if a not in incoming:
            raise DiagramError(f"dangling semi-arc {a!r}: leaves a crossing but never enters one")
    listed = [a for comp in D.components for a in comp]
    if len(set(listed)) != len(listed):
        raise DiagramError("a semi-arc appears in more than one component position")
    if set(listed) - set(incoming):
        free = set(listed) - set(incoming)
        for comp in D.components:
            if set(comp) & free and len(comp) != 1:
                raise DiagramError(f"semi-arcs {sorted(map(str, free))} are not attached to any crossing")
    if set(incoming) - set(listed):
        missing = sorted(map(str, set(incoming) - set(listed)))
        raise DiagramError(f"semi-arcs {missing} belong to no component")
    nxt = _successors(D.crossings)
    for i, comp in enumerate(D.components):
        if not comp:
            raise DiagramError(f"component {i} is empty")
        if len(comp) == 1 and comp[0] not in nxt:
            continue  # free loop
        for j, a in enumerate(comp):
            b = comp[(j + 1) % len(comp)]
            if nxt[a][0] != b:
                raise DiagramError(
                    f"component {i}: semi-arc {a!r} continues to {nxt[a][0]!r}, not {b!r}")


def underarc_order(D: LinkDiagram) -> list:
    """Per component, indices of crossings whose under strand lies on it, in traversal order."""
    nxt = _successors(D.crossings)
    out = []
    for comp in D.components:
        order = []
        for a in comp:
            if a in nxt and nxt[a][2] == "under":
                order.append(nxt[a][1])
        out.append(order)
    return out


def crossing_components(D: LinkDiagram):
    """(under component, over component) for each crossing."""
    where = {a: i for i, comp in enumerate(D.components) for a in comp}
    return [(where[c.ui], where[c.oi]) for c in D.crossings]


def linking_number(D: LinkDiagram, i: int, j: int) -> int:
    r = len(D.components)
    if not (0 <= i < r and 0 <= j < r):
        raise DiagramError(f"component index out of range (diagram has {r})")
    if i == j:
        raise DiagramError("linking number needs two distinct components")
    total = 0
    for c, (u, o) in zip(D.crossings, crossing_components(D)):
        if {u, o} == {i, j}:
            total += c.sign
    return total // 2


def self_writhe(D: LinkDiagram, i: int) -> int:
    return sum(c.sign for c, (u, o) in zip(D.crossings, crossing_components(D)) if u == o == i)


def mirror(D: LinkDiagram) -> LinkDiagram:
    """Swap over and under at every crossing; orientation is kept, signs flip."""
    crossings = [Crossing(-c.sign, ui=c.oi, oi=c.ui, uo=c.oo, oo=c.uo) for c in D.crossings]
    name = D.name[:-1] if D.name.endswith("*") else (D.name + "*" if D.name else "")
    return LinkDiagram(crossings, D.components, name, D.provenance)


def _fresh(D: LinkDiagram, count: int):
    arcs = D.arcs()
    if all(isinstance(a, int) for a in arcs):
        start = max(arcs, default=-1) + 1
        return [start + k for k in range(count)]
    used = set(map(str, arcs))
    out, k = [], 0
    while len(out) < count:
        cand = f"k{k}"
        if cand not in used:
            out.append(cand)
        k += 1
    return out


def r1_insert(D: LinkDiagram, arc, sign: int, chirality: str = "under-first") -> LinkDiagram:
    """Add a Reidemeister-I kink on ``arc``.

    The strand passes the new crossing twice; ``chirality`` says whether
    the first passage is the under or the over one.  ``sign`` is the sign
    of the new crossing.
    """
    if sign not in (1, -1):
        raise DiagramError("sign must be +1 or -1")
    if chirality not in ("under-first", "over-first"):
        raise DiagramError("chirality must be 'under-first' or 'over-first'")
    i = D.component_of(arc)
    comp = D.components[i]
    free = len(comp) == 1 and not any(arc in (c.ui, c.oi) for c in D.crossings)
    if free:
        loop, = _fresh(D, 1)
        after = arc
        crossings = list(D.crossings)
        new_comp = (arc, loop)
    else:
        loop, after = _fresh(D, 2)
        crossings = []
        for c in D.crossings:
            roles = {r: getattr(c, r) for r in ROLES}
            for r in ("ui", "oi"):
                if roles[r] == arc:
                    roles[r] = after
            crossings.append(Crossing(c.sign, **roles))
        j = comp.index(arc)
        new_comp = comp[:j + 1] + (loop, after) + comp[j + 1:]
    if chirality == "under-first":
        kink = Crossing(sign, ui=arc, uo=loop, oi=loop, oo=after)
    else:
        kink = Crossing(sign, oi=arc, oo=loop, ui=loop, uo=after)
    crossings.append(kink)
    comps = list(D.components)
    comps[i] = new_comp
    return LinkDiagram(crossings, comps, D.name, D.provenance)


def rotate_base_point(D: LinkDiagram, i: int, steps: int = 1) -> LinkDiagram:
    comps = list(D.components)
    comp = comps[i]
    k = steps % len(comp)
    comps[i] = comp[k:] + comp[:k]
    return LinkDiagram(D.crossings, comps, D.name, D.provenance)


def from_pd(pd: Sequence[Sequence[int]], signs: Sequence[int], name: str = "",
            provenance: str = "") -> LinkDiagram:
    """Import a planar-diagram code with one explicit sign per crossing.

    Each tuple (a, b, c, d) lists the semi-arcs counterclockwise starting
    from the incoming under arc, so the under strand runs a -> c; the sign
    decides which of b, d is the incoming over arc.  Best effort: the
    result is validated, but the signs must be right.
    """
    if len(pd) != len(signs):
        raise DiagramError("need exactly one sign per crossing")
    crossings = []
    for (a, b, c, d), sgn in zip(pd, signs):
        if sgn > 0:
            crossings.append(Crossing(1, ui=a, oi=d, uo=c, oo=b))
        else:
            crossings.append(Crossing(-1, ui=a, oi=b, uo=c, oo=d))
    nxt = {}
    for c in crossings:
        nxt[c.ui] = c.uo
        nxt[c.oi] = c.oo
    comps, seen = [], set()
    for start in sorted(nxt):
        if start in seen:
            continue
        comp, a = [], start
        while a not in seen:
            if a not in nxt:
                raise DiagramError(f"semi-arc {a!r} does not continue")
            seen.add(a)
            comp.append(a)
            a = nxt[a]
        comps.append(comp)
    return LinkDiagram(crossings, comps, name, provenance)


def unlink(r: int, name: str = "") -> LinkDiagram:
    """r disjoint zero-crossing circles."""
    return LinkDiagram((), [[k] for k in range(r)], name or ("unknot" if r == 1 else f"unlink{r}"))


# -- serialization ------------------------------------------------------------

def _parse_sign(value):
    if value in ("+", "+1", 1):
        return 1
    if value in ("-", "-1", -1):
        return -1
    raise DiagramError(f"bad crossing sign {value!r}")


def from_dict(data: dict) -> LinkDiagram:
    try:
        crossings = []
        for entry in data["crossings"]:
            crossings.append(Crossing(_parse_sign(entry["sign"]),
                                      **{r: _arc(entry[r]) for r in ROLES}))
        comps = [[_arc(a) for a in comp] for comp in data["components"]]
    except (KeyError, TypeError) as exc:
        raise DiagramError(f"malformed diagram: {exc}") from exc
    return LinkDiagram(crossings, comps, data.get("name", ""), data.get("provenance", ""))


def _arc(a):
    if isinstance(a, list):
        raise DiagramError(f"semi-arc id must be a scalar, got {a!r}")
    return a


def parse(text: str) -> LinkDiagram:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DiagramError(f"not valid JSON: {exc}") from exc
    return from_dict(data)


def dumps(D: LinkDiagram) -> str:
    return json.dumps(D.to_json(), indent=1)


def load(path) -> LinkDiagram:
    return parse(Path(path).read_text())
