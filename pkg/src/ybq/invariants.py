"""Colorings of link diagrams and the conjugacy cocycle invariant.

At every crossing the coloring must satisfy sigma(c(x), c(y)) = (c(z), c(t))
for the quadruple returned by :meth:`Crossing.quadruple`: for positive
crossings that is (under in, over in) -> (over out, under out), for
negative ones (under out, over out) -> (over in, under in).

The Boltzmann weight of a crossing is the class of (c(x), c(y)) raised to
the crossing sign, charged to the component carrying the under strand.
Multiplying the weights along a component from its base point gives a
word whose conjugacy class is the invariant.
"""

from __future__ import annotations

import logging
from collections import Counter
from dataclasses import dataclass
from typing import Optional

from . import words
from .abelian import hermite_rows, reduce_vector
from .biquandle import FiniteBiquandle
from .cocycles import ConcreteCocycle, evaluate, factor_through
from .diagram import LinkDiagram, underarc_order
from .presentation import Presentation
from .tietze import tietze_simplify

log = logging.getLogger(__name__)

MODES = ("cyclic", "abelian", "hom")


def enumerate_colorings(D: LinkDiagram, B: FiniteBiquandle) -> list[dict]:
    """All colorings of D by B, as dicts semi-arc -> element.

    Backtracking over semi-arcs; each crossing propagates as soon as two
    of its four colors pin down the rest (sigma, sigma^-1, and the two
    invertibility conditions).
    """
    arcs = D.arcs()
    quads = [c.quadruple() for c in D.crossings]
    touching = {a: [] for a in arcs}
    for k, q in enumerate(quads):
        for a in set(q):
            touching[a].append(k)
    n = B.n
    s1, s2 = B.sigma1, B.sigma2
    # left[x][z] = y with s1(x,y) = z ; right[y][t] = x with s2(x,y) = t
    left = [[0] * n for _ in range(n)]
    right = [[0] * n for _ in range(n)]
    for x in range(n):
        for y in range(n):
            left[x][s1[x][y]] = y
            right[y][s2[x][y]] = x

    def deduce(q, col):
        x, y, z, t = (col.get(a) for a in q)
        if x is not None and y is not None:
            return {q[2]: s1[x][y], q[3]: s2[x][y]}
        if z is not None and t is not None:
            a, b = B.inverse(z, t)
            return {q[0]: a, q[1]: b}
        if x is not None and z is not None:
            yy = left[x][z]
            return {q[1]: yy, q[3]: s2[x][yy]}
        if y is not None and t is not None:
            xx = right[y][t]
            return {q[0]: xx, q[2]: s1[xx][y]}
        return {}

    def assign(col, arc, value, trail):
        queue = [(arc, value)]
        while queue:
            a, v = queue.pop()
            if a in col:
                if col[a] != v:
                    return False
                continue
            col[a] = v
            trail.append(a)
            for k in touching[a]:
                for b, w in deduce(quads[k], col).items():
                    if b in col:
                        if col[b] != w:
                            return False
                    else:
                        queue.append((b, w))
        return True

    results = []
    col: dict = {}
    trail: list = []

    def pick():
        # branch on the free arc sharing crossings with the most colored arcs,
        # so propagation kicks in as early as possible
        best, best_score = None, -1
        for a in arcs:
            if a in col:
                continue
            score = sum(1 for k in touching[a] for b in quads[k] if b in col)
            if score > best_score:
                best, best_score = a, score
        return best

    def search():
        arc = pick()
        if arc is None:
            # every crossing is fully colored; re-check defensively
            if all(B(col[q[0]], col[q[1]]) == (col[q[2]], col[q[3]]) for q in quads):
                results.append(dict(col))
            return
        for v in range(n):
            mark = len(trail)
            if assign(col, arc, v, trail):
                search()
            while len(trail) > mark:
                del col[trail.pop()]

    search()
    return results


def is_coloring(D: LinkDiagram, B: FiniteBiquandle, coloring: dict) -> bool:
    return all(B(coloring[x], coloring[y]) == (coloring[z], coloring[t])
               for x, y, z, t in (c.quadruple() for c in D.crossings))


def boltzmann_word(D: LinkDiagram, coloring: dict, P: Presentation, i: int) -> words.Word:
    """Product of Boltzmann weights along component i from its base point."""
    order = underarc_order(D)[i]
    letters = []
    for k in order:
        c = D.crossings[k]
        x, y, _, _ = c.quadruple()
        g = P.letter(coloring[x], coloring[y])
        if g:
            letters.append(g if c.sign > 0 else -g)
    return words.reduce(letters)


class ConjugacyContext:
    """Precomputed data for turning weight words into comparable values.

    ``cyclic``  -- exact conjugacy normal form when the simplified group is a
                   free product of abelian groups; otherwise falls back to
                   ``abelian`` with a warning.
    ``abelian`` -- image in the abelianization (Hermite-reduced exponents).
    ``hom``     -- conjugacy class of the image under a concrete cocycle.
    """

    def __init__(self, P: Presentation, mode: str = "cyclic", cocycle: Optional[ConcreteCocycle] = None):
        if mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}")
        self.presentation = P
        self.requested_mode = mode
        self.simplified = tietze_simplify(P)
        self.mode = mode
        if mode == "cyclic" and self.simplified.structure is None:
            log.warning("group of %s is not recognised as a free product of abelian groups; "
                        "comparing in abelian mode", P.name or "presentation")
            self.mode = "abelian"
        if mode == "hom":
            if cocycle is None:
                raise ValueError("hom mode needs a cocycle")
            self.cocycle = cocycle
            self.assignment = factor_through(P, cocycle)
        if self.mode == "abelian":
            gens = self.simplified.generators
            self._gens = gens
            self._basis = hermite_rows(
                [words.exponent_sums(r.relator(), gens) for r in self.simplified.relations], len(gens))

    def representative(self, word):
        if self.mode == "hom":
            G = self.cocycle.group
            return G.class_representative(evaluate(word, self.assignment, G))
        image = self.simplified.image(word)
        if self.mode == "cyclic":
            st = self.simplified.structure
            return st.to_word(st.conjugacy_form(image))
        vec = reduce_vector(words.exponent_sums(image, self._gens), self._basis)
        out = []
        for g, e in zip(self._gens, vec):
            out.extend([g if e > 0 else -g] * abs(e))
        return tuple(out)

    def format(self, value) -> str:
        if self.mode == "hom":
            return self.cocycle.group.label(value)
        return words.format_word(value)

    def is_trivial(self, value) -> bool:
        if self.mode == "hom":
            return value == self.cocycle.group.identity
        return value == ()


def conjugacy_representative(word, P: Presentation, mode: str = "cyclic",
                             cocycle: Optional[ConcreteCocycle] = None):
    return ConjugacyContext(P, mode, cocycle).representative(word)


def _sort_key(value):
    return tuple((len(v), [(abs(x), x < 0) for x in v]) if isinstance(v, tuple) else (0, v)
                 for v in value)


@dataclass
class InvariantMultiset:
    diagram: str
    biquandle: str
    mode: str
    counts: Counter
    context: ConjugacyContext

    @property
    def colorings(self) -> int:
        return sum(self.counts.values())

    def items(self):
        return sorted(self.counts.items(), key=lambda kv: _sort_key(kv[0]))

    def trivial_count(self) -> int:
        return sum(k for v, k in self.counts.items() if all(self.context.is_trivial(x) for x in v))

    def nontrivial(self):
        return {v: k for v, k in self.counts.items() if not all(self.context.is_trivial(x) for x in v)}

    def format_value(self, value) -> list[str]:
        return [self.context.format(x) for x in value]

    def to_json(self) -> dict:
        return {
            "diagram": self.diagram,
            "biquandle": self.biquandle,
            "mode": self.mode,
            "colorings": self.colorings,
            "multiset": [{"value": self.format_value(v), "count": k} for v, k in self.items()],
        }

    def format(self) -> str:
        lines = [f"colorings: {self.colorings}  (mode: {self.mode})"]
        for v, k in self.items():
            lines.append(f"  {k:>4} x ({', '.join(self.format_value(v))})")
        return "\n".join(lines)

    def __eq__(self, other):
        return isinstance(other, InvariantMultiset) and self.counts == other.counts


def invariant(D: LinkDiagram, B: FiniteBiquandle, P: Presentation, mode: str = "cyclic",
              cocycle: Optional[ConcreteCocycle] = None,
              context: Optional[ConjugacyContext] = None) -> InvariantMultiset:
    ctx = context or ConjugacyContext(P, mode, cocycle)
    counts: Counter = Counter()
    for col in enumerate_colorings(D, B):
        value = tuple(ctx.representative(boltzmann_word(D, col, P, i))
                      for i in range(len(D.components)))
        counts[value] += 1
    return InvariantMultiset(D.name, B.name, ctx.mode, counts, ctx)
