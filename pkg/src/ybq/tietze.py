"""Tietze simplification and conjugacy normal forms.

:func:`tietze_simplify` eliminates generators that some relation isolates,
and rewrites relators that live inside a block of pairwise-commuting
generators by a Hermite basis of their exponent lattice.  Each step is a
Tietze transformation, so the group never changes.

When the end result only has commutators plus relators inside commuting
blocks, and the commuting blocks are cliques, the group is a free product
of finitely generated abelian groups.  :class:`FreeProductStructure` then
gives exact normal forms and conjugacy representatives.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional

from . import words
from .abelian import abelian_invariants, hermite_rows, reduce_vector
from .presentation import Presentation, Relation

log = logging.getLogger(__name__)


def _is_commutator(relator):
    w = words.cyclic_reduce(relator)
    if len(w) != 4:
        return None
    for cand in words.rotations(w) + words.rotations(words.inverse(w)):
        x, y, a, b = cand
        if a == -x and b == -y and abs(x) != abs(y):
            return tuple(sorted((abs(x), abs(y))))
    return None


def _components(gens, edges):
    parent = {g: g for g in gens}

    def find(g):
        while parent[g] != g:
            g = parent[g]
        return g

    for a, b in edges:
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    comps = {}
    for g in sorted(gens):
        comps.setdefault(find(g), []).append(g)
    return list(comps.values())


@dataclass
class FreeProductStructure:
    """Free product of abelian groups, one factor per commuting block."""

    blocks: list          # list of generator lists
    bases: list           # HNF basis per block (component-local vectors)
    _block_of: dict = field(default_factory=dict, repr=False)

    def __post_init__(self):
        self._block_of = {g: i for i, blk in enumerate(self.blocks) for g in blk}

    def _vector(self, block, letters):
        v = [0] * len(self.blocks[block])
        pos = {g: i for i, g in enumerate(self.blocks[block])}
        for x in letters:
            v[pos[abs(x)]] += 1 if x > 0 else -1
        return reduce_vector(v, self.bases[block])

    def normal_form(self, word):
        """Tuple of syllables (block, reduced exponent vector)."""
        sylls = []
        for x in word:
            b = self._block_of[abs(x)]
            if sylls and sylls[-1][0] == b:
                sylls[-1][1].append(x)
            else:
                sylls.append((b, [x]))
        out = []
        for b, letters in sylls:
            v = self._vector(b, letters)
            self._push(out, b, v)
        return tuple(out)

    def _push(self, out, b, v):
        if not any(v):
            return
        if out and out[-1][0] == b:
            prev = out.pop()
            merged = reduce_vector([p + q for p, q in zip(prev[1], v)], self.bases[b])
            self._push(out, b, merged)
        else:
            out.append((b, v))

    def conjugacy_form(self, word):
        sylls = list(self.normal_form(word))
        while len(sylls) > 1 and sylls[0][0] == sylls[-1][0]:
            b, last = sylls.pop()
            first = sylls.pop(0)
            merged = reduce_vector([p + q for p, q in zip(first[1], last)], self.bases[b])
            if any(merged):
                sylls.insert(0, (b, merged))
        if not sylls:
            return ()
        return min(tuple(sylls[i:] + sylls[:i]) for i in range(len(sylls)))

    def to_word(self, form):
        out = []
        for b, v in form:
            for g, e in zip(self.blocks[b], v):
                out.extend([g if e > 0 else -g] * abs(e))
        return tuple(out)


@dataclass
class SimplifiedPresentation:
    """Result of :func:`tietze_simplify`, expressed in the source's generator numbers."""

    source: Presentation
    generators: list
    relations: list
    substitution: dict
    structure: Optional[FreeProductStructure]
    steps: int

    @property
    def rank(self):
        return len(self.generators)

    def relators(self):
        # renumber survivors 1..rank so abelian tools see a dense alphabet
        pos = {g: i + 1 for i, g in enumerate(self.generators)}
        return [words.substitute(r.relator(), {g: (pos[g],) for g in pos}) for r in self.relations]

    def renumbered(self):
        """Relations with the survivors renamed f1..f_rank in order."""
        pos = {g: (i + 1,) for i, g in enumerate(self.generators)}
        return [Relation(words.substitute(r.left, pos), words.substitute(r.right, pos))
                for r in self.relations]

    def image(self, word):
        """Rewrite a word in the source generators over the survivors."""
        return words.substitute(word, self.substitution)

    def abelianization(self):
        return abelian_invariants(self.relators(), self.rank)

    def format(self, labels=None) -> str:
        names = ", ".join(words.format_word((g,), labels) for g in self.generators)
        lines = [f"generators: {self.rank} ({names})" if self.generators else "generators: 0"]
        lines.append(f"relations: {len(self.relations)}")
        for r in self.relations:
            lines.append(f"  {r.format(labels)}")
        eliminated = [g for g in sorted(self.substitution) if g not in self.generators]
        if eliminated:
            lines.append("eliminated:")
            for g in eliminated:
                lines.append(f"  f{g} = {words.format_word(self.substitution[g], labels)}")
        return "\n".join(lines)

    def to_json(self):
        return {
            "generators": [f"f{g}" for g in self.generators],
            "relations": [{"left": words.format_word(r.left), "right": words.format_word(r.right)}
                          for r in self.relations],
            "substitution": {f"f{g}": words.format_word(w) for g, w in sorted(self.substitution.items())},
            "abelianization": {"torsion": list(self.abelianization().torsion),
                               "free_rank": self.abelianization().free_rank},
            "free_product_of_abelian": self.structure is not None,
        }


def _tidy(rel):
    """Cancel common prefixes/suffixes; collapse to ``w = 1`` when shorter."""
    left, right = list(words.reduce(rel.left)), list(words.reduce(rel.right))
    while left and right and left[0] == right[0]:
        left.pop(0)
        right.pop(0)
    while left and right and left[-1] == right[-1]:
        left.pop()
        right.pop()
    rel = Relation(tuple(left), tuple(right))
    r = words.cyclic_reduce(rel.relator())
    if len(r) < len(left) + len(right):
        if all(x < 0 for x in r):
            r = words.inverse(r)
        rel = Relation(r, ())
    elif not (left and right):
        side = left or right
        rel = Relation(words.inverse(side) if all(x < 0 for x in side) else tuple(side), ())
    return rel


def _normalize(relations):
    out, seen = [], set()
    for rel in relations:
        rel = _tidy(rel)
        key = words.cyclic_canonical(rel.relator())
        if not key or key in seen:
            continue
        seen.add(key)
        out.append(rel)
    return out


def _find_elimination(relations):
    # first preference: a relation with one side a lone letter absent from the other side
    for idx, rel in enumerate(relations):
        for side, other in ((rel.left, rel.right), (rel.right, rel.left)):
            if len(side) == 1 and abs(side[0]) not in words.letters(other):
                g = abs(side[0])
                value = other if side[0] > 0 else words.inverse(other)
                return idx, g, value
    # otherwise any generator occurring exactly once in some relator
    for idx, rel in enumerate(relations):
        r = words.cyclic_reduce(rel.relator())
        counts = {}
        for x in r:
            counts[abs(x)] = counts.get(abs(x), 0) + 1
        once = [g for g, c in counts.items() if c == 1]
        if not once:
            continue
        g = max(once)
        i = next(i for i, x in enumerate(r) if abs(x) == g)
        rot = r[i:] + r[:i]
        rest = rot[1:]
        value = words.inverse(rest) if rot[0] > 0 else rest
        return idx, g, words.reduce(value)
    return None


def _commuting_blocks(gens, relations):
    edges = []
    for rel in relations:
        c = _is_commutator(rel.relator())
        if c:
            edges.append(c)
    edge_set = set(edges)
    blocks = _components(gens, edges)
    cliques = []
    for blk in blocks:
        ok = all((a, b) in edge_set for i, a in enumerate(blk) for b in blk[i + 1:])
        cliques.append(ok)
    return blocks, cliques


def _vector_relation(block, v):
    left, right = [], []
    for g, e in zip(block, v):
        if e > 0:
            left.extend([g] * e)
        elif e < 0:
            right.extend([g] * (-e))
    return Relation(tuple(left), tuple(right))


def _abelian_pass(gens, relations):
    """Replace in-block relators by a Hermite basis; return new list or None."""
    blocks, cliques = _commuting_blocks(gens, relations)
    changed = False
    out = [r for r in relations]
    for blk, clique in zip(blocks, cliques):
        if not clique:
            continue
        members = set(blk)
        inside = [r for r in out
                  if not _is_commutator(r.relator()) and words.letters(r.relator()) <= members]
        if not inside:
            continue
        vecs = [words.exponent_sums(r.relator(), blk) for r in inside]
        basis = hermite_rows(vecs, len(blk))
        new = [_vector_relation(blk, row) for row in basis]
        old_keys = {words.cyclic_canonical(r.relator()) for r in inside}
        new_keys = {words.cyclic_canonical(r.relator()) for r in new}
        if old_keys == new_keys:
            continue
        changed = True
        out = [r for r in out if r not in inside] + new
    return out if changed else None


def analyze_structure(gens, relations) -> Optional[FreeProductStructure]:
    """Recognise a free product of abelian groups, or return None."""
    blocks, cliques = _commuting_blocks(gens, relations)
    if not all(cliques):
        return None
    block_of = {g: i for i, blk in enumerate(blocks) for g in blk}
    per_block = [[] for _ in blocks]
    for rel in relations:
        r = rel.relator()
        if _is_commutator(r):
            continue
        involved = {block_of[g] for g in words.letters(r)}
        if len(involved) != 1:
            return None
        b = involved.pop()
        per_block[b].append(words.exponent_sums(r, blocks[b]))
    bases = [hermite_rows(vs, len(blk)) for vs, blk in zip(per_block, blocks)]
    return FreeProductStructure(blocks, bases)


def tietze_simplify(P: Presentation, budget: Optional[int] = None) -> SimplifiedPresentation:
    """Best-effort generator elimination; the group presented is unchanged."""
    if budget is None:
        budget = 3 * P.n * P.n
    gens = list(range(1, P.rank + 1))
    subst = {g: (g,) for g in gens}
    relations = _normalize(P.relations)
    steps = 0
    while steps < budget:
        found = _find_elimination(relations)
        if found is not None:
            idx, g, value = found
            image = {g: value}
            relations = [Relation(words.substitute(r.left, image), words.substitute(r.right, image))
                         for i, r in enumerate(relations) if i != idx]
            relations = _normalize(relations)
            subst = {k: words.substitute(v, image) for k, v in subst.items()}
            gens.remove(g)
            steps += 1
            continue
        replaced = _abelian_pass(gens, relations)
        if replaced is None:
            break
        relations = _normalize(replaced)
        steps += 1
    structure = analyze_structure(gens, relations)
    if structure is None:
        log.debug("presentation of %s is not a free product of abelian groups", P.name or "group")
    return SimplifiedPresentation(P, gens, relations, subst, structure, steps)
