"""Presentations of the universal 2-cocycle group and its reduced quotients.

The group is generated by symbols (x, y) in X x X subject to

    (x,y)(s2(x,y),z) = (x,s1(y,z))(s2(x,s1(y,z)),s2(y,z))     [unc1]
    (s1(x,y), s1(s2(x,y),z)) = (y,z)                         [unc2]
    (x, s(x)) = 1                                             [unc3]

:func:`compute_unc` runs the saturation loop: identifications from unc2
and unc3 seed a union-find over (X x X) plus an extra identity symbol,
every unc1 equation is rewritten through class representatives, short
equations that force two classes together are turned into merges, and
the loop repeats until nothing changes.  Whatever unc1 equations survive
become the relations of the presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from . import words
from .biquandle import FiniteBiquandle, verify, NotABiquandleError


class _Bottom:
    """The adjoined identity symbol; sorts before every pair."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "1"

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()


class GeneratorPartition:
    """Union-find over (X x X) plus BOTTOM, with least-element roots.

    Index 0 is BOTTOM and pair (x, y) is index 1 + x*n + y, so the root of
    each class is its least member in row-major order with BOTTOM least.
    """

    def __init__(self, n: int):
        self.n = n
        self.parent = list(range(n * n + 1))

    def copy(self) -> "GeneratorPartition":
        other = GeneratorPartition(self.n)
        other.parent = list(self.parent)
        return other

    def index(self, item) -> int:
        if item is BOTTOM:
            return 0
        x, y = item
        return 1 + x * self.n + y

    def item(self, index: int):
        if index == 0:
            return BOTTOM
        return divmod(index - 1, self.n)

    def _find(self, i: int) -> int:
        root = i
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[i] != root:
            self.parent[i], i = root, self.parent[i]
        return root

    def _union(self, i: int, j: int) -> bool:
        ri, rj = self._find(i), self._find(j)
        if ri == rj:
            return False
        lo, hi = (ri, rj) if ri < rj else (rj, ri)
        self.parent[hi] = lo
        return True

    def find(self, item):
        return self.item(self._find(self.index(item)))

    def union(self, a, b) -> bool:
        return self._union(self.index(a), self.index(b))

    def classes(self) -> list[list]:
        groups: dict[int, list] = {}
        for i in range(len(self.parent)):
            groups.setdefault(self._find(i), []).append(self.item(i))
        return [groups[r] for r in sorted(groups)]

    def key(self) -> tuple[int, ...]:
        return tuple(self._find(i) for i in range(len(self.parent)))

    def __eq__(self, other):
        return isinstance(other, GeneratorPartition) and self.key() == other.key()


@dataclass(frozen=True)
class Relation:
    """``left = right`` between words in generator numbers (1-based)."""

    left: words.Word
    right: words.Word

    def relator(self) -> words.Word:
        return words.multiply(self.left, words.inverse(self.right))

    def key(self) -> words.Word:
        return words.canonical(self.relator())

    def is_trivial(self) -> bool:
        return not self.relator()

    def format(self, labels=None) -> str:
        return f"{words.format_word(self.left, labels)} = {words.format_word(self.right, labels)}"


@dataclass
class RawRelations:
    unc3: list  # pairs (x, s(x)) identified with BOTTOM
    unc2: list  # pairs of pairs to identify
    unc1: list  # ((p1, p2), (p3, p4)) meaning p1 p2 = p3 p4


def raw_relations(B: FiniteBiquandle) -> RawRelations:
    n = B.n
    s = B.s
    s1, s2 = B.sigma1, B.sigma2
    unc3 = [(x, s[x]) for x in range(n)]
    unc2 = []
    unc1 = []
    for x in range(n):
        for y in range(n):
            for z in range(n):
                unc2.append(((y, z), (s1[x][y], s1[s2[x][y]][z])))
                a = s1[y][z]
                unc1.append((((x, y), (s2[x][y], z)),
                             ((x, a), (s2[x][a], s2[y][z]))))
    return RawRelations(unc3, unc2, unc1)


def saturate(partition: GeneratorPartition, pairs: Iterable) -> GeneratorPartition:
    """Smallest equivalence containing ``partition`` and the listed identifications."""
    result = partition.copy()
    for a, b in pairs:
        result.union(a, b)
    return result


@dataclass
class Presentation:
    """A finite presentation read off a saturated partition.

    ``generators[k-1]`` is the class of f_k (least pair first); ``trivial``
    lists the pairs identified with 1.  Pairs are 0-based.
    """

    n: int
    generators: list
    trivial: list
    relations: list
    name: str = ""
    s0: tuple = ()
    _letters: dict = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        table = {}
        for k, cls in enumerate(self.generators, start=1):
            for pair in cls:
                table[tuple(pair)] = k
        for pair in self.trivial:
            table[tuple(pair)] = 0
        self._letters = table

    @property
    def rank(self) -> int:
        return len(self.generators)

    def letter(self, x, y) -> int:
        """Generator number of the class of (x, y); 0 if the class is trivial."""
        return self._letters[(x, y)]

    def labels(self):
        return {k: f"f{k}" for k in range(1, self.rank + 1)}

    def relators(self) -> list[words.Word]:
        return [r.relator() for r in self.relations]

    def is_trivial(self) -> bool:
        return self.rank == 0

    def format(self) -> str:
        lines = []
        if self.name:
            lines.append(f"# {self.name}")
        if self.s0:
            lines.append("S0: {" + ", ".join(_pair_text(p) for p in self.s0) + "}")
        lines.append(f"generators: {self.rank}")
        for k, cls in enumerate(self.generators, start=1):
            lines.append(f"  f{k} = " + "=".join(_pair_text(p) for p in cls))
        lines.append("trivial:")
        lines.append("  1 = " + "=".join(["[ ]"] + [_pair_text(p) for p in self.trivial]))
        lines.append(f"relations: {len(self.relations)}")
        for rel in self.relations:
            lines.append(f"  {rel.format()}")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "n": self.n,
            "s0": [[x + 1, y + 1] for x, y in self.s0],
            "generators": [{"label": f"f{k}", "class": [[x + 1, y + 1] for x, y in cls]}
                           for k, cls in enumerate(self.generators, start=1)],
            "trivial": [[x + 1, y + 1] for x, y in self.trivial],
            "relations": [{"left": words.format_word(r.left), "right": words.format_word(r.right)}
                          for r in self.relations],
        }

    @classmethod
    def from_json(cls, data: dict) -> "Presentation":
        gens = [[(x - 1, y - 1) for x, y in g["class"]] for g in data["generators"]]
        trivial = [(x - 1, y - 1) for x, y in data["trivial"]]
        rels = [Relation(words.parse_word(r["left"]), words.parse_word(r["right"]))
                for r in data["relations"]]
        s0 = tuple((x - 1, y - 1) for x, y in data.get("s0", []))
        return cls(int(data["n"]), gens, trivial, rels, data.get("name", ""), s0)


def _pair_text(pair) -> str:
    x, y = pair
    return f"[{x + 1},{y + 1}]"


def _rewrite(part: GeneratorPartition, p, q):
    side = []
    for item in (p, q):
        r = part._find(part.index(item))
        if r:
            side.append(r)
    return tuple(side)


def _forced_merges(left, right):
    """Identifications implied by a length<=2 = length<=2 positive equation.

    Returns a list of index pairs to merge (0 is the identity), or None if
    the equation must be kept as a relation.
    """
    if left == right:
        return []
    ll, lr = len(left), len(right)
    if ll == 2 and lr == 2:
        if left[0] == right[0]:
            return [(left[1], right[1])]
        if left[1] == right[1]:
            return [(left[0], right[0])]
        return None
    if ll == 2 and lr == 1:
        if left[0] == right[0]:
            return [(left[1], 0)]
        if left[1] == right[0]:
            return [(left[0], 0)]
        return None
    if ll == 1 and lr == 2:
        return _forced_merges(right, left)
    if ll == 1 and lr == 1:
        return [(left[0], right[0])]
    if ll + lr == 1:
        return [((left or right)[0], 0)]
    return None  # uv = 1 stays a relation


def _saturation_loop(B: FiniteBiquandle, seed_trivial, max_rounds=None):
    report = verify(B)
    if not report.is_biquandle:
        raise NotABiquandleError(report.summary())
    raw = raw_relations(B)
    part = GeneratorPartition(B.n)
    for pair in list(raw.unc3) + list(seed_trivial):
        part.union(BOTTOM, tuple(pair))
    part = saturate(part, raw.unc2)
    rounds = 0
    while True:
        rounds += 1
        kept = []
        merged = False
        for (p1, p2), (p3, p4) in raw.unc1:
            left = _rewrite(part, p1, p2)
            right = _rewrite(part, p3, p4)
            forced = _forced_merges(left, right)
            if forced is None:
                kept.append((left, right))
                continue
            for i, j in forced:
                if part._union(i, j):
                    merged = True
        if not merged:
            return part, kept, rounds
        if max_rounds is not None and rounds >= max_rounds:
            raise RuntimeError("saturation did not stabilise")


def _build(B, part, kept, s0=()) -> Presentation:
    classes = part.classes()
    trivial = [p for p in classes[0] if p is not BOTTOM]
    gens = classes[1:]
    number = {part.index(cls[0]): k for k, cls in enumerate(gens, start=1)}
    seen = set()
    relations = []
    for left, right in kept:
        rel = Relation(tuple(number[i] for i in left), tuple(number[i] for i in right))
        key = rel.key()
        if key in seen:
            continue
        seen.add(key)
        relations.append(rel)
    return Presentation(B.n, [list(c) for c in gens], trivial, relations, B.name, tuple(s0))


def compute_unc(B: FiniteBiquandle) -> Presentation:
    """Presentation of the universal non-commutative 2-cocycle group."""
    part, kept, _ = _saturation_loop(B, ())
    return _build(B, part, kept)


def compute_unc_reduced(B: FiniteBiquandle, s0: Iterable) -> Presentation:
    """Quotient by the classes of the pairs in ``s0`` (0-based)."""
    s0 = tuple(sorted({tuple(p) for p in s0}))
    for x, y in s0:
        if not (0 <= x < B.n and 0 <= y < B.n):
            raise ValueError(f"pair {(x + 1, y + 1)} outside X x X")
    part, kept, _ = _saturation_loop(B, s0)
    return _build(B, part, kept, s0)


def saturation_partition(B: FiniteBiquandle, s0=()) -> GeneratorPartition:
    """The stable partition reached by the loop (exposed for fixpoint checks)."""
    return _saturation_loop(B, s0)[0]


def rerun_is_stable(B: FiniteBiquandle, P: Presentation) -> bool:
    """Feed the finished partition back through one more loop pass."""
    part = GeneratorPartition(B.n)
    for k, cls in enumerate(P.generators):
        for pair in cls[1:]:
            part.union(cls[0], pair)
    for pair in P.trivial:
        part.union(BOTTOM, pair)
    raw = raw_relations(B)
    before = part.key()
    for (p1, p2), (p3, p4) in raw.unc1:
        forced = _forced_merges(_rewrite(part, p1, p2), _rewrite(part, p3, p4))
        for i, j in forced or ():
            part._union(i, j)
    for a, b in raw.unc2:
        part.union(a, b)
    return part.key() == before


# ---------------------------------------------------------------------------
# choosing S0

def s_classes(B: FiniteBiquandle) -> list[int]:
    """Least element of each x's class under x ~ s(x)."""
    s = B.s
    label = list(range(B.n))
    for x in range(B.n):
        orbit = [x]
        y = s[x]
        while y != x:
            orbit.append(y)
            y = s[y]
        label[x] = min(orbit)
    return label


def gamma_candidates(B: FiniteBiquandle) -> list[tuple[int, tuple[int, int], int]]:
    """Tuples (class(x), (x,y), class(s2(x,y))) joining new pairs of s-classes."""
    cls = s_classes(B)
    used = set()
    out = []
    for x in range(B.n):
        for y in range(B.n):
            a, b = cls[x], cls[B.sigma2[x][y]]
            if a == b:
                continue
            key = frozenset((a, b))
            if key in used:
                continue
            used.add(key)
            out.append((a, (x, y), b))
    return out


def suggest_s0(B: FiniteBiquandle) -> tuple:
    """Pairs labelling a spanning forest of the candidate graph on s-classes.

    Greedy in emission order.  For each chosen edge (x,y) one can pick
    gamma on the far class so that gamma(x)(x,y)gamma(s2(x,y))^-1 = 1.
    """
    parent = {}

    def find(c):
        while parent.get(c, c) != c:
            c = parent[c]
        return c

    chosen = []
    for a, pair, b in gamma_candidates(B):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
            chosen.append(pair)
    return tuple(chosen)
