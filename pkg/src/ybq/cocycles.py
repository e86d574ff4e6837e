"""Concrete 2-cocycles with values in small finite groups.

A type-I non-commutative 2-cocycle on a biquandle (X, sigma) with values in
a group G is a map f: X x X -> G with

    f(x,y) f(s2(x,y),z) = f(x,s1(y,z)) f(s2(x,s1(y,z)),s2(y,z))
    f(s1(x,y), s1(s2(x,y),z)) = f(y,z)
    f(x, s(x)) = 1

for all x, y, z.  Every such f factors through the universal group
computed in :mod:`ybq.presentation`; :func:`factor_through` checks this,
and :func:`brute_force_cocycles` enumerates all of them directly from the
equations above so the two sides can be compared.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional, Sequence

from . import words
from .biquandle import FiniteBiquandle, is_morphism
from .presentation import Presentation, Relation


class CocycleError(ValueError):
    pass


class FactorizationError(CocycleError):
    """A cocycle disagrees with a presentation; ``witness`` says where."""

    def __init__(self, message, witness):
        super().__init__(message)
        self.witness = witness


@dataclass(frozen=True)
class FiniteGroup:
    """A finite group as a multiplication table on 0..order-1."""

    table: tuple
    identity: int
    name: str = ""
    labels: tuple = ()

    @property
    def order(self) -> int:
        return len(self.table)

    def mul(self, a, b):
        return self.table[a][b]

    def inv(self, a):
        row = self.table[a]
        return row.index(self.identity)

    def product(self, elems):
        out = self.identity
        for e in elems:
            out = self.table[out][e]
        return out

    def power(self, a, k):
        if k < 0:
            a, k = self.inv(a), -k
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def label(self, a) -> str:
        return self.labels[a] if self.labels else str(a)

    def conjugacy_class(self, a) -> frozenset:
        return frozenset(self.mul(self.mul(self.inv(g), a), g) for g in range(self.order))

    def class_representative(self, a) -> int:
        """Least element of the conjugacy class of ``a``."""
        return min(self.conjugacy_class(a))

    @classmethod
    def cyclic(cls, m):
        table = tuple(tuple((a + b) % m for b in range(m)) for a in range(m))
        return cls(table, 0, f"Z{m}", tuple(str(a) for a in range(m)))

    @classmethod
    def from_permutations(cls, generators: Sequence[Sequence[int]], name=""):
        """Closure of permutations (image tuples, composed left to right)."""
        gens = [tuple(g) for g in generators]
        degree = len(gens[0]) if gens else 1
        e = tuple(range(degree))
        elems = [e]
        index = {e: 0}
        frontier = [e]
        while frontier:
            nxt = []
            for p in frontier:
                for g in gens:
                    q = tuple(g[p[i]] for i in range(degree))
                    if q not in index:
                        index[q] = len(elems)
                        elems.append(q)
                        nxt.append(q)
            frontier = nxt
        # sort so element numbering does not depend on generator order
        elems.sort()
        index = {p: k for k, p in enumerate(elems)}
        table = tuple(tuple(index[tuple(b[a[i]] for i in range(degree))] for b in elems) for a in elems)
        labels = tuple(str([v + 1 for v in p]) for p in elems)
        return cls(table, index[e], name, labels)

    @classmethod
    def symmetric(cls, n):
        if n < 2:
            return cls(((0,),), 0, f"S{n}", ("()",))
        gens = [tuple([1, 0] + list(range(2, n))), tuple(list(range(1, n)) + [0])]
        return cls.from_permutations(gens, f"S{n}")


@dataclass(frozen=True)
class ConcreteCocycle:
    """Values ``values[x][y]`` in ``group`` for the pairs of ``biquandle``."""

    biquandle: FiniteBiquandle
    group: FiniteGroup
    values: tuple

    def __post_init__(self):
        n = self.biquandle.n
        vals = tuple(tuple(int(v) for v in row) for row in self.values)
        if len(vals) != n or any(len(row) != n for row in vals):
            raise CocycleError("value table must be n x n")
        if any(not 0 <= v < self.group.order for row in vals for v in row):
            raise CocycleError("value outside the target group")
        object.__setattr__(self, "values", vals)

    def __call__(self, x, y):
        return self.values[x][y]

    @classmethod
    def trivial(cls, B, G):
        return cls(B, G, [[G.identity] * B.n for _ in range(B.n)])

    @classmethod
    def from_assignment(cls, P: Presentation, B: FiniteBiquandle, G: FiniteGroup, assignment):
        """Cocycle f = phi o pi for a generator assignment ``{k: element}``."""
        vals = [[G.identity] * B.n for _ in range(B.n)]
        for x, y in B.pairs():
            k = P.letter(x, y)
            if k:
                vals[x][y] = assignment[k]
        return cls(B, G, vals)


def find_cocycle_violation(f: ConcreteCocycle):
    """First failing equation as (kind, witness), or None when f is a type-I cocycle."""
    B, G = f.biquandle, f.group
    s1, s2, s = B.sigma1, B.sigma2, B.s
    for x in range(B.n):
        if f(x, s[x]) != G.identity:
            return ("type I", (x,))
    for x, y, z in itertools.product(range(B.n), repeat=3):
        if f(s1[x][y], s1[s2[x][y]][z]) != f(y, z):
            return ("second", (x, y, z))
        a = s1[y][z]
        lhs = G.mul(f(x, y), f(s2[x][y], z))
        rhs = G.mul(f(x, a), f(s2[x][a], s2[y][z]))
        if lhs != rhs:
            return ("first", (x, y, z))
    return None


def verify_cocycle(f: ConcreteCocycle) -> bool:
    return find_cocycle_violation(f) is None


def evaluate(word, assignment, G: FiniteGroup):
    out = G.identity
    for x in word:
        g = assignment[abs(x)]
        out = G.mul(out, g if x > 0 else G.inv(g))
    return out


def factor_through(P: Presentation, f: ConcreteCocycle) -> dict:
    """Generator assignment {k: f(class k)} realising f on P.

    Raises :class:`FactorizationError` if f is not constant on a class, is
    nontrivial on the trivial class, or violates a relation.
    """
    G = f.group
    for pair in P.trivial:
        if f(*pair) != G.identity:
            raise FactorizationError(f"f is nontrivial on trivial pair {pair}", pair)
    assignment = {}
    for k, cls in enumerate(P.generators, start=1):
        vals = {f(*pair) for pair in cls}
        if len(vals) != 1:
            raise FactorizationError(f"f is not constant on the class of f{k}", cls)
        assignment[k] = vals.pop()
    for rel in P.relations:
        if evaluate(rel.left, assignment, G) != evaluate(rel.right, assignment, G):
            raise FactorizationError(f"relation {rel.format()} fails", rel)
    return assignment


def factors_through(P: Presentation, f: ConcreteCocycle) -> bool:
    try:
        factor_through(P, f)
    except FactorizationError:
        return False
    return True


def twist(f: ConcreteCocycle, gamma: Sequence[int]) -> ConcreteCocycle:
    """Cohomologous cocycle gamma(x) f(x,y) gamma(s2(x,y))^-1.

    ``gamma`` must be constant on the orbits of the diagonal map.
    """
    B, G = f.biquandle, f.group
    s = B.s
    for x in range(B.n):
        if gamma[x] != gamma[s[x]]:
            raise CocycleError("gamma must be constant on s-orbits")
    vals = [[G.mul(G.mul(gamma[x], f(x, y)), G.inv(gamma[B.sigma2[x][y]])) for y in range(B.n)]
            for x in range(B.n)]
    return ConcreteCocycle(B, G, vals)


def brute_force_cocycles(B: FiniteBiquandle, G: FiniteGroup, limit: Optional[int] = None):
    """All type-I cocycles X x X -> G, by backtracking with propagation.

    Works straight from the defining equations, without the saturation
    engine, so it can serve as an independent check of it.
    """
    n = B.n
    s1, s2, s = B.sigma1, B.sigma2, B.s
    npairs = n * n

    def idx(x, y):
        return x * n + y

    eqs = []  # ("eq", a, b) meaning v[a] = v[b]; ("prod", a, b, c, d) meaning v[a]v[b] = v[c]v[d]
    for x, y, z in itertools.product(range(n), repeat=3):
        eqs.append(("eq", idx(s1[x][y], s1[s2[x][y]][z]), idx(y, z)))
        a = s1[y][z]
        eqs.append(("prod", idx(x, y), idx(s2[x][y], z), idx(x, a), idx(s2[x][a], s2[y][z])))
    watch = [[] for _ in range(npairs)]
    for k, e in enumerate(eqs):
        for p in set(e[1:]):
            watch[p].append(k)

    inv = [G.inv(g) for g in range(G.order)]
    mul = G.table

    def solve(e, vals):
        """Return (ok, forced assignments) for equation e under vals."""
        if e[0] == "eq":
            a, b = e[1], e[2]
            va, vb = vals[a], vals[b]
            if va is not None and vb is not None:
                return va == vb, []
            if va is not None:
                return True, [(b, va)]
            if vb is not None:
                return True, [(a, vb)]
            return True, []
        _, a, b, c, d = e
        va, vb, vc, vd = vals[a], vals[b], vals[c], vals[d]
        unknown = [p for p, v in ((a, va), (b, vb), (c, vc), (d, vd)) if v is None]
        if not unknown:
            return mul[va][vb] == mul[vc][vd], []
        if len(set(unknown)) > 1 or len(unknown) > 1:
            return True, []
        u = unknown[0]
        if u == a:
            val = mul[mul[vc][vd]][inv[vb]]
        elif u == b:
            val = mul[inv[va]][mul[vc][vd]]
        elif u == c:
            val = mul[mul[va][vb]][inv[vd]]
        else:
            val = mul[inv[vc]][mul[va][vb]]
        return True, [(u, val)]

    def assign(vals, p, v, trail):
        queue = [(p, v)]
        while queue:
            p, v = queue.pop()
            if vals[p] is not None:
                if vals[p] != v:
                    return False
                continue
            vals[p] = v
            trail.append(p)
            for k in watch[p]:
                ok, forced = solve(eqs[k], vals)
                if not ok:
                    return False
                queue.extend(forced)
        return True

    vals = [None] * npairs
    trail: list = []
    for x in range(n):
        if not assign(vals, idx(x, s[x]), G.identity, trail):
            return []
    results = []

    def search():
        if limit is not None and len(results) >= limit:
            return
        try:
            p = vals.index(None)
        except ValueError:
            results.append(tuple(tuple(vals[idx(x, y)] for y in range(n)) for x in range(n)))
            return
        for g in range(G.order):
            mark = len(trail)
            if assign(vals, p, g, trail):
                search()
            while len(trail) > mark:
                vals[trail.pop()] = None

    search()
    return [ConcreteCocycle(B, G, r) for r in results]


@dataclass
class InducedMorphism:
    """Generator map U(B) -> U(C) induced by a solution morphism."""

    class_map: dict        # generator k of the source -> generator of the target (0 = trivial)
    relation_images: list  # each source relation rewritten in target letters
    unresolved: list       # images not visibly trivial or among the target's relations


def induced_morphism(phi: Sequence[int], B: FiniteBiquandle, C: FiniteBiquandle,
                     P: Presentation, Q: Presentation) -> InducedMorphism:
    """Map [x,x'] -> [phi x, phi x'] from P = U(B) to Q = U(C).

    Raises :class:`FactorizationError` if phi is not a morphism of
    solutions, or if it does not respect P's classes.
    """
    witness = is_morphism(phi, B, C)
    if witness is not None:
        raise FactorizationError(f"phi is not a morphism at {witness}", witness)
    class_map = {}
    for k, cls in enumerate(P.generators, start=1):
        images = {Q.letter(phi[x], phi[y]) for x, y in cls}
        if len(images) != 1:
            raise FactorizationError(f"class of f{k} is split by phi", cls)
        class_map[k] = images.pop()
    for pair in P.trivial:
        if Q.letter(phi[pair[0]], phi[pair[1]]):
            raise FactorizationError(f"trivial pair {pair} maps to a generator", pair)
    images = {k: ((v,) if v else ()) for k, v in class_map.items()}
    target_keys = {words.cyclic_canonical(r.relator()) for r in Q.relations}
    rel_images, unresolved = [], []
    for rel in P.relations:
        img = Relation(words.substitute(rel.left, images), words.substitute(rel.right, images))
        rel_images.append(img)
        key = words.cyclic_canonical(img.relator())
        if key and key not in target_keys:
            unresolved.append(img)
    return InducedMorphism(class_map, rel_images, unresolved)
