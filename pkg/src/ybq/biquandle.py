"""Finite set-theoretic solutions of the Yang-Baxter equation.

A solution on X = {0, ..., n-1} is stored as two n x n lookup tables,
``sigma1`` and ``sigma2``, with ``sigma(x, y) = (sigma1[x][y], sigma2[x][y])``.
Everything here works with 0-based elements; I/O layers add 1 to match the
GAP-style labels used in printed tables.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Optional, Sequence

Table = tuple[tuple[int, ...], ...]


class BiquandleError(ValueError):
    pass


class MalformedTableError(BiquandleError):
    pass


class NotABiquandleError(BiquandleError):
    pass


class NotAQuandleError(BiquandleError):
    def __init__(self, axiom, witness):
        super().__init__(f"not a quandle: {axiom} fails at {witness}")
        self.axiom = axiom
        self.witness = witness


class NotAGroupError(BiquandleError):
    pass


def _freeze(table) -> Table:
    return tuple(tuple(int(v) for v in row) for row in table)


@dataclass(frozen=True)
class FiniteBiquandle:
    """A finite solution (X, sigma) given by its two component tables.

    Construction does not validate the axioms; use :func:`verify` or
    :meth:`check` for that.
    """

    n: int
    sigma1: Table
    sigma2: Table
    name: str = field(default="", compare=False)

    def __post_init__(self):
        object.__setattr__(self, "sigma1", _freeze(self.sigma1))
        object.__setattr__(self, "sigma2", _freeze(self.sigma2))

    @classmethod
    def from_function(cls, n, func, name=""):
        s1 = [[0] * n for _ in range(n)]
        s2 = [[0] * n for _ in range(n)]
        for x in range(n):
            for y in range(n):
                s1[x][y], s2[x][y] = func(x, y)
        return cls(n, s1, s2, name)

    def __call__(self, x, y):
        return self.sigma1[x][y], self.sigma2[x][y]

    def __repr__(self):
        label = f" {self.name!r}" if self.name else ""
        return f"<FiniteBiquandle{label} n={self.n}>"

    @property
    def elements(self):
        return range(self.n)

    def pairs(self):
        return itertools.product(range(self.n), repeat=2)

    def check(self) -> "FiniteBiquandle":
        report = verify(self)
        if not report.is_biquandle:
            raise NotABiquandleError(report.summary())
        return self

    @cached_property
    def _inverse(self):
        inv1 = [[-1] * self.n for _ in range(self.n)]
        inv2 = [[-1] * self.n for _ in range(self.n)]
        for x, y in self.pairs():
            z, t = self(x, y)
            inv1[z][t], inv2[z][t] = x, y
        return inv1, inv2

    def inverse(self, z, t):
        """sigma^{-1}(z, t)."""
        inv1, inv2 = self._inverse
        return inv1[z][t], inv2[z][t]

    @cached_property
    def s(self) -> tuple[int, ...]:
        return diagonal_map(self)

    def as_permutation(self) -> tuple[int, ...]:
        """sigma as a permutation of pair indices x*n + y."""
        n = self.n
        return tuple(self.sigma1[x][y] * n + self.sigma2[x][y] for x, y in self.pairs())

    def order(self) -> int:
        """Order of sigma as a permutation of X x X."""
        perm = self.as_permutation()
        seen = [False] * len(perm)
        result = 1
        for start in range(len(perm)):
            if seen[start]:
                continue
            length, k = 0, start
            while not seen[k]:
                seen[k] = True
                k = perm[k]
                length += 1
            result = result * length // gcd(result, length)
        return result

    def diagonal_fixed_points(self) -> int:
        """Number of x with sigma(x, x) = (x, x)."""
        return sum(1 for x in self.elements if self(x, x) == (x, x))

    def relabel(self, phi: Sequence[int], name=None) -> "FiniteBiquandle":
        """The solution transported along the bijection phi: X -> X."""
        inv = [0] * self.n
        for x, px in enumerate(phi):
            inv[px] = x

        def func(a, b):
            z, t = self(inv[a], inv[b])
            return phi[z], phi[t]

        return FiniteBiquandle.from_function(self.n, func, self.name if name is None else name)

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "sigma1": [[v + 1 for v in row] for row in self.sigma1],
            "sigma2": [[v + 1 for v in row] for row in self.sigma2],
            "name": self.name,
        }

    @classmethod
    def from_json(cls, data: dict) -> "FiniteBiquandle":
        n = int(data["n"])
        s1 = [[v - 1 for v in row] for row in data["sigma1"]]
        s2 = [[v - 1 for v in row] for row in data["sigma2"]]
        _check_shape(n, s1, s2)
        return cls(n, s1, s2, data.get("name", ""))


def _check_shape(n, s1, s2):
    if n < 1:
        raise MalformedTableError(f"order must be positive, got {n}")
    for label, table in (("sigma1", s1), ("sigma2", s2)):
        if len(table) != n or any(len(row) != n for row in table):
            raise MalformedTableError(f"{label} is not a {n}x{n} table")
        for x, row in enumerate(table):
            for y, v in enumerate(row):
                if not isinstance(v, int) or not 0 <= v < n:
                    raise MalformedTableError(
                        f"{label}[{x + 1}][{y + 1}] = {v + 1 if isinstance(v, int) else v!r} out of range 1..{n}")


# ---------------------------------------------------------------------------
# verification

AXIOMS = ("bijective", "yang_baxter", "left_invertible", "right_invertible", "biquandle")


@dataclass
class VerificationReport:
    """Per-axiom outcome of :func:`verify`.

    ``failures`` maps each violated axiom to one witnessing tuple (0-based).
    An empty ``failures`` dict means every axiom holds.
    """

    n: int
    failures: dict = field(default_factory=dict)

    @property
    def is_solution(self):
        return not ({"bijective", "yang_baxter"} & self.failures.keys())

    @property
    def is_birack(self):
        return self.is_solution and not (
            {"left_invertible", "right_invertible"} & self.failures.keys())

    @property
    def is_biquandle(self):
        return not self.failures

    @property
    def classification(self):
        if self.is_biquandle:
            return "biquandle"
        if self.is_birack:
            return "birack"
        if self.is_solution:
            return "solution"
        return "invalid"

    def summary(self):
        if not self.failures:
            return "biquandle: all axioms hold"
        parts = [f"{axiom} fails at {_one_based(w)}" for axiom, w in self.failures.items()]
        return f"{self.classification}: " + "; ".join(parts)

    def to_json(self):
        return {
            "classification": self.classification,
            "axioms": {a: a not in self.failures for a in AXIOMS},
            "witnesses": {a: _one_based(w) for a, w in self.failures.items()},
        }


def _one_based(witness):
    if isinstance(witness, tuple):
        return tuple(_one_based(w) for w in witness)
    return witness + 1


def _ybe_sides(B, x, y, z):
    # (Id x s)(s x Id)(Id x s) versus (s x Id)(Id x s)(s x Id), rightmost first
    a, b = B(y, z)
    c, d = B(x, a)
    e, f = B(d, b)
    left = (c, e, f)
    a, b = B(x, y)
    c, d = B(b, z)
    e, f = B(a, c)
    right = (e, f, d)
    return left, right


def verify(tables) -> VerificationReport:
    """Check every solution/birack/biquandle axiom exhaustively.

    Accepts a :class:`FiniteBiquandle` or a ``(sigma1, sigma2)`` pair of
    0-based tables. Out-of-range entries raise :class:`MalformedTableError`
    rather than being reported as axiom failures.
    """
    if isinstance(tables, FiniteBiquandle):
        B = tables
        _check_shape(B.n, B.sigma1, B.sigma2)
    else:
        s1, s2 = tables
        n = len(s1)
        _check_shape(n, s1, s2)
        B = FiniteBiquandle(n, s1, s2)
    n = B.n
    report = VerificationReport(n)
    fail = report.failures

    seen = {}
    for x, y in B.pairs():
        image = B(x, y)
        if image in seen:
            fail["bijective"] = (seen[image], (x, y))
            break
        seen[image] = (x, y)

    for x, y, z in itertools.product(range(n), repeat=3):
        left, right = _ybe_sides(B, x, y, z)
        if left != right:
            fail["yang_baxter"] = (x, y, z)
            break

    for x in range(n):
        hit = {}
        for y in range(n):
            z = B.sigma1[x][y]
            if z in hit:
                fail["left_invertible"] = (x, hit[z], y)
                break
            hit[z] = y
        if "left_invertible" in fail:
            break

    for y in range(n):
        hit = {}
        for x in range(n):
            t = B.sigma2[x][y]
            if t in hit:
                fail["right_invertible"] = (hit[t], x, y)
                break
            hit[t] = x
        if "right_invertible" in fail:
            break

    fixed = [[y for y in range(n) if B(x, y) == (x, y)] for x in range(n)]
    for x, ys in enumerate(fixed):
        if len(ys) != 1:
            # witness: the element and how many partners it fixes with
            fail["biquandle"] = (x, len(ys))
            break
    else:
        images = [ys[0] for ys in fixed]
        if len(set(images)) != n:
            dup = next(y for y in images if images.count(y) > 1)
            fail["biquandle"] = (images.index(dup), dup)
    return report


def diagonal_map(B: FiniteBiquandle) -> tuple[int, ...]:
    """The bijection s with {(x,y): sigma(x,y)=(x,y)} = {(x, s(x))}."""
    s = []
    for x in B.elements:
        ys = [y for y in B.elements if B(x, y) == (x, y)]
        if len(ys) != 1:
            raise NotABiquandleError(
                f"element {x + 1} has {len(ys)} fixed partners; no diagonal map")
        s.append(ys[0])
    if len(set(s)) != B.n:
        raise NotABiquandleError("fixed-point set is not the graph of a bijection")
    return tuple(s)


# ---------------------------------------------------------------------------
# constructions

def inverse_solution(B: FiniteBiquandle, name=None) -> FiniteBiquandle:
    if name is None:
        name = B.name[:-1] if B.name.endswith("*") else (B.name + "*" if B.name else "")
    return FiniteBiquandle.from_function(B.n, B.inverse, name)


def flip(n, name=None) -> FiniteBiquandle:
    return FiniteBiquandle.from_function(n, lambda x, y: (y, x), name or f"flip{n}")


def _check_quandle(op):
    n = len(op)
    for x in range(n):
        column = {op[y][x] for y in range(n)}
        if len(column) != n:
            raise NotAQuandleError("right translation bijective", (x,))
    for x in range(n):
        if op[x][x] != x:
            raise NotAQuandleError("idempotent", (x,))
    for x, y, z in itertools.product(range(n), repeat=3):
        if op[op[x][y]][z] != op[op[x][z]][op[y][z]]:
            raise NotAQuandleError("self-distributive", (x, y, z))


def from_quandle(op, mode="direct", name="") -> FiniteBiquandle:
    """Biquandle induced by a quandle table ``op[x][y] = x <| y``.

    ``direct`` gives sigma(x,y) = (y, x<|y); ``inverse`` gives its inverse
    sigma(x,y) = (y <|^{-1} x, x).
    """
    op = _freeze(op)
    n = len(op)
    if any(len(row) != n or any(not 0 <= v < n for v in row) for row in op):
        raise MalformedTableError("quandle table is not a square table on 0..n-1")
    _check_quandle(op)
    if mode == "direct":
        return FiniteBiquandle.from_function(n, lambda x, y: (y, op[x][y]), name)
    if mode == "inverse":
        # back[y][x] = w with w <| x = y
        back = [[0] * n for _ in range(n)]
        for w in range(n):
            for x in range(n):
                back[op[w][x]][x] = w
        return FiniteBiquandle.from_function(n, lambda x, y: (back[y][x], x), name)
    raise ValueError(f"mode must be 'direct' or 'inverse', not {mode!r}")


def from_bijection(mu: Sequence[int], name="") -> FiniteBiquandle:
    """sigma(x, y) = (mu(y), mu^{-1}(x)); always involutive."""
    n = len(mu)
    if sorted(mu) != list(range(n)):
        raise BiquandleError(f"{list(mu)} is not a bijection of 0..{n - 1}")
    inv = [0] * n
    for x, m in enumerate(mu):
        inv[m] = x
    return FiniteBiquandle.from_function(n, lambda x, y: (mu[y], inv[x]), name)


def _check_group(mul):
    n = len(mul)
    if any(len(row) != n or any(not 0 <= v < n for v in row) for row in mul):
        raise NotAGroupError("multiplication table is not square on 0..n-1")
    ids = [e for e in range(n) if all(mul[e][x] == x == mul[x][e] for x in range(n))]
    if not ids:
        raise NotAGroupError("no identity element")
    e = ids[0]
    inv = []
    for x in range(n):
        cands = [y for y in range(n) if mul[x][y] == e == mul[y][x]]
        if not cands:
            raise NotAGroupError(f"element {x} has no inverse")
        inv.append(cands[0])
    for x, y, z in itertools.product(range(n), repeat=3):
        if mul[mul[x][y]][z] != mul[x][mul[y][z]]:
            raise NotAGroupError(f"not associative at {(x, y, z)}")
    return inv


def cyclic_group_table(m):
    return [[(a + b) % m for b in range(m)] for a in range(m)]


def wada(mul, name="") -> FiniteBiquandle:
    """Wada's biquandle sigma(x,y) = (x y^-1 x^-1, x y^2) on a group table."""
    mul = _freeze(mul)
    inv = _check_group(mul)

    def func(x, y):
        first = mul[mul[x][inv[y]]][inv[x]]
        second = mul[x][mul[y][y]]
        return first, second

    return FiniteBiquandle.from_function(len(mul), func, name)


def alexander(m, s, t, name=None) -> FiniteBiquandle:
    """Alexander switch sigma(x,y) = (s y, t x + (1 - s t) y) over Z_m."""
    for label, u in (("s", s), ("t", t)):
        if gcd(u % m, m) != 1 and m > 1:
            raise BiquandleError(f"{label}={u} is not a unit mod {m}")
    st = (s * t) % m
    return FiniteBiquandle.from_function(
        m, lambda x, y: ((s * y) % m, (t * x + (1 - st) * y) % m),
        name or f"alex({m},{s},{t})")


def dihedral_quandle(n):
    return [[(2 * y - x) % n for y in range(n)] for x in range(n)]


def conjugation_quandle(perms):
    """Quandle x <| y = y^-1 x y on a conjugation-closed list of permutations.

    Permutations are image tuples p[i] acting on the right, as in GAP, so
    x <| y sends i^y to (i^x)^y.
    """
    perms = [tuple(p) for p in perms]
    index = {p: k for k, p in enumerate(perms)}
    table = []
    for x in perms:
        row = []
        for y in perms:
            conj = [0] * len(x)
            for i in range(len(x)):
                conj[y[i]] = y[x[i]]
            row.append(index[tuple(conj)])
        table.append(row)
    return table


# ---------------------------------------------------------------------------
# isomorphism and enumeration

def _element_signature(B, x):
    s = B.s if verify(B).is_biquandle else None
    orbit, z = 1, x
    if s is not None:
        z = s[x]
        while z != x:
            z = s[z]
            orbit += 1
    return (B(x, x) == (x, x), orbit, _pair_cycle_length(B, x, x))


def _pair_cycle_length(B, x, y):
    length, pair = 1, B(x, y)
    while pair != (x, y):
        pair = B(*pair)
        length += 1
    return length


def is_morphism(phi, B: FiniteBiquandle, C: FiniteBiquandle):
    """Return a pair (x, y) where (phi x phi) sigma != tau (phi x phi), or None."""
    for x, y in B.pairs():
        z, t = B(x, y)
        if (phi[z], phi[t]) != C(phi[x], phi[y]):
            return (x, y)
    return None


def is_isomorphic(B: FiniteBiquandle, C: FiniteBiquandle) -> Optional[tuple[int, ...]]:
    """Find a bijection phi with (phi x phi) o sigma = tau o (phi x phi).

    Backtracking search over bijections, pruned by per-element signatures
    and by forcing images through sigma.
    """
    if B.n != C.n:
        raise BiquandleError(f"orders differ: {B.n} vs {C.n}")
    n = B.n
    sig_b = [_element_signature(B, x) for x in range(n)]
    sig_c = [_element_signature(C, x) for x in range(n)]
    if sorted(sig_b) != sorted(sig_c):
        return None

    def extend(phi):
        # propagate forced values; return False on contradiction
        changed = True
        while changed:
            changed = False
            for x in range(n):
                if phi[x] < 0:
                    continue
                for y in range(n):
                    if phi[y] < 0:
                        continue
                    z, t = B(x, y)
                    w, u = C(phi[x], phi[y])
                    for src, dst in ((z, w), (t, u)):
                        if phi[src] < 0:
                            if dst in phi:
                                return False
                            phi[src] = dst
                            changed = True
                        elif phi[src] != dst:
                            return False
        return True

    def search(phi):
        if -1 not in phi:
            return tuple(phi) if is_morphism(phi, B, C) is None else None
        x = phi.index(-1)
        for target in range(n):
            if target in phi or sig_c[target] != sig_b[x]:
                continue
            trial = list(phi)
            trial[x] = target
            if extend(trial):
                found = search(trial)
                if found is not None:
                    return found
        return None

    return search([-1] * n)


def _canonical_key(B: FiniteBiquandle):
    best = None
    for phi in itertools.permutations(range(B.n)):
        C = B.relabel(phi)
        key = (C.sigma1, C.sigma2)
        if best is None or key < best:
            best = key
    return best


def enumerate_biquandles(n, max_order=3) -> list[FiniteBiquandle]:
    """All biquandles of order n up to isomorphism, in canonical sorted order.

    sigma1 rows and sigma2 columns are chosen as permutations (the
    invertibility axioms), then bijectivity, Yang-Baxter and the biquandle
    condition filter the result.
    """
    if n < 1:
        raise BiquandleError("order must be positive")
    if n > max_order:
        raise BiquandleError(f"exhaustive enumeration is limited to n <= {max_order}")
    perms = list(itertools.permutations(range(n)))
    keys = set()
    for rows in itertools.product(perms, repeat=n):
        s1 = rows
        for cols in itertools.product(perms, repeat=n):
            s2 = tuple(tuple(cols[y][x] for y in range(n)) for x in range(n))
            images = {(s1[x][y], s2[x][y]) for x in range(n) for y in range(n)}
            if len(images) != n * n:
                continue
            B = FiniteBiquandle(n, s1, s2)
            if not all(l == r for l, r in (_ybe_sides(B, *xyz)
                                           for xyz in itertools.product(range(n), repeat=3))):
                continue
            if not verify(B).is_biquandle:
                continue
            keys.add(_canonical_key(B))
    return [FiniteBiquandle(n, s1, s2, f"enum{n}_{k + 1}")
            for k, (s1, s2) in enumerate(sorted(keys))]
