"""Integer row reduction: Hermite and Smith normal forms, abelianization."""

from __future__ import annotations

from dataclasses import dataclass

from . import words


def hermite_rows(rows, ncols=None):
    """Row-style Hermite normal form basis of the lattice spanned by ``rows``.

    Returns nonzero rows in echelon order with positive pivots and entries
    above each pivot reduced into [0, pivot).
    """
    mat = [list(r) for r in rows if any(r)]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    basis = []
    col = 0
    while mat and col < ncols:
        nonzero = [r for r in mat if r[col] != 0]
        rest = [r for r in mat if r[col] == 0]
        if not nonzero:
            col += 1
            continue
        while len(nonzero) > 1:
            nonzero.sort(key=lambda r: abs(r[col]))
            pivot = nonzero[0]
            nxt = [pivot]
            for r in nonzero[1:]:
                q = r[col] // pivot[col]
                r = [a - q * b for a, b in zip(r, pivot)]
                if r[col] != 0:
                    nxt.append(r)
                elif any(r):
                    rest.append(r)
            nonzero = nxt
        pivot = nonzero[0]
        if pivot[col] < 0:
            pivot = [-a for a in pivot]
        basis.append((col, pivot))
        mat = rest
        col += 1
    # reduce above pivots
    for i in range(len(basis)):
        ci, ri = basis[i]
        for j in range(i):
            cj, rj = basis[j]
            q = rj[ci] // ri[ci]
            if q:
                basis[j] = (cj, [a - q * b for a, b in zip(rj, ri)])
    return [r for _, r in basis]


def reduce_vector(vector, basis):
    """Canonical representative of ``vector`` modulo the HNF ``basis``."""
    v = list(vector)
    for row in basis:
        col = next(i for i, a in enumerate(row) if a)
        q = v[col] // row[col]
        if q:
            v = [a - q * b for a, b in zip(v, row)]
    return tuple(v)


def smith_normal_form(matrix):
    """Return (diagonal, U, V) with U * matrix * V diagonal.

    ``diagonal`` lists the nonzero invariant factors d1 | d2 | ... ; U and V
    are unimodular.  Plain Python integers throughout.
    """
    A = [list(r) for r in matrix]
    m = len(A)
    n = len(A[0]) if m else 0
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (A, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row dst -= q * row src
        A[dst] = [a - q * b for a, b in zip(A[dst], A[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col dst -= q * col src
        for M in (A, V):
            for row in M:
                row[dst] -= q * row[src]

    t = 0
    while t < min(m, n):
        entries = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        done = False
        while not done:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(i, t, A[i][t] // A[t][t])
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(j, t, A[t][j] // A[t][t])
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if done:
                # divisibility: fold a non-multiple into row t and retry
                for i in range(t + 1, m):
                    if any(A[i][j] % A[t][t] for j in range(t + 1, n)):
                        add_row(t, i, -1)
                        done = False
                        break
        if A[t][t] < 0:
            A[t] = [-a for a in A[t]]
            U[t] = [-a for a in U[t]]
        t += 1
    diagonal = [A[i][i] for i in range(min(m, n)) if A[i][i]]
    return diagonal, U, V


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank + sum of Z/d for d in torsion (each d > 1, d_i | d_{i+1})."""

    torsion: tuple
    free_rank: int

    def format(self) -> str:
        parts = [f"Z/{d}" for d in self.torsion] + ["Z"] * self.free_rank
        return " + ".join(parts) if parts else "0"


def relation_matrix(relators, rank):
    gens = list(range(1, rank + 1))
    return [words.exponent_sums(r, gens) for r in relators]


def abelian_invariants(relators, rank) -> AbelianInvariants:
    rows = [r for r in relation_matrix(relators, rank) if any(r)]
    if not rows or rank == 0:
        return AbelianInvariants((), rank)
    diagonal, _, _ = smith_normal_form(rows)
    torsion = tuple(d for d in diagonal if d > 1)
    return AbelianInvariants(torsion, rank - len(diagonal))


def abelianization(P) -> AbelianInvariants:
    """Invariant factors and free rank of a presentation's abelianization.

    Accepts anything with ``relators()`` and ``rank``.
    """
    return abelian_invariants(P.relators(), P.rank)
